//! C ABI over `dqsym`.
//!
//! Results are returned through opaque heap handles (`DqsymPoly`,
//! `DqsymExpansion`) that the caller releases with the matching `*_free`
//! function. Every fallible call returns a `DqsymStatus`; on failure a
//! message is available from `dqsym_last_error` on the same thread.
//! Strings returned by this library are released with `dqsym_string_free`.
//!
//! Compositions cross the boundary as `(const uint32_t *parts, size_t len)`;
//! `parts` may be null when `len` is 0.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dqsym::tableaux::enumerate_tableaux;
use dqsym::{
    double_monomial, product_expand, structure_coefficient, verify_expansion, Composition, Poly,
    QsymError, TruncationContext, WeightConvention,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DqsymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidComposition = 2,
    TruncationTooSmall = 3,
    IndexOutOfRange = 4,
    InvalidArgument = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DqsymConvention {
    PaperLiteral = 0,
    OracleConsistent = 1,
}

impl From<DqsymConvention> for WeightConvention {
    fn from(c: DqsymConvention) -> Self {
        match c {
            DqsymConvention::PaperLiteral => WeightConvention::PaperLiteral,
            DqsymConvention::OracleConsistent => WeightConvention::OracleConsistent,
        }
    }
}

/// Opaque polynomial handle.
pub struct DqsymPoly(Poly);

/// Opaque handle to an expansion `sum_gamma c_gamma M_gamma`, entries in
/// length-then-lex order of `gamma`.
pub struct DqsymExpansion {
    entries: Vec<(Composition, Poly)>,
    json: String,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: DqsymStatus, msg: impl Into<String>) -> DqsymStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> DqsymStatus) -> DqsymStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(DqsymStatus::Panic, "internal panic"),
    }
}

unsafe fn composition(parts: *const u32, len: usize) -> Result<Composition, DqsymStatus> {
    if len == 0 {
        return Ok(Composition::empty());
    }
    if parts.is_null() {
        return Err(fail(
            DqsymStatus::NullPointer,
            "composition parts pointer is null",
        ));
    }
    let slice = std::slice::from_raw_parts(parts, len);
    Composition::new(slice.to_vec())
        .map_err(|e| fail(DqsymStatus::InvalidComposition, e.to_string()))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Human-readable description of a status code. The string is static.
#[no_mangle]
pub extern "C" fn dqsym_status_message(status: DqsymStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        DqsymStatus::Ok => b"ok\0",
        DqsymStatus::NullPointer => b"null pointer argument\0",
        DqsymStatus::InvalidComposition => b"invalid composition\0",
        DqsymStatus::TruncationTooSmall => b"truncation too small\0",
        DqsymStatus::IndexOutOfRange => b"index out of range\0",
        DqsymStatus::InvalidArgument => b"invalid argument\0",
        DqsymStatus::Panic => b"internal panic\0",
    };
    s.as_ptr().cast()
}

/// Copy of the last error message on this thread, or null. Free with
/// `dqsym_string_free`.
#[no_mangle]
pub extern "C" fn dqsym_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dqsym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Truncated `M_alpha(x, y)` in `x_1..x_{n_x}`, `y_1..y_{n_y}`.
///
/// # Safety
/// `alpha` must point to `alpha_len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dqsym_double_monomial(
    alpha: *const u32,
    alpha_len: usize,
    n_x: usize,
    n_y: u32,
    out: *mut *mut DqsymPoly,
) -> DqsymStatus {
    guard(|| {
        if out.is_null() {
            return fail(DqsymStatus::NullPointer, "out is null");
        }
        let alpha = match composition(alpha, alpha_len) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match double_monomial(&alpha, TruncationContext::new(n_x, n_y)) {
            Ok(p) => {
                write_out(out, DqsymPoly(p));
                DqsymStatus::Ok
            }
            Err(e @ QsymError::TruncationTooSmall { .. }) => {
                fail(DqsymStatus::TruncationTooSmall, e.to_string())
            }
            Err(e) => fail(DqsymStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// The structure coefficient `c^gamma_{alpha,beta}`.
///
/// # Safety
/// Each composition pointer must reference the stated number of values;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dqsym_structure_coefficient(
    alpha: *const u32,
    alpha_len: usize,
    beta: *const u32,
    beta_len: usize,
    gamma: *const u32,
    gamma_len: usize,
    convention: DqsymConvention,
    out: *mut *mut DqsymPoly,
) -> DqsymStatus {
    guard(|| {
        if out.is_null() {
            return fail(DqsymStatus::NullPointer, "out is null");
        }
        let parsed = (|| {
            Ok::<_, DqsymStatus>((
                composition(alpha, alpha_len)?,
                composition(beta, beta_len)?,
                composition(gamma, gamma_len)?,
            ))
        })();
        let (a, b, g) = match parsed {
            Ok(t) => t,
            Err(s) => return s,
        };
        write_out(
            out,
            DqsymPoly(structure_coefficient(&a, &b, &g, convention.into())),
        );
        DqsymStatus::Ok
    })
}

/// `M_alpha * M_beta` expanded in the `M` basis.
///
/// # Safety
/// As for `dqsym_structure_coefficient`.
#[no_mangle]
pub unsafe extern "C" fn dqsym_product_expand(
    alpha: *const u32,
    alpha_len: usize,
    beta: *const u32,
    beta_len: usize,
    convention: DqsymConvention,
    out: *mut *mut DqsymExpansion,
) -> DqsymStatus {
    guard(|| {
        if out.is_null() {
            return fail(DqsymStatus::NullPointer, "out is null");
        }
        let (a, b) = match (composition(alpha, alpha_len), composition(beta, beta_len)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let expansion = product_expand(&a, &b, convention.into());
        let json = serde_json::to_string(&expansion).expect("expansions serialize");
        let entries = expansion
            .iter()
            .map(|(g, c)| (g.clone(), c.clone()))
            .collect();
        write_out(out, DqsymExpansion { entries, json });
        DqsymStatus::Ok
    })
}

/// Checks the product rule for `(alpha, beta)` against exact polynomial
/// multiplication; writes the outcome to `passed`.
///
/// # Safety
/// As for `dqsym_structure_coefficient`; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dqsym_verify_expansion(
    alpha: *const u32,
    alpha_len: usize,
    beta: *const u32,
    beta_len: usize,
    convention: DqsymConvention,
    passed: *mut bool,
) -> DqsymStatus {
    guard(|| {
        if passed.is_null() {
            return fail(DqsymStatus::NullPointer, "passed is null");
        }
        let (a, b) = match (composition(alpha, alpha_len), composition(beta, beta_len)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        *passed = verify_expansion(&a, &b, convention.into()).passed();
        DqsymStatus::Ok
    })
}

/// Number of nonzero-weight tableaux of shape `c/a` and content `b`.
///
/// # Safety
/// `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dqsym_tableau_count(
    c: u32,
    a: u32,
    b: u32,
    count: *mut usize,
) -> DqsymStatus {
    guard(|| {
        if count.is_null() {
            return fail(DqsymStatus::NullPointer, "count is null");
        }
        *count = enumerate_tableaux(c, a, b).len();
        DqsymStatus::Ok
    })
}

/// # Safety
/// `e` must be null or a live expansion handle.
#[no_mangle]
pub unsafe extern "C" fn dqsym_expansion_len(e: *const DqsymExpansion) -> usize {
    e.as_ref().map_or(0, |e| e.entries.len())
}

/// Borrows the parts of the `index`-th `gamma`. The pointer stays valid
/// until the expansion is freed.
///
/// # Safety
/// `e` must be a live expansion handle; `parts` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dqsym_expansion_gamma(
    e: *const DqsymExpansion,
    index: usize,
    parts: *mut *const u32,
    len: *mut usize,
) -> DqsymStatus {
    guard(|| {
        let Some(e) = e.as_ref() else {
            return fail(DqsymStatus::NullPointer, "expansion is null");
        };
        if parts.is_null() || len.is_null() {
            return fail(DqsymStatus::NullPointer, "output pointer is null");
        }
        let Some((g, _)) = e.entries.get(index) else {
            return fail(
                DqsymStatus::IndexOutOfRange,
                format!("index {index} out of range"),
            );
        };
        *parts = if g.is_empty() {
            ptr::null()
        } else {
            g.parts().as_ptr()
        };
        *len = g.len();
        DqsymStatus::Ok
    })
}

/// Copies the `index`-th coefficient into a new polynomial handle.
///
/// # Safety
/// `e` must be a live expansion handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dqsym_expansion_coeff(
    e: *const DqsymExpansion,
    index: usize,
    out: *mut *mut DqsymPoly,
) -> DqsymStatus {
    guard(|| {
        let Some(e) = e.as_ref() else {
            return fail(DqsymStatus::NullPointer, "expansion is null");
        };
        if out.is_null() {
            return fail(DqsymStatus::NullPointer, "out is null");
        }
        let Some((_, c)) = e.entries.get(index) else {
            return fail(
                DqsymStatus::IndexOutOfRange,
                format!("index {index} out of range"),
            );
        };
        write_out(out, DqsymPoly(c.clone()));
        DqsymStatus::Ok
    })
}

/// JSON array `[{gamma, coeff}, ...]`. Free with `dqsym_string_free`.
///
/// # Safety
/// `e` must be null or a live expansion handle.
#[no_mangle]
pub unsafe extern "C" fn dqsym_expansion_to_json(e: *const DqsymExpansion) -> *mut c_char {
    e.as_ref()
        .map_or(ptr::null_mut(), |e| to_c_string(e.json.clone()))
}

/// # Safety
/// `e` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dqsym_expansion_free(e: *mut DqsymExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Canonical text form, e.g. `y1 + y2 - y4 - y5`.
///
/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn dqsym_poly_to_string(p: *const DqsymPoly) -> *mut c_char {
    p.as_ref()
        .map_or(ptr::null_mut(), |p| to_c_string(p.0.to_string()))
}

/// JSON term records `[{coeff, x, y}, ...]`.
///
/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn dqsym_poly_to_json(p: *const DqsymPoly) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| {
        to_c_string(serde_json::to_string(&p.0).expect("polynomials serialize"))
    })
}

/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn dqsym_poly_is_zero(p: *const DqsymPoly) -> bool {
    p.as_ref().is_some_and(|p| p.0.is_zero())
}

/// Number of terms.
///
/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn dqsym_poly_term_count(p: *const DqsymPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// # Safety
/// Both arguments must be null or live polynomial handles.
#[no_mangle]
pub unsafe extern "C" fn dqsym_poly_equal(a: *const DqsymPoly, b: *const DqsymPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dqsym_poly_free(p: *mut DqsymPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_marshalling() {
        unsafe {
            assert_eq!(composition(ptr::null(), 0), Ok(Composition::empty()));
            let parts = [3u32, 2];
            assert_eq!(composition(parts.as_ptr(), 2).unwrap().parts(), [3, 2]);
            assert_eq!(composition(ptr::null(), 1), Err(DqsymStatus::NullPointer));
            let bad = [1u32, 0];
            assert_eq!(
                composition(bad.as_ptr(), 2),
                Err(DqsymStatus::InvalidComposition)
            );
        }
    }

    #[test]
    fn panics_become_status() {
        assert_eq!(guard(|| panic!("boom")), DqsymStatus::Panic);
        let msg = unsafe { CString::from_raw(dqsym_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "internal panic");
    }
}
