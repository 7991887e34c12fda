use std::ffi::{c_char, CStr};
use std::ptr;

use dqsym_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    dqsym_string_free(s);
    owned
}

unsafe fn poly_text(p: *const DqsymPoly) -> String {
    take_string(dqsym_poly_to_string(p))
}

#[test]
fn worked_structure_coefficient() {
    let (a, b, g) = ([3u32, 2], [2u32, 3], [3u32, 2, 4]);
    let mut out = ptr::null_mut();
    unsafe {
        let status = dqsym_structure_coefficient(
            a.as_ptr(),
            a.len(),
            b.as_ptr(),
            b.len(),
            g.as_ptr(),
            g.len(),
            DqsymConvention::PaperLiteral,
            &mut out,
        );
        assert_eq!(status, DqsymStatus::Ok);
        assert_eq!(poly_text(out), "y1 + y2 - y4 - y5");
        assert_eq!(dqsym_poly_term_count(out), 4);
        assert!(!dqsym_poly_is_zero(out));
        dqsym_poly_free(out);
    }
}

#[test]
fn product_expansion_access() {
    let one = [1u32];
    let mut e = ptr::null_mut();
    unsafe {
        let status = dqsym_product_expand(
            one.as_ptr(),
            1,
            one.as_ptr(),
            1,
            DqsymConvention::OracleConsistent,
            &mut e,
        );
        assert_eq!(status, DqsymStatus::Ok);
        assert_eq!(dqsym_expansion_len(e), 3);

        let mut rows = Vec::new();
        for i in 0..3 {
            let mut parts = ptr::null();
            let mut len = 0;
            assert_eq!(
                dqsym_expansion_gamma(e, i, &mut parts, &mut len),
                DqsymStatus::Ok
            );
            let gamma = std::slice::from_raw_parts(parts, len).to_vec();
            let mut c = ptr::null_mut();
            assert_eq!(dqsym_expansion_coeff(e, i, &mut c), DqsymStatus::Ok);
            rows.push((gamma, poly_text(c)));
            dqsym_poly_free(c);
        }
        assert_eq!(
            rows,
            [
                (vec![1], "-y1 + y2".to_string()),
                (vec![2], "1".to_string()),
                (vec![1, 1], "2".to_string()),
            ]
        );

        let json = take_string(dqsym_expansion_to_json(e));
        let parsed: dqsym::Expansion = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.len(), 3);

        let mut c = ptr::null_mut();
        assert_eq!(
            dqsym_expansion_coeff(e, 3, &mut c),
            DqsymStatus::IndexOutOfRange
        );
        assert!(c.is_null());
        assert!(take_string(dqsym_last_error()).contains("out of range"));
        dqsym_expansion_free(e);
    }
}

#[test]
fn unit_expansion_with_null_parts() {
    let five = [5u32];
    let mut e = ptr::null_mut();
    unsafe {
        let status = dqsym_product_expand(
            ptr::null(),
            0,
            five.as_ptr(),
            1,
            DqsymConvention::PaperLiteral,
            &mut e,
        );
        assert_eq!(status, DqsymStatus::Ok);
        assert_eq!(dqsym_expansion_len(e), 1);
        let mut parts = ptr::null();
        let mut len = 0;
        assert_eq!(
            dqsym_expansion_gamma(e, 0, &mut parts, &mut len),
            DqsymStatus::Ok
        );
        assert_eq!(std::slice::from_raw_parts(parts, len), [5]);
        dqsym_expansion_free(e);
    }
}

#[test]
fn double_monomial_and_errors() {
    let alpha = [1u32];
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            dqsym_double_monomial(alpha.as_ptr(), 1, 2, 1, &mut p),
            DqsymStatus::Ok
        );
        assert_eq!(poly_text(p), "x1 + x2 - 2*y1");
        let json: serde_json::Value =
            serde_json::from_str(&take_string(dqsym_poly_to_json(p))).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 3);

        let mut q = ptr::null_mut();
        assert_eq!(
            dqsym_double_monomial(alpha.as_ptr(), 1, 2, 1, &mut q),
            DqsymStatus::Ok
        );
        assert!(dqsym_poly_equal(p, q));
        dqsym_poly_free(q);
        dqsym_poly_free(p);

        let big = [3u32];
        let mut r = ptr::null_mut();
        assert_eq!(
            dqsym_double_monomial(big.as_ptr(), 1, 2, 1, &mut r),
            DqsymStatus::TruncationTooSmall
        );
        assert!(r.is_null());

        let zero = [2u32, 0];
        assert_eq!(
            dqsym_double_monomial(zero.as_ptr(), 2, 2, 2, &mut r),
            DqsymStatus::InvalidComposition
        );
        assert_eq!(
            dqsym_double_monomial(ptr::null(), 2, 2, 2, &mut r),
            DqsymStatus::NullPointer
        );
        assert_eq!(
            dqsym_double_monomial(alpha.as_ptr(), 1, 2, 1, ptr::null_mut()),
            DqsymStatus::NullPointer
        );
    }
}

#[test]
fn verification_and_counts() {
    let one = [1u32];
    let mut passed = false;
    unsafe {
        let s = dqsym_verify_expansion(
            one.as_ptr(),
            1,
            one.as_ptr(),
            1,
            DqsymConvention::OracleConsistent,
            &mut passed,
        );
        assert_eq!(s, DqsymStatus::Ok);
        assert!(passed);
        let s = dqsym_verify_expansion(
            one.as_ptr(),
            1,
            one.as_ptr(),
            1,
            DqsymConvention::PaperLiteral,
            &mut passed,
        );
        assert_eq!(s, DqsymStatus::Ok);
        assert!(!passed);

        let mut n = 0;
        assert_eq!(dqsym_tableau_count(4, 2, 3, &mut n), DqsymStatus::Ok);
        assert_eq!(n, 2);
        assert_eq!(dqsym_tableau_count(5, 1, 2, &mut n), DqsymStatus::Ok);
        assert_eq!(n, 0);
        assert_eq!(
            dqsym_tableau_count(1, 1, 1, ptr::null_mut()),
            DqsymStatus::NullPointer
        );
    }
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        assert_eq!(dqsym_expansion_len(ptr::null()), 0);
        assert!(dqsym_expansion_to_json(ptr::null()).is_null());
        assert!(dqsym_poly_to_string(ptr::null()).is_null());
        assert!(!dqsym_poly_is_zero(ptr::null()));
        assert!(!dqsym_poly_equal(ptr::null(), ptr::null()));
        dqsym_poly_free(ptr::null_mut());
        dqsym_expansion_free(ptr::null_mut());
        dqsym_string_free(ptr::null_mut());
        let mut c = ptr::null_mut();
        assert_eq!(
            dqsym_expansion_coeff(ptr::null(), 0, &mut c),
            DqsymStatus::NullPointer
        );
    }
}

#[test]
fn status_messages() {
    let text = |s| unsafe { CStr::from_ptr(dqsym_status_message(s)).to_str().unwrap() };
    assert_eq!(text(DqsymStatus::Ok), "ok");
    assert_eq!(
        text(DqsymStatus::TruncationTooSmall),
        "truncation too small"
    );
    assert_eq!(DqsymStatus::Panic as i32, 6);
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/dqsym.h")).unwrap();
    for symbol in [
        "DQSYM_H",
        "DQSYM_STATUS_OK = 0",
        "DQSYM_STATUS_TRUNCATION_TOO_SMALL = 3",
        "DQSYM_CONVENTION_ORACLE_CONSISTENT = 1",
        "typedef struct DqsymPoly DqsymPoly;",
        "typedef struct DqsymExpansion DqsymExpansion;",
        "dqsym_structure_coefficient(",
        "dqsym_product_expand(",
        "dqsym_verify_expansion(",
        "dqsym_double_monomial(",
        "dqsym_tableau_count(",
        "dqsym_expansion_gamma(",
        "dqsym_poly_free(",
        "dqsym_string_free(",
        "dqsym_last_error(",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
}
