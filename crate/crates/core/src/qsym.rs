//! Truncated double monomial quasisymmetric functions
//!
//! ```text
//! M_alpha(x, y) = sum_{i_1 < ... < i_k} prod_l prod_{j <= alpha_l} (x_{i_l} - y_j)
//! ```
//!
//! computed exactly in finitely many variables, together with a
//! quasisymmetry test, the generator expressions
//! `sum_{k_1 < ... < k_s} f_1(x_{k_1}) ... f_s(x_{k_s})`, and expansion of a
//! quasisymmetric polynomial in the `M` basis.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::compositions::Composition;
use crate::error::QsymError;
use crate::poly::{Monomial, Poly, Var};

/// The finite variable set `x_1..x_{n_x}`, `y_1..y_{n_y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncationContext {
    pub n_x: usize,
    pub n_y: u32,
}

impl TruncationContext {
    pub fn new(n_x: usize, n_y: u32) -> Self {
        TruncationContext { n_x, n_y }
    }

    /// Whether `M_alpha` can be formed in this context.
    pub fn admits(&self, alpha: &Composition) -> bool {
        alpha.len() <= self.n_x && alpha.max_part() <= self.n_y
    }

    fn check(&self, alpha: &Composition) -> Result<(), QsymError> {
        if self.admits(alpha) {
            Ok(())
        } else {
            Err(QsymError::TruncationTooSmall {
                composition: alpha.to_string(),
                n_x: self.n_x,
                n_y: self.n_y,
            })
        }
    }
}

/// `prod_{j=1}^{a} (x_i - y_j)`, the class of the `2a`-cell evaluated at `x_i`.
pub fn cell_class(i: u32, a: u32) -> Poly {
    (1..=a).map(|j| Poly::x(i) - Poly::y(j)).product()
}

/// `M_alpha(x, y)` truncated to `ctx`.
pub fn double_monomial(alpha: &Composition, ctx: TruncationContext) -> Result<Poly, QsymError> {
    ctx.check(alpha)?;
    let mut classes: HashMap<(u32, u32), Poly> = HashMap::new();
    let mut out = Poly::zero();
    for indices in (1..=ctx.n_x as u32).combinations(alpha.len()) {
        let mut term = Poly::one();
        for (&i, &a) in indices.iter().zip(alpha.parts()) {
            let class = classes.entry((i, a)).or_insert_with(|| cell_class(i, a));
            term = &term * &*class;
        }
        out += &term;
    }
    Ok(out)
}

/// The ordinary monomial quasisymmetric polynomial `M_alpha(x)`, i.e.
/// `M_alpha(x, 0)`. Built directly from its monomials.
pub fn monomial_qsym(alpha: &Composition, ctx: TruncationContext) -> Result<Poly, QsymError> {
    ctx.check(alpha)?;
    let one = BigInt::from(1);
    Ok(Poly::from_terms(
        (1..=ctx.n_x as u32)
            .combinations(alpha.len())
            .map(|indices| {
                let m =
                    Monomial::x_monomial(indices.into_iter().zip(alpha.parts().iter().copied()));
                (m, one.clone())
            }),
    ))
}

/// Membership in the truncated quasisymmetric ring of `ctx`: the subring
/// generated by `sum_{k_1 < ... < k_s} f_1(x_{k_1}) ... f_s(x_{k_s})` with every
/// `f_l` vanishing at the base point. The base point is `x = y1` (where each
/// cell class `prod_j (x - y_j)` vanishes) when `ctx` has y-variables, and
/// `x = 0` otherwise.
pub fn is_quasisymmetric(p: &Poly, ctx: TruncationContext) -> bool {
    let base = if ctx.n_y >= 1 {
        Poly::y(1)
    } else {
        Poly::zero()
    };
    is_quasisymmetric_about(p, ctx.n_x, &base)
}

/// Recenters `x_i -> x_i + base` and checks that the `Z[y]`-coefficient of
/// `x_{i_1}^{e_1} ... x_{i_k}^{e_k}` depends only on the exponent word
/// `(e_1, ..., e_k)`, for increasing indices in `1..=n_x`.
pub fn is_quasisymmetric_about(p: &Poly, n_x: usize, base: &Poly) -> bool {
    if p.max_x_index() as usize > n_x {
        return false;
    }
    let shifted = if base.is_zero() {
        p.clone()
    } else {
        let shift: HashMap<Var, Poly> = (1..=n_x as u32)
            .map(|i| (Var::X(i), Poly::x(i) + base.clone()))
            .collect();
        p.substitute(&shift)
    };
    let coeffs = shifted.x_coefficients();
    let words: std::collections::BTreeSet<Vec<u32>> = coeffs
        .keys()
        .map(|m| m.x_exponents().map(|(_, e)| e).collect())
        .collect();
    let zero = Poly::zero();
    for word in words {
        let canonical = Monomial::x_monomial((1..).zip(word.iter().copied()));
        let expected = coeffs.get(&canonical).unwrap_or(&zero);
        for indices in (1..=n_x as u32).combinations(word.len()) {
            let m = Monomial::x_monomial(indices.into_iter().zip(word.iter().copied()));
            if coeffs.get(&m).unwrap_or(&zero) != expected {
                return false;
            }
        }
    }
    true
}

/// `sum_{1 <= k_1 < ... < k_s <= n_x} f_1(x_{k_1}) ... f_s(x_{k_s})`.
///
/// Each `f` is given as a polynomial in `x1` (y-variables are allowed as
/// scalars) and must vanish at `x1 = 0`.
pub fn qsym_generator(factors: &[Poly], ctx: TruncationContext) -> Result<Poly, QsymError> {
    for (k, f) in factors.iter().enumerate() {
        let index = k + 1;
        if f.max_x_index() > 1 {
            return Err(QsymError::NotUnivariate { index });
        }
        if !f.x_degree_component(0).is_zero() {
            return Err(QsymError::NotInMaximalIdeal { index });
        }
    }
    if factors.len() > ctx.n_x {
        return Err(QsymError::TooManyFactors {
            factors: factors.len(),
            n_x: ctx.n_x,
        });
    }
    let mut out = Poly::zero();
    for indices in (1..=ctx.n_x as u32).combinations(factors.len()) {
        let term: Poly = indices
            .into_iter()
            .zip(factors)
            .map(|(i, f)| f.substitute(&HashMap::from([(Var::X(1), Poly::x(i))])))
            .product();
        out += &term;
    }
    Ok(out)
}

/// A finite `Z[y]`-linear combination `sum_gamma coeff_gamma M_gamma`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expansion {
    coeffs: BTreeMap<Composition, Poly>,
}

impl Expansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(gamma: Composition, coeff: Poly) -> Self {
        let mut e = Self::new();
        e.add_term(gamma, &coeff);
        e
    }

    /// Adds `coeff` to the coefficient of `gamma`.
    pub fn add_term(&mut self, gamma: Composition, coeff: &Poly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(gamma).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.retain(|_, c| !c.is_zero());
        }
    }

    pub fn get(&self, gamma: &Composition) -> Option<&Poly> {
        self.coeffs.get(gamma)
    }

    /// Coefficient of `gamma`, zero when absent.
    pub fn coefficient(&self, gamma: &Composition) -> Poly {
        self.coeffs.get(gamma).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Entries in length-then-lex order of `gamma`.
    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &Poly)> {
        self.coeffs.iter()
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coefficients(&self, f: impl Fn(&Poly) -> Poly) -> Expansion {
        let mut out = Expansion::new();
        for (g, c) in &self.coeffs {
            out.add_term(g.clone(), &f(c));
        }
        out
    }

    /// Evaluates `sum_gamma coeff_gamma M_gamma(x, y)` in `ctx`.
    pub fn evaluate(&self, ctx: TruncationContext) -> Result<Poly, QsymError> {
        let mut out = Poly::zero();
        for (g, c) in &self.coeffs {
            out += &(c * &double_monomial(g, ctx)?);
        }
        Ok(out)
    }
}

impl std::ops::Add<&Expansion> for &Expansion {
    type Output = Expansion;
    fn add(self, rhs: &Expansion) -> Expansion {
        let mut out = self.clone();
        for (g, c) in rhs.iter() {
            out.add_term(g.clone(), c);
        }
        out
    }
}

impl FromIterator<(Composition, Poly)> for Expansion {
    fn from_iter<I: IntoIterator<Item = (Composition, Poly)>>(iter: I) -> Self {
        let mut out = Expansion::new();
        for (g, c) in iter {
            out.add_term(g, &c);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct ExpansionEntry {
    gamma: Composition,
    coeff: Poly,
}

/// JSON array of `{gamma: [ints], coeff: [term records]}` sorted by `gamma`.
impl Serialize for Expansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|(gamma, coeff)| ExpansionEntry {
            gamma: gamma.clone(),
            coeff: coeff.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for Expansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<ExpansionEntry>::deserialize(d)?;
        let mut out = Expansion::new();
        for e in entries {
            if !e.coeff.is_x_free() {
                return Err(D::Error::custom(format!(
                    "coefficient of {} involves x-variables",
                    e.gamma
                )));
            }
            out.add_term(e.gamma, &e.coeff);
        }
        Ok(out)
    }
}

/// Writes a quasisymmetric `p` as `sum_gamma c_gamma M_gamma(x, y)`.
///
/// Peels the top x-degree: there `M_gamma(x, y)` agrees with `M_gamma(x)`,
/// whose minimal-index monomial `x_1^{gamma_1} ... x_k^{gamma_k}` identifies
/// `gamma`. The maximal x-degree of the residual strictly drops each round.
pub fn expand_in_m(p: &Poly, ctx: TruncationContext) -> Result<Expansion, QsymError> {
    let mut residual = p.clone();
    let mut out = Expansion::new();
    while let Some(d) = residual.max_x_degree() {
        let top = residual.x_degree_component(d);
        let leading: Vec<(Composition, Poly)> = top
            .x_coefficients()
            .into_iter()
            .filter_map(|(xm, coeff)| {
                let exps: Vec<(u32, u32)> = xm.x_exponents().collect();
                let initial = exps.iter().zip(1..).all(|(&(i, _), k)| i == k);
                initial.then(|| {
                    let parts = exps.into_iter().map(|(_, e)| e).collect();
                    (
                        Composition::new(parts).expect("exponents are positive"),
                        coeff,
                    )
                })
            })
            .collect();
        for (gamma, coeff) in leading {
            residual -= &(&coeff * &double_monomial(&gamma, ctx)?);
            out.add_term(gamma, &coeff);
        }
        if !residual.x_degree_component(d).is_zero() {
            return Err(QsymError::NotInSpan { degree: d });
        }
    }
    Ok(out)
}

/// Outcome of checking the candidate relations among the generators
/// `t = x1*x2`, `z = x1 + x2`, `w = x1^2*x2` of two-variable
/// quasisymmetric polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    /// `z^3 - t*z*w + w^2` expanded in `x1, x2`.
    pub printed: Poly,
    /// `t^3 - t*z*w + w^2` expanded in `x1, x2`.
    pub corrected: Poly,
    /// Value of the printed relation at `x1 = x2 = 1`.
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub printed_witness: BigInt,
    /// Largest x-degree among the images of the relation's terms.
    pub printed_top_degree: u32,
    pub corrected_top_degree: u32,
}

impl RelationReport {
    pub fn printed_vanishes(&self) -> bool {
        self.printed.is_zero()
    }

    pub fn corrected_vanishes(&self) -> bool {
        self.corrected.is_zero()
    }
}

/// Builds the generators with [`qsym_generator`] and expands both candidate
/// relations symbolically.
pub fn check_qsym2_relation() -> RelationReport {
    let ctx = TruncationContext::new(2, 0);
    let x = Poly::x(1);
    let t = qsym_generator(&[x.clone(), x.clone()], ctx).expect("valid generator");
    let z = qsym_generator(std::slice::from_ref(&x), ctx).expect("valid generator");
    let w = qsym_generator(&[x.pow(2), x], ctx).expect("valid generator");

    let tzw = &(&t * &z) * &w;
    let w2 = w.pow(2);
    let z3 = z.pow(3);
    let t3 = t.pow(3);
    let printed = &(&z3 - &tzw) + &w2;
    let corrected = &(&t3 - &tzw) + &w2;

    let top = |terms: &[&Poly]| {
        terms
            .iter()
            .filter_map(|p| p.max_x_degree())
            .max()
            .unwrap_or(0)
    };
    let ones = HashMap::from([(Var::X(1), Poly::one()), (Var::X(2), Poly::one())]);
    let printed_witness = printed
        .substitute(&ones)
        .as_constant()
        .expect("all variables assigned");

    RelationReport {
        printed_top_degree: top(&[&z3, &tzw, &w2]),
        corrected_top_degree: top(&[&t3, &tzw, &w2]),
        printed,
        corrected,
        printed_witness,
    }
}
