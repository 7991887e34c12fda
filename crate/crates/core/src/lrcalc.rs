//! Equivariant Littlewood-Richardson coefficients for double monomial
//! quasisymmetric functions.
//!
//! `c^gamma_{alpha,beta}` is the sum, over pairs of order-preserving
//! injections `iota: [l(alpha)] -> [l(gamma)]`, `jota: [l(beta)] -> [l(gamma)]`,
//! of the weights of all skyline tableaux for `(iota, jota)`. A skyline is a
//! choice of one tableau per row, so the inner sum factors into a product of
//! per-row weight sums.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::compositions::{
    aligned_parts, compositions_within, covering_injection_pairs, enumerate_compositions,
    enumerate_injections, Composition,
};
use crate::poly::Poly;
use crate::qsym::{double_monomial, expand_in_m, Expansion, TruncationContext};
use crate::tableaux::{row_weight_sum, WeightConvention};

/// Memoized per-row weight sums keyed by `(c, a, b)`.
#[derive(Debug, Default)]
struct RowSums {
    conv: WeightConvention,
    cache: HashMap<(u32, u32, u32), Poly>,
}

impl RowSums {
    fn new(conv: WeightConvention) -> Self {
        RowSums {
            conv,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, c: u32, a: u32, b: u32) -> &Poly {
        let conv = self.conv;
        self.cache
            .entry((c, a, b))
            .or_insert_with(|| row_weight_sum(c, a, b, conv))
    }
}

pub fn structure_coefficient(
    alpha: &Composition,
    beta: &Composition,
    gamma: &Composition,
    conv: WeightConvention,
) -> Poly {
    let n = gamma.len();
    let mut rows = RowSums::new(conv);
    let jotas = enumerate_injections(beta.len(), n);
    let mut total = Poly::zero();
    for iota in enumerate_injections(alpha.len(), n) {
        for jota in &jotas {
            let aligned = aligned_parts(alpha, beta, &iota, jota);
            // Rows outside both images have content and shape 0, so the
            // skyline set is empty.
            if aligned.iter().any(|&(a, b)| a == 0 && b == 0) {
                continue;
            }
            let mut term = Poly::one();
            for (&(a, b), &c) in aligned.iter().zip(gamma.parts()) {
                let w = rows.get(c, a, b);
                if w.is_zero() {
                    term = Poly::zero();
                    break;
                }
                term = &term * w;
            }
            total += &term;
        }
    }
    total
}

/// `M_alpha * M_beta` as an expansion in the `M` basis.
///
/// Generated directly from the covering injection pairs: each pair fixes
/// `(alpha part, beta part)` per row, each row ranges over its nonzero
/// `gamma_i`, and the product of the row sums is credited to the resulting
/// `gamma`. This visits exactly the nonzero terms of `structure_coefficient`
/// summed over the support.
pub fn product_expand(
    alpha: &Composition,
    beta: &Composition,
    conv: WeightConvention,
) -> Expansion {
    let mut rows = RowSums::new(conv);
    let mut out = Expansion::new();
    for (iota, jota) in covering_injection_pairs(alpha.len(), beta.len()) {
        let options: Vec<Vec<(u32, Poly)>> = aligned_parts(alpha, beta, &iota, &jota)
            .into_iter()
            .map(|(a, b)| {
                (a.max(b)..=a + b)
                    .map(|c| (c, rows.get(c, a, b).clone()))
                    .filter(|(_, w)| !w.is_zero())
                    .collect()
            })
            .collect();
        if options.is_empty() {
            out.add_term(Composition::empty(), &Poly::one());
            continue;
        }
        for choice in options.into_iter().multi_cartesian_product() {
            let parts = choice.iter().map(|(c, _)| *c).collect();
            let weight: Poly = choice.into_iter().map(|(_, w)| w).product();
            out.add_term(
                Composition::new(parts).expect("row totals are positive"),
                &weight,
            );
        }
    }
    out
}

/// Every `gamma` allowed by the support bounds of `M_alpha * M_beta`:
/// `max(l) <= l(gamma) <= l(alpha) + l(beta)`, parts at most
/// `max(alpha) + max(beta)`, and `max(|alpha|, |beta|) <= |gamma| <= |alpha| + |beta|`.
pub fn support(alpha: &Composition, beta: &Composition) -> Vec<Composition> {
    let min_len = alpha.len().max(beta.len());
    compositions_within(
        alpha.len() + beta.len(),
        alpha.max_part() + beta.max_part(),
        alpha.size().max(beta.size()),
        alpha.size() + beta.size(),
    )
    .into_iter()
    .filter(|g| g.len() >= min_len)
    .collect()
}

/// The smallest context used to check `M_alpha * M_beta` exactly:
/// `n_x = l(alpha) + l(beta)`, `n_y = |alpha| + |beta| + 1`.
pub fn oracle_context(alpha: &Composition, beta: &Composition) -> TruncationContext {
    TruncationContext::new(alpha.len() + beta.len(), alpha.size() + beta.size() + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub alpha: Composition,
    pub beta: Composition,
    pub convention: WeightConvention,
    /// `M_alpha * M_beta == sum_gamma c^gamma M_gamma` as polynomials.
    pub product_identity: bool,
    /// `expand_in_m(M_alpha * M_beta) == product_expand(alpha, beta)`.
    pub expansion_matches: bool,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.product_identity && self.expansion_matches
    }
}

/// Checks the combinatorial expansion of `M_alpha * M_beta` against exact
/// polynomial multiplication in [`oracle_context`].
pub fn verify_expansion(
    alpha: &Composition,
    beta: &Composition,
    conv: WeightConvention,
) -> Verification {
    let ctx = oracle_context(alpha, beta);
    let expansion = product_expand(alpha, beta, conv);
    let product = match (double_monomial(alpha, ctx), double_monomial(beta, ctx)) {
        (Ok(ma), Ok(mb)) => Some(&ma * &mb),
        _ => None,
    };
    let (product_identity, expansion_matches) = match product {
        Some(p) => (
            expansion.evaluate(ctx).is_ok_and(|rhs| rhs == p),
            expand_in_m(&p, ctx).is_ok_and(|e| e == expansion),
        ),
        None => (false, false),
    };
    Verification {
        alpha: alpha.clone(),
        beta: beta.clone(),
        convention: conv,
        product_identity,
        expansion_matches,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub max_size: u32,
    pub max_length: usize,
    pub convention: WeightConvention,
    pub total: usize,
    pub passed: usize,
    pub first_failure: Option<Verification>,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Compositions with `|alpha| <= max_size` and `l(alpha) <= max_length`,
/// including the empty one.
pub fn sweep_compositions(max_size: u32, max_length: usize) -> Vec<Composition> {
    enumerate_compositions(max_length, max_size.max(1))
        .into_iter()
        .filter(|a| a.size() <= max_size)
        .collect()
}

/// Runs [`verify_expansion`] over all pairs from [`sweep_compositions`] in
/// parallel. The first failure is the first in pair order.
pub fn verify_sweep(max_size: u32, max_length: usize, conv: WeightConvention) -> SweepReport {
    let comps = sweep_compositions(max_size, max_length);
    let pairs: Vec<(&Composition, &Composition)> =
        comps.iter().cartesian_product(comps.iter()).collect();
    let results: Vec<Verification> = pairs
        .par_iter()
        .map(|(a, b)| verify_expansion(a, b, conv))
        .collect();
    SweepReport {
        max_size,
        max_length,
        convention: conv,
        total: results.len(),
        passed: results.iter().filter(|v| v.passed()).count(),
        first_failure: results.into_iter().find(|v| !v.passed()),
    }
}
