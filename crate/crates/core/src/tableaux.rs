//! One-row skew edge-labeled tableaux, their weights, and skyline stacks.
//!
//! A tableau of shape `c/a` is a row of `c` boxes whose rightmost `c - a`
//! boxes carry a bullet and whose leftmost `a` boxes may each carry a bullet
//! on their lower edge. The set of edge-labeled boxes is `E ⊆ [a]` and the
//! content is `(c - a) + |E|`.
//!
//! Tableaux with an unlabeled box among the rightmost `c - a` have weight
//! zero and are never constructed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::compositions::{aligned_parts, Composition, OrderedInjection};
use crate::error::TableauError;
use crate::poly::Poly;

/// Sign convention for weight factors.
///
/// `PaperLiteral` uses `y_i - y_{i+1+r(i)}`; `OracleConsistent` uses the
/// negated factor `y_{i+1+r(i)} - y_i`, which is the one for which
/// `prod_{j<=a}(x - y_j) * prod_{j<=b}(x - y_j) = sum_c wt * prod_{j<=c}(x - y_j)`
/// holds. A coefficient of y-degree `d` differs by `(-1)^d` between the two.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightConvention {
    PaperLiteral,
    #[default]
    OracleConsistent,
}

impl WeightConvention {
    pub fn name(self) -> &'static str {
        match self {
            WeightConvention::PaperLiteral => "paper-literal",
            WeightConvention::OracleConsistent => "oracle-consistent",
        }
    }
}

impl fmt::Display for WeightConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace('_', "-").as_str() {
            "paper-literal" => Ok(WeightConvention::PaperLiteral),
            "oracle-consistent" => Ok(WeightConvention::OracleConsistent),
            _ => Err(format!("unknown convention {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRecord")]
pub struct SkewEdgeTableau {
    c: u32,
    a: u32,
    edges: Vec<u32>,
}

#[derive(Deserialize)]
struct TableauRecord {
    c: u32,
    a: u32,
    edges: Vec<u32>,
}

impl TryFrom<TableauRecord> for SkewEdgeTableau {
    type Error = TableauError;
    fn try_from(r: TableauRecord) -> Result<Self, Self::Error> {
        SkewEdgeTableau::new(r.c, r.a, r.edges)
    }
}

impl SkewEdgeTableau {
    /// Shape `c/a` with edge labels under the boxes listed in `edges`
    /// (1-based, duplicates ignored).
    pub fn new(c: u32, a: u32, mut edges: Vec<u32>) -> Result<Self, TableauError> {
        if a > c {
            return Err(TableauError::BadShape { c, a });
        }
        edges.sort_unstable();
        edges.dedup();
        if let Some(&label) = edges.iter().find(|&&e| e == 0 || e > a) {
            return Err(TableauError::EdgeOutOfRange { label, empty: a });
        }
        Ok(SkewEdgeTableau { c, a, edges })
    }

    pub fn boxes(&self) -> u32 {
        self.c
    }

    pub fn empty_boxes(&self) -> u32 {
        self.a
    }

    pub fn edges(&self) -> &[u32] {
        &self.edges
    }

    pub fn content(&self) -> u32 {
        (self.c - self.a) + self.edges.len() as u32
    }

    /// Number of box and edge labels strictly right of box `i`.
    pub fn r_value(&self, i: u32) -> Result<u32, TableauError> {
        if i == 0 || i > self.a {
            return Err(TableauError::BoxOutOfRange {
                index: i,
                empty: self.a,
            });
        }
        let edges_right = self.edges.iter().filter(|&&j| j > i).count() as u32;
        Ok((self.c - self.a) + edges_right)
    }

    pub fn weight(&self, conv: WeightConvention) -> Poly {
        self.edges
            .iter()
            .map(|&i| {
                let r = self.r_value(i).expect("edges lie in [a]");
                let (lo, hi) = (Poly::y(i), Poly::y(i + 1 + r));
                match conv {
                    WeightConvention::PaperLiteral => lo - hi,
                    WeightConvention::OracleConsistent => hi - lo,
                }
            })
            .product()
    }
}

impl fmt::Display for SkewEdgeTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} E={{{}}}",
            self.c,
            self.a,
            self.edges.iter().join(",")
        )
    }
}

/// All nonzero-weight tableaux of shape `c/a` and content `b`: the
/// `(b - (c - a))`-subsets of `[a]`. Empty if `a > c` or no such subset
/// exists.
pub fn enumerate_tableaux(c: u32, a: u32, b: u32) -> Vec<SkewEdgeTableau> {
    if a > c || b < c - a || b - (c - a) > a {
        return Vec::new();
    }
    (1..=a)
        .combinations((b - (c - a)) as usize)
        .map(|edges| SkewEdgeTableau { c, a, edges })
        .collect()
}

/// Sum of weights over all tableaux of shape `c/a` and content `b`.
pub fn row_weight_sum(c: u32, a: u32, b: u32, conv: WeightConvention) -> Poly {
    enumerate_tableaux(c, a, b)
        .iter()
        .map(|s| s.weight(conv))
        .sum()
}

/// Equivariant product of projective-space cell classes:
/// `x_a * x_b = sum_c coeff_c * x_c`, zero coefficients omitted.
pub fn cp_product(a: u32, b: u32, conv: WeightConvention) -> BTreeMap<u32, Poly> {
    (a.max(b)..=a + b)
        .map(|c| (c, row_weight_sum(c, a, b, conv)))
        .filter(|(_, w)| !w.is_zero())
        .collect()
}

/// A stack of one-row tableaux, row `i` of shape `gamma_i / alpha_{iota^-1(i)}`
/// and content `beta_{jota^-1(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkylineTableau {
    pub gamma: Composition,
    pub alpha: Composition,
    pub beta: Composition,
    pub iota: OrderedInjection,
    pub jota: OrderedInjection,
    pub rows: Vec<SkewEdgeTableau>,
}

impl SkylineTableau {
    pub fn weight(&self, conv: WeightConvention) -> Poly {
        skyline_weight(self, conv)
    }
}

#[derive(Serialize)]
struct SkylineRecord<'a> {
    gamma: &'a Composition,
    iota: &'a [usize],
    jota: &'a [usize],
    rows: &'a [SkewEdgeTableau],
}

/// Serialized as `{gamma, iota, jota, rows}`.
impl Serialize for SkylineTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SkylineRecord {
            gamma: &self.gamma,
            iota: self.iota.images(),
            jota: self.jota.images(),
            rows: &self.rows,
        }
        .serialize(s)
    }
}

fn covers(iota: &OrderedInjection, jota: &OrderedInjection, n: usize) -> bool {
    (1..=n).all(|i| iota.preimage(i).is_some() || jota.preimage(i).is_some())
}

/// All skylines for the data `(alpha, beta, gamma, iota, jota)`.
///
/// Panics if the injections do not map `[l(alpha)]`, `[l(beta)]` into
/// `[l(gamma)]`.
pub fn enumerate_skylines(
    alpha: &Composition,
    beta: &Composition,
    gamma: &Composition,
    iota: &OrderedInjection,
    jota: &OrderedInjection,
) -> Vec<SkylineTableau> {
    let n = gamma.len();
    assert_eq!(
        iota.source_size(),
        alpha.len(),
        "iota must have source [l(alpha)]"
    );
    assert_eq!(
        jota.source_size(),
        beta.len(),
        "jota must have source [l(beta)]"
    );
    assert_eq!(iota.target_size(), n, "iota must have target [l(gamma)]");
    assert_eq!(jota.target_size(), n, "jota must have target [l(gamma)]");
    if !covers(iota, jota, n) {
        return Vec::new();
    }
    let per_row: Vec<Vec<SkewEdgeTableau>> = aligned_parts(alpha, beta, iota, jota)
        .into_iter()
        .zip(gamma.parts())
        .map(|((a, b), &c)| enumerate_tableaux(c, a, b))
        .collect();
    let build = |rows: Vec<SkewEdgeTableau>| SkylineTableau {
        gamma: gamma.clone(),
        alpha: alpha.clone(),
        beta: beta.clone(),
        iota: iota.clone(),
        jota: jota.clone(),
        rows,
    };
    if per_row.is_empty() {
        return vec![build(Vec::new())];
    }
    per_row
        .into_iter()
        .multi_cartesian_product()
        .map(build)
        .collect()
}

pub fn skyline_weight(t: &SkylineTableau, conv: WeightConvention) -> Poly {
    t.rows.iter().map(|s| s.weight(conv)).product()
}
