//! Exact sparse polynomials over the integers in two indexed variable
//! families `x1, x2, ...` and `y1, y2, ...`.
//!
//! The x-free polynomials form the coefficient ring `Z[y1, y2, ...]` in
//! which all structure coefficients live.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with the variable order
//! `x1 > x2 > ... > y1 > y2 > ...`. Iteration and serialization list the
//! leading term first.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;

/// A ring variable. Indices are 1-based.
///
/// The derived order (`X` before `Y`, then by index) is the variable order
/// used by the lexicographic tie-break, with earlier variables ranking
/// higher.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(u32),
    Y(u32),
}

impl Var {
    pub fn index(self) -> u32 {
        match self {
            Var::X(i) | Var::Y(i) => i,
        }
    }

    pub fn is_x(self) -> bool {
        matches!(self, Var::X(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// A monomial `x^a y^b` stored sparsely: only nonzero exponents, sorted by
/// variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            degree: 0,
            exps: Vec::new(),
        }
    }

    pub fn var(v: Var) -> Self {
        Self::from_exponents([(v, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs. Repeated
    /// variables have their exponents added; zero exponents are dropped.
    ///
    /// Panics if a variable has index 0.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            assert!(v.index() >= 1, "variable indices are 1-based, got {v:?}");
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        let degree = map.values().sum();
        Monomial {
            degree,
            exps: map.into_iter().collect(),
        }
    }

    /// `x_{i1}^{e1} ... x_{ik}^{ek}` from `(index, exponent)` pairs.
    pub fn x_monomial(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Self::from_exponents(pairs.into_iter().map(|(i, e)| (Var::X(i), e)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn x_degree(&self) -> u32 {
        self.x_exponents().map(|(_, e)| e).sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y_exponents().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    /// All `(variable, exponent)` pairs in variable order.
    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn x_exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps
            .iter()
            .filter(|(v, _)| v.is_x())
            .map(|&(v, e)| (v.index(), e))
    }

    pub fn y_exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps
            .iter()
            .filter(|(v, _)| !v.is_x())
            .map(|&(v, e)| (v.index(), e))
    }

    pub fn x_part(&self) -> Monomial {
        Self::from_exponents(self.exps.iter().copied().filter(|(v, _)| v.is_x()))
    }

    pub fn y_part(&self) -> Monomial {
        Self::from_exponents(self.exps.iter().copied().filter(|(v, _)| !v.is_x()))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_x_free(&self) -> bool {
        self.exps.iter().all(|(v, _)| !v.is_x())
    }

    pub fn is_y_free(&self) -> bool {
        self.exps.iter().all(|(v, _)| v.is_x())
    }

    /// Product of two monomials (merge of sorted exponent lists).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps) {
                match a.0.cmp(&b.0) {
                    // `self` has a positive exponent on an earlier variable.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match a.1.cmp(&b.1) {
                        Ordering::Equal => {}
                        ord => return ord,
                    },
                }
            }
            self.exps.len().cmp(&other.exps.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in `Z[x1, x2, ..., y1, y2, ...]` in canonical form: no zero
/// coefficients are stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn x(i: u32) -> Self {
        Self::var(Var::X(i))
    }

    pub fn y(i: u32) -> Self {
        Self::var(Var::Y(i))
    }

    /// Collects terms, combining like monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(Monomial::is_x_free)
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::x_degree).max()
    }

    /// Largest x-index appearing, 0 if none.
    pub fn max_x_index(&self) -> u32 {
        self.max_index(true)
    }

    /// Largest y-index appearing, 0 if none.
    pub fn max_y_index(&self) -> u32 {
        self.max_index(false)
    }

    fn max_index(&self, x: bool) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().iter())
            .filter(|(v, _)| v.is_x() == x)
            .map(|(v, _)| v.index())
            .max()
            .unwrap_or(0)
    }

    /// True if every term has y-degree `d` (vacuously true for zero).
    pub fn is_y_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.y_degree() == d)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution of the assigned variables; the others are
    /// left untouched.
    pub fn substitute(&self, assignment: &HashMap<Var, Poly>) -> Poly {
        let mut powers: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Poly::constant(c.clone());
            for &(v, e) in m.exponents() {
                match assignment.get(&v) {
                    Some(image) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| image.pow(e));
                        factor = &factor * &*pw;
                    }
                    None => kept.push((v, e)),
                }
            }
            let rest = Monomial::from_exponents(kept);
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&rest), fc);
            }
        }
        out
    }

    /// Sets every y-variable to zero.
    pub fn y_to_zero(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.is_y_free())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of the terms of total x-degree `d`.
    pub fn x_degree_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The y-polynomial multiplying the pure x-monomial `xm`.
    ///
    /// Panics if `xm` carries y-exponents.
    pub fn coefficient_of_x_monomial(&self, xm: &Monomial) -> Poly {
        assert!(xm.is_y_free(), "expected a pure x-monomial, got {xm}");
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.x_part() == *xm {
                out.add_term(m.y_part(), c.clone());
            }
        }
        out
    }

    /// Groups terms by x-monomial: `p = sum_m m * coeffs[m]` with every
    /// coefficient x-free.
    pub fn x_coefficients(&self) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.x_part())
                .or_default()
                .add_term(m.y_part(), c.clone());
        }
        out
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms()
            .map(|(m, c)| TermRecord {
                coeff: c.to_string(),
                x: m.x_exponents().map(|(i, e)| [i, e]).collect(),
                y: m.y_exponents().map(|(i, e)| [i, e]).collect(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Poly, PolyError> {
        let mut p = Poly::zero();
        for r in records {
            let c: BigInt = r
                .coeff
                .parse()
                .map_err(|_| PolyError::BadCoefficient(r.coeff.clone()))?;
            let mut pairs = Vec::with_capacity(r.x.len() + r.y.len());
            for &[i, e] in &r.x {
                if i == 0 {
                    return Err(PolyError::ZeroIndex);
                }
                pairs.push((Var::X(i), e));
            }
            for &[i, e] in &r.y {
                if i == 0 {
                    return Err(PolyError::ZeroIndex);
                }
                pairs.push((Var::Y(i), e));
            }
            p.add_term(Monomial::from_exponents(pairs), c);
        }
        Ok(p)
    }
}

/// Serializes an integer as a decimal string.
pub fn serialize_decimal<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// One serialized term: `{coeff: "decimal", x: [[index, exp], ...], y: [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub x: Vec<[u32; 2]>,
    pub y: Vec<[u32; 2]>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        Poly::from_records(&records).map_err(D::Error::custom)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}
