//! Compositions, weak compositions, order-preserving injections and the
//! overlapping shuffle product that governs products at `y = 0`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CompositionError;

/// A finite sequence of positive integers. The empty composition is the
/// multiplicative unit.
///
/// Compositions are ordered by length first, then lexicographically; this
/// is the order used by every enumeration and serialized listing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart);
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of parts, written `|alpha|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Part at 1-based position `i`.
    pub fn part(&self, i: usize) -> u32 {
        self.0[i - 1]
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Parses `"a1,a2,..."`; the empty string is the empty composition.
/// Errors report the byte offset of the offending token.
impl FromStr for Composition {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for token in s.split(',') {
            let trimmed = token.trim();
            let position = offset + token.find(trimmed).unwrap_or(0);
            match trimmed.parse::<u32>() {
                Ok(v) if v > 0 => parts.push(v),
                _ => {
                    return Err(CompositionError::InvalidPart {
                        position,
                        token: trimmed.to_string(),
                    })
                }
            }
            offset += token.len() + 1;
        }
        Ok(Composition(parts))
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Composition::new(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// A finite sequence of nonnegative integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeakComposition(pub Vec<u32>);

impl WeakComposition {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Deletes the zero entries.
    pub fn positive_part(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&v| v > 0).collect())
    }
}

/// An order-preserving injection `[l] -> [n]`, stored as its strictly
/// increasing list of 1-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedInjection {
    target: usize,
    images: Vec<usize>,
}

impl OrderedInjection {
    /// Returns `None` unless `images` is strictly increasing inside `1..=target`.
    pub fn new(images: Vec<usize>, target: usize) -> Option<Self> {
        let increasing = images.windows(2).all(|w| w[0] < w[1]);
        let in_range = images.iter().all(|&i| (1..=target).contains(&i));
        (increasing && in_range).then_some(OrderedInjection { target, images })
    }

    pub fn source_size(&self) -> usize {
        self.images.len()
    }

    pub fn target_size(&self) -> usize {
        self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based source index `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// 1-based preimage of `i`, if `i` is in the image.
    pub fn preimage(&self, i: usize) -> Option<usize> {
        self.images.binary_search(&i).ok().map(|k| k + 1)
    }
}

/// All compositions with at most `max_len` parts, each at most `max_part`,
/// ordered by length then lexicographically.
pub fn enumerate_compositions(max_len: usize, max_part: u32) -> Vec<Composition> {
    compositions_within(max_len, max_part, 0, u32::MAX)
}

/// Compositions of length at most `max_len`, parts at most `max_part`, and
/// size in `min_size..=max_size`, in length-then-lex order.
pub fn compositions_within(
    max_len: usize,
    max_part: u32,
    min_size: u32,
    max_size: u32,
) -> Vec<Composition> {
    fn extend(
        prefix: &mut Vec<u32>,
        remaining: usize,
        max_part: u32,
        min_size: u32,
        max_size: u32,
        sum: u32,
        out: &mut Vec<Composition>,
    ) {
        if remaining == 0 {
            if sum >= min_size {
                out.push(Composition(prefix.clone()));
            }
            return;
        }
        for v in 1..=max_part {
            if sum.saturating_add(v) > max_size {
                break;
            }
            // Prune prefixes that cannot reach `min_size`.
            let best = sum as u64 + v as u64 + (remaining as u64 - 1) * max_part as u64;
            if best < min_size as u64 {
                continue;
            }
            prefix.push(v);
            extend(
                prefix,
                remaining - 1,
                max_part,
                min_size,
                max_size,
                sum + v,
                out,
            );
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    for len in 0..=max_len {
        extend(
            &mut Vec::new(),
            len,
            max_part,
            min_size,
            max_size,
            0,
            &mut out,
        );
    }
    out
}

/// All order-preserving injections `[l] -> [n]`, lexicographic in their
/// images. Empty when `l > n`.
pub fn enumerate_injections(l: usize, n: usize) -> Vec<OrderedInjection> {
    if l > n {
        return Vec::new();
    }
    (1..=n)
        .combinations(l)
        .map(|images| OrderedInjection { target: n, images })
        .collect()
}

/// Every `(iota, jota)` with `iota: [l] -> [n]`, `jota: [m] -> [n]` and
/// `im iota ∪ im jota = [n]`, over all `n`.
pub fn covering_injection_pairs(l: usize, m: usize) -> Vec<(OrderedInjection, OrderedInjection)> {
    let mut out = Vec::new();
    for n in l.max(m)..=l + m {
        let jotas = enumerate_injections(m, n);
        for iota in enumerate_injections(l, n) {
            for jota in &jotas {
                let mut covered = vec![false; n];
                for &i in iota.images().iter().chain(jota.images()) {
                    covered[i - 1] = true;
                }
                if covered.iter().all(|&c| c) {
                    out.push((iota.clone(), jota.clone()));
                }
            }
        }
    }
    out
}

/// Row data `(alpha part, beta part)` for each target position of a pair of
/// injections, absent preimages contributing 0.
pub fn aligned_parts(
    alpha: &Composition,
    beta: &Composition,
    iota: &OrderedInjection,
    jota: &OrderedInjection,
) -> Vec<(u32, u32)> {
    let n = iota.target_size().max(jota.target_size());
    (1..=n)
        .map(|i| {
            let a = iota.preimage(i).map_or(0, |k| alpha.part(k));
            let b = jota.preimage(i).map_or(0, |k| beta.part(k));
            (a, b)
        })
        .collect()
}

/// The overlapping shuffle product: multiset of `gamma` with
/// `gamma_i = alpha_{iota^-1(i)} + beta_{jota^-1(i)}` over all covering pairs.
pub fn overlapping_shuffles(alpha: &Composition, beta: &Composition) -> BTreeMap<Composition, u64> {
    let mut out = BTreeMap::new();
    for (iota, jota) in covering_injection_pairs(alpha.len(), beta.len()) {
        let gamma = aligned_parts(alpha, beta, &iota, &jota)
            .into_iter()
            .map(|(a, b)| a + b)
            .collect();
        *out.entry(Composition(gamma)).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn positive_part_examples() {
        let w = WeakComposition(vec![1, 7, 0, 0, 5, 0, 5]);
        assert_eq!(w.positive_part(), comp(&[1, 7, 5, 5]));
        assert_eq!(
            WeakComposition(vec![0, 0, 0]).positive_part(),
            Composition::empty()
        );
        assert_eq!(WeakComposition(vec![2, 3]).positive_part(), comp(&[2, 3]));
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(
            enumerate_compositions(1, 2),
            vec![Composition::empty(), comp(&[1]), comp(&[2])]
        );
        assert_eq!(enumerate_compositions(0, 5), vec![Composition::empty()]);
        let all = enumerate_compositions(2, 2);
        let expected: Vec<_> = [&[][..], &[1], &[2], &[1, 1], &[1, 2], &[2, 1], &[2, 2]]
            .iter()
            .map(|p| comp(p))
            .collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn compositions_within_filters_by_size() {
        let got = compositions_within(3, 3, 3, 3);
        let expected: Vec<_> = [&[3][..], &[1, 2], &[2, 1], &[1, 1, 1]]
            .iter()
            .map(|p| comp(p))
            .collect();
        assert_eq!(got, expected);
        let brute: Vec<_> = enumerate_compositions(3, 4)
            .into_iter()
            .filter(|g| (2..=5).contains(&g.size()))
            .collect();
        assert_eq!(compositions_within(3, 4, 2, 5), brute);
    }

    #[test]
    fn injections() {
        let imgs: Vec<_> = enumerate_injections(2, 3)
            .iter()
            .map(|i| i.images().to_vec())
            .collect();
        assert_eq!(imgs, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(enumerate_injections(0, 4).len(), 1);
        assert!(enumerate_injections(3, 2).is_empty());

        let iota = OrderedInjection::new(vec![1, 3], 3).unwrap();
        assert_eq!(iota.image(1), 1);
        assert_eq!(iota.image(2), 3);
        assert_eq!(iota.preimage(3), Some(2));
        assert_eq!(iota.preimage(2), None);
        assert!(OrderedInjection::new(vec![2, 1], 3).is_none());
        assert!(OrderedInjection::new(vec![4], 3).is_none());
    }

    #[test]
    fn shuffles_of_singletons() {
        let s = overlapping_shuffles(&comp(&[1]), &comp(&[1]));
        let expected: BTreeMap<_, _> = [(comp(&[1, 1]), 2), (comp(&[2]), 1)].into();
        assert_eq!(s, expected);
    }

    #[test]
    fn shuffles_with_unit() {
        let beta = comp(&[2, 1, 3]);
        let s = overlapping_shuffles(&Composition::empty(), &beta);
        assert_eq!(s, [(beta.clone(), 1)].into());
        assert_eq!(
            overlapping_shuffles(&beta, &Composition::empty()),
            [(beta, 1)].into()
        );
    }

    #[test]
    fn shuffle_misses_324() {
        let s = overlapping_shuffles(&comp(&[3, 2]), &comp(&[2, 3]));
        assert_eq!(s.get(&comp(&[3, 2, 4])), None);
        // iota = {1,2}, jota = {3,4} and iota = {1,3}, jota = {2,4}.
        assert_eq!(s.get(&comp(&[3, 2, 2, 3])), Some(&2));
        assert_eq!(s.get(&comp(&[5, 5])), Some(&1));
    }

    #[test]
    fn parse_compositions() {
        assert_eq!("3,2".parse::<Composition>().unwrap(), comp(&[3, 2]));
        assert_eq!("".parse::<Composition>().unwrap(), Composition::empty());
        assert_eq!(" 1, 4 ".parse::<Composition>().unwrap(), comp(&[1, 4]));
        assert_eq!(
            "3,x,2".parse::<Composition>(),
            Err(CompositionError::InvalidPart {
                position: 2,
                token: "x".into()
            })
        );
        assert!(matches!(
            "1,0".parse::<Composition>(),
            Err(CompositionError::InvalidPart { position: 2, .. })
        ));
        assert!(matches!(
            "1,,2".parse::<Composition>(),
            Err(CompositionError::InvalidPart { position: 2, .. })
        ));
    }

    #[test]
    fn json_is_plain_array() {
        assert_eq!(serde_json::to_string(&comp(&[3, 2])).unwrap(), "[3,2]");
        assert!(serde_json::from_str::<Composition>("[3,0]").is_err());
    }

    #[test]
    fn ordering_is_length_then_lex() {
        assert!(comp(&[5]) < comp(&[1, 1]));
        assert!(comp(&[1, 2]) < comp(&[2, 1]));
        assert!(Composition::empty() < comp(&[1]));
    }
}
