//! Finite subsets of `{0, 1, 2, ...}` with volume, boundary, perimeter, and
//! complement-perimeter.
//!
//! Element 0 is a first-class member: it contributes nothing to any sum but
//! changes which neighbors are boundary — `per({0,1,2}) = 2` while
//! `per({1,2}) = 3`, and that difference is exactly why `P(3) = 2`.

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Sets with maximum element up to this build a dense bitmask at
/// construction, making `contains` O(1); larger sets (only reachable through
/// user-supplied literals) fall back to binary search.
const MASK_CAP: u64 = 1 << 20;

/// An immutable finite set of nonnegative integers.
///
/// Construction validates the §2 universe: strictly increasing elements, no
/// duplicates (negatives are unrepresentable in `u64`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSet {
    elems: Vec<u64>,
    /// dense bit-per-element mask covering `0..=max+1` when max <= MASK_CAP
    mask: Option<Vec<u64>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntSetError {
    #[error("elements must be strictly increasing: {prev} then {next} at position {pos}")]
    NotStrictlyIncreasing { prev: u64, next: u64, pos: usize },
    #[error("set literal must be wrapped in braces, e.g. {{0,1,2}}: got `{0}`")]
    MissingBraces(String),
    #[error("bad element `{0}`: {1}")]
    BadElement(String, String),
    #[error("volume overflows u64")]
    VolumeOverflow,
}

impl IntSet {
    /// Builds a set from strictly increasing elements.
    pub fn new(elems: Vec<u64>) -> Result<IntSet, IntSetError> {
        for (pos, w) in elems.windows(2).enumerate() {
            if w[0] >= w[1] {
                return Err(IntSetError::NotStrictlyIncreasing {
                    prev: w[0],
                    next: w[1],
                    pos: pos + 1,
                });
            }
        }
        let mask = match elems.last() {
            Some(&max) if max <= MASK_CAP => {
                let mut words = vec![0u64; (max as usize + 2) / 64 + 1];
                for &e in &elems {
                    words[(e / 64) as usize] |= 1 << (e % 64);
                }
                Some(words)
            }
            _ => None,
        };
        Ok(IntSet { elems, mask })
    }

    pub fn empty() -> IntSet {
        IntSet::new(Vec::new()).unwrap()
    }

    pub fn elements(&self) -> &[u64] {
        &self.elems
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.elems.last().copied()
    }

    pub fn contains(&self, z: u64) -> bool {
        match &self.mask {
            Some(words) => match words.get((z / 64) as usize) {
                Some(w) => w & (1 << (z % 64)) != 0,
                None => false,
            },
            None => self.elems.binary_search(&z).is_ok(),
        }
    }

    /// `vol(A) = Σ_{z∈A} z`; the empty set has volume 0.
    pub fn volume(&self) -> u64 {
        self.elems
            .iter()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .expect("volume overflows u64")
    }

    /// `∂A = {z ∈ A : {z−1, z+1} ⊄ A}`. `0 ∈ A` is always boundary since
    /// `−1` is outside the universe.
    pub fn boundary(&self) -> IntSet {
        let b: Vec<u64> = self
            .elems
            .iter()
            .copied()
            .filter(|&z| !(z > 0 && self.contains(z - 1) && self.contains(z + 1)))
            .collect();
        IntSet::new(b).unwrap()
    }

    /// `per(A) = Σ_{z∈∂A} z`; 0 for the empty set.
    pub fn perimeter(&self) -> u64 {
        self.boundary().volume()
    }

    /// `per(Aᶜ)` for the cofinite complement `{0,1,...} \ A`.
    ///
    /// Computed over the window `{0, ..., max(A)+1}`: a `z ∉ A` with `z ≥ 1`
    /// is complement-boundary iff `z−1 ∈ A` or `z+1 ∈ A`, and every
    /// `z > max(A)+1` has both neighbors outside `A`. `0 ∈ Aᶜ` is always
    /// boundary but contributes 0, so `complement_perimeter(∅) = 0`.
    pub fn complement_perimeter(&self) -> u64 {
        let Some(max) = self.max() else { return 0 };
        let mut per = 0u64;
        for z in 1..=max + 1 {
            if !self.contains(z) && (self.contains(z - 1) || self.contains(z + 1)) {
                per += z;
            }
        }
        per
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for IntSet {
    type Err = IntSetError;

    /// Parses the CLI/test literal format: `{0,1,2}` (whitespace tolerated,
    /// `{}` is the empty set). Elements must already be strictly increasing.
    fn from_str(s: &str) -> Result<IntSet, IntSetError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| IntSetError::MissingBraces(s.to_string()))?;
        let mut elems = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() && inner.trim().is_empty() {
                continue; // "{}" or "{ }"
            }
            let e: u64 = part
                .parse()
                .map_err(|e: std::num::ParseIntError| {
                    IntSetError::BadElement(part.to_string(), e.to_string())
                })?;
            elems.push(e);
        }
        IntSet::new(elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric_core::triangular;

    fn set(elems: &[u64]) -> IntSet {
        IntSet::new(elems.to_vec()).unwrap()
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(set(&[0, 1, 2]).boundary(), set(&[0, 2]));
        assert_eq!(set(&[5]).boundary(), set(&[5]));
        assert_eq!(IntSet::empty().boundary(), IntSet::empty());
        // 0 is boundary whenever present
        assert_eq!(set(&[0, 1, 2, 3]).boundary(), set(&[0, 3]));
    }

    #[test]
    fn volume_examples() {
        assert_eq!(IntSet::empty().volume(), 0);
        assert_eq!(set(&[0, 1, 2]).volume(), 3);
        // vol({l..=k}) = T_k - T_{l-1}
        for l in 1..=30u64 {
            for k in l..=30 {
                let run: Vec<u64> = (l..=k).collect();
                assert_eq!(set(&run).volume(), triangular(k) - triangular(l - 1));
            }
        }
    }

    #[test]
    fn perimeter_examples() {
        assert_eq!(set(&[0, 1, 2]).perimeter(), 2);
        assert_eq!(set(&[1, 2]).perimeter(), 3);
        assert_eq!(set(&[7]).perimeter(), 7);
        assert_eq!(IntSet::empty().perimeter(), 0);
    }

    #[test]
    fn complement_perimeter_examples() {
        // complement of {0,1,2} has boundary {3}
        assert_eq!(set(&[0, 1, 2]).complement_perimeter(), 3);
        // complement of {1} has boundary {0, 2}
        assert_eq!(set(&[1]).complement_perimeter(), 2);
        assert_eq!(IntSet::empty().complement_perimeter(), 0);
        // sigma(0;0) in the flesh: per({0}^c) is genuinely 1, the paper's
        // boundary value 0 for sigma(0;0) is a convention the recurrence
        // never touches
        assert_eq!(set(&[0]).complement_perimeter(), 1);
    }

    #[test]
    fn construction_rejects_disorder() {
        assert!(IntSet::new(vec![2, 1]).is_err());
        assert!(IntSet::new(vec![1, 1]).is_err());
    }

    #[test]
    fn literal_round_trip() {
        for s in ["{}", "{0}", "{0,1,2}", "{5,9,100}"] {
            let parsed: IntSet = s.parse().unwrap();
            assert_eq!(parsed.to_string(), s);
        }
        let ws: IntSet = " { 0, 1, 2 } ".parse().unwrap();
        assert_eq!(ws, set(&[0, 1, 2]));
        assert!("0,1,2".parse::<IntSet>().is_err());
        assert!("{2,1}".parse::<IntSet>().is_err());
        assert!("{x}".parse::<IntSet>().is_err());
    }

    #[test]
    fn lemma_3_1_window() {
        // m <= per(A) <= vol(A) <= m(m+1)/2 for finite nonempty A
        for bits in 1..(1u32 << 12) {
            let elems: Vec<u64> = (0..12).filter(|i| bits & (1 << i) != 0).collect();
            let a = set(&elems);
            let m = a.max().unwrap();
            assert!(m <= a.perimeter());
            assert!(a.perimeter() <= a.volume());
            assert!(a.volume() <= triangular(m));
            // complement lemma: m+1 <= per(A^c), equality iff {1..m} ⊆ A
            assert!(m + 1 <= a.complement_perimeter());
            let full = (1..=m).all(|z| a.contains(z));
            assert_eq!(a.complement_perimeter() == m + 1, full);
        }
    }
}
