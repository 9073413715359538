//! Property tests for the set model and the oracle.
//!
//! Two layers: proptest strategies (structured generation with shrinking) for
//! the per-set lemmas, and deterministic 10⁵-sample sweeps at the scale the
//! invariants are stated for. The deterministic sweeps use SplitMix64 so a
//! failure reproduces without a seed file.

// `m + 1 <= cper` transcribes the complement lemma ("m+1 ≤ per(A^c)").
#![allow(clippy::int_plus_one)]

use std::collections::HashSet;

use isoperim::oracle::{brute_p, count_distinct_partitions, enumerate_volume_sets};
use isoperim::set_model::IntSet;
use proptest::prelude::*;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A random subset of {0, …, 63} drawn from a 64-bit word: cheap, and every
/// membership pattern near 0 (the only delicate spot) is reachable.
fn random_set(state: &mut u64) -> IntSet {
    let word = splitmix64(state);
    let elems: Vec<u64> = (0..64).filter(|b| word >> b & 1 == 1).collect();
    IntSet::new(elems).unwrap()
}

/// Independent bitmask implementation of perimeter: membership tests against
/// a u128 window instead of the sorted element list.
fn perimeter_bitmask(a: &IntSet) -> u64 {
    let mut mask: u128 = 0;
    for &z in a.elements() {
        mask |= 1 << z;
    }
    let has = |z: i64| z >= 0 && (z as u32) < 128 && mask >> z & 1 == 1;
    a.elements()
        .iter()
        .filter(|&&z| !(has(z as i64 - 1) && has(z as i64 + 1)))
        .sum()
}

/// Independent bitmask implementation of complement perimeter over the
/// window {0, …, max(a)+1}.
fn complement_perimeter_bitmask(a: &IntSet) -> u64 {
    let Some(m) = a.max() else { return 0 };
    let mut mask: u128 = 0;
    for &z in a.elements() {
        mask |= 1 << z;
    }
    let has = |z: i64| z >= 0 && (z as u32) < 128 && mask >> z & 1 == 1;
    (0..=m + 1)
        .filter(|&z| !has(z as i64) && (has(z as i64 - 1) || has(z as i64 + 1) || z == 0))
        .sum()
}

proptest! {
    /// Lemma 3.1: m ≤ per(A) ≤ vol(A) for every finite nonempty A with
    /// max A = m; and vol(A) ≤ T_m because A ⊆ {0, …, m}.
    #[test]
    fn lemma_3_1(elems in proptest::collection::btree_set(0u64..200, 1..40)) {
        let a = IntSet::new(elems.into_iter().collect()).unwrap();
        let m = a.max().unwrap();
        let per = a.perimeter();
        let vol = a.volume();
        prop_assert!(m <= per, "m = {m} > per = {per}");
        prop_assert!(per <= vol, "per = {per} > vol = {vol}");
        prop_assert!(vol <= m * (m + 1) / 2);
    }

    /// §3 complement lemma: m + 1 ≤ per(A^c), with equality exactly when
    /// {1, …, m} ⊆ A.
    #[test]
    fn complement_lemma(elems in proptest::collection::btree_set(0u64..200, 1..40)) {
        let a = IntSet::new(elems.into_iter().collect()).unwrap();
        let m = a.max().unwrap();
        let cper = a.complement_perimeter();
        prop_assert!(m + 1 <= cper);
        let solid = (1..=m).all(|z| a.contains(z));
        prop_assert_eq!(cper == m + 1, solid);
    }

    /// ∂A ⊆ A, and z ∈ A \ ∂A exactly when both neighbors are present.
    #[test]
    fn boundary_characterization(elems in proptest::collection::btree_set(0u64..200, 0..40)) {
        let a = IntSet::new(elems.into_iter().collect()).unwrap();
        let b = a.boundary();
        for &z in b.elements() {
            prop_assert!(a.contains(z));
        }
        for &z in a.elements() {
            let interior = z > 0 && a.contains(z - 1) && a.contains(z + 1);
            prop_assert_eq!(!b.contains(z), interior);
        }
    }

    /// Both perimeters are representation-independent: the sorted-list
    /// implementation agrees with a bitmask one.
    #[test]
    fn representation_independence(word in any::<u64>()) {
        let elems: Vec<u64> = (0..64).filter(|b| word >> b & 1 == 1).collect();
        let a = IntSet::new(elems).unwrap();
        prop_assert_eq!(a.perimeter(), perimeter_bitmask(&a));
        prop_assert_eq!(a.complement_perimeter(), complement_perimeter_bitmask(&a));
    }

    /// The enumeration is duplicate-free, every set has the right volume,
    /// and the count is 2 · (# partitions of n into distinct parts): each
    /// positive-part partition appears once with 0 and once without.
    #[test]
    fn enumeration_is_exact(n in 0u64..45) {
        let mut seen = HashSet::new();
        let mut count = 0u64;
        for a in enumerate_volume_sets(n).unwrap() {
            prop_assert_eq!(a.volume(), n);
            prop_assert!(seen.insert(a.elements().to_vec()), "duplicate set {:?}", a);
            count += 1;
        }
        prop_assert_eq!(count, 2 * count_distinct_partitions(n));
    }

    /// The oracle minimum is a true minimum: no enumerated set beats it and
    /// some enumerated set attains it.
    #[test]
    fn oracle_minimum_is_attained(n in 1u64..40) {
        let p = brute_p(n).unwrap();
        let perims: Vec<u64> =
            enumerate_volume_sets(n).unwrap().map(|a| a.perimeter()).collect();
        prop_assert!(perims.iter().all(|&v| v >= p));
        prop_assert!(perims.contains(&p));
    }
}

/// Lemma 3.1 and the complement lemma at the stated scale: 10⁵ random sets.
#[test]
fn lemmas_hold_for_1e5_random_sets() {
    let mut state = 0xa18_6053_u64; // seed nods to the OEIS entry
    for _ in 0..100_000 {
        let a = random_set(&mut state);
        let Some(m) = a.max() else { continue };
        let per = a.perimeter();
        let vol = a.volume();
        assert!(m <= per && per <= vol && vol <= m * (m + 1) / 2, "Lemma 3.1 at {a:?}");
        let cper = a.complement_perimeter();
        assert!(m + 1 <= cper, "complement lemma at {a:?}");
        assert_eq!(cper == m + 1, (1..=m).all(|z| a.contains(z)), "equality case at {a:?}");
    }
}

/// Representation independence at the stated scale: 10⁴ random sets.
#[test]
fn representations_agree_for_1e4_random_sets() {
    let mut state = 0x5eed_u64;
    for _ in 0..10_000 {
        let a = random_set(&mut state);
        assert_eq!(a.perimeter(), perimeter_bitmask(&a), "{a:?}");
        assert_eq!(a.complement_perimeter(), complement_perimeter_bitmask(&a), "{a:?}");
    }
}
