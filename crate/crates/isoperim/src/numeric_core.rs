//! Exact integer arithmetic for triangular numbers, the f/g decomposition,
//! and g-iterate orbits.
//!
//! Every `n ≥ 1` sits in a unique half-open triangular window
//! `T_{f-1} < n ≤ T_f`, giving the decomposition `n = T_{f(n)} − g(n)` with
//! `0 ≤ g(n) < f(n)` (and `f(0) = g(0) = 0` by convention). Everything here
//! is computed with integer predicates only — `f` equals the nearest integer
//! to `√(2n)`, but rounding a floating square root misclassifies inputs next
//! to triangular numbers once `n` is large, so floats are banned from this
//! module.

/// Largest `n` the crate accepts: keeps `8n + 1` (and every squared predicate
/// built on it) comfortably inside `u64`. Honest bounds beat silent
/// wraparound; arbitrary precision is a non-goal.
pub const MAX_SUPPORTED_N: u64 = 400_000_000_000_000_000;

/// The decomposition `n = T_f − g` with `0 ≤ g < f` (for `n ≥ 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FGDecomposition {
    pub n: u64,
    /// row index: `f(n)`, the unique `f` with `T_{f-1} < n ≤ T_f`
    pub f: u64,
    /// offset below the row's triangular number: `g(n) = T_{f(n)} − n`
    pub g: u64,
}

/// The orbit `n, g(n), g²(n), …` truncated at the first iterate ≤ `threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GOrbit {
    pub start: u64,
    /// `iterates[i] = gⁱ(start)`; last entry is the first one ≤ `threshold`
    pub iterates: Vec<u64>,
    /// `φ = min{i ≥ 0 : gⁱ(start) ≤ threshold}`, i.e. `iterates.len() - 1`
    pub phi: usize,
    pub threshold: u64,
}

/// Integer square root: the `r` with `r² ≤ m < (r+1)²`.
pub fn isqrt(m: u64) -> u64 {
    m.isqrt()
}

/// Triangular number `T_m = m(m+1)/2`.
pub fn triangular(m: u64) -> u64 {
    ((m as u128) * (m as u128 + 1) / 2)
        .try_into()
        .expect("triangular number overflows u64")
}

/// `f(n) = [√(2n)]` (nearest integer), the row index of `n`.
pub fn f_of(n: u64) -> u64 {
    assert!(
        n <= MAX_SUPPORTED_N,
        "n = {n} exceeds MAX_SUPPORTED_N = {MAX_SUPPORTED_N}"
    );
    if n == 0 {
        return 0;
    }
    // floor((-1 + sqrt(1+8n)) / 2), then bump to the ceiling when T_f < n
    let mut f = (isqrt(8 * n + 1) - 1) / 2;
    if triangular(f) < n {
        f += 1;
    }
    debug_assert!(triangular(f - 1) < n && n <= triangular(f));
    f
}

/// `g(n) = T_{f(n)} − n`, the offset of `n` below its row's triangular number.
pub fn g_of(n: u64) -> u64 {
    triangular(f_of(n)) - n
}

/// The validated pair `(f(n), g(n))`.
pub fn decompose(n: u64) -> FGDecomposition {
    let (f, g) = (f_of(n), g_of(n));
    let d = FGDecomposition { n, f, g };
    d.validate();
    d
}

impl FGDecomposition {
    /// Asserts `n = T_f − g` and the range constraint on `g`.
    pub fn validate(&self) {
        assert_eq!(self.n, triangular(self.f) - self.g, "n != T_f - g");
        if self.n == 0 {
            assert!(self.f == 0 && self.g == 0, "f(0) = g(0) = 0 convention");
        } else {
            assert!(self.g < self.f, "g = {} must be < f = {}", self.g, self.f);
        }
    }
}

/// Iterates `g` from `n` until the value drops to ≤ `threshold`.
///
/// Terminates for every input: `g(k) < f(k) ≤ k` for `k ≥ 1` and `g(0) = 0`,
/// so the orbit strictly decreases until it hits 0 (even for `threshold = 0`).
/// The whole orbit is materialized because the quasi-explicit formula needs
/// the sum `Σ f(gⁱ⁻¹(n))`; its length is only O(log log n).
pub fn g_orbit(n: u64, threshold: u64) -> GOrbit {
    let mut iterates = vec![n];
    while *iterates.last().unwrap() > threshold {
        let next = g_of(*iterates.last().unwrap());
        iterates.push(next);
    }
    GOrbit {
        start: n,
        phi: iterates.len() - 1,
        iterates,
        threshold,
    }
}

/// Exact form of Proposition 5.4: `g^L(n) ≤ 2·(n/2)^(1/2^L)`, equivalently
/// `t^K ≤ 2^(K−1)·n` with `t = g^L(n)` and `K = 2^L`. An overflowing `t^K`
/// certainly exceeds the right side (which fits u128 for `L ≤ 6`,
/// `n ≤ MAX_SUPPORTED_N`), so `checked_pow` failure means "violated".
pub fn g_iterate_bound_holds(n: u64, l: u32) -> bool {
    assert!(l <= 6, "2^(2^L - 1) exceeds u128 beyond L = 6");
    let mut t = n;
    for _ in 0..l {
        t = g_of(t);
    }
    if t <= 1 {
        // 0^K or 1^K never exceeds 2^(K-1)·n unless n = 0, where only t = 0 passes
        return n > 0 || t == 0;
    }
    let k = 2u32.pow(l);
    let rhs = (1u128 << (k - 1)) * n as u128;
    match (t as u128).checked_pow(k) {
        Some(lhs) => lhs <= rhs,
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(17), 4);
        for m in 0..2_000u64 {
            let r = isqrt(m);
            assert!(r * r <= m && m < (r + 1) * (r + 1), "isqrt({m}) = {r}");
        }
    }

    #[test]
    fn triangular_values() {
        assert_eq!(triangular(0), 0);
        assert_eq!(triangular(1), 1);
        assert_eq!(triangular(3), 6);
        assert_eq!(triangular(548), 150_426);
    }

    #[test]
    fn f_examples_from_triangle() {
        // paper's triangular array: (2,1) at n=2, (4,3) at n=7, (4,0) at n=10
        assert_eq!(f_of(0), 0);
        assert_eq!(f_of(2), 2);
        assert_eq!(f_of(7), 4);
        assert_eq!(f_of(10), 4);
        assert_eq!(g_of(0), 0);
        assert_eq!(g_of(7), 3);
        assert_eq!(g_of(3), 0);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(6), FGDecomposition { n: 6, f: 3, g: 0 });
        assert_eq!(decompose(4), FGDecomposition { n: 4, f: 3, g: 2 });
        // largest exception-table key: T_548 = 150426 is the first row end >= n
        let d = decompose(149_894);
        assert_eq!((d.f, d.g), (548, 532));
    }

    // the three representations of Proposition 5.3, each as its own exact
    // integer predicate (squares only, no floats)
    fn f_ceil_quadratic(n: u64) -> u64 {
        // smallest p with (2p+1)^2 >= 8n+1
        (f_of(n).saturating_sub(2)..)
            .find(|&p| (2 * p + 1).pow(2) >= 8 * n + 1)
            .unwrap()
    }

    fn f_ceil_sqrt_minus_half(n: u64) -> u64 {
        // smallest p with p + 1/2 >= sqrt(2n), i.e. (2p+1)^2 >= 8n
        (f_of(n).saturating_sub(2)..)
            .find(|&p| (2 * p + 1).pow(2) >= 8 * n)
            .unwrap()
    }

    #[allow(clippy::manual_div_ceil)] // keep the formula as written below
    fn f_nearest(n: u64) -> u64 {
        // nearest integer to sqrt(2n) = floor((sqrt(8n)+1)/2); sqrt(2n) is
        // never a half-integer (8n = odd^2 is impossible mod 2)
        (isqrt(8 * n) + 1) / 2
    }

    #[test]
    fn representations_agree() {
        for n in 0..=100_000u64 {
            let f = f_of(n);
            assert_eq!(f, f_ceil_quadratic(n), "quadratic ceiling at n={n}");
            assert_eq!(f, f_ceil_sqrt_minus_half(n), "sqrt ceiling at n={n}");
            assert_eq!(f, f_nearest(n), "nearest integer at n={n}");
        }
        // spot-check near the ceiling, including both sides of a triangular number
        for n in [
            MAX_SUPPORTED_N,
            MAX_SUPPORTED_N - 1,
            triangular(894_427_190),
            triangular(894_427_190) + 1,
        ] {
            let f = f_of(n);
            assert_eq!(f, f_ceil_quadratic(n));
            assert_eq!(f, f_ceil_sqrt_minus_half(n));
            assert_eq!(f, f_nearest(n));
        }
    }

    #[test]
    fn decomposition_invariants_small_range() {
        for n in 1..=100_000u64 {
            let d = decompose(n); // validate() asserts n = T_f - g, 0 <= g < f
            assert_eq!(d.n, n);
        }
    }

    #[test]
    fn shift_fact_small_range() {
        // if g(n) != f(n)-1 then g(n) = g(n - f(n)); underlies the shift corollary
        for n in 2..=100_000u64 {
            let (f, g) = (f_of(n), g_of(n));
            if g != f - 1 {
                assert_eq!(g, g_of(n - f), "shift fact at n={n}");
            }
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(g_orbit(100, 149_894).phi, 0);
        let o = g_orbit(149_895, 149_894);
        assert_eq!(o.phi, 1);
        assert_eq!(o.iterates, vec![149_895, 531]);

        // Prop 5.4 gives phi <= ceil(log2 log2 (n/2)) + c; for n = 10^12 the
        // orbit collapses in a handful of steps
        let o = g_orbit(1_000_000_000_000, 149_894);
        assert!(o.phi <= 3, "phi = {}", o.phi);
        for w in o.iterates.windows(2) {
            assert_eq!(w[1], g_of(w[0]));
            // strict contraction: g(m)^2 < 2m for m >= 1
            assert!(w[1] * w[1] < 2 * w[0]);
        }
    }

    #[test]
    fn orbit_terminates_at_zero_threshold() {
        let o = g_orbit(37, 0);
        assert_eq!(*o.iterates.last().unwrap(), 0);
        assert_eq!(o.phi, o.iterates.len() - 1);
    }

    #[test]
    fn g_iterate_bound_small_range() {
        for n in 0..=100_000u64 {
            for l in 0..=6 {
                assert!(g_iterate_bound_holds(n, l), "Prop 5.4 at n={n}, L={l}");
            }
        }
    }
}
