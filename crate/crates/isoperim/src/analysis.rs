//! Verification suites and figure-data generation: every published bound
//! and corollary checked against computed values, exception-table
//! regeneration, the triangular arrays, and drift-compensated series.
//!
//! Inequalities against irrational bounds are decided exactly where both
//! sides square into integers, and otherwise with directed fixed-point
//! interval arithmetic whose endpoints are certified (rounded outward at
//! every step). A check can therefore report a spurious violation in a
//! sub-`2⁻²⁰` indeterminacy band, but can never silently pass a false
//! claim; the observed slack of every bound is orders of magnitude wider
//! than the band.

use crate::dp_engine::ValueTable;
use crate::fast_engine::{fast_p, fast_q, ExceptionRecord, ExceptionTable};
use crate::numeric_core::{decompose, triangular};
use rayon::prelude::*;
use serde::Serialize;

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub n: u64,
    pub bound: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n_max: u64,
    pub violations: Vec<Violation>,
    pub pass: bool,
}

impl BoundReport {
    pub fn new(n_max: u64, violations: Vec<Violation>) -> BoundReport {
        let pass = violations.is_empty();
        BoundReport {
            n_max,
            violations,
            pass,
        }
    }
}

// ---------------------------------------------------------------------------
// Exception regeneration
// ---------------------------------------------------------------------------

/// Re-derives the exception list from first principles: every `n ≤ n_max`
/// where either identity of Thm 6.5 fails against the given (typically DP)
/// values, with exact per-identity flags.
pub fn regenerate_exceptions(vt: &ValueTable) -> Vec<ExceptionRecord> {
    let mut out = Vec::new();
    for n in 0..=vt.n_max() {
        let d = decompose(n);
        let p = vt.p(n);
        let q = vt.q(n);
        let p_identity_fails = p != d.f + vt.q(d.g);
        let q_identity_fails = q != 1 + d.f + vt.p(d.g);
        if p_identity_fails || q_identity_fails {
            out.push(ExceptionRecord {
                n,
                p,
                q,
                p_identity_fails,
                q_identity_fails,
            });
        }
    }
    out
}

/// Diffs a regenerated list against a loaded table on `n ≤ n_max`: values,
/// flags, and membership must all agree in both directions.
pub fn compare_exceptions(
    regenerated: &[ExceptionRecord],
    table: &ExceptionTable,
    n_max: u64,
) -> BoundReport {
    let mut violations = Vec::new();
    for rec in regenerated {
        match table.get(rec.n) {
            None => violations.push(Violation {
                n: rec.n,
                bound: "exception_regeneration".into(),
                lhs: format!("regenerated record {rec:?}"),
                rhs: "no such row in table".into(),
            }),
            Some(t) if t != rec => violations.push(Violation {
                n: rec.n,
                bound: "exception_regeneration".into(),
                lhs: format!("regenerated {rec:?}"),
                rhs: format!("table has {t:?}"),
            }),
            Some(_) => {}
        }
    }
    let regen_keys: std::collections::BTreeSet<u64> =
        regenerated.iter().map(|r| r.n).collect();
    for rec in table.records().filter(|r| r.n <= n_max) {
        if !regen_keys.contains(&rec.n) {
            violations.push(Violation {
                n: rec.n,
                bound: "exception_regeneration".into(),
                lhs: "table row".into(),
                rhs: "not regenerated (identities hold per the value table)".into(),
            });
        }
    }
    BoundReport::new(n_max, violations)
}

// ---------------------------------------------------------------------------
// Exact fixed-point interval arithmetic (Q.30) for the one genuinely
// irrational bound, Thm 5.6's log-log upper envelope.
// ---------------------------------------------------------------------------

mod fixed {
    pub const SHIFT: u32 = 30;
    #[cfg(test)]
    pub const ONE: i128 = 1 << SHIFT;

    /// `[lo, hi]` in Q.30 certified to contain the real value.
    #[derive(Clone, Copy, Debug)]
    pub struct Interval {
        pub lo: i128,
        pub hi: i128,
    }

    /// `2^{3/4}` in Q.30; the unit tests pin it by integer quartics.
    pub const TWO_POW_3_4: Interval = Interval {
        lo: 1_805_811_301,
        hi: 1_805_811_302,
    };

    fn floor_shift(x: i128) -> i128 {
        x >> SHIFT // arithmetic shift floors, negatives included
    }

    fn ceil_shift(x: i128) -> i128 {
        -((-x) >> SHIFT)
    }

    impl Interval {
        /// Exact `v/2` (the bound's `n/2` never loses a bit in Q.30).
        pub fn exact_u64_half(v: u64) -> Interval {
            let x = (v as i128) << (SHIFT - 1);
            Interval { lo: x, hi: x }
        }

        pub fn add(self, o: Interval) -> Interval {
            Interval {
                lo: self.lo + o.lo,
                hi: self.hi + o.hi,
            }
        }

        pub fn add_int(self, k: i64) -> Interval {
            let k = (k as i128) << SHIFT;
            Interval {
                lo: self.lo + k,
                hi: self.hi + k,
            }
        }

        /// Directed product; endpoints stay exact outer bounds for any signs.
        pub fn mul(self, o: Interval) -> Interval {
            let cands = [
                self.lo * o.lo,
                self.lo * o.hi,
                self.hi * o.lo,
                self.hi * o.hi,
            ];
            Interval {
                lo: floor_shift(*cands.iter().min().unwrap()),
                hi: ceil_shift(*cands.iter().max().unwrap()),
            }
        }
    }

    /// `√x` for integer `x`, one ulp wide.
    pub fn sqrt_u64(x: u64) -> Interval {
        let lo = ((x as u128) << (2 * SHIFT)).isqrt() as i128;
        Interval { lo, hi: lo + 1 }
    }

    /// `√·` of a nonnegative interval.
    pub fn sqrt_interval(v: Interval) -> Interval {
        debug_assert!(v.lo >= 0);
        let lo = ((v.lo as u128) << SHIFT).isqrt() as i128;
        let hi = ((v.hi as u128) << SHIFT).isqrt() as i128 + 1;
        Interval { lo, hi }
    }

    /// Certified lower bound on `log₂(v/2^SHIFT)`, `v > 0`. Floor-rounded
    /// shift-and-square: once a computed bit undershoots the true bit, the
    /// deficit exceeds everything later bits could add back.
    fn log2_down(v: i128) -> i128 {
        debug_assert!(v > 0);
        let mut v = v as u128;
        let one = 1u128 << SHIFT;
        let mut int_part: i128 = 0;
        while v >= 2 * one {
            v >>= 1;
            int_part += 1;
        }
        while v < one {
            v <<= 1;
            int_part -= 1;
        }
        let mut frac: i128 = 0;
        for i in 1..=SHIFT {
            v = (v * v) >> SHIFT;
            if v >= 2 * one {
                v >>= 1;
                frac += 1 << (SHIFT - i);
            }
        }
        (int_part << SHIFT) + frac
    }

    /// Certified upper bound on `log₂(v/2^SHIFT)`: the same walk with every
    /// rounding turned outward, plus one ulp for the tail of the true
    /// binary expansion beyond bit `SHIFT` (the walk can only certify the
    /// truncation it computed).
    fn log2_up(v: i128) -> i128 {
        debug_assert!(v > 0);
        let mut v = v as u128;
        let one = 1u128 << SHIFT;
        let mut int_part: i128 = 0;
        while v >= 2 * one {
            v = (v + 1) >> 1;
            int_part += 1;
        }
        while v < one {
            v <<= 1;
            int_part -= 1;
        }
        let mut frac: i128 = 0;
        for i in 1..=SHIFT {
            v = (v * v + (one - 1)) >> SHIFT;
            if v >= 2 * one {
                v = (v + 1) >> 1;
                frac += 1 << (SHIFT - i);
            }
        }
        (int_part << SHIFT) + frac + 1
    }

    pub fn log2_interval(v: Interval) -> Interval {
        assert!(v.lo > 0, "log₂ needs a positive argument");
        Interval {
            lo: log2_down(v.lo),
            hi: log2_up(v.hi),
        }
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn two_pow_three_quarters_is_pinned() {
            // (2^{3/4}·2^30)^4 = 2^3·2^120 exactly; the stored endpoints
            // must straddle it.
            let target: u128 = 8u128 << 120;
            let lo = TWO_POW_3_4.lo as u128;
            let hi = TWO_POW_3_4.hi as u128;
            assert!(lo.checked_pow(4).unwrap() <= target);
            assert!(hi.checked_pow(4).unwrap() > target);
            assert_eq!(hi, lo + 1);
        }

        #[test]
        fn sqrt_intervals_bracket() {
            for x in [0u64, 1, 2, 3, 4, 10, 144, 10_000_000_019] {
                let iv = sqrt_u64(x);
                let lo = iv.lo as u128;
                let hi = iv.hi as u128;
                assert!(lo * lo <= (x as u128) << 60);
                assert!(hi * hi > (x as u128) << 60);
            }
        }

        #[test]
        fn log2_exact_on_powers_of_two() {
            for k in -5i128..=5 {
                let v = if k >= 0 { ONE << k } else { ONE >> (-k) };
                let iv = log2_interval(Interval { lo: v, hi: v });
                assert!(iv.lo <= k * ONE && k * ONE <= iv.hi);
                assert!(iv.hi - iv.lo <= 2, "width at 2^{k}");
            }
        }

        #[test]
        fn log2_of_three_brackets_truth() {
            // log₂ 3 = 1.5849625007…; in Q.30 the true value is
            // 1701840526.495…, so the interval must straddle it.
            let iv = log2_interval(Interval {
                lo: 3 * ONE,
                hi: 3 * ONE,
            });
            assert!(iv.lo <= 1_701_840_526 && 1_701_840_527 <= iv.hi);
            assert!(iv.hi - iv.lo <= 8);
        }

        #[test]
        fn interval_mul_respects_signs() {
            let neg = Interval { lo: -3 * ONE, hi: -ONE };
            let pos = Interval { lo: 2 * ONE, hi: 5 * ONE };
            let prod = neg.mul(pos);
            assert!(prod.lo <= -15 * ONE && prod.hi >= -2 * ONE);
            assert!(prod.lo >= -15 * ONE - 4 && prod.hi <= -2 * ONE + 4);
        }
    }
}

use fixed::Interval;

/// Certified interval for Thm 5.6's right-hand side,
/// `√(2n) + (2^{3/4}·n^{1/4} + 1)·[log₂(log₂(n/2)) − 1] + 7`, for `n > 2`.
fn thm_5_6_rhs(n: u64) -> Interval {
    let sqrt_2n = fixed::sqrt_u64(2 * n);
    let fourth_root = fixed::sqrt_interval(fixed::sqrt_u64(n));
    let b = fixed::TWO_POW_3_4.mul(fourth_root).add_int(1);
    let loglog = fixed::log2_interval(fixed::log2_interval(Interval::exact_u64_half(n)));
    let c = loglog.add_int(-1);
    sqrt_2n.add(b.mul(c)).add_int(7)
}

/// `v ≤ RHS(n)` where RHS is Thm 5.6's upper envelope: `Some(true)` /
/// `Some(false)` when certified either way, `None` in the (never observed)
/// indeterminacy band.
fn le_thm_5_6_rhs(v: u64, n: u64) -> Option<bool> {
    let rhs = thm_5_6_rhs(n);
    let v = (v as i128) << fixed::SHIFT;
    if v <= rhs.lo {
        Some(true)
    } else if v > rhs.hi {
        Some(false)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Bound checks
// ---------------------------------------------------------------------------

/// All bound checks for one `n ≥ 1`, given the five values they mention.
/// Every predicate is exact: squared-integer comparisons for the `√`
/// bounds, certified intervals for the log-log envelope.
fn bound_violations(n: u64, p: u64, q: u64, p_g: u64, q_g: u64) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut fail = |bound: &str, lhs: String, rhs: String| {
        out.push(Violation {
            n,
            bound: bound.into(),
            lhs,
            rhs,
        });
    };
    let d = decompose(n);
    let (f, g) = (d.f, d.g);

    // Prop 3.2: √(2n) − 1/2 ≤ P(n)  ⟺  8n ≤ (2P+1)²
    if 8 * n as u128 > (2 * p as u128 + 1).pow(2) {
        fail(
            "prop3.2",
            format!("8n = {}", 8 * n),
            format!("(2P+1)² = {}", (2 * p as u128 + 1).pow(2)),
        );
    }
    // Prop 3.4: √(2n) + 1/2 ≤ Q(n)  ⟺  8n ≤ (2Q−1)²
    if 8 * n as u128 > (2 * q as u128 - 1).pow(2) {
        fail(
            "prop3.4",
            format!("8n = {}", 8 * n),
            format!("(2Q−1)² = {}", (2 * q as u128 - 1).pow(2)),
        );
    }
    // Cor 5.2: f(n) ≤ P(n) and f(n)+1 ≤ Q(n)
    if p < f {
        fail("cor5.2_P", format!("f = {f}"), format!("P = {p}"));
    }
    if q < f + 1 {
        fail("cor5.2_Q", format!("f+1 = {}", f + 1), format!("Q = {q}"));
    }
    // Thm 5.5: P(n) ≤ f(n) + Q(g(n)) and Q(n) ≤ 1 + f(n) + P(g(n))
    if p > f + q_g {
        fail(
            "thm5.5_P",
            format!("P = {p}"),
            format!("f + Q(g) = {} + {}", f, q_g),
        );
    }
    if q > 1 + f + p_g {
        fail(
            "thm5.5_Q",
            format!("Q = {q}"),
            format!("1 + f + P(g) = 1 + {} + {}", f, p_g),
        );
    }
    // Thm 6.4 (n ≥ 2): P(n) − f(n) ≥ min{Q(g), √(2(g+f+1)) + 3/2, f−2}
    if n >= 2 {
        let s = g + f + 1;
        let x = p - f; // Cor 5.2 holds (checked above) on real data
        let mid_ok = 2 * x >= 3 && ((2 * x - 3) as u128).pow(2) >= 8 * s as u128;
        if !(x >= q_g || mid_ok || x >= f - 2) {
            fail(
                "thm6.4_P",
                format!("P − f = {x}"),
                format!("min{{Q(g) = {q_g}, √(2·{s}) + 3/2, f−2 = {}}}", f - 2),
            );
        }
        let y = q - 1 - f;
        let mid_ok = 2 * y >= 1 && ((2 * y - 1) as u128).pow(2) >= 8 * s as u128;
        if !(y >= p_g || mid_ok) {
            fail(
                "thm6.4_Q",
                format!("Q − 1 − f = {y}"),
                format!("min{{P(g) = {p_g}, √(2·{s}) + 1/2}}"),
            );
        }
    }
    // Thm 5.6 (n > 2): strict lower envelopes and the log-log upper bound.
    if n > 2 {
        if (2 * p as u128 + 1).pow(2) <= 8 * n as u128 {
            fail(
                "thm5.6_lower_P",
                format!("(2P+1)² = {}", (2 * p as u128 + 1).pow(2)),
                format!("8n = {}", 8 * n),
            );
        }
        if (2 * q as u128 - 1).pow(2) <= 8 * n as u128 {
            fail(
                "thm5.6_lower_Q",
                format!("(2Q−1)² = {}", (2 * q as u128 - 1).pow(2)),
                format!("8n = {}", 8 * n),
            );
        }
        for (name, v) in [("thm5.6_upper_P", p), ("thm5.6_upper_Q", q)] {
            if le_thm_5_6_rhs(v, n) != Some(true) {
                let rhs = thm_5_6_rhs(n);
                fail(
                    name,
                    format!("{v}"),
                    format!(
                        "√(2n) + (2^¾n^¼+1)(log₂log₂(n/2)−1) + 7 ∈ [{}, {}]·2⁻³⁰",
                        rhs.lo, rhs.hi
                    ),
                );
            }
        }
    }
    out
}

/// Checks every published bound for `1 ≤ n ≤ vt.n_max()` against the given
/// table. Sharded across workers by `n`; the merge is order-preserving, so
/// the report is deterministic.
pub fn check_bounds(vt: &ValueTable) -> BoundReport {
    let violations: Vec<Violation> = (1..=vt.n_max())
        .into_par_iter()
        .flat_map_iter(|n| {
            let d = decompose(n);
            bound_violations(n, vt.p(n), vt.q(n), vt.p(d.g), vt.q(d.g))
        })
        .collect();
    BoundReport::new(vt.n_max(), violations)
}

/// The same checks for a single `n` of any size, values supplied by the
/// fast engine.
pub fn check_bounds_at(n: u64, table: &ExceptionTable) -> Vec<Violation> {
    if n == 0 {
        return Vec::new();
    }
    let g = decompose(n).g;
    bound_violations(
        n,
        fast_p(n, table),
        fast_q(n, table),
        fast_p(g, table),
        fast_q(g, table),
    )
}

/// Cor 6.10's window, `−1 ≤ Q(n) − P(n) ≤ 2`, over the whole table.
pub fn check_window(vt: &ValueTable) -> BoundReport {
    let violations: Vec<Violation> = (0..=vt.n_max())
        .into_par_iter()
        .flat_map_iter(|n| {
            let d = vt.q(n) as i64 - vt.p(n) as i64;
            if (-1..=2).contains(&d) {
                None
            } else {
                Some(Violation {
                    n,
                    bound: "cor6.10_window".into(),
                    lhs: format!("Q − P = {d}"),
                    rhs: "[−1, 2]".into(),
                })
            }
        })
        .collect();
    BoundReport::new(vt.n_max(), violations)
}

/// The asymptotic statement of Thm 5.6 made assertable: for each sample,
/// `P(n)/√(2n) > 0.99` (exactly: `(100·P)² > 9801·2n`) and `P(n)` sits
/// under the log-log upper envelope; same for `Q`.
pub fn check_asymptotics(samples: &[u64], table: &ExceptionTable) -> BoundReport {
    let mut violations = Vec::new();
    for &n in samples {
        assert!(n > 2, "asymptotic samples must satisfy n > 2");
        for (name, v) in [("P", fast_p(n, table)), ("Q", fast_q(n, table))] {
            let lhs = (100 * v as u128).pow(2);
            let rhs = 9801 * 2 * n as u128;
            if lhs <= rhs {
                violations.push(Violation {
                    n,
                    bound: format!("asymptotic_ratio_lower_{name}"),
                    lhs: format!("(100·{name})² = {lhs}"),
                    rhs: format!("9801·2n = {rhs}"),
                });
            }
            if le_thm_5_6_rhs(v, n) != Some(true) {
                violations.push(Violation {
                    n,
                    bound: format!("asymptotic_ratio_upper_{name}"),
                    lhs: format!("{name} = {v}"),
                    rhs: "Thm 5.6 envelope".into(),
                });
            }
        }
    }
    BoundReport::new(*samples.iter().max().unwrap_or(&0), violations)
}

// ---------------------------------------------------------------------------
// Triangular arrays
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleSeries {
    PMinusF,
    QMinusFMinus1,
    FG,
    RawP,
    RawQ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleValue {
    Scalar(i64),
    Pair(u64, u64),
}

impl std::fmt::Display for TriangleValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TriangleValue::Scalar(v) => write!(f, "{v}"),
            TriangleValue::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TriangleArray {
    pub series: TriangleSeries,
    pub rows: Vec<Vec<TriangleValue>>,
}

/// Arranges a series in the triangular layout: row 0 holds `n = 0`, and row
/// `r ≥ 1` holds the `r` inputs with `f(n) = r`, `n = T_{r−1}+1 ..= T_r`,
/// increasing left to right (so `g` decreases to 0 at the row's end).
pub fn triangle(series: TriangleSeries, row_count: usize, vt: &ValueTable) -> TriangleArray {
    assert!(row_count >= 1);
    let last_n = triangular(row_count as u64 - 1);
    assert!(
        vt.n_max() >= last_n || series == TriangleSeries::FG,
        "table covers n ≤ {}, triangle needs {last_n}",
        vt.n_max()
    );
    let entry = |n: u64| -> TriangleValue {
        let d = decompose(n);
        match series {
            TriangleSeries::PMinusF => TriangleValue::Scalar(vt.p(n) as i64 - d.f as i64),
            TriangleSeries::QMinusFMinus1 => {
                TriangleValue::Scalar(vt.q(n) as i64 - d.f as i64 - 1)
            }
            TriangleSeries::FG => TriangleValue::Pair(d.f, d.g),
            TriangleSeries::RawP => TriangleValue::Scalar(vt.p(n) as i64),
            TriangleSeries::RawQ => TriangleValue::Scalar(vt.q(n) as i64),
        }
    };
    let mut rows = vec![vec![entry(0)]];
    for r in 1..row_count as u64 {
        rows.push((triangular(r - 1) + 1..=triangular(r)).map(entry).collect());
    }
    TriangleArray { series, rows }
}

/// The reflection corollary: row `r` of `{P−f}` read right-to-left agrees
/// with `Q(0), Q(1), …` — and `{Q−f−1}` with `P` — except where the
/// respective identity is flagged as failing. Entries are skipped exactly
/// on that flag, so completeness-only table rows are still checked.
pub fn check_row_reflection(
    row_count: usize,
    vt: &ValueTable,
    table: &ExceptionTable,
) -> BoundReport {
    assert!(row_count >= 1);
    let last_n = triangular(row_count as u64 - 1);
    let mut violations = Vec::new();
    for n in 0..=last_n {
        let d = decompose(n);
        let t = d.g; // right-to-left offset within row f(n)
        let p_skipped = table.get(n).is_some_and(|rec| rec.p_identity_fails);
        if !p_skipped && vt.p(n) as i64 - d.f as i64 != vt.q(t) as i64 {
            violations.push(Violation {
                n,
                bound: "reflection_P".into(),
                lhs: format!("P({n}) − f = {}", vt.p(n) as i64 - d.f as i64),
                rhs: format!("Q({t}) = {}", vt.q(t)),
            });
        }
        let q_skipped = table.get(n).is_some_and(|rec| rec.q_identity_fails);
        if !q_skipped && vt.q(n) as i64 - d.f as i64 - 1 != vt.p(t) as i64 {
            violations.push(Violation {
                n,
                bound: "reflection_Q".into(),
                lhs: format!("Q({n}) − f − 1 = {}", vt.q(n) as i64 - d.f as i64 - 1),
                rhs: format!("P({t}) = {}", vt.p(t)),
            });
        }
    }
    BoundReport::new(last_n, violations)
}

// ---------------------------------------------------------------------------
// Figure data
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DriftSeries {
    P,
    Q,
}

/// Emits the figures' underlying data as CSV — `n,value,drift` where drift
/// is `P(n) − f(n)` or `Q(n) − f(n) − 1`.
pub fn emit_drift_series<W: std::io::Write>(
    vt: &ValueTable,
    series: DriftSeries,
    out: W,
) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "value", "drift"])?;
    for n in 0..=vt.n_max() {
        let f = decompose(n).f as i64;
        let (v, drift) = match series {
            DriftSeries::P => (vt.p(n), vt.p(n) as i64 - f),
            DriftSeries::Q => (vt.q(n), vt.q(n) as i64 - f - 1),
        };
        w.write_record([n.to_string(), v.to_string(), drift.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp_engine::{build_helper_tables, EngineTag, ValueTable};
    use crate::fast_engine::fast_table;

    fn scalars(row: &[TriangleValue]) -> Vec<i64> {
        row.iter()
            .map(|v| match v {
                TriangleValue::Scalar(s) => *s,
                other => panic!("expected scalar, got {other}"),
            })
            .collect()
    }

    #[test]
    fn triangle_matches_every_printed_row() {
        let exc = ExceptionTable::embedded();
        let vt = fast_table(60, exc);
        let p = triangle(TriangleSeries::PMinusF, 11, &vt);
        let expect_p: [&[i64]; 11] = [
            &[0],
            &[0],
            &[0, 0],
            &[1, 2, 0],
            &[2, 3, 2, 0],
            &[3, 3, 4, 2, 0],
            &[4, 5, 3, 4, 2, 0],
            &[4, 5, 6, 3, 4, 2, 0],
            &[6, 4, 5, 6, 3, 4, 2, 0],
            &[7, 7, 4, 5, 6, 3, 4, 2, 0],
            &[6, 7, 7, 4, 5, 6, 3, 4, 2, 0],
        ];
        for (r, want) in expect_p.iter().enumerate() {
            assert_eq!(scalars(&p.rows[r]), *want, "P−f row {r}");
        }

        let q = triangle(TriangleSeries::QMinusFMinus1, 11, &vt);
        let expect_q: [&[i64]; 11] = [
            &[-1],
            &[0],
            &[1, 0],
            &[2, 1, 0],
            &[2, 2, 1, 0],
            &[4, 2, 2, 1, 0],
            &[5, 4, 2, 2, 1, 0],
            &[3, 5, 4, 2, 2, 1, 0],
            &[6, 3, 5, 4, 2, 2, 1, 0],
            &[7, 6, 3, 5, 4, 2, 2, 1, 0],
            &[6, 7, 6, 3, 5, 4, 2, 2, 1, 0],
        ];
        for (r, want) in expect_q.iter().enumerate() {
            assert_eq!(scalars(&q.rows[r]), *want, "Q−f−1 row {r}");
        }
    }

    #[test]
    fn triangle_fg_and_shape() {
        let exc = ExceptionTable::embedded();
        let vt = fast_table(60, exc);
        let fg = triangle(TriangleSeries::FG, 6, &vt);
        assert_eq!(
            fg.rows[5],
            vec![
                TriangleValue::Pair(5, 4),
                TriangleValue::Pair(5, 3),
                TriangleValue::Pair(5, 2),
                TriangleValue::Pair(5, 1),
                TriangleValue::Pair(5, 0),
            ]
        );
        for (r, row) in fg.rows.iter().enumerate() {
            assert_eq!(row.len(), r.max(1), "row {r} length");
        }
        let raw = triangle(TriangleSeries::RawP, 4, &vt);
        assert_eq!(scalars(&raw.rows[3]), vec![4, 5, 3]); // P(4), P(5), P(6)
        assert_eq!(TriangleValue::Pair(5, 3).to_string(), "(5,3)");
    }

    #[test]
    fn reflection_holds_with_flag_aware_skips() {
        let exc = ExceptionTable::embedded();
        let vt = fast_table(triangular(40), exc);
        let report = check_row_reflection(41, &vt, exc);
        assert!(report.pass, "violations: {:?}", report.violations);

        // Row 8 (n = 29..36) exercises a genuine skip: P(29) − f = 6 but
        // Q(7) = 7; the mismatch is exactly the flagged exception.
        assert_eq!(vt.p(29) - decompose(29).f, 6);
        assert_eq!(vt.q(7), 7);
        assert!(exc.get(29).unwrap().p_identity_fails);
    }

    #[test]
    fn reflection_catches_unflagged_mismatch() {
        let exc = ExceptionTable::embedded();
        let good = fast_table(triangular(10), exc);
        let mut p: Vec<u32> = (0..=good.n_max()).map(|n| good.p(n) as u32).collect();
        let mut q: Vec<u32> = (0..=good.n_max()).map(|n| good.q(n) as u32).collect();
        p[50] += 1; // n = 50 is not an exception key
        q[50] += 1;
        let bad = ValueTable::from_columns(good.n_max(), EngineTag::Fast, Some(p), Some(q));
        let report = check_row_reflection(11, &bad, exc);
        assert!(!report.pass);
        assert!(report.violations.iter().any(|v| v.n == 50));
    }

    #[test]
    fn regeneration_restores_the_table_prefix() {
        let dp = build_helper_tables(500).unwrap().value_table();
        let regen = regenerate_exceptions(&dp);
        let found: Vec<u64> = regen.iter().map(|r| r.n).filter(|&n| n <= 30).collect();
        assert_eq!(found, vec![0, 2, 4, 7, 8, 11, 16, 17, 29]);
        let r17 = regen.iter().find(|r| r.n == 17).unwrap();
        assert_eq!(r17.p, 11);
        let r154 = regen.iter().find(|r| r.n == 154).unwrap();
        assert!(r154.p_identity_fails && r154.q_identity_fails);
        assert_eq!((r154.p, r154.q), (28, 28));

        let report = compare_exceptions(&regen, ExceptionTable::embedded(), 500);
        assert!(report.pass, "violations: {:?}", report.violations);
    }

    #[test]
    fn comparison_notices_drift() {
        let dp = build_helper_tables(100).unwrap().value_table();
        let mut regen = regenerate_exceptions(&dp);
        regen.retain(|r| r.n != 29); // drop a genuine exception
        let report = compare_exceptions(&regen, ExceptionTable::embedded(), 100);
        assert!(!report.pass);
        assert!(report.violations.iter().any(|v| v.n == 29));
    }

    #[test]
    fn bounds_pass_on_real_values() {
        let dp = build_helper_tables(500).unwrap().value_table();
        let report = check_bounds(&dp);
        assert!(report.pass, "violations: {:?}", report.violations);

        // wider range through the fast engine, exercising small-n sign
        // cases of the log-log envelope (negative factor for n < 8)
        let vt = fast_table(20_000, ExceptionTable::embedded());
        let report = check_bounds(&vt);
        assert!(report.pass, "violations: {:?}", report.violations);
    }

    #[test]
    fn bounds_catch_planted_violations() {
        let exc = ExceptionTable::embedded();
        let good = fast_table(20, exc);
        let mut p: Vec<u32> = (0..=20).map(|n| good.p(n) as u32).collect();
        let q: Vec<u32> = (0..=20).map(|n| good.q(n) as u32).collect();
        p[9] = 50; // far above every upper bound at n = 9
        let bad = ValueTable::from_columns(20, EngineTag::Fast, Some(p), Some(q));
        let report = check_bounds(&bad);
        assert!(!report.pass);
        for bound in ["thm5.5_P", "thm5.6_upper_P"] {
            assert!(
                report.violations.iter().any(|v| v.n == 9 && v.bound == bound),
                "expected a {bound} violation at n = 9: {:?}",
                report.violations
            );
        }
    }

    #[test]
    fn point_checks_cover_large_inputs() {
        let exc = ExceptionTable::embedded();
        for n in [3u64, 8, 9, 1000, 10_000_000_000] {
            let v = check_bounds_at(n, exc);
            assert!(v.is_empty(), "violations at {n}: {v:?}");
        }
        assert!(check_bounds_at(0, exc).is_empty());
    }

    #[test]
    fn window_check_and_asymptotics() {
        let exc = ExceptionTable::embedded();
        let vt = fast_table(10_000, exc);
        assert!(check_window(&vt).pass);

        let report = check_asymptotics(&[10_000, 1_000_000, 10_000_000_000], exc);
        assert!(report.pass, "violations: {:?}", report.violations);
    }

    #[test]
    fn drift_series_rows() {
        let exc = ExceptionTable::embedded();
        let vt = fast_table(10, exc);
        let mut buf = Vec::new();
        emit_drift_series(&vt, DriftSeries::P, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,value,drift");
        assert_eq!(lines[1 + 6], "6,3,0");

        let mut buf = Vec::new();
        emit_drift_series(&vt, DriftSeries::Q, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "0,0,-1");
        // compensated values never sink below −1 (Cor 5.2)
        for line in &lines[1..] {
            let drift: i64 = line.rsplit(',').next().unwrap().parse().unwrap();
            assert!(drift >= -1);
        }
    }

    #[test]
    fn report_serializes() {
        let report = BoundReport::new(
            5,
            vec![Violation {
                n: 3,
                bound: "demo".into(),
                lhs: "1".into(),
                rhs: "2".into(),
            }],
        );
        let js = serde_json::to_string(&report).unwrap();
        assert!(js.contains("\"pass\":false"));
        assert!(js.contains("\"bound\":\"demo\""));
    }
}
