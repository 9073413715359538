//! Acceptance gate: one test per criterion, numbered 1–9.
//!
//! Each test exercises its criterion at the stated desk scale and prints a
//! single `acceptance criterion N: PASS` line (visible with `--nocapture`).
//! Extended-mode variants that need minutes and gigabytes are `#[ignore]`d;
//! run them on demand with `cargo test --release -- --ignored`.

use isoperim::analysis::{
    check_asymptotics, check_bounds, check_row_reflection, check_window, compare_exceptions,
    regenerate_exceptions,
};
use isoperim::dp_engine::{
    build_helper_tables, compute_pq_range, direct_p, direct_q, DpError, HelperTables,
};
use isoperim::fast_engine::{
    fast_p, fast_q, fast_table, quasi_explicit_p, quasi_explicit_q, ExceptionTable,
};
use isoperim::numeric_core::{decompose, f_of, g_iterate_bound_holds, triangular};
use isoperim::oracle::{brute_p, brute_q};

/// SplitMix64 step; the fixed seed makes every sampled check reproducible.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[test]
fn criterion_1_oracle_dp_equivalence() {
    let dp = compute_pq_range(60).unwrap();
    for n in 0..=60 {
        assert_eq!(brute_p(n).unwrap(), dp.p(n), "P({n})");
        assert_eq!(brute_q(n).unwrap(), dp.q(n), "Q({n})");
    }
    println!("acceptance criterion 1: PASS — oracle = dp on [0, 60]");
}

#[test]
fn criterion_2_paper_value_reproduction() {
    let dp = compute_pq_range(2000).unwrap();
    for rec in ExceptionTable::embedded().records().filter(|r| r.n <= 2000) {
        assert_eq!(rec.p, dp.p(rec.n), "published P({}) disagrees with dp", rec.n);
        assert_eq!(rec.q, dp.q(rec.n), "published Q({}) disagrees with dp", rec.n);
    }
    // Named rows the criterion calls out explicitly.
    assert_eq!(dp.p(2), 2);
    assert_eq!(dp.q(2), 4);
    assert_eq!(dp.p(29), 14);
    assert_eq!(dp.q(92), 23);
    assert_eq!((dp.p(154), dp.q(154)), (28, 28));
    assert_eq!((dp.p(1771), dp.q(1771)), (77, 77));
    println!("acceptance criterion 2: PASS — dp reproduces every published row with n ≤ 2000");
}

#[test]
fn criterion_3_exception_regeneration() {
    let dp = compute_pq_range(2000).unwrap();
    let report = compare_exceptions(&regenerate_exceptions(&dp), ExceptionTable::embedded(), 2000);
    assert!(report.pass, "exception flag drift: {:?}", report.violations);
    println!("acceptance criterion 3: PASS — regenerated flags match the appendix for n ≤ 2000");
}

/// Builds helper tables that cover every row `direct_p`/`direct_q` touch for
/// n ≤ `n_max`. A `MissingCell` error names the uncovered row, so growing the
/// build to that row and retrying always terminates.
fn tables_covering_direct(n_max: u64) -> HelperTables {
    let mut cover = n_max.max(2);
    loop {
        let t = build_helper_tables(cover).unwrap();
        let missing = (2..=n_max).find_map(|n| {
            match direct_p(n, &t, None).and(direct_q(n, &t, None)) {
                Err(DpError::MissingCell { n, .. }) => Some(n.max(0) as u64),
                _ => None,
            }
        });
        match missing {
            Some(row) if row > cover => cover = row,
            Some(_) => panic!("direct recurrence reported a missing row inside the build"),
            None => return t,
        }
    }
}

#[test]
fn criterion_4_engine_agreement() {
    let exc = ExceptionTable::embedded();
    let dp = compute_pq_range(2000).unwrap();

    // fast = dp, exhaustively on [0, 2000]
    let fast = fast_table(2000, exc);
    for n in 0..=2000 {
        assert_eq!(fast.p(n), dp.p(n), "fast P({n})");
        assert_eq!(fast.q(n), dp.q(n), "fast Q({n})");
    }

    // quasi-explicit = fast on 10⁵ deterministic samples ≤ 10¹²
    let mut state = 0x1505_0929_u64;
    for _ in 0..100_000 {
        let n = splitmix64(&mut state) % 1_000_000_000_001;
        assert_eq!(quasi_explicit_p(n, exc), fast_p(n, exc), "quasi P({n})");
        assert_eq!(quasi_explicit_q(n, exc), fast_q(n, exc), "quasi Q({n})");
    }

    // direct recurrence = dp on [2, 2000]
    let t = tables_covering_direct(2000);
    for n in 2..=2000 {
        assert_eq!(direct_p(n, &t, None).unwrap(), dp.p(n), "direct P({n})");
        assert_eq!(direct_q(n, &t, None).unwrap(), dp.q(n), "direct Q({n})");
    }
    println!("acceptance criterion 4: PASS — fast/quasi/direct all agree with dp");
}

#[test]
fn criterion_5_bound_suite() {
    let vt = fast_table(1_000_000, ExceptionTable::embedded());
    let report = check_bounds(&vt);
    assert!(report.pass, "bound violations: {:?}", report.violations);
    println!("acceptance criterion 5: PASS — every proved bound holds for 1 ≤ n ≤ 10⁶");
}

#[test]
fn criterion_6_window_property() {
    let vt = fast_table(1_000_000, ExceptionTable::embedded());
    let report = check_window(&vt);
    assert!(report.pass, "window violations: {:?}", report.violations);
    println!("acceptance criterion 6: PASS — −1 ≤ Q − P ≤ 2 for 0 ≤ n ≤ 10⁶");
}

#[test]
fn criterion_7_structural_properties() {
    // Helper-table structure at DP scale: the infinity law below the window
    // (Lemma 6.1), p-monotonicity in k, and the σ(n;n) = 2n boundary.
    let dp_scale = 1500_i64;
    let t = build_helper_tables(dp_scale as u64).unwrap();
    for n in 0..=dp_scale {
        let fw = f_of(n as u64) as i64;
        for k in (fw - 3).max(-1)..fw {
            assert!(
                n == 0 || !t.p(n, k).is_finite(),
                "p({n};{k}) must be ∞ below the window"
            );
        }
        let mut prev = None;
        for k in fw..=n {
            let cur = t.p(n, k).expect_finite("in-window p");
            if let Some(prev) = prev {
                assert!(cur <= prev, "p({n};·) must be nonincreasing in k");
            }
            prev = Some(cur);
        }
        assert_eq!(t.sigma(n, n).expect_finite("σ(n;n)"), 2 * n as u64);
    }

    // f/g decomposition invariants and the Prop 5.4 orbit bound, full range.
    use rayon::prelude::*;
    (1..=1_000_000u64).into_par_iter().for_each(|n| {
        decompose(n).validate();
        for l in 0..=6 {
            assert!(g_iterate_bound_holds(n, l), "Prop 5.4 orbit bound at n = {n}, l = {l}");
        }
    });
    println!("acceptance criterion 7: PASS — helper-table structure and f/g invariants hold");
}

#[test]
fn criterion_8_triangle_reflection() {
    let exc = ExceptionTable::embedded();
    let rows = (0..).take_while(|&r| triangular(r) <= 2000).count();
    let vt = fast_table(triangular(rows as u64 - 1), exc);
    let report = check_row_reflection(rows, &vt, exc);
    assert!(report.pass, "reflection violations: {:?}", report.violations);
    println!("acceptance criterion 8: PASS — row reflection holds for all rows with entries ≤ 2000");
}

#[test]
fn criterion_9_asymptotics() {
    let samples = [10_000, 1_000_000, 100_000_000, 10_000_000_000, 1_000_000_000_000];
    let report = check_asymptotics(&samples, ExceptionTable::embedded());
    assert!(report.pass, "asymptotic violations: {:?}", report.violations);
    println!("acceptance criterion 9: PASS — P(n)/√(2n) sits inside (0.99, 1 + u(n)) at all probes");
}

/// Extended mode (criteria 3 and 4 at N = 25,000): covers every appendix row
/// with key ≤ 24,598 — 135 of the 177 — and re-checks fast = dp across the
/// whole range. Needs ~1.3 GB of table and a few minutes; run on demand.
/// Full reproduction of the remaining rows is a §7-scale sweep, not a test.
#[test]
#[ignore = "extended mode: minutes of CPU and ~1.3 GB of DP table"]
fn criterion_3_and_4_extended_n_25000() {
    const N: u64 = 25_000;
    let exc = ExceptionTable::embedded();
    assert_eq!(exc.records().filter(|r| r.n <= N).count(), 135);

    let dp = compute_pq_range(N).unwrap();
    for rec in exc.records().filter(|r| r.n <= N) {
        assert_eq!(rec.p, dp.p(rec.n), "published P({})", rec.n);
        assert_eq!(rec.q, dp.q(rec.n), "published Q({})", rec.n);
    }
    let report = compare_exceptions(&regenerate_exceptions(&dp), exc, N);
    assert!(report.pass, "exception flag drift: {:?}", report.violations);

    let fast = fast_table(N, exc);
    for n in 0..=N {
        assert_eq!(fast.p(n), dp.p(n), "fast P({n})");
        assert_eq!(fast.q(n), dp.q(n), "fast Q({n})");
    }
    println!("acceptance extended: PASS — appendix rows ≤ 24,598 regenerated, fast = dp at N = 25,000");
}
