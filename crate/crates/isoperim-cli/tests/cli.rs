//! End-to-end tests of the `isoperim` binary: documented examples, output
//! formats, exit codes, and the override precedence for the exception table.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isoperim"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn embedded_csv_path() -> PathBuf {
    // tests run with the package root as cwd
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../isoperim/data/exceptions.csv")
}

#[test]
fn compute_documented_examples() {
    let out = run(&["compute", "29", "--fn", "P", "--engine", "fast"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "14\n");
    assert!(stderr(&out).contains("engine: fast"));

    let out = run(&["compute", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "P=0 Q=0\n");
}

#[test]
fn compute_engines_agree() {
    for engine in ["fast", "dp", "brute", "direct"] {
        let out = run(&["compute", "29", "--engine", engine]);
        assert!(out.status.success(), "engine {engine}: {}", stderr(&out));
        assert_eq!(stdout(&out), "P=14 Q=15\n", "engine {engine}");
    }
}

#[test]
fn compute_json_shape() {
    let out = run(&["compute", "29", "--fn", "P", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 29);
    assert_eq!(v["engine"], "fast");
    assert_eq!(v["P"], 14);
    assert!(v.get("Q").is_none(), "--fn P must not emit Q");
}

#[test]
fn verify_cross_oracle_dp() {
    let out = run(&["verify", "--cross", "brute,dp", "--max", "60"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("cross(brute,dp) (n ≤ 60): PASS"));
}

#[test]
fn verify_single_suite_selection() {
    let out = run(&["verify", "--suite", "window", "--max", "5000"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("window (n ≤ 5000): PASS"));
    assert!(!text.contains("bounds"), "only the selected suite may run");
}

#[test]
fn verify_full_gate_passes() {
    // the CI gate: every acceptance suite at its default scale
    let out = run(&["verify"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    for suite in [
        "cross(brute,dp)",
        "table1",
        "exceptions",
        "engines",
        "bounds",
        "window",
        "structural",
        "reflection",
        "asymptotics",
    ] {
        assert!(text.contains(suite), "missing suite {suite} in:\n{text}");
    }
    assert!(text.ends_with("verify: PASS\n"));
}

#[test]
fn verify_json_is_machine_readable() {
    let out = run(&["verify", "--suite", "asymptotics", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["suites"][0]["name"], "asymptotics");
    assert_eq!(v["suites"][0]["violations"], serde_json::json!([]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "80", "--engine", "brute"][..],
        &["compute", "29", "--engine", "warp"][..],
        &["table", "--max", "5", "--format", "bfile"][..], // both fns
        &["table", "--max", "5", "--jobs", "0"][..],
        &["nonsense"][..],
        &["triangle", "--series", "fg", "--rows", "0"][..],
        &["table", "--max", "2000", "--engine", "dp", "--memory-budget", "1000"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stderr(&out));
    }
}

#[test]
fn computation_failure_names_module() {
    // passes the up-front floor estimate but trips the exact budget check
    let out = run(&[
        "table",
        "--max",
        "2000",
        "--engine",
        "dp",
        "--memory-budget",
        "3000000",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("dp_engine"), "{}", stderr(&out));
}

#[test]
fn bfile_format_is_oeis_shaped() {
    let out = run(&["table", "--max", "6", "--fn", "P", "--format", "bfile"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 0\n1 1\n2 2\n3 2\n4 4\n5 5\n6 3\n");

    let out = run(&["table", "--max", "3", "--fn", "Q", "--format", "bfile"]);
    assert_eq!(stdout(&out), "0 0\n1 2\n2 4\n3 3\n");
}

#[test]
fn table_output_is_independent_of_jobs() {
    let one = run(&["table", "--max", "400", "--engine", "dp", "--format", "csv", "--jobs", "1"]);
    let four = run(&["table", "--max", "400", "--engine", "dp", "--format", "csv", "--jobs", "4"]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    let text = stdout(&one);
    assert!(text.starts_with("n,P,Q\n0,0,0\n1,1,2\n"));
}

#[test]
fn table_cache_round_trip_and_staleness() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("values.bin");
    let cache_arg = cache.to_str().unwrap();

    let fresh = run(&["table", "--max", "120", "--engine", "dp", "--cache", cache_arg]);
    assert!(fresh.status.success());
    assert!(cache.exists());

    let cached = run(&["table", "--max", "120", "--engine", "dp", "--cache", cache_arg]);
    assert!(cached.status.success());
    assert_eq!(fresh.stdout, cached.stdout);
    assert!(
        !stderr(&cached).contains("stale"),
        "fresh cache must be used: {}",
        stderr(&cached)
    );

    // other range or engine: cache is stale, results never depend on it
    let other = run(&["table", "--max", "100", "--engine", "dp", "--cache", cache_arg]);
    assert!(other.status.success());
    assert!(stderr(&other).contains("stale"));
    let refast = run(&["table", "--max", "100", "--engine", "fast", "--cache", cache_arg]);
    assert!(refast.status.success());
    assert_eq!(
        stdout(&other).lines().count(),
        stdout(&refast).lines().count()
    );
    assert_eq!(other.stdout, refast.stdout, "dp and fast agree on values");
}

#[test]
fn exceptions_listing_and_regeneration() {
    let out = run(&["exceptions", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,P,Q,p_exc,q_exc\n0,0,0,0,1\n2,2,4,1,0\n"));
    assert_eq!(text.lines().count(), 178); // header + 177 rows
    assert!(text.trim_end().ends_with("149894,596,596,0,1"));

    let out = run(&["exceptions", "--regenerate", "300"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("all match the loaded table"));
}

#[test]
fn exception_table_override_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let good = embedded_csv_path();
    let corrupt = dir.path().join("corrupt.csv");
    std::fs::write(&corrupt, "n,P,Q\n0,0,0\n").unwrap();

    // env var points at a bad table: the command must fail, naming the module
    let out = bin()
        .args(["compute", "29"])
        .env("ISOPERIM_EXCEPTIONS", &corrupt)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("fast_engine"), "{}", stderr(&out));

    // the flag beats the env var
    let out = bin()
        .args(["compute", "29", "--fn", "P"])
        .arg("--exceptions-file")
        .arg(&good)
        .env("ISOPERIM_EXCEPTIONS", &corrupt)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "14\n");
}

#[test]
fn tampered_exception_values_are_caught() {
    // A value edit that still satisfies every loader invariant (sortedness,
    // keys within horizon, per-row window 0 ≤ Q − P ≤ 2, self-consistent
    // flags): P(390) 39 → 38 keeps the flag derivation intact because no
    // other key's identity reads P(390). Only the verification suites can
    // catch it — and they must.
    let dir = tempfile::tempdir().unwrap();
    let tampered = dir.path().join("tampered.csv");
    let text = std::fs::read_to_string(embedded_csv_path()).unwrap();
    assert!(text.contains("\n390,39,39,1,0\n"));
    std::fs::write(&tampered, text.replace("\n390,39,39,1,0\n", "\n390,38,39,1,0\n")).unwrap();
    let tampered_arg = tampered.to_str().unwrap();

    let out = run(&[
        "verify",
        "--suite",
        "table1",
        "--max",
        "500",
        "--exceptions-file",
        tampered_arg,
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], false);
    let violations = v["suites"][0]["violations"].as_array().unwrap();
    assert!(violations.iter().any(|viol| viol["n"] == 390));
}

#[test]
fn bounds_range_and_point() {
    let out = run(&["bounds", "--max", "5000", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["n_max"], 5000);

    let out = run(&["bounds", "--at", "10000000000"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn triangle_matches_printed_rows() {
    let out = run(&["triangle", "--series", "p-minus-f", "--rows", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[3], "1 2 0");
    assert_eq!(rows[10], "6 7 7 4 5 6 3 4 2 0");

    let out = run(&["triangle", "--series", "q-minus-f-minus-1", "--rows", "3"]);
    assert_eq!(stdout(&out), "-1\n0\n1 0\n");

    let out = run(&["triangle", "--series", "fg", "--rows", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "row,pos,n,value\n0,0,0,(0,0)\n1,0,1,(1,0)\n2,0,2,(2,1)\n2,1,3,(2,0)\n");
}

#[test]
fn plotdata_is_fixed_csv() {
    let out = run(&["plotdata", "--fn", "Q", "--max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,value,drift\n0,0,-1\n"));
    assert_eq!(text.lines().count(), 8);

    let out = run(&["plotdata", "--fn", "P", "--max", "6"]);
    assert!(stdout(&out).contains("\n6,3,0\n"));
}

#[test]
fn phi_prints_orbit() {
    let out = run(&["phi", "1000000000000", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["phi"], 2);
    assert_eq!(v["iterates"][0], 1_000_000_000_000u64);
    assert_eq!(v["threshold"], 149_894);

    let out = run(&["phi", "92"]);
    assert!(stdout(&out).contains("phi(92) = 0"));
}
