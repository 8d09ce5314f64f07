//! End-to-end runs of the binary: tables, exit codes and output formats.

use std::process::{Command, Output};

use shuffle_spectra::SpectrumReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shuffle-spectra")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn tables_match_golden_files() {
    for id in ["3.1", "3.2", "3.5", "3.6", "5.1", "char-3", "char-4"] {
        let path = format!("{}/tests/golden/table_{id}.txt", env!("CARGO_MANIFEST_DIR"));
        let want = std::fs::read_to_string(path).unwrap();
        assert_eq!(stdout(&["table", "--id", id]), want, "table {id}");
    }
    assert_eq!(code(&["table", "--id", "2.7"]), 2);
}

#[test]
fn spectrum_table_format() {
    let out = stdout(&["spectrum", "--family", "nu", "--n", "4", "--k", "0", "--format", "table"]);
    assert_eq!(out, "value\tmultiplicity\n1\t24\n");
}

#[test]
fn spectrum_json_round_trips() {
    let out = stdout(&["spectrum", "--family", "nu", "--n", "4", "--k", "2", "--content", "2,2"]);
    let r = SpectrumReport::from_json(&out).unwrap();
    assert_eq!(r.pairs(), vec![(72.into(), 1u32.into()), (20.into(), 1u32.into()), (0.into(), 4u32.into())]);
    assert_eq!(r.to_json() + "\n", out);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dimension"], "6");
}

#[test]
fn content_order_does_not_matter() {
    let a = stdout(&["spectrum", "--family", "nu", "--n", "5", "--k", "2", "--content", "1,3,1"]);
    let b = stdout(&["spectrum", "--family", "nu", "--n", "5", "--k", "2", "--content", "3,1,1"]);
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&["spectrum", "--family", "gamma", "--n", "3", "--k", "2"]), 2);
    assert_eq!(code(&["spectrum", "--family", "nu", "--n", "3", "--k", "4"]), 2);
    assert_eq!(code(&["spectrum", "--family", "nu", "--n", "4", "--k", "1", "--content", "3,2"]), 2);
    assert_eq!(code(&["spectrum", "--family", "shuffle", "--n", "4", "--k", "1"]), 2);
    assert_eq!(code(&["conjecture", "--id", "77", "--n-max", "4"]), 2);
    assert_eq!(code(&["conjecture", "--id", "92", "--n-max", "40"]), 2);
    assert_eq!(code(&["mixing", "--family", "nu", "--n", "4", "--k", "1", "--threshold", "1.5"]), 2);
    assert_eq!(code(&["mixing", "--family", "nu", "--n", "4", "--k", "0", "--threshold", "0.5"]), 2);
}

#[test]
fn verification_exit_codes() {
    let out = stdout(&["verify", "--family", "nu", "--n", "4", "--k", "2"]);
    assert!(out.contains("value 0: claimed 17, measured 17 ok"), "{out}");
    assert!(out.ends_with("PASS\n"));
    stdout(&["verify", "--family", "nu", "--n", "1", "--k", "0"]);
    let out = stdout(&["verify", "--family", "gamma", "--n", "4", "--k", "2"]);
    assert!(out.contains("measured on the matrix"));
    // 7! exceeds the default budget
    assert_eq!(code(&["verify", "--family", "nu", "--n", "7", "--k", "2"]), 2);
    let out = stdout(&["verify", "--family", "nu", "--n", "6", "--k", "3", "--content", "2,2,1,1", "--rank-only"]);
    assert!(out.contains("rank-only"));
}

#[test]
fn budget_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_shuffle-spectra"))
        .args(["verify", "--family", "nu", "--n", "4", "--k", "1"])
        .env("SHUFFLE_SPECTRA_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_csv_for_three_cards() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.csv");
    stdout(&["matrix", "--family", "nu", "--n", "3", "--k", "1", "--out", path.to_str().unwrap()]);
    let got = std::fs::read_to_string(&path).unwrap();
    let want = "123,132,213,231,312,321\n3,2,2,1,1,0\n2,3,1,0,2,1\n2,1,3,2,0,1\n1,0,2,3,1,2\n1,2,0,1,3,2\n0,1,1,2,2,3\n";
    assert_eq!(got, want);
    assert_eq!(stdout(&["matrix", "--family", "nu", "--n", "3", "--k", "1"]), want);
}

#[test]
fn mixing_reports_steps_and_trace() {
    let out = stdout(&["mixing", "--family", "nu", "--n", "4", "--k", "1", "--threshold", "0.25"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("steps\t3"));
    assert!(out.contains("1\t0.739509972887\n"));
    assert_eq!(out, stdout(&["mixing", "--family", "nu", "--n", "4", "--k", "1", "--threshold", "1/4"]));
}

#[test]
fn conjecture_scan_output() {
    assert_eq!(stdout(&["conjecture", "--id", "96", "--n-max", "8"]).lines().next().unwrap(),
        "conjecture 96: n <= 8, 8379 instances, 0 violations");
    let out = stdout(&["conjecture", "--id", "140", "--n-max", "4"]);
    assert!(out.contains("non-commuting: n=4: (3,1) and (2,2)"));
}
