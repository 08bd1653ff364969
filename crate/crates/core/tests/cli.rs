use std::process::{Command, Output};

use orbitci::ci::{CIReport, Verdict};

fn orbitci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitci"))
        .args(args)
        .env("ORBITCI_SEED", "11")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn degrees_a2() {
    let o = orbitci(&["degrees", "A2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("degrees [2, 3]"), "{s}");
    assert!(s.contains("dim g 8  dim N 6"), "{s}");
    assert!(s.contains("sum 5 = n + r = 3 + 2  ok"), "{s}");
}

#[test]
fn degrees_json() {
    let o = orbitci(&["degrees", "G2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim_g"], 14);
    assert_eq!(v["degrees"], serde_json::json!([2, 6]));
}

#[test]
fn ci_check_codes() {
    let neg = orbitci(&["ci-check", "A4:0101"]);
    assert_eq!(neg.status.code(), Some(1));
    assert!(stdout(&neg).contains("levi-reduction"));
    assert_eq!(orbitci(&["ci-check", "A1:0"]).status.code(), Some(0));
    let bad = orbitci(&["ci-check", "Z9:00"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    assert_eq!(orbitci(&["ci-check", "B3:111"]).status.code(), Some(2));
}

#[test]
fn ci_check_json_round_trips() {
    let o = orbitci(&["ci-check", "C3:101", "--format", "json"]);
    let text = stdout(&o);
    let report = CIReport::from_json(&text).unwrap();
    assert_eq!(report.verdict, Verdict::NotCompleteIntersection);
    assert_eq!(report.subject.marking, "C3:101");
    assert_eq!(CIReport::from_json(&report.to_json()).unwrap(), report);
}

#[test]
fn verify_rank_four() {
    let o = orbitci(&["verify", "--max-rank", "4", "--parallelism", "2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("violations 0  undetermined 0"), "{s}");
    assert!(s.contains("levi-reduction"));
}

#[test]
fn verify_rank_one() {
    let o = orbitci(&["verify", "--max-rank", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["markings"], 1);
    assert_eq!(v["rows"][0]["verdict"], "IsNilpotentCone");
}

#[test]
fn verify_csv_columns() {
    let o = orbitci(&["verify", "--max-rank", "2", "--format", "csv"]);
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(
        lines.next(),
        Some("type,rank,marking,dim_orbit,codim,verdict,first_rule")
    );
    assert_eq!(
        lines.next(),
        Some("A1,1,A1:0,2,1,IsNilpotentCone,nilpotent-cone")
    );
    // A1: 1, A2: 3, B2: 3, G2: 3
    assert_eq!(s.lines().count(), 11);
}

#[test]
fn verify_rank_guard() {
    let o = orbitci(&["verify", "--max-rank", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = orbitci(&[
        "verify",
        "--max-rank",
        "9",
        "--allow-unvalidated-tables",
        "--format",
        "json",
    ]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn euler_lemma_instance() {
    let o = orbitci(&["euler", "--m", "7", "--deg", "2,3", "--t", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");
    let o = orbitci(&["euler", "--m", "4", "--deg", "2", "--t", "-3..0", "--lemma"]);
    assert!(stdout(&o).contains("lemma holds"));
    let o = orbitci(&["euler", "--m", "2", "--deg", "2,2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_suites() {
    let o = orbitci(&["oracle", "molien"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("7 checks, 0 mismatches"));
    let o = orbitci(&["oracle", "cones", "--samples", "200"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("seed 11"));
    let o = orbitci(&["oracle", "jacobian"]);
    assert!(o.status.success());
    assert!(orbitci(&["oracle", "weights"]).status.success());
}

#[test]
fn exceptional_supplied_orbit() {
    let o = orbitci(&["exceptional", "--type", "E7", "--dim-orbit", "84"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("codim-third"));
    let o = orbitci(&["exceptional", "--type", "G2", "--dim-orbit", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let o = orbitci(&["exceptional", "--type", "A3", "--dim-orbit", "12"]);
    assert_eq!(o.status.code(), Some(2));
}
