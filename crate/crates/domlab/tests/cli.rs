//! End-to-end tests of the `domlab` binary: build, analyze, solve, verify,
//! and scan, including exit-code conventions (0 ok, 1 violation/fail,
//! 2 inconclusive, 3 usage error).

use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn domlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(args)
        .output()
        .expect("running domlab")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success() || out.status.code() == Some(2),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_solve_r3() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("r3.g6");
    let out = domlab(&["build", "--family", "R", "--k", "3", "--out", path_str(&g6)]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&g6).unwrap();
    assert_eq!(domlab::graph6::parse_graph6(text.trim()).unwrap().vertex_count(), 60);

    // direct solve on R_3 is too slow; certify compositionally via a sidecar
    let sidecar = dir.path().join("occs.json");
    let (_, occs) = domlab::families::build_r(3, None).unwrap();
    let specs: Vec<Value> = occs
        .iter()
        .map(|o| serde_json::json!({"gadget": "P", "embedding": o.embedding}))
        .collect();
    std::fs::write(&sidecar, serde_json::to_string(&specs).unwrap()).unwrap();
    let out = domlab(&["solve", "--in", path_str(&g6), "--certify", path_str(&sidecar), "--budget", "120"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json = stdout_json(&out);
    assert_eq!(json["gamma"], 21);
    assert_eq!(json["rho"], "7/20");
    assert_eq!(json["certificate"], "compositional");
}

#[test]
fn build_petersen_and_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("gp72.g6");
    let out = domlab(&["build", "--family", "petersen", "--k", "7", "--i", "2", "--out", path_str(&g6)]);
    assert!(out.status.success());
    let out = domlab(&["analyze", "--in", path_str(&g6)]);
    let json = stdout_json(&out);
    assert_eq!(json["v"], 14);
    assert_eq!(json["cubic"], true);
    assert_eq!(json["kappa"], 3);
    assert_eq!(json["cyc4"], true);
    assert_eq!(json["hamiltonian"], true);
    assert_eq!(json["bridges"].as_array().unwrap().len(), 0);
}

#[test]
fn build_dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("k4.dot");
    let out = domlab(&["build", "--family", "M", "--r", "0", "--k", "1", "--format", "dot", "--out", path_str(&dot)]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&dot).unwrap();
    assert!(body.starts_with("graph"), "dot output: {body}");
}

#[test]
fn verify_selection_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = domlab(&["verify", "--claims", "2.A,GP72", "--report", path_str(&report)]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let reports = json.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    // rationals are strings, never floats
    assert!(!std::fs::read_to_string(&report).unwrap().contains("0.35"));
}

#[test]
fn verify_csv_format() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.csv");
    let out = domlab(&["verify", "--claims", "2.B", "--format", "csv", "--report", path_str(&report)]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&report).unwrap();
    assert!(body.starts_with("claim_id,citation,"));
    assert!(body.lines().count() >= 2);
}

#[test]
fn scan_clean_corpus_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.g6");
    let report = dir.path().join("scan.json");
    std::fs::write(&corpus, domlab::corpus::corpus_graph6(8)).unwrap();
    let out = domlab(&["scan", "--in", path_str(&corpus), "--conjecture", "reed", "--report", path_str(&report)]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["summary"]["scanned"], 8);
    assert_eq!(json["summary"]["violations"], 0);
}

#[test]
fn scan_parse_error_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.g6");
    let report = dir.path().join("scan.json");
    std::fs::write(&corpus, "C~\n*junk*\n").unwrap();
    let out = domlab(&["scan", "--in", path_str(&corpus), "--conjecture", "reed", "--cubic", "false", "--report", path_str(&report)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_three() {
    let out = domlab(&["build", "--family", "nope", "--out", "/dev/null"]);
    assert_eq!(out.status.code(), Some(3));
    let out = domlab(&["build", "--family", "R", "--out", "/dev/null"]); // missing --k
    assert_eq!(out.status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let out = domlab(&["verify", "--claims", "no.such.claim", "--report", path_str(&dir.path().join("r.json"))]);
    assert_eq!(out.status.code(), Some(3));
}
