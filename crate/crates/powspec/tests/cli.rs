use std::path::Path;
use std::process::{Command, Output};

use powspec::VerificationReport;

fn powspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powspec")).args(args).env_remove(powspec::MATRIX_CAP_ENV).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn read_report(path: &Path) -> VerificationReport {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_writes_a_passing_report_with_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = powspec(&["verify", "--k", "2", "--p", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = read_report(&out);
    assert_eq!((r.params.n, r.params.m_model, r.params.m_true), (24, 87, 77));
    assert_eq!(r.summary.fail, 0);
    assert!(r.summary.mismatch_reported > 0);
    for c in &r.checks {
        assert!(powspec::anchors::is_registered(&c.anchor), "unregistered anchor {:?}", c.anchor);
    }
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let a = powspec(&["verify", "--k", "2", "--p", "5", "--matrix", "laplacian"]);
    let b = powspec(&["verify", "--k", "2", "--p", "5", "--matrix", "laplacian"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn matrix_cap_from_environment_skips_exact_checks() {
    let o = Command::new(env!("CARGO_BIN_EXE_powspec"))
        .args(["verify", "--k", "2", "--p", "3", "--construction", "model"])
        .env(powspec::MATRIX_CAP_ENV, "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let r: VerificationReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.matrix_cap, 8);
    assert!(r.summary.skipped > 0);
    let bad = Command::new(env!("CARGO_BIN_EXE_powspec"))
        .args(["verify", "--k", "2", "--p", "3"])
        .env(powspec::MATRIX_CAP_ENV, "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_and_parameter_errors_exit_2() {
    assert_eq!(powspec(&["verify", "--k", "2"]).status.code(), Some(2));
    assert_eq!(powspec(&["verify", "--k", "1", "--p", "3"]).status.code(), Some(2));
    assert_eq!(powspec(&["verify", "--k", "2", "--p", "9"]).status.code(), Some(2));
    assert_eq!(powspec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(powspec(&["export", "--what", "formula", "--format", "dot", "--k", "2", "--p", "3"]).status.code(), Some(2));
}

#[test]
fn sweep_grid_and_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let o = powspec(&["sweep", "--k", "2..2", "--p", "3,5", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let table = stdout(&o);
    assert_eq!(table.lines().count(), 3);
    assert!(table.lines().nth(1).unwrap().contains(" 24 "));
    assert_eq!(read_report(&dir.path().join("k2_p5.json")).params.n, 40);

    let empty = powspec(&["sweep", "--k", "2..3", "--p", ""]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(empty.stdout.is_empty());

    let nine = powspec(&["sweep", "--k", "2..3", "--p", "3,9"]);
    assert_eq!(nine.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&nine.stderr).contains("odd prime"));
}

#[test]
fn exports() {
    let csv = powspec(&["export", "--what", "spectrum", "--format", "csv", "--k", "2", "--p", "3"]);
    assert_eq!(stdout(&csv), "value,multiplicity\n0,1\n1,6\n2,3\n4,3\n12,9\n18,1\n24,1\n");

    let computed = powspec(&["export", "--what", "spectrum", "--format", "csv", "--k", "2", "--p", "3", "--source", "computed"]);
    assert_eq!(stdout(&computed).lines().count(), 8);

    let json = powspec(&["export", "--what", "formula", "--format", "json", "--k", "2", "--p", "3", "--matrix", "adjacency"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["expanded"].as_array().unwrap().len(), 25);

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.dot");
    let b = dir.path().join("b.dot");
    for path in [&a, &b] {
        let o = powspec(&["export", "--what", "graph", "--format", "dot", "--k", "2", "--p", "3", "--construction", "true", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let dot = std::fs::read_to_string(&a).unwrap();
    assert_eq!(dot, std::fs::read_to_string(&b).unwrap());
    assert_eq!(dot.matches(" -- ").count(), 77);
    assert!(dot.contains("[label=\"s^1 r^3\"]"));

    let directed = powspec(&["export", "--what", "graph", "--format", "dot", "--k", "2", "--p", "3", "--directed"]);
    assert!(stdout(&directed).starts_with("digraph power {"));
}

#[test]
fn formulas_dump() {
    let o = powspec(&["formulas", "--k", "2", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 24);
    assert_eq!(v["m"], "87");
    assert_eq!(v["laplacian_energy"], "47/4");
    assert_eq!(v["laplacian_spectrum"].as_array().unwrap().len(), 7);
    assert_eq!(v["signless_charpoly"]["expanded"].as_array().unwrap().len(), 25);
    assert_eq!(v["spectral_radius_bounds"]["lower"], "11");
}
