use powspec::report::{Construction, Status};
use powspec::sweep::{summary_table, sweep};
use powspec::verify::{run_verification, VerifyConfig};
use powspec_core::MatrixKind;

#[test]
fn model_formula_checks_pass_and_true_graph_mismatches() {
    let r = run_verification(2, 3, &VerifyConfig::default(), None).unwrap();
    for kind in MatrixKind::ALL {
        let model = r.find("charpoly-formula", Some(Construction::Model), Some(kind)).unwrap();
        assert_eq!(model.status, Status::Pass, "{kind:?}");
        let truth = r.find("charpoly-formula", Some(Construction::True), Some(kind)).unwrap();
        assert_eq!(truth.status, Status::MismatchReported, "{kind:?}");
    }
    let diff = r.find("model-vs-true-diff", None, None).unwrap();
    assert_eq!(diff.status, Status::MismatchReported);
    assert_eq!(diff.computed["count"], 10);
    let le = r.find("laplacian-energy", None, None).unwrap();
    assert_eq!(le.status, Status::MismatchReported);
    assert_eq!(le.expected, "47/4");
    assert!(r.passed());
}

#[test]
fn true_construction_alone_passes_structural_checks() {
    let cfg = VerifyConfig { constructions: vec![Construction::True], ..VerifyConfig::default() };
    let r = run_verification(2, 5, &cfg, None).unwrap();
    assert_eq!(r.find("decomposition", Some(Construction::True), None).unwrap().status, Status::Pass);
    assert_eq!(
        r.find("spectral-radius-bounds", Some(Construction::True), Some(MatrixKind::Adjacency)).unwrap().status,
        Status::Pass
    );
    assert!(r.find("model-vs-true-diff", None, None).is_none());
}

#[test]
fn cap_marks_matrix_checks_skipped() {
    let cfg = VerifyConfig { matrix_cap: 16, ..VerifyConfig::default() };
    let r = run_verification(2, 3, &cfg, None).unwrap();
    let c = r.find("charpoly-formula", Some(Construction::Model), Some(MatrixKind::Adjacency)).unwrap();
    assert_eq!(c.status, Status::Skipped);
    assert!(c.note.as_deref().unwrap().contains("exceeds cap"));
    assert_eq!(r.find("decomposition", Some(Construction::Model), None).unwrap().status, Status::Pass);
    assert!(r.passed());
}

#[test]
fn report_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let cfg = VerifyConfig { kinds: vec![MatrixKind::Adjacency], ..VerifyConfig::default() };
    let r = run_verification(2, 3, &cfg, Some(&path)).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, r.to_json().unwrap());
    let missing = dir.path().join("no/such/dir/r.json");
    assert!(matches!(run_verification(2, 3, &cfg, Some(&missing)), Err(powspec::Error::Io { .. })));
}

#[test]
fn sweep_reports_each_pair() {
    let cfg = VerifyConfig { kinds: vec![MatrixKind::Laplacian], ..VerifyConfig::default() };
    let entries = sweep(2..=3, &[3, 5], &cfg).unwrap();
    let ns: Vec<u64> = entries.iter().map(|e| e.outcome.as_ref().unwrap().params.n).collect();
    assert_eq!(ns, [24, 40, 48, 80]);
    assert!(entries.iter().all(|e| e.outcome.as_ref().unwrap().passed()));
    assert_eq!(summary_table(&entries).lines().count(), 5);
}
