use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sparse-ramsey"));
    c.env("SPARSE_RAMSEY_THREADS", "2");
    c
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin().args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bound_grr_prints_exact_integer() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["bound", "grr", "--d", "2", "--delta", "2", "--q", "2", "--n", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2147483648\n");
}

#[test]
fn bound_main_rejects_unit_delta() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["bound", "main", "--d", "2", "--delta", "1", "--q", "2", "--n", "1"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "invalid-argument");
}

#[test]
fn ramsey_k3_prints_six_and_writes_witness() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["ramsey", "--pattern", "k3", "--n-max", "8"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6\n");
    let witness: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("ramsey-witness.json")).unwrap()).unwrap();
    assert_eq!(witness["status"], "known");
    assert_eq!(witness["lower_witness"]["n"], 5);
}

#[test]
fn ramsey_cap_is_unknown() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["ramsey", "--pattern", "k3", "--n-max", "5", "--out", "w.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("unknown"));
}

#[test]
fn verify_third3_exhaustive_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["verify", "third3", "--n-max", "6", "--exhaustive"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["records"].as_array().unwrap().len(), 6);
    assert_eq!(report["records"][5]["samples"], 1 << 15);
    assert_eq!(report["config"]["n_max"], 6);
    assert!(report["version"].is_string());
}

#[test]
fn verify_unknown_id_lists_ids() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["verify", "lemma9"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("first1") && err.contains("conversions"));
}

#[test]
fn verify_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    // At d = 3 the small-set density property fails on most seeds.
    let o = run(&["verify", "fifth5", "--n", "3000", "--d", "3", "--seeds", "4", "--t", "6"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], false);
}

#[test]
fn verify_zero_seeds_is_undefined() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["verify", "conversions", "--seeds", "0"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(report["pass_fraction"].is_null());
}

#[test]
fn verify_csv_with_sidecar_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "fourth4", "--trials", "100", "--seeds", "3..6", "--format", "csv", "--out", "r.csv"];
    assert_eq!(run(&args, dir.path()).status.code(), Some(0));
    let first = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert!(first.starts_with("lemma_id,n,d,seed,statistic,pass\n"));
    assert_eq!(first.lines().count(), 4);
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.csv.json")).unwrap()).unwrap();
    assert_eq!(side["config"]["trials"], 100);
    assert_eq!(run(&args, dir.path()).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(dir.path().join("r.csv")).unwrap(), first);
}

#[test]
fn unwritable_output_is_internal_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["verify", "third3", "--trials", "5", "--seeds", "1", "--out", "missing/dir/r.json"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "io");
}

#[test]
fn malformed_flags_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["sample", "--n", "3"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["bound", "grr", "--d", "x"], dir.path()).status.code(), Some(2));
}

#[test]
fn sample_order_measure_closure_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(run(&["sample", "--n", "40", "--d", "3", "--seed", "7", "--out", "g.txt"], p).status.code(), Some(0));
    let again = run(&["sample", "--n", "40", "--d", "3", "--seed", "7"], p);
    assert_eq!(stdout(&again), std::fs::read_to_string(p.join("g.txt")).unwrap());

    let o = run(&["order", "--graph", "g.txt"], p);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degeneracy"], v["certificate"]["d"]);

    std::fs::write(p.join("k4.txt"), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let o = run(&["order", "--graph", "k4.txt", "--method", "peel", "--s", "2", "--r", "2"], p);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "stuck");

    std::fs::write(p.join("ord.txt"), "3 2 1 0\n").unwrap();
    let o = run(&["measure", "--graph", "k4.txt", "--ordering", "ord.txt", "--exact"], p);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["certificate"]["d"], 3);
    assert_eq!(v["min_arrangeability"], 3);

    std::fs::write(p.join("c4.txt"), "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let o = run(&["closure", "--graph", "c4.txt", "--set", "0,2"], p);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closure"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn embed_grr_returns_valid_embedding() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        &["embed", "grr", "--pattern-n", "20", "--d", "2", "--n", "600", "--p", "0.5", "--q", "3", "--seed", "2"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["outcome"], "embedded");
    assert_eq!(v["report"]["embedding"].as_array().unwrap().len(), 20);
}

#[test]
fn drc_and_nested_run() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["drc", "--n", "100", "--p", "0.5", "--trials", "20"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["trial_sizes"].as_array().unwrap().len(), 20);

    let o = run(&["nested", "--n", "64", "--q", "3", "--t", "3", "--trials", "5"], dir.path());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rounds"].as_array().unwrap().len(), 3);
}

#[test]
fn sparsity_bound_is_identity_at_h_one() {
    let dir = tempfile::tempdir().unwrap();
    let o =
        run(&["bound", "sparsity", "--alpha", "1/10", "--rho", "1/100", "--epsilon", "1/5", "--h", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"]["alpha"], "1/10");
    assert_eq!(v["params"]["rho"], "1/100");
}
