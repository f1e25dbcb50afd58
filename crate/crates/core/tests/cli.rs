//! End-to-end runs of the `gtbasis` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtbasis"))
        .args(args)
        .env("GT_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn records(out: &Output) -> Vec<serde_json::Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON record per line"))
        .collect()
}

#[test]
fn dim_examples() {
    let out = run(&["dim", "--weight", "2,1", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "8\n");

    let out = run(&["dim", "--weight", "", "--rank", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");

    let out = run(&["dim", "--weight", "1,1,1", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[WeightTooLong]"));
}

#[test]
fn dim_as_json() {
    let out = run(&["dim", "--weight", "2,1", "--rank", "3", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"weight\":[2,1],\"n\":3,\"dimension\":\"8\",\"patterns\":8}\n"
    );
}

#[test]
fn basis_examples() {
    let out = run(&["basis", "--weight", "1", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["pattern"]["rows"], serde_json::json!([[0], [1, 0]]));
    assert_eq!(
        recs[0]["vector"]["terms"][0]["columns"],
        serde_json::json!([[2]])
    );

    let out = run(&["basis", "--weight", "", "--rank", "1"]);
    let recs = records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(
        recs[0]["vector"]["terms"],
        serde_json::json!([{"columns": [], "coeff": "1"}])
    );

    let out = run(&["basis", "--weight", "2,3", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[NotDecreasing]"));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "--weight", "2,1", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("8 patterns, 24 spectral checks, all match\n"));

    let out = run(&["verify", "--weight", "", "--rank", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("PASS\n"));

    let out = run(&["verify", "--weight", "2,1", "--rank", "3", "--perturb"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).ends_with("FAIL\n"));

    let out = run(&["verify", "--weight", "", "--rank", "1", "--perturb"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_as_json() {
    let out = run(&[
        "verify", "--weight", "2,2", "--rank", "3", "--format", "json",
    ]);
    let recs = records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["pass"], true);
    assert_eq!(recs[0]["spectral_checks"], 18);
}

#[test]
fn patterns_and_tableaux_line_up() {
    let patterns = records(&run(&["patterns", "--weight", "2,1", "--rank", "3"]));
    let tableaux = records(&run(&["tableaux", "--weight", "2,1", "--rank", "3"]));
    assert_eq!(patterns.len(), 8);
    assert_eq!(tableaux.len(), 8);
    assert_eq!(
        patterns[0],
        serde_json::json!({"n": 3, "rows": [[0], [1, 0], [2, 1, 0]]})
    );
    assert!(tableaux
        .iter()
        .all(|t| t["shape"] == serde_json::json!([2, 1])));
}

#[test]
fn spectrum_records() {
    let out = run(&["spectrum", "--weight", "1", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 4);
    assert_eq!(
        recs[1],
        serde_json::json!({"pattern": {"n": 2, "rows": [[0], [1, 0]]}, "m": 2, "expected": [-1, 0, 1], "status": "match"})
    );
}

#[test]
fn embed_and_fundamental() {
    let recs = records(&run(&[
        "embed",
        "--weight",
        "1",
        "--max-degree",
        "2",
        "--rank",
        "4",
    ]));
    assert_eq!(recs.len(), 2);
    assert!(recs.iter().all(|r| r["vector"]["n"] == 4));
    assert_eq!(recs[1]["degree"], 2);

    let out = run(&["embed", "--weight", "1", "--max-degree", "3", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let recs = records(&run(&["fundamental", "--wedge", "2", "--rank", "4"]));
    assert_eq!(recs.len(), 6);
    assert_eq!(recs[0]["indices"], serde_json::json!([1, 2]));

    let out = run(&["fundamental", "--wedge", "5", "--rank", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[WedgeOutOfRange]"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["dim", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let out = run(&["dim", "--weight", "1,x", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[ParseWeight]"));
    let out = run(&["dim", "--weight", "1", "--rank", "0"]);
    assert!(stderr(&out).starts_with("error[ZeroRank]"));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("gtbasis-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("basis.ndjson");
    let out = run(&[
        "basis",
        "--weight",
        "2",
        "--rank",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let one = Command::new(env!("CARGO_BIN_EXE_gtbasis"))
        .args([
            "verify", "--weight", "3,1", "--rank", "3", "--format", "json",
        ])
        .env("GT_THREADS", "1")
        .output()
        .unwrap();
    let many = run(&[
        "verify", "--weight", "3,1", "--rank", "3", "--format", "json",
    ]);
    assert_eq!(one.stdout, many.stdout);
}
