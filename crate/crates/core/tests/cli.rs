#![cfg(feature = "cli")]

use std::process::{Command, Output};

fn gpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpi")).args(args).output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn codim_json_totals() {
    let o = gpi(&["codim", "--algebra", "catalog:A2(3)@Z3", "--n", "4", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["totals"]["c"], serde_json::json!([3, 9, 27, 81]));
    assert_eq!(v["totals"]["cdelta"], serde_json::json!([3, 9, 27, 81]));
}

#[test]
fn codim_csv_is_byte_stable() {
    let args = ["codim", "--algebra", "catalog:A4@Z4", "--n", "3", "--out", "csv", "--jobs", "2"];
    let a = gpi(&args);
    let b = gpi(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("n,tuple,c,cz,cdelta,multiplicity\n"));
}

#[test]
fn exponent_of_a6() {
    let o = gpi(&[
        "exponent",
        "--algebra",
        "catalog:A6(g,1,g)@Z2",
        "--delta",
        "--mode",
        "template",
        "--max-degree",
        "6",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exp_g"], 3);
    assert_eq!(v["delta"]["exact"], 3);
}

#[test]
fn verify_lemma_suite() {
    let o = gpi(&["verify", "--suite", "lemma3.2", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("effective N = 3"));
}

#[test]
fn failing_suite_exits_one() {
    let o = gpi(&["verify", "--suite", "prop3.5", "--max-degree", "3", "--out", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("\"A9(g,1,g)@Z2/product\",claim,false")), "{text}");
}

#[test]
fn classify_reads_label_maps() {
    let dir = std::env::temp_dir().join(format!("gpi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let labels = dir.join("labels.json");
    std::fs::write(&labels, r#"{"e": [0], "s": [1]}"#).unwrap();
    let o = gpi(&[
        "classify",
        "--algebra",
        "catalog:A2(2)@Z2",
        "--poly",
        "[x1:s, x2:e]",
        "--labels",
        labels.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("identity"));
}

#[test]
fn file_algebra_round_trip() {
    let dir = std::env::temp_dir().join(format!("gpi-cli-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a4.json");
    let o = gpi(&["catalog", "export", "A4@Z4"]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&path, &o.stdout).unwrap();
    let p = path.to_str().unwrap();
    let from_file = gpi(&["codim", "--algebra", p, "--n", "3", "--out", "csv"]);
    let from_catalog = gpi(&["codim", "--algebra", "catalog:A4@Z4", "--n", "3", "--out", "csv"]);
    assert_eq!(from_file.stdout, from_catalog.stdout);
    let e = gpi(&["exponent", "--algebra", p, "--out", "json"]);
    assert_eq!(e.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["codim", "--algebra", "catalog:A99@Z2", "--n", "2"],
        vec!["codim", "--algebra", "/no/such/file.json", "--n", "2"],
        vec!["codim", "--algebra", "catalog:A2(3)@Z3", "--n", "9"],
        vec!["codim", "--algebra", "catalog:A2(3)@Z3", "--n", "0"],
        vec!["verify", "--suite", "nope"],
        vec!["classify", "--algebra", "catalog:A2(3)@Z3", "--poly", "x1:q"],
    ] {
        let o = gpi(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn malformed_file_is_reported() {
    let dir = std::env::temp_dir().join(format!("gpi-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"name": "x", "group": {"orders": [2]}, "basis": ["a"]}"#).unwrap();
    let o = gpi(&["codim", "--algebra", path.to_str().unwrap(), "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.json"));
}

#[test]
fn budget_env_refuses() {
    let o = Command::new(env!("CARGO_BIN_EXE_gpi"))
        .args(["codim", "--algebra", "catalog:A7(g,1,g,1)@Z2", "--n", "6"])
        .env("GPI_BUDGET_MS", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("GPI_BUDGET_MS"));
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("gpi-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cat.json");
    let a = gpi(&["catalog", "list", "--out", "json"]);
    let b = gpi(&["catalog", "list", "--out", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(b.status.code(), Some(0));
    assert!(b.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
}
