use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const LEIBNIZ_VIOLATION: &str = r#"{
  "basis": [
    {"name": "1", "degree": 0}, {"name": "x", "degree": 2}, {"name": "a", "degree": 1},
    {"name": "b", "degree": 2}, {"name": "xa", "degree": 3}, {"name": "xb", "degree": 4}
  ],
  "unit": "1",
  "products": [["x", "a", {"xa": "1"}], ["a", "x", {"xa": "1"}], ["x", "b", {"xb": "1"}], ["b", "x", {"xb": "1"}]],
  "differential": [["a", {"b": "1"}]],
  "automorphism": [["x", {"x": "9"}], ["a", {"a": "9"}], ["b", {"b": "9"}], ["xa", {"xa": "81"}], ["xb", {"xb": "81"}]],
  "r": "3"
}"#;

const ACYCLIC_PAIR: &str = r#"{
  "basis": [{"name": "e", "degree": 0}, {"name": "a", "degree": 1}, {"name": "b", "degree": 2}],
  "unit": "e",
  "differential": [["a", {"b": "1"}]],
  "automorphism": [["a", {"a": "4"}], ["b", {"b": "4"}]],
  "r": "4"
}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heckebench")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_heckebench"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn dlc_regular_point() {
    let out = run(&["dlc", "--n", "2", "--s", "1,2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["geometric_total"], 4);
    assert_eq!(v["algebraic_total"], 4);
    assert_eq!(v["equal"], true);
}

#[test]
fn dlc_rank_mismatch_is_usage_error() {
    let out = run(&["dlc", "--n", "3", "--s", "1,2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn hecke_verify_rank_three() {
    let out = run(&["hecke-verify", "--n", "3", "--bound", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["all_zero"], true);
    assert!(v["relations"].as_array().unwrap().iter().all(|r| r["nonzero"] == 0));
}

#[test]
fn corrupted_rule_fails_with_residuals() {
    let out = run(&["hecke-verify", "--n", "2", "--bound", "1", "--corrupt"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let failures: usize =
        v["relations"].as_array().unwrap().iter().map(|r| r["failures"].as_array().unwrap().len()).sum();
    assert!(failures > 0);
}

#[test]
fn leibniz_violation_reports_witness() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("leibniz_violation.json");
    std::fs::write(&path, LEIBNIZ_VIOLATION).unwrap();
    let out = run(&["dg-formality", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "invalid");
    assert_eq!(v["error"]["axiom"], "leibniz");
    assert_eq!(v["error"]["witness"], serde_json::json!(["x", "a"]));
}

#[test]
fn acyclic_pair_from_stdin_is_certified() {
    let out = run_stdin(&["dg-formality", "--input", "-"], ACYCLIC_PAIR);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "certified");
    assert_eq!(v["certificate"]["all_passed"], true);
    assert_eq!(v["algebras"]["h"]["basis"].as_array().unwrap().len(), 1);
}

#[test]
fn impure_algebra_is_rejected() {
    let doc = r#"{"basis":[{"name":"1","degree":0},{"name":"x","degree":1}],"unit":"1","automorphism":[]}"#;
    let out = run_stdin(&["dg-formality", "--input", "-", "--r", "4"], doc);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "not-pure");
    assert_eq!(v["error"]["degree"], 1);
}

#[test]
fn malformed_documents_are_usage_errors() {
    for doc in ["{", "[]", r#"{"basis":[],"unit":"1"}"#, r#"{"basis":[{"name":"1","degree":0}],"unit":"1"}"#] {
        let out = run_stdin(&["dg-formality", "--input", "-"], doc);
        assert_eq!(out.status.code(), Some(2), "{doc}");
    }
    let out = run(&["dg-formality", "--input", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn schemas() {
    for t in ["dg-algebra", "springer", "truncated-algebra", "zigzag"] {
        let out = run(&["schemas", "--type", t]);
        assert_eq!(out.status.code(), Some(0));
        assert!(json(&out)["$schema"].is_string());
    }
    assert_eq!(run(&["schemas", "--type", "unknown"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    for args in [
        vec!["frobnicate"],
        vec!["dlc", "--n", "2", "--s", "1,2", "--q", "2", "--bogus"],
        vec!["dlc", "--n", "2", "--s", "1,x", "--q", "2"],
        vec!["dlc", "--n", "2", "--s", "1,2", "--q", "1"],
        vec!["dlc", "--n", "2", "--s", "0,2", "--q", "2"],
        vec!["dlc", "--n", "2", "--s", "1,2", "--q", "4", "--sqrt-q", "3"],
        vec!["steinberg", "--n", "2", "--s", "1,2"],
        vec!["steinberg", "--n", "0"],
        vec!["steinberg", "--n", "12"],
        vec!["hecke-mul", "--n", "2", "--a", "theta:1", "--b", "1"],
        vec!["hecke-verify", "--n", "2", "--bound", "-1"],
        vec!["truncate", "--s", "1,2", "--q", "0.5"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn hecke_mul_quadratic_relation() {
    let out = run(&["hecke-mul", "--n", "2", "--a", "s:1", "--b", "s:1"]);
    assert_eq!(out.status.code(), Some(0));
    let terms = json(&out)["terms"].as_array().unwrap().len();
    assert_eq!(terms, 2);
}

#[test]
fn steinberg_weights_need_sqrt_q() {
    let out = run(&["steinberg", "--n", "2", "--sqrt-q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["totals"]["ext"], 4);
    assert_eq!(v["weights"]["all_consistent"], true);
    assert!(json(&run(&["steinberg", "--n", "2"])).get("weights").is_none());
}

#[test]
fn text_format_is_a_table() {
    let out = run(&["--format", "text", "steinberg", "--s", "7,7", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dim Hom^k"));
    assert!(text.contains("-2  1"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: [&[&str]; 4] = [
        &["dlc", "--n", "2", "--s", "7,7", "--q", "3"],
        &["steinberg", "--n", "3", "--sqrt-q", "2"],
        &["hecke-verify", "--n", "2", "--bound", "2"],
        &["truncate", "--s", "5,5", "--q", "9"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(b.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = run_stdin(&["dg-formality", "--input", "-"], ACYCLIC_PAIR);
    let b = run_stdin(&["dg-formality", "--input", "-"], ACYCLIC_PAIR);
    assert_eq!(a.stdout, b.stdout);
}
