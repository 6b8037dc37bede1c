use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn liesymp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liesymp")).args(args).output().expect("run liesymp")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("liesymp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_accepts_n4_1() {
    let o = liesymp(&["check", &data("n4_1.lie")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn jacobi_failure_is_an_input_error() {
    let path = scratch("bad.lie", "algebra bad\nbasis e1 e2 e3\n[e1,e2] = e3\n[e2,e3] = e1\n[e1,e3] = e1\n");
    let o = liesymp(&["check", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Jacobi identity fails on basis triple (e1, e2, e3)"), "{}", stderr(&o));
}

#[test]
fn parse_error_reports_position() {
    let path = scratch("parse.lie", "basis e1\n");
    let o = liesymp(&["symplectic", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse.lie:1:1"), "{}", stderr(&o));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = liesymp(&["props", "/nonexistent/x.lie"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn der_reports_dimension_and_completeness() {
    let o = liesymp(&["der", "--complete", &data("n4_1.lie")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim Der: 6"), "{}", stdout(&o));
    assert!(stdout(&o).contains("complete: true"));
}

#[test]
fn symplectic_json_schema() {
    let o = liesymp(&["symplectic", "--json", "--witness", &data("n4_1.lie")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["algebra"], "n4_1");
    let s = &v["verdicts"]["symplectic"];
    assert_eq!(s["exists"], true);
    assert_eq!(s["z2_dim"], 5);
    assert_eq!(s["parameters"].as_array().unwrap().len(), 5);
    assert!(s["pfaffian"].is_string());
    assert!(s["witness"].is_string());
    assert_eq!(v["verdicts"]["exact"]["exists"], true);
    assert!(v["verdicts"]["complete"].is_boolean());
    assert!(v["diagnostics"].is_array());
}

#[test]
fn catalog_verify_is_green() {
    let o = liesymp(&["catalog", "verify", "--dim", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("green"));
}

#[test]
fn catalog_verify_json_summary() {
    let o = liesymp(&["catalog", "verify", "--name", "n6_21", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let summary = &v["summary"];
    assert_eq!(summary["entries"], 1);
    assert_eq!(summary["mismatches"], 0);
    assert_eq!(summary["documented_typos"], 2);
    assert_eq!(summary["green"], true);
    assert!(v["entries"][0]["regression"].is_array() || v["entries"][0]["regression"].is_object());
}

#[test]
fn catalog_parameter_override() {
    let o = liesymp(&["catalog", "show", "n6_5", "--set", "a=3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("[e2,e3] = 3*e6"), "{}", stdout(&o));
    let o = liesymp(&["catalog", "verify", "--name", "n6_5", "--set", "a=0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = liesymp(&["catalog", "show", "n6_5", "--set", "b=1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_catalog_entry() {
    let o = liesymp(&["catalog", "show", "n9_1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_list_has_every_row() {
    let o = liesymp(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in liesymp::catalog::table_rows(None) {
        assert!(text.contains(name), "{name}");
    }
}

/// The Q_n top power disagrees with the printed value, so this is the one
/// command that exits 1 on the shipped catalog.
#[test]
fn repro_props_reports_the_q_mismatch() {
    let o = liesymp(&["repro-props", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    for q in v["filiform_q"].as_array().unwrap() {
        assert_eq!(q["closed"], true);
        assert_eq!(q["nondegenerate"], true);
        assert_eq!(q["matches_printed"], false);
    }
    assert!(v["abelian"].as_array().unwrap().len() == 4);
}
