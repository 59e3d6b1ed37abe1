use std::process::{Command, Output};

use serde_json::Value;

fn charvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charvar"))
        .args(args)
        .env_remove("CHARVAR_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn reduce_word() {
    let out = charvar(&["reduce", "--word", "x1 x1 x2", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t1*t3 - t-1*t2 + t-4");
}

#[test]
fn reduce_word_json_carries_terms() {
    let out = charvar(&["reduce", "--word", "x1 x2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["text"], "t3");
    assert!(v["terms"].is_object() || v["terms"].is_array());
}

#[test]
fn reduce_bad_token_is_an_error() {
    let out = charvar(&["reduce", "--word", "x3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn reduce_expression() {
    let out = charvar(&["reduce", "--expr", "tr(x1 x2) - t3", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0");
}

#[test]
fn torus_bracket() {
    let out = charvar(&[
        "bracket",
        "--surface",
        "torus",
        "--f",
        "t1",
        "--g",
        "t2",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-1/3*t1*t2 + t3");
}

#[test]
fn orientation_flips_the_bracket() {
    let out = charvar(&[
        "bracket",
        "--surface",
        "torus",
        "--orientation",
        "-",
        "--f",
        "t1",
        "--g",
        "t2",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1/3*t1*t2 - t3");
}

#[test]
fn bracket_needs_a_surface() {
    let out = charvar(&["bracket", "--f", "t1", "--g", "t2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dims_json() {
    let v = json(&charvar(&["dims", "--genus", "1", "--boundaries", "1"]));
    assert_eq!(v["chi"], -1);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["dim"], 8);
    assert_eq!(v["leaf_dim"], 6);
    let v = json(&charvar(&["dims", "--genus", "0", "--boundaries", "2"]));
    assert_eq!(v["dim"], Value::Null);
}

#[test]
fn sym_apply() {
    let out = charvar(&["sym", "--apply", "i1", "--to", "t3", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t-4");
}

#[test]
fn unknown_symmetry_is_an_error() {
    let out = charvar(&["sym", "--apply", "q7", "--to", "t3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = charvar(&["verify", "--suite", "orbit"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
    let out = charvar(&["verify", "--suite", "kernel", "--n", "50", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    let out = charvar(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_table_has_24_torus_entries() {
    let v = json(&charvar(&[
        "export",
        "--surface",
        "torus",
        "--what",
        "table",
    ]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 24);
}

#[test]
fn export_relations() {
    let out = charvar(&["export", "--surface", "torus", "--what", "relations"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["relations"].as_array().unwrap().len(), 22);
}

#[test]
fn sampling_is_deterministic_for_a_seed() {
    let args = ["sample", "--suite", "kernel", "--n", "40", "--seed", "9"];
    let a = charvar(&args);
    let b = charvar(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 3);
}

#[test]
fn seed_from_environment() {
    let flag = charvar(&["sample", "--suite", "kernel", "--n", "30", "--seed", "123"]);
    let env = Command::new(env!("CARGO_BIN_EXE_charvar"))
        .args(["sample", "--suite", "kernel", "--n", "30"])
        .env("CHARVAR_SEED", "123")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
}

#[test]
fn show_named_relation() {
    let out = charvar(&["show", "P", "--format", "text"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("t1*t-1"));
}
