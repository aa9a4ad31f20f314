use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const BOOLEAN_3: &str = r#"{"elements":["0","a","b","c","ab","ac","bc","1"],
"covers":[["0","a"],["0","b"],["0","c"],["a","ab"],["a","ac"],["b","ab"],["b","bc"],
["c","ac"],["c","bc"],["ab","1"],["ac","1"],["bc","1"]]}"#;
const CHAIN_3: &str = r#"{"elements":["0","x","1"],"covers":[["0","x"],["x","1"]]}"#;
const PATH_3: &str = r#"{"vertices":[1,2,3],"edges":[[1,2],[2,3]]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_combhopf")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn boolean_lattice_satisfies_relations() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "b3.json", BOOLEAN_3);
    let out = run(&["ds-check", "--poset", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["ds-check", "--poset", p.to_str().unwrap(), "--form", "B"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn chain_fails_relations_and_eulerian_check() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "c3.json", CHAIN_3);
    let p = p.to_str().unwrap();
    assert_eq!(run(&["ds-check", "--poset", p]).status.code(), Some(1));
    let out = run(&["--json", "eulerian", "--poset", p]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["eulerian"], Value::Bool(false));
    assert_eq!(v["witness"]["mobius"], 0);
}

#[test]
fn eulerian_reports_rank() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "b3.json", BOOLEAN_3);
    let out = run(&["--json", "eulerian", "--poset", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rank"], 3);
    assert_eq!(v["mobius"], -1);
}

#[test]
fn malformed_json_is_invalid_input() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "bad.json", "{\"elements\": [");
    let out = run(&["eulerian", "--poset", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let g = write(&dir, "g.json", "{\"vertices\":[1],\"edges\":[[1,2]]}");
    assert_eq!(run(&["chromatic", "--graph", g.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn parse_errors_report_position() {
    let out = run(&["qsym", "tofm", "M[1,0]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 4"));
}

#[test]
fn inverse_zeta_evaluates() {
    let out = run(&["char", "eval", "--char", "zetaQ_inv", "--element", "M[1,2]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1");
}

#[test]
fn odd_subalgebra_dimensions_are_fibonacci() {
    let out = run(&["hilbert", "--series", "PiMinus", "--degree", "8"]);
    assert_eq!(stdout(&out), "1,1,1,2,3,5,8,13,21");
    let out = run(&["--json", "hilbert", "--series", "QSym", "--degree", "4"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1", "2", "4", "8"]));
}

#[test]
fn qsym_arithmetic() {
    assert_eq!(stdout(&run(&["qsym", "mul", "M[1]", "M[1]"])), "2*M[1,1] + M[2]");
    assert_eq!(stdout(&run(&["qsym", "antipode", "M[1,2]"])), "M[2,1] + M[3]");
    assert_eq!(stdout(&run(&["qsym", "tofm", "F[1,2]"])), "M[1,1,1] + M[1,2]");
    assert_eq!(run(&["qsym", "mul", "M[1]"]).status.code(), Some(2));
}

#[test]
fn json_output_parses_back() {
    let out = run(&["--json", "qsym", "mul", "F[1]", "F[2]"]);
    let text = stdout(&out);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["basis"], "F");
    let back = run(&["qsym", "tofm", &plain(&v)]);
    let direct = run(&["qsym", "tofm", &stdout(&run(&["qsym", "mul", "F[1]", "F[2]"]))]);
    assert_eq!(stdout(&back), stdout(&direct));
}

fn plain(v: &Value) -> String {
    let basis = v["basis"].as_str().unwrap();
    v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let parts: Vec<String> = t["index"].as_array().unwrap().iter().map(|p| p.to_string()).collect();
            format!("{}*{basis}[{}]", t["coeff"].as_str().unwrap(), parts.join(","))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[test]
fn chromatic_of_path() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p3.json", PATH_3);
    let out = run(&["chromatic", "--graph", g.to_str().unwrap(), "--nvars", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines[1], "6*m[1,1,1] + m[2,1]");
    assert_eq!(lines[2], "x1^2*x2 + x1*x2^2");
}

#[test]
fn psi_respects_degree_bound() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "b3.json", BOOLEAN_3);
    let p = p.to_str().unwrap();
    let out = run(&["psi", "--algebra", "rota", "--input", p]);
    assert_eq!(stdout(&out), "6*M[1,1,1] + 3*M[1,2] + 3*M[2,1] + M[3]");
    assert_eq!(run(&["psi", "--algebra", "rota", "--input", p, "--degree", "2"]).status.code(), Some(2));
}

#[test]
fn even_odd_split_of_zeta() {
    let out = run(&["--json", "char", "decompose", "--char", "zetaQ", "--element", "M[1,1]"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["plus"]["value"], "-1/2");
    assert_eq!(v["minus"]["value"], "1/2");
}

#[test]
fn unknown_character_is_rejected() {
    let out = run(&["char", "inv", "--char", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}
