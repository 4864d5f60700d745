use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn glg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glg")).args(args).output().unwrap()
}

fn glg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_glg"))
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
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "glg/1");
    v
}

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("glg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn hilbert_of_orbit_graph() {
    let v = json(&glg(&["hilbert", &example("orbit.glg"), "-N", "4"]));
    assert_eq!(v["coeffs"], serde_json::json!([1, 3, 10, 32, 103]));
    assert_eq!(v["num"], serde_json::json!([1, -1]));
    assert_eq!(v["den"], serde_json::json!([1, -4, 2, 2, -1]));
    let r = json(&glg(&[
        "hilbert",
        &example("orbit.glg"),
        "-N",
        "4",
        "--reduce-rational",
    ]));
    assert_eq!(r["num"], serde_json::json!([1]));
    assert_eq!(r["den"], serde_json::json!([1, -3, -1, 1]));
}

#[test]
fn nci_of_orbit_graph() {
    let v = json(&glg(&["nci", &example("orbit.glg"), "-N", "8"]));
    assert_eq!(v["is_nci"], true);
    assert_eq!(v["one_minus_g_plus_r"], serde_json::json!([1, -3, -1, 1]));
}

#[test]
fn rank_increasing_edge_is_a_domain_error() {
    let bad = temp_file("bad.glg", "vertex a 0\nvertex b 1\nedge e a b\n");
    let out = glg(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("bad.glg"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_file_and_usage_errors() {
    let out = glg(&["validate", "/nonexistent/x.glg"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(glg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(glg(&["hilbert"]).status.code(), Some(2));
    assert_eq!(
        glg(&["oracle", "x.glg", "--budget-monomials", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(glg(&["--help"]).status.code(), Some(0));
}

#[test]
fn stdin_input_and_round_trip() {
    let generated = glg(&["gen", "random", "--vertices", "6", "--seed", "7", "--single-sink"]);
    assert!(generated.status.success());
    let text = String::from_utf8(generated.stdout).unwrap();
    for cmd in ["validate", "moebius", "mseries", "hilbert", "basis", "relations"] {
        let out = glg_stdin(&[cmd, "-"], &text);
        json(&out);
    }
    let again = glg(&["gen", "random", "--vertices", "6", "--seed", "7", "--single-sink"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn output_is_deterministic() {
    let args = ["relations", &example("orbit.glg") as &str];
    let a = glg(&args);
    let b = glg(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["count"], 3);
}

#[test]
fn generators_emit_parseable_graphs() {
    for args in [
        vec!["gen", "delta", "3"],
        vec!["gen", "chain", "1,2"],
        vec!["gen", "tree", "0:1,0:2,1:3"],
        vec!["gen", "tree", "--random", "6", "--seed", "3"],
        vec!["gen", "sym", "3", "(1 2)"],
        vec!["gen", "random", "--rank-bound", "5"],
    ] {
        let out = glg(&args);
        assert!(out.status.success(), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let v = json(&glg_stdin(&["validate", "-"], &text));
        assert_eq!(v["valid"], true);
    }
    assert_eq!(glg(&["gen", "tree"]).status.code(), Some(2));
    assert_eq!(glg(&["gen", "sym", "3", "(1 4)"]).status.code(), Some(1));
}

#[test]
fn rank_commands() {
    let dag = temp_file(
        "dag.glg",
        "vertex a\nvertex b\nvertex c\nedge e a b\nedge f b c\nedge g a c\n",
    );
    let v = json(&glg(&["rank-can", &dag]));
    assert_eq!(v["ranks"], serde_json::json!([2, 1, 0]));
    let e = json(&glg(&["rank-enum", &dag, "--bound", "3"]));
    assert_eq!(e["canonical_max"], 2);
    assert!(e["count"].as_u64().unwrap() > 1);
}

#[test]
fn basis_words_and_table_format() {
    let v = json(&glg(&["basis", &example("delta2.glg"), "-N", "4", "--words"]));
    assert_eq!(v["counts"], serde_json::json!([1, 1, 2, 3, 5]));
    assert_eq!(v["words"][2].as_array().unwrap().len(), 2);
    let t = glg(&["basis", &example("delta2.glg"), "-N", "2", "--format", "table"]);
    assert_eq!(String::from_utf8(t.stdout).unwrap(), "0\t1\n1\t1\n2\t2\n");
}

#[test]
fn oracle_command() {
    let v = json(&glg(&["oracle", &example("orbit.glg"), "-N", "4", "--independence"]));
    assert_eq!(v["dims"], serde_json::json!([1, 3, 10, 32, 103]));
    assert_eq!(v["relation_series"], serde_json::json!([0, 1, 1, 1, 0]));
    assert_eq!(v["hilbert_agrees"], true);
    assert_eq!(v["independence"]["ok"], true);
    let out = glg(&["oracle", &example("orbit.glg"), "-N", "4", "--budget-monomials", "50"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree 3"));
}

#[test]
fn truncated_relations() {
    let all = json(&glg(&["relations", &example("orbit.glg")]));
    let cut = json(&glg(&["relations", &example("orbit.glg"), "--truncate-relations", "2"]));
    assert_eq!(all["count"], 3);
    assert_eq!(cut["count"], 1);
}

#[test]
fn operations() {
    let v = json(&glg(&[
        "op",
        "add-vertex",
        &example("delta2.glg"),
        "--edge",
        "e",
        "--index",
        "1",
    ]));
    assert_eq!(v["provenance"]["operation"], "add-vertex");
    assert!(v["graph"].as_str().unwrap().contains("edge e_1 max w"));
    let b = json(&glg(&["op", "bouquet", &example("delta2.glg"), &example("delta2.glg")]));
    assert!(b["graph"].as_str().unwrap().contains("vertex g2_max 2"));
    let d = json(&glg(&[
        "op",
        "dbouquet",
        &example("delta2.glg"),
        &example("chain11.glg"),
    ]));
    assert!(d["graph"].is_string());
    let i = json(&glg(&["op", "invert", &example("orbit.glg")]));
    assert_eq!(i["provenance"]["operation"], "invert");
    let bad = glg(&[
        "op",
        "add-edge",
        &example("delta2.glg"),
        "--tail",
        "min",
        "--head",
        "max",
    ]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn identities_pass_on_examples() {
    let v = json(&glg(&[
        "check-identities",
        &example("orbit.glg"),
        &example("chain12.glg"),
    ]));
    assert_eq!(v["all_passed"], true);
    assert!(!v["checks"].as_array().unwrap().is_empty());
}
