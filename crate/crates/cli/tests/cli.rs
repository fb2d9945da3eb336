use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn coalesce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coalesce")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coalesce-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_graph(family: &str, params: &str, name: &str) -> String {
    let path = temp(name);
    let p = path.to_str().unwrap().to_string();
    let out = coalesce(&["gen", "--family", family, "--params", params, "--out", &p]);
    assert_eq!(out.status.code(), Some(0));
    p
}

#[test]
fn gen_dumbbell_to_stdout() {
    let out = coalesce(&["gen", "--family", "dumbbell", "--params", "6,6,4", "--out", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("14 15"));
    assert_eq!(text.lines().count(), 16);
}

#[test]
fn molecule_indices() {
    let p = write_graph("dumbbell", "6,6,4", "molecule.el");
    let out = coalesce(&["indices", "--in", &p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        serde_json::to_string(&json(&out)["payload"]).unwrap(),
        r#"{"F":150,"M1":66,"NK":36864,"W":343,"WW":"1032"}"#
    );
}

#[test]
fn k1_decomposition_on_triangles() {
    let p = write_graph("complete", "3", "k3.el");
    let out = coalesce(&["verify", "decomposition", "--g1", &p, "--q1", "0", "--g2", &p, "--q2", "0", "--alpha", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["payload"][0]["equal"], Value::Bool(true));
    assert_eq!(report["status"], "ok");
}

#[test]
fn failing_rows_exit_3() {
    let p = write_graph("complete", "3", "k3-edge.el");
    let out = coalesce(&[
        "verify", "decomposition", "--g1", &p, "--q1", "0,1", "--g2", &p, "--q2", "0,1", "--alpha", "1/2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["status"], "fail");
}

#[test]
fn domain_errors_exit_1() {
    let p = write_graph("path", "3", "p3.el");
    // {0, 2} is not a clique of P3.
    let out = coalesce(&["coalesce", "--g1", &p, "--q1", "0,2", "--g2", &p, "--q2", "0,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "not_a_clique");

    let out = coalesce(&["indices", "--in", "/nonexistent/graph.el"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "io");

    let out = coalesce(&["gen", "--family", "cycle", "--params", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    let p = write_graph("complete", "4", "k4.el");
    for args in [
        vec!["spectrum", "--in", p.as_str(), "--alpha", "0.5"],
        vec!["spectrum", "--in", p.as_str(), "--alpha", "3/2"],
        vec!["frobnicate"],
        vec!["gen", "--family", "lollipop", "--params", "4"],
        vec!["verify", "complete-forms", "--m", "2..x"],
    ] {
        assert_eq!(coalesce(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn spectrum_and_charpoly() {
    let p = write_graph("complete", "3", "k3-spec.el");
    let out = coalesce(&["spectrum", "--in", &p, "--alpha", "0", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let payload = &json(&out)["payload"];
    assert_eq!(payload[0]["eigenvalues"], serde_json::json!(["2", "-1", "-1"]));
    assert_eq!(payload[1]["eigenvalues"], serde_json::json!(["2", "2", "2"]));

    // Eigenvalues 2, 1/2, 1/2.
    let out = coalesce(&["charpoly", "--in", &p, "--alpha", "1/2"]);
    assert_eq!(json(&out)["payload"][0]["polynomial"], "λ^3 - 3λ^2 + (9/4)λ - (1/2)");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "energy-corollaries", "--m", "3..5", "--n", "3..5", "--alpha", "1/3"];
    let a = coalesce(&args);
    let b = coalesce(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn coalesce_writes_edge_list() {
    let p = write_graph("cycle", "4", "c4.el");
    let out = coalesce(&["coalesce", "--g1", &p, "--q1", "0,1", "--g2", &p, "--q2", "2,3", "--out", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("6 7"));
}

#[test]
fn index_form_grid() {
    let out = coalesce(&["verify", "index-forms", "--family", "dumbbell", "--grid", "m=6;n=4", "--index", "W"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out)["rows"].clone();
    assert_eq!(rows[0]["measured"], "343");
}

#[test]
fn structure_on_one_pair() {
    let p = write_graph("cycle", "5", "c5.el");
    let out = coalesce(&["verify", "structure", "--g1", &p, "--q1", "0", "--g2", &p, "--q2", "2", "-v"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stderr).unwrap().contains("pass"));
}
