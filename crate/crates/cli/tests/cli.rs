use std::process::{Command, Output};

use gkit_core::graph::{are_isomorphic, parse_graph6};
use gkit_core::Graph;
use serde_json::Value;

fn gkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkit")).args(args).env_remove("GKIT_FIELDS").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("gkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_cycle_complement_json() {
    let out = gkit(&["check", "--graph6", "DLo", "--fields", "q,f2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert!(results.iter().all(|r| r["theorem"]["accepted"] == true));
    assert_eq!(results[1]["field"], "GF(2)");
}

#[test]
fn check_both_routes_prints_agreement() {
    let out = gkit(&["check", "--builtin", "fig1c", "--route", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("homological"));
    assert_eq!(text.lines().filter(|l| l.ends_with("yes")).count(), 3);
}

#[test]
fn rejection_carries_a_witness() {
    let out = gkit(&["check", "--builtin", "c4", "--fields", "q", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let w = &v["results"][0]["theorem"]["witness"];
    assert_eq!(w["condition"], "cycle-links");
    assert_eq!(w["face"], serde_json::json!([]));
}

#[test]
fn input_errors_exit_2() {
    let bad = temp_file("loop.txt", "n 3\n0 0\n");
    let out = gkit(&["check", "--edges", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));

    assert_eq!(gkit(&["check", "--graph6", "~~~"]).status.code(), Some(2));
    assert_eq!(gkit(&["check", "--builtin", "nosuch"]).status.code(), Some(2));
    assert_eq!(gkit(&["check", "--builtin", "c5", "--graph6", "DLo"]).status.code(), Some(2));
    assert_eq!(gkit(&["check", "--builtin", "c5", "--fields", "f4"]).status.code(), Some(2));
    assert_eq!(gkit(&["enumerate", "--n", "6..5"]).status.code(), Some(2));
}

#[test]
fn route_flip_fault_exits_3() {
    let out = gkit(&["check", "--builtin", "cbar6", "--route", "both", "--inject-fault", "route-flip"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn report_values() {
    let text = stdout(&gkit(&["report", "--builtin", "fig1a"]));
    assert!(text.contains("I=1+6x+12x^2+8x^3"));
    assert!(text.contains("h=(1, 3, 3, 1)"));
    let text = stdout(&gkit(&["report", "--builtin", "cbar6"]));
    assert!(text.contains("I=1+6x+6x^2"));
    let v: Value = serde_json::from_str(&stdout(&gkit(&["report", "--builtin", "fig1c", "--format", "json"]))).unwrap();
    assert_eq!(v["m"], 10);
    assert_eq!(v["alpha"], 3);
    assert_eq!(v["euler"], true);
}

#[test]
fn facet_input() {
    let rp2 = temp_file("rp2.txt", "n 6\n0 1 3\n0 1 5\n0 2 4\n0 2 5\n0 3 4\n1 2 3\n1 2 4\n1 4 5\n2 3 5\n3 4 5\n");
    let path = rp2.to_str().unwrap();
    let out = gkit(&["check", "--facets", path, "--fields", "q,f2", "--route", "homological", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    // Not Gorenstein over either field, for different reasons.
    assert_eq!(v["results"][0]["homological"]["accepted"], false);
    assert_eq!(v["results"][1]["homological"]["accepted"], false);
    assert!(v["note"].is_null());

    assert_eq!(gkit(&["check", "--facets", path, "--route", "theorem"]).status.code(), Some(2));
    let text = stdout(&gkit(&["report", "--facets", path, "--fields", "q,f2"]));
    assert!(text.contains("betti[Q] (i=-1..2)=(0, 0, 0, 0)"), "{text}");
    assert!(text.contains("betti[GF(2)] (i=-1..2)=(0, 0, 1, 1)"), "{text}");
}

#[test]
fn enumerate_examples() {
    let out = gkit(&["enumerate", "--triangle-free", "--alpha", "3", "--no-isolated", "--n", "6..8", "--predicate", "w2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 3);

    let out = gkit(&["enumerate", "--alpha", "2", "--no-isolated", "--n", "4..6", "--predicate", "gorenstein:f2"]);
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let codes: Vec<&str> = lines.iter().map(|v| v["graph6"].as_str().unwrap()).collect();
    assert_eq!(codes.len(), 3);
    for (code, n) in codes.iter().zip(4..) {
        let g = parse_graph6(code.as_bytes()).unwrap();
        assert!(are_isomorphic(&g, &Graph::cycle(n).complement()).unwrap(), "{code}");
    }

    assert_eq!(stdout(&gkit(&["enumerate", "--n", "4"])).lines().count(), 11);
}

#[test]
fn enumerate_output_is_deterministic() {
    let args = ["enumerate", "--no-isolated", "--n", "5..7", "--predicate", "gorenstein"];
    let one = gkit(&[&args[..], &["--jobs", "1"]].concat());
    let two = gkit(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(one.stdout, two.stdout);
    assert!(!one.stdout.is_empty());
}

#[test]
fn fields_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_gkit"))
        .args(["check", "--builtin", "cbar5", "--format", "json"])
        .env("GKIT_FIELDS", "f5")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
    assert_eq!(v["results"][0]["field"], "GF(5)");
}

#[test]
fn verification_suite_passes_and_detects_faults() {
    let out = gkit(&["verify-paper"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 9);

    let out = gkit(&["verify-paper", "--probe-max-n", "8", "--inject-fault", "h-off-by-one"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l.starts_with("FAIL criterion 9")));

    let out = gkit(&["verify-paper", "--probe-max-n", "8", "--fields", "q,f3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("CONDITIONAL criterion 5"));

    let out = gkit(&["verify-paper", "--probe-max-n", "8", "--inject-fault", "route-flip"]);
    assert_eq!(out.status.code(), Some(3));
}
