use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use twistlink_core::families::{FIGURE_EIGHT, FIVE_TWO};

fn twistlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistlink"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn pd_file(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn figure_eight_has_two_twist_regions() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "4_1.pd", FIGURE_EIGHT);
    let out = twistlink(&["analyze", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["twist_number"], 2);
    assert_eq!(v["alternating"], true);
    assert_eq!(v["prime"], true);
    assert_eq!(v["twist_reduced"], true);
}

#[test]
fn non_alternating_input_is_flagged() {
    let dir = tempfile::tempdir().unwrap();
    // the first crossing of the figure eight with its strands swapped
    let f = pd_file(dir.path(), "flip.pd", "X[2,5,1,4] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
    let out = twistlink(&["analyze", &f]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["alternating"], false);
    assert!(v.get("twist_number").is_none());
}

#[test]
fn empty_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "empty.pd", "\n");
    let out = twistlink(&["analyze", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty input"));
}

#[test]
fn malformed_token_reports_its_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "bad.pd", "X[4,2,5,1]\nX[8,6,1]\n");
    let out = twistlink(&["parse", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.pd:2:"));
}

#[test]
fn figure_eight_fully_augmented() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "4_1.pd", FIGURE_EIGHT);
    let out = twistlink(&["augment", &f, "--ntw", "2", "--i", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    // both regions have c = 2, so L_0 keeps no crossings; the checks run on L_B0
    assert_eq!(v["degenerate"], true);
    let items = v["structure"]["items"].as_array().unwrap();
    assert!(!items.is_empty());
    assert!(items.iter().all(|i| i["passed"] == true));
}

#[test]
fn threshold_above_every_region_is_degenerate() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "4_1.pd", FIGURE_EIGHT);
    let v = json(&twistlink(&["augment", &f, "--ntw", "91"]));
    assert_eq!(v["degenerate"], true);
}

#[test]
fn five_two_keeps_two_crossings() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "5_2.pd", FIVE_TWO);
    let out = twistlink(&["augment", &f, "--ntw", "3", "--i", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["degenerate"], false);
    assert_eq!(v["i"], 2);
}

#[test]
fn sphere_campaign_finds_nothing() {
    let out = twistlink(&["lemmas", "verify", "--lemma", "sphere", "--max-edges", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    assert!(v["instances_checked"].as_u64().unwrap() > 0);
}

#[test]
fn bigon_bound_needs_rtw() {
    let out = twistlink(&["lemmas", "verify", "--lemma", "bigon-bound", "--max-edges", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sphere_counts_match_unsensed_maps() {
    // unsensed planar maps by edges
    let known = [2, 4, 14, 52, 248];
    let out = twistlink(&[
        "lemmas",
        "enumerate",
        "--context",
        "sphere",
        "--max-edges",
        "5",
        "--count-only",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let counts: Vec<u64> = v["counts_by_edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap())
        .collect();
    assert_eq!(&counts[1..], &known);
}

#[test]
fn listing_agrees_with_counting() {
    let args = ["lemmas", "enumerate", "--context", "disk", "--max-edges", "4"];
    let listed = json(&twistlink(&args));
    let counted = json(&twistlink(&[&args[..], &["--count-only"]].concat()));
    assert_eq!(listed["counts_by_edges"], counted["counts_by_edges"]);
    assert_eq!(
        listed["graphs"].as_array().unwrap().len() as u64,
        counted["total"].as_u64().unwrap()
    );
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "5_2.pd", FIVE_TWO);
    let a = twistlink(&["augment", &f, "--ntw", "2"]);
    let b = twistlink(&["augment", &f, "--ntw", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let a = twistlink(&["lemmas", "enumerate", "--context", "torus", "--max-edges", "4"]);
    let b = twistlink(&["lemmas", "enumerate", "--context", "torus", "--max-edges", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn ledger_lines_append() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "4_1.pd", FIGURE_EIGHT);
    let ledger = dir.path().join("runs.ndjson");
    let ledger = ledger.to_str().unwrap();
    twistlink(&["analyze", &f, "--ledger", ledger]);
    twistlink(&[
        "lemmas",
        "verify",
        "--lemma",
        "torus",
        "--max-edges",
        "4",
        "--ledger",
        ledger,
    ]);
    let text = std::fs::read_to_string(ledger).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["command"], "analyze");
    assert_eq!(lines[1]["command"], "lemmas verify");
    assert_eq!(lines[0]["input_digest"].as_str().unwrap().len(), 64);
    assert!(lines[1]["runtime_ms"].is_u64());
}

#[test]
fn corpus_reports_each_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let line = |n: &str, pd: &str| serde_json::json!({ "name": n, "pd": pd }).to_string();
    let f = pd_file(
        dir.path(),
        "c.jsonl",
        &format!("{}\n{}\n", line("4_1", FIGURE_EIGHT), line("5_2", FIVE_TWO)),
    );
    let v = json(&twistlink(&["analyze", &f]));
    assert_eq!(v["count"], 2);
    assert_eq!(v["diagrams"][1]["name"], "5_2");
    assert_eq!(v["diagrams"][1]["twist_number"], 2);
}

#[test]
fn dot_export_names_the_graph() {
    let dir = tempfile::tempdir().unwrap();
    let f = pd_file(dir.path(), "4_1.pd", FIGURE_EIGHT);
    let out = twistlink(&["export-dot", &f]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("graph"));
}
