use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpspec")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn spectrum_with_oracle() {
    let (code, v) = json(&["spectrum", "-p", "2", "-m", "4", "-k", "3", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["spectrum"]["entries"], serde_json::json!([["5", "1"], ["1", "10"], ["-3", "5"]]));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "oracle agrees" && c["pass"] == true));
}

#[test]
fn four_eigenvalue_spectrum() {
    let out = run(&["spectrum", "-p", "7", "-m", "3", "-k", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{[114]^1, [9]^114, [2]^114, [-12]^114}"), "{text}");
    assert!(text.contains("closed form (k = 3)"));
}

#[test]
fn disconnected_graph_fails_its_check() {
    let out = run(&["spectrum", "-p", "2", "-m", "2", "-k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL connected: n = (q-1)/3 is not a primitive divisor of q-1; k = 2^1 + 1"));
}

#[test]
fn directed_graph_is_an_error() {
    let out = run(&["spectrum", "-p", "7", "-m", "1", "-k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("directed"));
}

#[test]
fn code_paths_agree_and_note_the_published_weight() {
    let (code, v) = json(&["code", "-p", "3", "-m", "5", "-k", "11", "--enumerate", "--bridge"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["enumerated"], v["results"]["bridged"]);
    assert_eq!(v["results"]["enumerated"]["entries"], serde_json::json!([["0", "1"], ["12", "132"], ["18", "110"]]));
    assert!(v["notes"][0].as_str().unwrap().contains("w1 = 22"));
}

#[test]
fn large_code_by_bridge() {
    let (code, v) = json(&["code", "-p", "5", "-m", "9", "-k", "19", "--bridge"]);
    assert_eq!(code, 0);
    let weights: Vec<&str> =
        v["results"]["bridged"]["entries"].as_array().unwrap().iter().map(|e| e[0].as_str().unwrap()).collect();
    assert_eq!(weights, ["0", "82000", "82500"]);
}

#[test]
fn bridge_refused_when_n_differs_from_k() {
    let (code, v) = json(&["code", "-p", "5", "-m", "2", "-k", "8", "--enumerate"]);
    assert_eq!(code, 0);
    assert!(v["results"].get("bridged").is_none());
    assert!(v["notes"][0].as_str().unwrap().contains("N = 2"));
    assert_eq!(run(&["code", "-p", "5", "-m", "2", "-k", "8", "--bridge"]).status.code(), Some(2));
}

#[test]
fn verify_table2_and_exceptional() {
    let out = run(&["verify", "table2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("table2: 20/20 PASS"));
    let out = run(&["verify", "exceptional"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("w1: printed 22, computed 12"), "{text}");
}

#[test]
fn verify_small_bridge() {
    let out = run(&["verify", "bridge", "--max-q", "512"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(run(&["verify", "nonsense"]).status.code() == Some(2));
}

#[test]
fn sweep_smallest_range() {
    let (code, v) = json(&["sweep", "--p-max", "3", "--m-max", "2"]);
    assert_eq!(code, 0);
    let pairs = v["results"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 1);
    assert_eq!((pairs[0]["p"].as_u64(), pairs[0]["k"].as_u64()), (Some(3), Some(2)));
}

#[test]
fn sweep_reports_table_differences() {
    let (code, v) = json(&["sweep", "--p-max", "7", "--m-max", "8", "--semiprimitive"]);
    assert_eq!(code, 0);
    let notes: Vec<&str> = v["notes"].as_array().unwrap().iter().map(|n| n.as_str().unwrap()).collect();
    assert_eq!(notes.len(), 4);
    assert!(notes.iter().any(|n| n.starts_with("7^6")));
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["--format", "json", "spectrum", "-p", "3", "-m", "4", "-k", "5", "--complement", "--invariants"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn oracle_cap_is_an_explicit_error() {
    let out = run(&["--max-q-oracle", "64", "spectrum", "-p", "3", "-m", "4", "-k", "2", "--oracle"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the cap"));
}

#[test]
fn exceptional_dump() {
    let (code, v) = json(&["exceptional"]);
    assert_eq!(code, 0);
    let records = v["results"]["records"].as_array().unwrap();
    assert_eq!(records.len(), 11);
    assert_eq!(records[5]["w1"], "565471425614439939283497632625940854016");
}
