use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fused-specht")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

#[test]
fn fused_example() {
    let out = run(&["fused", "--filling", "1,2;2,3", "--content", "1,2,1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1/2 * x1 - 1/2 * x3");
    let (v, code) = json(&["eval", "--filling", "2,3;1,2;2,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["agree"], true);
    assert_eq!(v["results"]["polynomial"]["canonical"], "1/3 * x1^2 - 2/3 * x1 x3 + 1/3 * x3^2");
}

#[test]
fn enumerate_three_tableaux() {
    let (v, code) = json(&["enumerate", "--shape", "4,4", "--content", "2,2,2,2", "--class", "csyt"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "enumerate");
    assert_eq!(v["results"]["count"], 3);
    assert!(v["wall_time"].is_null());
}

#[test]
fn singular_levels() {
    for level in ["1", "4"] {
        let (v, code) = json(&["verify-singular", "--level", level]);
        assert_eq!(code, 0);
        assert_eq!(v["all_passed"], true);
        assert_eq!(v["results"]["L1_zero"], true);
        assert_eq!(v["results"]["L2_zero"], true);
    }
    let (v, _) = json(&["verify-singular", "--level", "4"]);
    assert_eq!(v["results"]["weight"], "9/4");
    assert_eq!(v["results"]["L0_eigenvalue"], "25/4");
}

#[test]
fn block_by_index_and_tableau() {
    let (v, code) = json(&["block", "--content", "2,2,2,2", "--index", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["tableau"], "1,1,2,2;3,3,4,4");
    let (w, _) = json(&["block", "--tableau", "1,1,2,2;3,3,4,4"]);
    assert_eq!(w["results"][0]["function"], v["results"][0]["function"]);
    assert_eq!(run(&["block", "--content", "2,2,2,2", "--index", "4"]).status.code(), Some(2));
}

#[test]
fn verifications_pass() {
    for args in [
        vec!["verify-bpz", "--content", "2,1,1", "--parallel"],
        vec!["verify-tl", "--n", "4", "--symmetrizer", "2,2", "--valences", "2,1,1"],
        vec!["verify-mobius", "--content", "1,1,1,1"],
        vec!["verify-mobius", "--content", "2,2", "--map", "translation:1/3", "--map", "0,-1,1,0"],
        vec!["hecke-dims", "--content", "2,1,1"],
    ] {
        let (v, code) = json(&args);
        assert_eq!((code, &v["all_passed"]), (0, &Value::Bool(true)), "{args:?}");
    }
}

#[test]
fn bpz_residual_dump() {
    let (v, _) = json(&["verify-bpz", "--content", "1,1,1,1", "--block", "1", "--point", "2", "--emit-residual"]);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["residual"], "0");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--shape", "2,x"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--shape", "2,2", "--content", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify-mobius", "--content", "1,1", "--map", "2,0,0,2"]).status.code(), Some(2));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = std::env::temp_dir();
    let a = dir.join(format!("fs-rerun-a-{}.json", std::process::id()));
    let b = dir.join(format!("fs-rerun-b-{}.json", std::process::id()));
    for p in [&a, &b] {
        let out = run(&["verify-bpz", "--content", "2,2", "--out", p.to_str().unwrap()]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn timing_is_opt_in() {
    let (v, _) = json(&["verify-singular", "--level", "2", "--timing"]);
    assert!(v["wall_time"].is_f64());
}

#[test]
fn failing_suite_exits_one() {
    let out = run(&["verify-all", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 10);
    assert!(text.lines().any(|l| l.starts_with("FAIL [ 5]")));
}
