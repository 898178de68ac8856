mod common;

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;
use truecomm::abelian::FiniteAbelian;
use truecomm::cli;
use truecomm::cohomology::{second_cohomology, Cocycle2};
use truecomm::crossed::{CrossedModule, CrossedModuleDocument};

use common::*;

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_stdin(args, "")
}

fn run_with_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["truecomm"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::execute(argv, &mut input.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("truecomm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn report_shape() {
    let v = json(&["schur", "klein4"]);
    let obj = v.as_object().unwrap();
    let keys: Vec<&String> = obj.keys().collect();
    assert_eq!(keys, ["checks", "command", "inputs", "results", "timing_ms"]);
    assert_eq!(v["command"], "schur");
    assert_eq!(v["timing_ms"], 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["verdict"] == "pass"));
}

#[test]
fn output_is_pretty_with_trailing_newline() {
    let (_, out, _) = run(&["rootdata", "E6"]);
    assert!(out.ends_with("}\n"));
    assert!(out.contains("\n  \""));
}

#[test]
fn group_info() {
    let v = json(&["group", "info", "quaternion8"]);
    assert_eq!(v["results"]["order"], 8);
    let v = json(&["group", "info", r#"{"permutations": ["(0 1)", "(0 1 2)"], "points": 3}"#]);
    assert_eq!(v["results"]["order"], 6);
}

#[test]
fn group_from_stdin() {
    let g = catalog("cyclic 4");
    let doc = serde_json::json!({ "cayley": g.table_rows() }).to_string();
    let (code, out, _) = run_with_stdin(&["group", "info", "-"], &doc);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"]["order"], 4);
}

#[test]
fn group_from_file() {
    let path = scratch("s3.json");
    std::fs::write(&path, r#"{"catalog": "symmetric", "params": [3]}"#).unwrap();
    let v = json(&["schur", path.to_str().unwrap()]);
    assert_eq!(v["results"]["schur_multiplier"], serde_json::json!([]));
}

#[test]
fn h2_and_cocycle_classes() {
    let v = json(&["h2", "klein4", "--coefficients", "2"]);
    assert_eq!(v["results"]["invariants"], serde_json::json!([2, 2, 2]));

    let g = catalog("dihedral 4");
    let a = FiniteAbelian::cyclic(2);
    let h = second_cohomology(&g, &a).unwrap();
    let f = h.basis()[0].add(&Cocycle2::coboundary(&g, &a, &(0..8).map(|x| vec![(x % 2) as u64]).collect::<Vec<_>>()));
    let path = scratch("d4-cocycle.json");
    std::fs::write(&path, serde_json::to_string(&f.to_document()).unwrap()).unwrap();
    let (code, out, err) = run(&["h2", "--cocycle", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("\"class\""));
}

#[test]
fn restriction_defaults_to_derived_subgroup() {
    let v = json(&["restrict", "symmetric 3", "--coefficients", "3"]);
    assert_eq!(v["results"]["image_order"], 1);
}

#[test]
fn xmod_check_passes_and_fails() {
    let q8 = catalog("quaternion8");
    let good = CrossedModuleDocument::from_parts(&CrossedModule::identity(&q8), None);
    let path = scratch("good-xmod.json");
    std::fs::write(&path, serde_json::to_string(&good).unwrap()).unwrap();
    assert_eq!(run(&["xmod", "check", path.to_str().unwrap()]).0, 0);

    let mut bad = good.clone();
    for row in bad.action.iter_mut() {
        *row = (0..8).collect();
    }
    let path = scratch("bad-xmod.json");
    std::fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    let (code, out, _) = run(&["xmod", "check", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    let failing: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["verdict"] == "fail").collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|c| c.get("counterexample").is_some()));
}

#[test]
fn truecomm_and_stacky() {
    let v = json(&["truecomm", "alternating 5", "--p1", "2;3"]);
    assert_eq!(v["results"]["cover_order"], 120);
    let v = json(&["stacky", "symmetric 3"]);
    assert_eq!(v["results"]["pi0"], serde_json::json!([2]));
    let (code, _, _) = run(&["stacky", "symmetric 4"]);
    assert_eq!(code, 1);
}

#[test]
fn rootdata_kernels() {
    let v = json(&["rootdata", "A1", "--kernels", "2"]);
    assert_eq!(v["results"]["invariant_factors"], serde_json::json!([2]));
    let v = json(&["rootdata", "E8", "--kernels", "2;3"]);
    assert_eq!(v["results"]["invariant_factors"], serde_json::json!([]));
}

#[test]
fn artin_schreier_commands() {
    let v = json(&["as", "classify", "--p", "2", "--e", "2"]);
    assert_eq!(v["results"]["primitive"].as_array().unwrap().len(), 4);
    let v = json(&["as", "char", "--p", "3", "--e", "2", "--c", "t"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["verdict"] == "pass"));
    let v = json(&["as", "pdisc", "--p", "5"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["verdict"] == "pass"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["schur", "no such group"]).0, 2);
    assert_eq!(run(&["h2", "cyclic 2", "--coefficients", "0"]).0, 2);
    assert_eq!(run(&["as", "pdisc", "--p", "4"]).0, 2);
    assert_eq!(run(&["as", "char", "--p", "2", "--e", "2", "--c", "t^9+"]).0, 2);
    assert_eq!(run(&["xmod", "check", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["--max-order", "10", "schur", "symmetric 4"]).0, 2);
    let (code, _, err) = run(&["rootdata"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn text_format() {
    let (code, out, _) = run(&["--format", "text", "schur", "alternating 5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("command: schur\n"));
    assert!(out.lines().any(|l| l.trim_start().starts_with("pass ")));
}

#[test]
fn timing_flag() {
    let v = json(&["--timing", "rootdata", "A2"]);
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn binary_reads_stdin_and_sets_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_truecomm");
    let mut child = Command::new(bin)
        .args(["schur", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"catalog": "alternating 5"}"#)
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(v["results"]["schur_multiplier"], serde_json::json!([2]));

    let status = Command::new(bin).args(["rootdata", "Z9"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
    let status = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(status.status.code(), Some(0));
}
