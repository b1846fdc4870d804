use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn workdir(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twosided")).current_dir(dir).args(args).output().unwrap()
}

fn json_report(dir: &Path, args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(dir, &all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

#[test]
fn algebra_info_flags() {
    let dir = workdir("algebra_info");
    let (code, r) = json_report(&dir, &["algebra-info", "catalog:trunc_poly?k=3"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["loewy_length"], 3);
    assert_eq!(r["results"]["symmetric"], true);
    let (code, r) = json_report(&dir, &["algebra-info", "catalog:lambda?n=2&k=2"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["symmetric"], false);
    assert_eq!(r["results"]["self_injective"], true);
    assert_eq!(r["inputs"][0]["ref"], "catalog:lambda?k=2&n=2");
}

#[test]
fn input_errors_exit_with_four() {
    let dir = workdir("input_errors");
    std::fs::write(dir.join("empty.alg"), "").unwrap();
    let (code, r) = json_report(&dir, &["algebra-info", "empty.alg"]);
    assert_eq!(code, 4);
    assert_eq!(r["status"], "error");
    assert_eq!(r["error"]["kind"], "Parse");
    let (code, _) = json_report(&dir, &["algebra-info", "catalog:nonsense"]);
    assert_eq!(code, 4);
    assert_eq!(run(&dir, &["--field", "GF(4)", "algebra-info", "catalog:kronecker"]).status.code(), Some(4));
}

#[test]
fn kronecker_certificate_round_trip() {
    let dir = workdir("kronecker");
    let (code, r) = json_report(&dir, &["verify-jgeq", "catalog:kronecker_witness", "--cert", "k.json"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["tensor_dim"], 2);
    assert_eq!(r["results"]["complement_dim"], 0);
    assert_eq!(r["results"]["separable_quality"]["m_left_right_projective"], false);
    assert_eq!(run(&dir, &["verify-cert", "k.json"]).status.code(), Some(0));

    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("k.json")).unwrap()).unwrap();
    let entry = &mut cert["section"][0][0];
    *entry = Value::String(if entry == "0" { "1".into() } else { "0".into() });
    std::fs::write(dir.join("bad.json"), cert.to_string()).unwrap();
    let (code, r) = json_report(&dir, &["verify-cert", "bad.json"]);
    assert_eq!(code, 2);
    assert_eq!(r["results"]["rejected"].as_array().unwrap().len(), 1);

    let (code, _) = json_report(&dir, &["--field", "Q", "verify-jgeq", "catalog:kronecker_witness"]);
    assert_eq!(code, 0);
}

#[test]
fn reversed_witness_fails_with_a_decomposition() {
    let dir = workdir("reversed");
    let dump = run(&dir, &["catalog", "dump", "catalog:kronecker_witness"]);
    assert!(dump.status.success());
    let mut w: Value = serde_json::from_slice(&dump.stdout).unwrap();
    let m = w["m"].take();
    w["m"] = w["n"].take();
    w["n"] = m;
    std::fs::write(dir.join("rev.json"), w.to_string()).unwrap();
    let (code, r) = json_report(&dir, &["verify-jgeq", "rev.json", "--out", "rev-report.json"]);
    assert_eq!(code, 2);
    assert_eq!(r["status"], "fail");
    assert_eq!(r["certificates"][0]["kind"], "decomposition");
    assert_eq!(run(&dir, &["verify-cert", "rev-report.json"]).status.code(), Some(0));
}

#[test]
fn tensor_and_decompose_documents() {
    let dir = workdir("tensor");
    let dump = run(&dir, &["catalog", "dump", "catalog:kronecker_witness"]);
    let w: Value = serde_json::from_slice(&dump.stdout).unwrap();
    std::fs::write(dir.join("m.json"), w["m"].to_string()).unwrap();
    std::fs::write(dir.join("n.json"), w["n"].to_string()).unwrap();
    let (code, r) = json_report(&dir, &["tensor", "m.json", "n.json", "--emit", "t.json"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["tensor_dim"], 2);
    assert_eq!(r["inputs"].as_array().unwrap().len(), 4);
    let (code, r) = json_report(&dir, &["decompose", "t.json", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["summand_dims"], serde_json::json!([2]));
    let (code, r) = json_report(&dir, &["decompose", "m.json"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["indecomposable"], true);
}

#[test]
fn quiver_and_action_files() {
    let dir = workdir("files");
    let quiver = run(&dir, &["catalog", "dump", "catalog:zigzag"]);
    std::fs::write(dir.join("zigzag.alg"), &quiver.stdout).unwrap();
    std::fs::write(
        dir.join("swap.act"),
        "algebra zigzag.alg\nauto c: e1 -> e2\nauto c: e2 -> e1\nauto c: al -> be\nauto c: be -> al\n",
    )
    .unwrap();
    let (code, r) = json_report(&dir, &["algebra-info", "zigzag.alg"]);
    assert_eq!((code, &r["results"]["dim"], &r["field"]), (0, &Value::from(4), &Value::from("GF(101)")));
    let (code, r) = json_report(&dir, &["action-info", "swap.act"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["invariant_subalgebra"]["dim"], 2);
    assert_eq!(r["results"]["free_on_quiver"], true);
    let dumped = run(&dir, &["catalog", "dump", "catalog:zigzag_c2"]);
    assert!(String::from_utf8(dumped.stdout).unwrap().starts_with("algebra catalog:zigzag\n"));
}

#[test]
fn paper_suite_is_deterministic() {
    let dir = workdir("suite");
    let a = run(&dir, &["paper-suite", "--seed", "1", "--format", "json"]);
    let b = run(&dir, &["paper-suite", "--seed", "1", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    let cases = report["results"]["cases"].as_array().unwrap();
    assert!(cases.iter().all(|c| c["passed"] == true));
    std::fs::write(dir.join("suite.json"), &a.stdout).unwrap();
    assert_eq!(run(&dir, &["verify-cert", "suite.json"]).status.code(), Some(0));
}
