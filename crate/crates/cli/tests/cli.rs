use std::fs;
use std::process::{Command, Output};

fn disclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_disclab"))
        .args(args)
        .env_remove("DISCLAB_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn discriminant_of_quadratic() {
    let out = disclab(&["discriminant", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["vars"], serde_json::json!(["a1", "a2"]));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms.contains(&serde_json::json!({"coeff": "4", "exps": {"a2": 1}})));
    assert!(terms.contains(&serde_json::json!({"coeff": "-1", "exps": {"a1": 2}})));
}

#[test]
fn resultant_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    let g = dir.path().join("g.json");
    let out = dir.path().join("r.json");
    fs::write(&f, r#"{"vars":["x"],"terms":[{"coeff":"1","exps":{"x":2}},{"coeff":"-1","exps":{}}]}"#).unwrap();
    fs::write(&g, r#"{"vars":["x"],"terms":[{"coeff":"1","exps":{"x":1}},{"coeff":"-1","exps":{}}]}"#).unwrap();
    let o = disclab(&[
        "resultant",
        "--f",
        f.to_str().unwrap(),
        "--g",
        g.to_str().unwrap(),
        "--var",
        "x",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["terms"], serde_json::json!([]));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    fs::write(&f, r#"{"vars":["x"],"terms":[{"coeff":"0","exps":{"x":1}}]}"#).unwrap();
    let o = disclab(&["resultant", "--f", f.to_str().unwrap(), "--g", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passing_run_exits_zero() {
    let o = disclab(&["verify", "--n", "3", "--check", "lemma1", "--seed", "42", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["seed"], 42);
    assert!(v.get("timings").is_none());
}

#[test]
fn verify_text_format() {
    let o = disclab(&["verify", "--n", "3", "--check", "lemma2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS lemma2.det_jk n=3 k=1"));
    assert!(text.trim_end().ends_with("0 fail, 0 inconclusive"));
}

#[test]
fn failing_claim_exits_one() {
    let o = disclab(&["verify", "--n", "4", "--check", "statements"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(disclab(&["verify", "--n", "2", "--check", "lemma1"]).status.code(), Some(2));
    assert_eq!(disclab(&["verify", "--check", "bogus"]).status.code(), Some(2));
    assert_eq!(disclab(&["verify", "--n", "5..3"]).status.code(), Some(2));
    assert_eq!(disclab(&["vk", "--n", "3", "--k", "4"]).status.code(), Some(2));
    assert_eq!(disclab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn max_n_comes_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_disclab"))
        .args(["discriminant", "--n", "4"])
        .env("DISCLAB_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(disclab(&["discriminant", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn vk_and_dtilde_emit_polynomials() {
    for args in [["vk", "--n", "3", "--k", "1"], ["dtilde", "--n", "3", "--k", "2"]] {
        let o = disclab(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(!v["terms"].as_array().unwrap().is_empty());
    }
}

#[test]
fn verify_writes_out_file_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = disclab(&["verify", "--n", "4", "--check", "remark1,sigma", "--samples", "20", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}
