use std::process::{Command, Output};

use serde_json::Value;

fn swd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swd")).args(args).output().expect("run swd")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn kl_polynomial_output() {
    let out = swd(&["kl", "--m", "4", "--x", "1,2,3,4", "--w", "3,4,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["poly"], serde_json::json!([1, 1]));
}

#[test]
fn malformed_input_exits_with_input_error() {
    let out = swd(&["kl", "--m", "3", "--x", "1,2", "--w", "3,2,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["status"], "error");
    assert_eq!(swd(&["verify-dims", "--n", "2", "--lambda", "-3,3"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-all", "--n", "2", "--lambda", "0,0"];
    let a = swd(&args);
    let b = swd(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn nested_verify_matches_flat_form() {
    let flat = swd(&["verify-mult-equal", "--n", "2", "--lambda", "0,0"]);
    let nested = swd(&["verify", "mult-equal", "--n", "2", "--lambda", "0,0"]);
    assert_eq!(nested.status.code(), Some(0));
    let (mut a, mut b) = (json(&flat), json(&nested));
    a.as_object_mut().unwrap().remove("command");
    b.as_object_mut().unwrap().remove("command");
    assert_eq!(a, b);
    assert_eq!(a["passed"], true);
}

#[test]
fn verify_suites_pass_on_sl3_singular_block() {
    for cmd in ["verify-dims", "verify-as", "verify-main"] {
        let out = swd(&["--certify", cmd, "--n", "3", "--lambda", "(0,1,1)"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn json_out_writes_file() {
    let path = std::env::temp_dir().join(format!("swd-cosets-{}.json", std::process::id()));
    let out = swd(&["--json-out", path.to_str().unwrap(), "cosets", "--n", "3", "--eta", "1", "--lambda", "0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["command"], "cosets");
    assert!(v["cosets"].as_array().is_some_and(|c| !c.is_empty()));
}
