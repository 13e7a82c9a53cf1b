use std::process::Command;

use coxeter_lab::cli::{run, Outcome};
use serde_json::Value;

fn lab(args: &[&str]) -> Outcome {
    run(std::iter::once("coxeter-lab").chain(args.iter().copied()), None)
}

fn json(args: &[&str]) -> Value {
    let mut argv = args.to_vec();
    argv.push("--json");
    let out = lab(&argv);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON")
}

fn all_checks_pass(v: &Value) -> bool {
    v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass")
}

#[test]
fn charpoly_of_a3() {
    let v = json(&["charpoly", "A3"]);
    assert_eq!(v["command"], "charpoly");
    assert_eq!(v["results"]["coefficients"], serde_json::json!([-1, -1, -1, -1]));
    assert!(all_checks_pass(&v));
}

#[test]
fn every_method_gives_the_same_polynomial() {
    let direct = json(&["charpoly", "E10"])["results"]["coefficients"].clone();
    for m in ["split", "recursive", "family"] {
        assert_eq!(json(&["charpoly", "E10", "--method", m])["results"]["coefficients"], direct, "{m}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lab(&["analyze", "nosuchdiagram"]).code, 2);
    assert_eq!(lab(&["charpoly", "A3", "--method", "guess"]).code, 2);
    assert_eq!(lab(&["mckay", "nosuchgroup"]).code, 2);
    assert_eq!(lab(&["verify", "nosuchsuite"]).code, 2);
    assert_eq!(lab(&["frobnicate"]).code, 2);
    assert_eq!(run(["coxeter-lab", "catalog"], Some("128")).code, 2);
    assert_eq!(run(["coxeter-lab", "catalog"], Some("64")).code, 0);
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [&["analyze", "~E6"][..], &["mckay", "t"], &["poincare", "o"]] {
        let mut argv = args.to_vec();
        argv.push("--json");
        let out = lab(&argv);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let again = format!("{}\n", coxeter_lab::json::to_canonical_string(&v));
        assert_eq!(again, out.stdout, "{args:?}");
    }
}

#[test]
fn analyze_reports_kinds() {
    let v = json(&["analyze", "E8"]);
    assert_eq!(v["results"]["kind"], "finite");
    assert_eq!(v["results"]["coxeter_number"], 30);
    assert!(all_checks_pass(&v));
    let v = json(&["analyze", "~D4"]);
    assert_eq!(v["results"]["kind"], "affine");
    assert!(all_checks_pass(&v));
    let v = json(&["analyze", "kolmykov(4)"]);
    assert_eq!(v["results"]["ker_b_dim"], 3);
}

#[test]
fn group_commands_succeed() {
    for args in [
        &["catalog"][..],
        &["roots", "E6"],
        &["mckay", "t"],
        &["slodowy", "t-o"],
        &["poincare", "t"],
        &["poincare", "t-o", "--kind", "induced"],
    ] {
        let v = json(args);
        assert!(all_checks_pass(&v), "{args:?}: {v}");
    }
}

#[test]
fn verify_folding_passes() {
    let v = json(&["verify", "folding"]);
    assert_eq!(v["checks"].as_array().unwrap().len(), 12);
    assert!(all_checks_pass(&v));
}

#[test]
fn seed_does_not_change_results() {
    let a = json(&["mckay", "o", "--seed", "1"]);
    let b = json(&["mckay", "o", "--seed", "2"]);
    assert_eq!(a["results"], b["results"]);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_coxeter-lab");
    let ok = Command::new(bin).args(["charpoly", "A2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS"));
    let bad = Command::new(bin).args(["analyze", "Q9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    let env = Command::new(bin)
        .arg("catalog")
        .env("COXETER_LAB_PRECISION", "256")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
}
