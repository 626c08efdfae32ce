use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewratio"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn eval_examples() {
    assert_eq!(ok(&["eval", "--field", "rational", "2", "3", "1", "0"]), "3/4\n");
    assert_eq!(ok(&["eval", "--field", "quaternion", "i", "j", "k", "0"]), "1/2+1/2i-1/2j-1/2k\n");
    assert_eq!(ok(&["eval", "--field", "rational", "2", "2", "1", "0"]), "1\n");
    assert_eq!(ok(&["eval", "2", "3", "1", "2"]), "inf\n");
    assert_eq!(ok(&["eval", "--field", "gf:7", "2", "3", "1", "0"]), "6\n");
}

#[test]
fn eval_accepts_one_infinity() {
    // c_r(A,B;C,∞) = r(A,B;C) = (B−C)⁻¹(A−C) = 1/2
    assert_eq!(ok(&["eval", "2", "3", "1", "inf"]), "1/2\n");
    assert_eq!(code(&["eval", "inf", "3", "inf", "0"]), 3);
}

#[test]
fn eval_takes_negative_literals() {
    assert_eq!(ok(&["eval", "--field", "quaternion", "-k", "-i", "0", "1"]), "1/2+1/2i+1/2j+1/2k\n");
    assert_eq!(ok(&["eval", "-2", "-3", "-1", "0"]), "3/4\n");
}

#[test]
fn parse_and_precondition_errors() {
    assert_eq!(code(&["eval", "2", "x", "1", "0"]), 2);
    assert_eq!(code(&["eval", "--field", "gf:4", "1", "2", "3", "0"]), 2);
    assert_eq!(code(&["eval", "1", "1", "1", "0"]), 3);
    assert_eq!(code(&["verify", "--field", "gf:4"]), 2);
    assert_eq!(code(&["verify", "--samples", "0"]), 2);
}

#[test]
fn solve_examples() {
    assert_eq!(ok(&["solve", "--field", "rational", "3/4", "2", "3", "1"]), "0\n");
    assert_eq!(code(&["solve", "1", "2", "3", "1"]), 3);
    assert_eq!(code(&["solve", "0", "2", "3", "1"]), 3);
    // R = r(A,B;C) puts D at infinity
    assert_eq!(code(&["solve", "1/2", "2", "3", "1"]), 4);
}

#[test]
fn solve_then_eval_round_trips() {
    let cases = [
        ("rational", ["5/7", "-3", "1/2", "4"]),
        ("gf:101", ["17", "3", "50", "99"]),
        ("quaternion", ["1+i", "j", "2k", "1-i+j"]),
    ];
    for (field, [r, a, b, c]) in cases {
        let d = ok(&["solve", "--field", field, r, a, b, c]);
        let back = ok(&["eval", "--field", field, a, b, c, d.trim()]);
        assert_eq!(back.trim(), r, "{field}");
    }
}

#[test]
fn json_output() {
    let v: Value = serde_json::from_str(&ok(&["eval", "--format", "json", "2", "3", "1", "0"])).unwrap();
    assert_eq!(v["cross_ratio"], "3/4");
}

#[test]
fn construct_examples() {
    let base = ["--field", "rational", "--O", "0,0", "--I", "1,0", "--A", "2,0", "--B", "3,0", "--aux", "0,1"];
    let add = ok(&[&["construct", "add"][..], &base].concat());
    assert_eq!(add.lines().last(), Some("5,0"));
    assert!(add.contains("P1 = 2,1"));
    let mul = ok(&[&["construct", "mul"][..], &base].concat());
    assert_eq!(mul.lines().last(), Some("6,0"));
    assert!(mul.contains("P1 = 0,2"));
}

#[test]
fn construct_preconditions() {
    let on_line = ["construct", "add", "--O", "0,0", "--I", "1,0", "--A", "2,0", "--B", "3,0", "--aux", "7,0"];
    assert_eq!(code(&on_line), 3);
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("q.svg");
    let quaternion_svg = [
        "construct", "mul", "--field", "quaternion", "--O", "0,0", "--I", "1,0", "--A", "i,0", "--B", "j,0",
        "--aux", "0,1", "--svg", svg.to_str().unwrap(),
    ];
    assert_eq!(code(&quaternion_svg), 3);
    assert!(!svg.exists());
}

#[test]
fn quaternion_construction_multiplies_in_order() {
    let out = ok(&[
        "construct", "mul", "--field", "quaternion", "--O", "0,0", "--I", "1,0", "--A", "i,0", "--B", "j,0",
        "--aux", "0,1",
    ]);
    assert_eq!(out.lines().last(), Some("k,0"));
}

#[test]
fn construct_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("add.svg");
    ok(&[
        "construct", "add", "--O", "0,0", "--I", "1,0", "--A", "2,0", "--B", "3,0", "--aux", "0,1", "--svg",
        path.to_str().unwrap(),
    ]);
    let svg = std::fs::read_to_string(path).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("viewBox"));
    assert!(svg.matches("<path").count() >= 3);
    for label in ["O", "I", "A", "B", "B1", "P1", "C"] {
        assert!(svg.contains(&format!(">{label}</text>")), "{label}");
    }
    assert_eq!(svg.matches("<circle").count(), 7);
}

fn config_hash(text: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix("config hash "))
        .expect("hash line")
        .to_string()
}

#[test]
fn desargues_tally_and_hash() {
    let out = ok(&["desargues", "--field", "quaternion", "--count", "20"]);
    assert!(out.contains("\n20/20 pass\n"));
    let args = ["desargues", "--field", "rational", "--count", "1", "--seed", "7"];
    assert_eq!(config_hash(&ok(&args)), config_hash(&ok(&args)));
    let other = ok(&["desargues", "--field", "rational", "--count", "1", "--seed", "8"]);
    assert_ne!(config_hash(&ok(&args)), config_hash(&other));
}

#[test]
fn desargues_modes() {
    for mode in ["parallel", "concurrent", "alternating"] {
        let out = ok(&["desargues", "--field", "gf:101", "--count", "10", "--mode", mode]);
        assert!(out.contains("10/10 pass"), "{mode}");
    }
}

#[test]
fn desargues_tamper_is_detected() {
    for flag in ["--flip-C'", "--flip-c-prime"] {
        let out = run(&["desargues", "--count", "6", flag]);
        assert_eq!(out.status.code(), Some(1));
        assert!(stdout(&out).contains("0/6 pass"));
    }
}

fn verify_json(field: &str, seed: &str) -> (i32, Value) {
    let out = run(&["verify", "--field", field, "--seed", seed, "--samples", "20", "--format", "json"]);
    let v = serde_json::from_slice(&out.stdout).unwrap();
    (out.status.code().unwrap(), v)
}

fn failed_checks(report: &Value) -> BTreeSet<String> {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["skipped"] == false && c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn verify_report_schema() {
    let (_, report) = verify_json("quaternion", "42");
    assert_eq!(report["field"], "quaternion");
    assert_eq!(report["seed"], 42);
    assert_eq!(report["samples"], 20);
    assert_eq!(report["p6_form"]["chosen"], "statement");
    assert_eq!(report["mul_order"]["chosen"], "a*b");
    for check in report["checks"].as_array().unwrap() {
        for key in ["name", "samples_run", "skipped", "passed", "failures", "redraws"] {
            assert!(check.get(key).is_some(), "{key}");
        }
        let witnesses = check["witnesses"].as_array().unwrap();
        assert!(witnesses.len() <= 10);
        for w in witnesses {
            assert!(w["inputs"].is_array() && w["lhs"].is_string() && w["rhs"].is_string());
        }
    }
    let p8 = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "P8").unwrap();
    assert_eq!(p8["skipped"], true);
}

#[test]
fn verify_flags_the_false_statements() {
    // P2 and P13c are false as stated; P13d fails only on A = −B draws.
    for field in ["rational", "gf:101", "quaternion"] {
        let (status, report) = verify_json(field, "3");
        assert_eq!(status, 1, "{field}");
        let failed = failed_checks(&report);
        let expected: BTreeSet<String> = ["P2", "P13c"].map(String::from).into();
        let allowed: BTreeSet<String> = ["P2", "P13c", "P13d"].map(String::from).into();
        assert!(failed.is_superset(&expected) && failed.is_subset(&allowed), "{field}: {failed:?}");
    }
}

#[test]
fn verify_is_deterministic() {
    let strip = |mut v: Value| {
        v["timestamp"] = Value::Null;
        v
    };
    let (_, a) = verify_json("rational", "11");
    let (_, b) = verify_json("rational", "11");
    assert_eq!(strip(a), strip(b));
}

#[test]
fn verify_text_summary() {
    let out = run(&["verify", "--field", "gf:5", "--samples", "5"]);
    let text = stdout(&out);
    assert!(text.starts_with("field gf:5 seed 42 samples 5"));
    assert!(text.contains("exhaustive"));
    assert!(text.lines().any(|l| l.starts_with("FAIL P2 ")));
    assert!(text.lines().any(|l| l.starts_with("skip P9 ")));
}

#[test]
fn out_flag_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.txt");
    let out = run(&["eval", "--out", path.to_str().unwrap(), "2", "3", "1", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "3/4\n");
    let missing = dir.path().join("no/such/dir/r.txt");
    assert_eq!(code(&["eval", "--out", missing.to_str().unwrap(), "2", "3", "1", "0"]), 5);
}
