use std::process::{Command, Output};

use serde_json::Value;

fn fibluc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibluc")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = fibluc(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_fibonacci_and_chebyshev() {
    let v = json(&["gen", "--family", "fibonacci", "--deg", "4"]);
    assert_eq!(v["polys"][0]["poly"], "x^4 + 3*x^2 + 1");
    assert_eq!(v["polys"][0]["label"], "F_5");
    let out = fibluc(&["gen", "--family", "chebyshev-t", "--deg", "3"]);
    assert!(stdout(&out).contains("T_3(x) = 4*x^3 - 3*x"));
    let v = json(&["gen", "--kind", "psi", "--a", "3", "--b", "-2", "--deg", "5", "--all"]);
    assert_eq!(v["polys"].as_array().unwrap().len(), 6);
}

#[test]
fn hyp_evaluates_exactly() {
    let out = fibluc(&["hyp", "--m", "2", "--a2", "-2", "--b1", "-4", "--z", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1/6");
}

#[test]
fn connect_schema_and_verification() {
    let v = json(&["connect", "--from", "phi:1,1", "--to", "psi:1,1", "--deg", "6", "--verify"]);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["verified"], true);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    assert_eq!(terms[3]["m"], 3);
    assert_eq!(terms[3]["coeff"], "-1/2");
    let v = json(&["connect", "--from", "psi:2,-1", "--to", "phi:1/2,3", "--deg", "9", "--verify"]);
    assert_eq!(v["verified"], true);
}

#[test]
fn invert_round_trips() {
    let v = json(&["invert", "--to", "phi:2,1", "--deg", "7", "--verify"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["source"], "x^i");
}

#[test]
fn numbers_suite_and_cross() {
    let v = json(&["numbers", "--suite", "--imax", "40", "--cross", "P", "Q", "--i", "9"]);
    assert_eq!(v["suite"]["fail"], 0);
    assert_eq!(v["cross"]["pass"], true);
    let out = fibluc(&["numbers", "--values", "lucas", "--count", "6"]);
    assert!(stdout(&out).contains("2, 1, 3, 4, 7, 11"));
    assert_eq!(fibluc(&["numbers"]).status.code(), Some(2));
}

#[test]
fn integral_with_quadrature() {
    let v = json(&["integral", "--which", "phiT", "--a", "1", "--b", "1", "--i", "6", "--j", "2", "--quad-check"]);
    assert_eq!(v["pi_coeff"], "191/64");
    assert!(v["quad_residual"].as_f64().unwrap().abs() < 1e-10);
    let v = json(&["integral", "--which", "psiU", "--a", "2", "--b", "1", "--i", "3", "--j", "2"]);
    assert_eq!(v["pi_coeff"], "0");
    assert!(v["quad_residual"].is_null());
}

#[test]
fn radical_modes() {
    let v = json(&["radical", "--mode", "odd", "--a", "3", "--b", "-2", "--x", "4", "--k", "5"]);
    assert_eq!(v["sum"]["exact"], "12");
    assert_eq!(v["verified"], true);
    let v = json(&["radical", "--mode", "even", "--a", "2", "--b", "-1", "--x", "7", "--k", "8", "--precision", "10"]);
    assert_eq!(v["sum"]["exact"], "14");
    assert_eq!(v["sum"]["decimal"], "14.0000000000");
    let v = json(&["radical", "--mode", "composed-odd", "--a", "3", "--b", "-2", "--x", "-1/3", "--k", "5"]);
    assert_eq!(v["value"], "-1/3");
    assert_eq!(v["t"], "-19/9");
    let v = json(&["radical", "--mode", "composed-even", "--a", "1", "--b", "-1", "--x", "110", "--k", "6"]);
    assert_eq!(v["value"], "110");
}

#[test]
fn denest_reports_witness() {
    let v = json(&["denest", "--k", "3", "--u", "7", "--v", "5", "--d", "2"]);
    assert_eq!(v["status"], "denested");
    assert_eq!(v["value"]["p"], "1");
    assert_eq!(v["value"]["q"], "1");
    assert_eq!(v["value"]["d"], "2");
    assert_eq!(v["witness"]["branch"], "plus");
    let v = json(&["denest", "--k", "3", "--u", "1", "--v", "1", "--d", "7919"]);
    assert_eq!(v["status"], "not_recognized");
    assert!(v["witness"].is_null());
}

#[test]
fn verify_all_exit_codes_and_determinism() {
    let a = fibluc(&["--json", "verify-all", "--imax", "3", "--seed", "5"]);
    let b = fibluc(&["--json", "verify-all", "--imax", "3", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 5);
    assert_eq!(v["summary"]["fail"], 0);
    let bad = fibluc(&["verify-all", "--imax", "3", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL connect"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fibluc(&["hyp", "--m", "x", "--a2", "1", "--b1", "1", "--z", "1"]).status.code(), Some(2));
    assert_eq!(fibluc(&["verify-all", "--imax", "1"]).status.code(), Some(2));
    assert_eq!(fibluc(&["radical", "--mode", "even", "--a", "1", "--b", "1", "--x", "2", "--k", "3"]).status.code(), Some(2));
    assert_eq!(fibluc(&["denest", "--k", "2", "--u", "-3", "--v", "1", "--d", "2"]).status.code(), Some(2));
    assert_eq!(fibluc(&["connect", "--from", "phi:0,1", "--to", "psi:1,1", "--deg", "2"]).status.code(), Some(2));
    assert_eq!(fibluc(&["bogus"]).status.code(), Some(2));
}
