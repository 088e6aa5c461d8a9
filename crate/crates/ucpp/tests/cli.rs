use std::process::Command;

use serde_json::Value;
use ucpp::cli::run;
use ucpp::json::mpoly_from_json;
use ucpp::suites::Config;
use ucpp_core::exactalg::Var;
use ucpp_core::genfun::macmahon_box;
use ucpp_core::{BoxDims, MPoly};

fn ucpp(args: &[&str]) -> ucpp::cli::Outcome {
    let mut full = vec!["ucpp"];
    full.extend_from_slice(args);
    run(full, &Config::default())
}

#[test]
fn boxgf_example() {
    let out = ucpp(&["boxgf", "--n", "1", "--l", "1", "--m", "1"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "1 + q");
    let out = ucpp(&["boxgf", "--n", "2", "--l", "2", "--m", "2", "--check"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("PASS macmahon B(2,2,2)"));
}

#[test]
fn scalar_example() {
    let out = ucpp(&["scalar", "--n1", "1", "--n2", "1", "--m1", "1", "--m2", "1", "--route", "all"]);
    assert_eq!(out.code, 0);
    let first = out.stdout.lines().next().unwrap();
    assert_eq!(first, "1 + x1*z1 + y1*v1 + x1*y1*z1*v1");
    for route in ["op", "pp", "schur"] {
        let r = ucpp(&["scalar", "--n1", "2", "--n2", "1", "--m1", "2", "--m2", "1", "--route", route]);
        assert_eq!(r.code, 0);
        assert_eq!(r.stdout, ucpp(&["scalar", "--n1", "2", "--n2", "1", "--m1", "2", "--m2", "1", "--route", "op"]).stdout);
    }
}

#[test]
fn schur_command() {
    let out = ucpp(&["schur", "--mu", "2,1", "--vars", "2"]);
    assert_eq!(out.stdout.trim(), "x1^2*x2 + x1*x2^2");
    let skew = ucpp(&["schur", "--mu", "2,1", "--vars", "2", "--skew", "1"]);
    assert_eq!(skew.code, 0);
    assert_eq!(skew.stdout.trim(), "x1^2 + 2*x1*x2 + x2^2");
    assert_eq!(ucpp(&["schur", "--mu", "", "--vars", "1"]).stdout.trim(), "1");
}

fn corrupted(b: BoxDims) -> MPoly {
    &macmahon_box(b) + &MPoly::var_pow(Var::plain('q'), 2 * (b.n * b.l) as i32 * b.m as i32 + 2)
}

#[test]
fn corrupted_formula_fails_verification() {
    let cfg = Config { macmahon: corrupted, ..Config::default() };
    let out = run(["ucpp", "verify", "--suite", "macmahon"], &cfg);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL macmahon B(0,0,0): coefficient of q is 1 vs 0"), "{}", out.stdout);
    let json = run(["ucpp", "verify", "--suite", "macmahon", "--format", "json"], &cfg);
    assert_eq!(json.code, 1);
    let v: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["suites"][0]["reports"][0]["discrepancy"]["monomial"].is_object());
    let boxed = run(["ucpp", "boxgf", "--n", "1", "--l", "1", "--m", "1", "--check"], &cfg);
    assert_eq!(boxed.code, 1);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ucpp(&["boxgf", "--n", "1", "--l", "1"]).code, 2);
    assert_eq!(ucpp(&["boxgf", "--n", "1", "--l", "1", "--m", "1", "--bogus"]).code, 2);
    assert_eq!(ucpp(&["boxgf", "--n", "5", "--l", "5", "--m", "5", "--check"]).code, 2);
    assert_eq!(ucpp(&["scalar", "--n1", "0", "--n2", "1", "--m1", "1", "--m2", "1"]).code, 2);
    assert_eq!(ucpp(&["schur", "--mu", "1,2", "--vars", "2"]).code, 2);
    assert_eq!(ucpp(&["schur", "--mu", "a", "--vars", "2"]).code, 2);
    assert_eq!(ucpp(&["verify", "--suite", "nope"]).code, 2);
    assert_eq!(ucpp(&["--format", "xml", "boxgf", "--n", "1", "--l", "1", "--m", "1"]).code, 2);
    assert_eq!(ucpp(&["--help"]).code, 0);
}

#[test]
fn json_and_text_agree() {
    let text = ucpp(&["boxgf", "--n", "2", "--l", "3", "--m", "2"]);
    let json = ucpp(&["boxgf", "--n", "2", "--l", "3", "--m", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(mpoly_from_json(&v["polynomial"]).unwrap().to_string(), text.stdout.trim());
    assert!(v["report"].is_null());

    let text = ucpp(&["schur", "--mu", "3,1", "--vars", "3", "--format", "text"]);
    let json = ucpp(&["schur", "--mu", "3,1", "--vars", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(mpoly_from_json(&v).unwrap().to_string(), text.stdout.trim());

    let json = ucpp(&["ucgf", "--max-deg", "3", "--check", "--format", "json"]);
    assert_eq!(json.code, 0);
    let v: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["series"]["bound"], 3);
    assert_eq!(v["report"]["equal"], true);
    assert!(v["report"]["discrepancy"].is_null());
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "rtt-diagnostic", "--format", "json"];
    let a = ucpp(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, ucpp(&args).stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["suites"][0]["suite"], "rtt-diagnostic");
    assert!(v["suites"][0]["diagnostic"]["nonzero_entries"].is_array());
}

#[test]
fn several_suites_report_in_order() {
    let out = ucpp(&["verify", "--suite", "vertex", "--max-deg", "4"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "[vertex] PASS specialized vertex N=1 D=4");
    assert_eq!(lines[1], "[vertex] PASS specialized vertex N=2 D=4");
    assert_eq!(lines[2], "2 checks, 0 failed");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ucpp");
    let ok = Command::new(bin).args(["boxgf", "--n", "1", "--l", "1", "--m", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "1 + q");
    let usage = Command::new(bin).args(["boxgf"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let check = Command::new(bin).args(["verify", "--suite", "uc-limit", "--max-deg", "5"]).output().unwrap();
    assert_eq!(check.status.code(), Some(0));
}
