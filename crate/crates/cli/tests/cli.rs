use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intform")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

#[test]
fn expand_examples() {
    assert_eq!(stdout(&["expand", "--series", "hat", "--n", "2"]), "1/2*h1^2 - 1/2*h2");
    assert_eq!(stdout(&["expand", "--seq", "half_one2", "--n", "3"]), "0");
    assert_eq!(stdout(&["expand", "--series", "check", "--n", "1"]), "1/2*h1");
    let all = stdout(&["expand", "--series", "hat", "--n", "3", "--all"]);
    assert_eq!(all.lines().count(), 4);
    assert!(all.starts_with("h0_hat = 1"));
}

#[test]
fn member_examples() {
    assert!(stdout(&["member", "--form", "sym", "hbar(2)"]).starts_with("OUT"));
    assert_eq!(stdout(&["member", "--form", "mix", "hhatc(4)"]), "IN");
    assert!(stdout(&["member", "--form", "mix", "h(1)/2"]).starts_with("OUT"));
    assert_eq!(run(&["member", "--form", "mix", "h(1"]).status.code(), Some(2));
}

#[test]
fn lie_check_exit_codes() {
    assert!(run(&["lie-check", "--check", "jacobi22", "--window", "2"]).status.success());
    assert_eq!(run(&["lie-check", "--check", "lemmatauuno-printed"]).status.code(), Some(1));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = run(&["suite", "--names", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope"));
}

fn strip_ms(mut v: Value) -> Value {
    for r in v["records"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("ms");
    }
    v
}

#[test]
fn suite_report_is_stable_json() {
    let args = ["suite", "--names", "commutative,criteria,lie22", "--max-degree", "8", "--lie-window", "2"];
    let first: Value = serde_json::from_str(&stdout(&args)).unwrap();
    let records = first["records"].as_array().unwrap();
    assert!(!records.is_empty());
    for r in records {
        for key in ["check_id", "params", "verdict", "witness", "ms"] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
        assert_eq!(r["verdict"], "PASS");
    }
    assert_eq!(first["summary"]["fail"], 0);
    let second: Value = serde_json::from_str(&stdout(&args)).unwrap();
    assert_eq!(strip_ms(first), strip_ms(second));
}

#[test]
fn uea_verify_json() {
    let out = stdout(&["uea-verify", "--id", "NUOVEADD_3", "--n", "3", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_array() || v.is_object());
    assert!(
        run(&["uea-verify", "--id", "COMMUPLUS_1", "--params", "r=0,s=1", "--reading", "literal", "--n", "4"]).status.code() == Some(1)
    );
}
