use std::process::Command;

use serde_json::{json, Value};

const PHI: &str = "1/2+1/2*sqrt(5)";
const PHI2: &str = "3/2+1/2*sqrt(5)";

fn beatty(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_beatty"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn beatty_json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = beatty(args);
    let v = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {stdout:?}, stderr {stderr:?}"));
    (code, v)
}

#[test]
fn eventual_partition_with_exception() {
    let (code, v) = beatty_json(&[
        "check-eventual", "--a1", PHI, "--b1", "0", "--a2", PHI2, "--b2", "0",
        "--window", "-10000", "10000",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "EventualPartitionWithException");
    assert_eq!(v["n0"], "0");
    assert_eq!(v["repeated"], json!(["0"]));
    assert_eq!(v["missing"], json!(["-1"]));
}

#[test]
fn eventual_failure_exits_one() {
    let (code, v) = beatty_json(&[
        "check-eventual", "--a1", PHI, "--b1", "1/3", "--a2", PHI2, "--b2", "0",
        "--window", "-100", "100",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["kind"], "NotEventualPartition");
    assert!(!v["repeated"].as_array().unwrap().is_empty());
}

#[test]
fn window_is_mandatory() {
    let (code, _, stderr) = beatty(&[
        "check-eventual", "--a1", PHI, "--b1", "0", "--a2", PHI2, "--b2", "0",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--window"));
}

#[test]
fn coprime_rational() {
    let (code, v) = beatty_json(&["coprime", "--a1", "3/2", "--a2", "5/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["coprime"], true);
    let (code, v) = beatty_json(&["coprime", "--a1", "4", "--a2", "6"]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"], json!([1, 1]));
}

#[test]
fn coprime_irrational() {
    let (code, v) = beatty_json(&["coprime", "--a1", "1*sqrt(2)", "--a2", "2*sqrt(2)"]);
    assert_eq!((code, v["method"].as_str()), (0, Some("gamma")));
    let (code, _) = beatty_json(&["coprime", "--a1", "1*sqrt(7)", "--a2", "3*sqrt(7)"]);
    assert_eq!(code, 1);
    let (code, v) = beatty_json(&["coprime", "--a1", "1+1*sqrt(5)", "--a2", "3+1*sqrt(5)"]);
    assert_eq!((code, v["mn"].clone()), (1, json!([2, 2])));
}

#[test]
fn gen_rational() {
    let (code, v) = beatty_json(&["gen", "--alpha", "5/2", "--beta", "0", "--from", "0", "--to", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!([0, 2, 5, 7, 10]));
    let (_, v) = beatty_json(&["gen", "--alpha", PHI, "--beta", "0", "--from", "-2", "--to", "2"]);
    assert_eq!(v, json!([-4, -2, 0, 1, 3]));
}

#[test]
fn decimals_are_rejected() {
    let (code, _, stderr) = beatty(&["gen", "--alpha", "0.5", "--beta", "0", "--from", "0", "--to", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("decimal"));
    let (code, _, _) = beatty(&["gen", "--alpha", "1*sqrt(4)", "--beta", "0", "--from", "0", "--to", "4"]);
    assert_eq!(code, 2);
}

#[test]
fn member() {
    let (code, v) = beatty_json(&["member", "--alpha", "5/2", "--beta", "0", "--k", "-5"]);
    assert_eq!(code, 0);
    assert_eq!(v["index"], -2);
    let (code, v) = beatty_json(&["member", "--alpha", "5/2", "--beta", "0", "--k", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["member"], false);
}

#[test]
fn check_partition() {
    let (code, v) = beatty_json(&["check-partition", "--a1", "5/2", "--b1", "0", "--a2", "5/3", "--b2", "7/5"]);
    assert_eq!((code, v["criterion"].as_str()), (0, Some("fraenkel")));
    let (code, _) = beatty_json(&["check-partition", "--a1", "5/2", "--b1", "0", "--a2", "5/3", "--b2", "0"]);
    assert_eq!(code, 1);
    let (code, v) = beatty_json(&["check-partition", "--a1", PHI, "--b1", "0", "--a2", PHI2, "--b2", "0"]);
    assert_eq!(code, 1);
    assert_eq!(v["kind"], "EventualPartitionWithException");
    let (code, _, _) = beatty(&["check-partition", "--a1", "5/2", "--b1", "0", "--a2", "2", "--b2", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn check_disjoint() {
    let (code, v) = beatty_json(&[
        "check-disjoint", "--a1", "4", "--b1", "0", "--a2", "6", "--b2", "1", "--window", "-1000", "1000",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["common"], json!([]));
    let (code, v) = beatty_json(&[
        "check-disjoint", "--a1", PHI, "--b1", "0", "--a2", PHI2, "--b2", "1", "--window", "-1000", "1000",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["finding"]["kind"], "Neither");
}

#[test]
fn witness() {
    let (code, v) = beatty_json(&["witness", "--gamma", "1*sqrt(5)", "--r", "1", "--s", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["witness"]["beta2"], json!({"a": "0", "b": "1/2", "d": 5}));
    let (code, v) = beatty_json(&["witness", "--gamma", "1*sqrt(2)", "--r", "1", "--s", "2"]);
    assert_eq!((code, v["kind"].as_str()), (1, Some("NoWitness")));
}

#[test]
fn verify_window() {
    let (code, v) = beatty_json(&[
        "verify-window", "--seq", &format!("{PHI}:0"), "--seq", &format!("{PHI2}:0"), "--window", "1", "1000",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["missing"], json!([]));
    let (code, v) = beatty_json(&[
        "verify-window", "--seq", &format!("{PHI}:0"), "--seq", &format!("{PHI2}:0"), "--window", "-5", "5",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["repeated"], json!([["0", 2]]));
}

#[test]
fn simulate_two_and_multi_agree() {
    let (code, two, _) = beatty(&[
        "simulate", "--a1", PHI, "--b1", "0", "--a2", PHI2, "--b2", "0", "--from", "-30", "--to", "30",
    ]);
    assert_eq!(code, 0);
    let (_, multi, _) = beatty(&[
        "simulate", "--athlete", &format!("{PHI}:0"), "--athlete", &format!("{PHI2}:0"),
        "--from", "-30", "--to", "30",
    ]);
    let parse = |s: &str| -> Vec<(Value, i64)> {
        s.lines()
            .map(|l| {
                let v: Value = serde_json::from_str(l).unwrap();
                (v["t"].clone(), v["recorded"].as_i64().unwrap())
            })
            .collect()
    };
    assert_eq!(parse(&two), parse(&multi));
    assert!(two.lines().next().unwrap().contains("\"athlete\":\"X\""));
    assert!(multi.lines().next().unwrap().contains("\"athlete\":\"X1\""));
}

#[test]
fn simulate_occupancy_csv() {
    let (code, out, _) = beatty(&[
        "simulate", "--a1", PHI, "--b1", "0", "--a2", PHI2, "--b2", "0", "--from", "-1", "--to", "1", "--occupancy",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "k,in_a,in_b\n-1,false,false\n0,true,true\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["simulate", "--athlete", "5/2:1/2", "--athlete", "7/3:0", "--from", "0", "--to", "50"];
    assert_eq!(beatty(&args).1, beatty(&args).1);
}
