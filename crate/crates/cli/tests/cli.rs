use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn fid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fid"))
        .args(args)
        .env_remove("FID_MAX_HORIZON")
        .output()
        .unwrap()
}

fn fid_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let out = fid(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn dims(v: &Value) -> Vec<String> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dim"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn dim_examples() {
    let v = json_ok(&["dim", "--d", "2", "--gen", "M(0)", "--range", "0..4"]);
    assert_eq!(dims(&v), ["1", "2", "4", "8", "16"]);
    let v = json_ok(&["dim", "--d", "1", "--gen", "[1]", "--range", "1..3"]);
    assert_eq!(dims(&v), ["1", "2", "3"]);
    let v = json_ok(&["dim", "--d", "3", "--gen", "M(1)", "--range", "0..1"]);
    assert_eq!(dims(&v), ["0", "1"]);
}

#[test]
fn decompose_examples() {
    let v = json_ok(&["decompose", "--d", "2", "--gen", "M(0)", "--n", "2"]);
    assert_eq!(
        v,
        json!({"n": 2, "terms": [
            {"partition": [2], "multiplicity": "3"},
            {"partition": [1, 1], "multiplicity": "1"}
        ]})
    );
    let v = json_ok(&["decompose", "--d", "1", "--gen", "[2]", "--n", "3"]);
    assert_eq!(
        v,
        json!({"n": 3, "terms": [
            {"partition": [3], "multiplicity": "1"},
            {"partition": [2, 1], "multiplicity": "1"}
        ]})
    );
    let v = json_ok(&["decompose", "--d", "3", "--gen", "M(0)", "--n", "0"]);
    assert_eq!(
        v,
        json!({"n": 0, "terms": [{"partition": [], "multiplicity": "1"}]})
    );
}

#[test]
fn stabilize_with_report() {
    let v = json_ok(&[
        "stabilize", "--d", "2", "--gen", "[1]", "--lambda", "[]", "--pads", "2,2", "--degrees",
        "0..4",
    ]);
    assert_eq!(v["value"], "2");
    assert_eq!(v["onset"], 0);
    let report = &v["report"];
    for key in ["injectivity", "generation"] {
        assert!(report[key]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["holds"] == true));
    }
    assert_eq!(report["plateaus"][0]["within_bound"], true);

    let v = json_ok(&["stabilize", "--d", "1", "--gen", "M(0)", "--lambda", "[]", "--pads", "0"]);
    assert_eq!(v["value"], "1");
    assert_eq!(v["onset"], 0);
}

#[test]
fn fit_examples() {
    let v = json_ok(&["fit", "--mode", "dims", "--d", "2", "--gen", "M(0)"]);
    assert_eq!(v["polynomials"], json!([["0/1"], ["1/1"]]));
    assert_eq!(v["exact"], true);

    let v = json_ok(&["fit", "--mode", "mult", "--d", "2", "--gen", "M(0)", "--lambda", "[]"]);
    assert_eq!(v["polynomials"], json!([["1/1", "1/1"]]));
    assert_eq!(v["degree"], 1);

    let v = json_ok(&["fit", "--mode", "mult", "--d", "2", "--gen", "M(0)", "--lambda", "[1]"]);
    assert_eq!(v["polynomials"], json!([["-1/1", "1/1"]]));

    let v = json_ok(&["fit", "--mode", "mult", "--d", "1", "--gen", "M(0)", "--lambda", "[]"]);
    assert_eq!(v["polynomials"], json!([["1/1"]]));
}

fn series_json(values: impl Iterator<Item = (usize, u64)>) -> String {
    let map: serde_json::Map<String, Value> = values
        .map(|(n, v)| (n.to_string(), Value::String(v.to_string())))
        .collect();
    json!({ "series": map }).to_string()
}

#[test]
fn fit_reads_series_from_stdin() {
    let input = series_json((0..=12).map(|n| (n, 3u64.pow(n as u32))));
    let args = [
        "fit", "--mode", "dims", "--d", "3", "--stdin", "--degree-bound", "0", "--window", "0..12",
    ];
    let out = fid_with_stdin(&args, &input);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["polynomials"], json!([["0/1"], ["0/1"], ["1/1"]]));

    let corrupted = series_json((0..=12).map(|n| (n, 3u64.pow(n as u32) + u64::from(n == 11))));
    let out = fid_with_stdin(&args, &corrupted);
    assert_eq!(out.status.code(), Some(3));

    let out = fid_with_stdin(&args, "not json");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_check_pass_and_fault() {
    let v = json_ok(&["oracle-check", "--max", "4"]);
    assert_eq!(v["result"], "PASS");

    let out = fid(&["oracle-check", "--max", "4", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(4));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"], "FAIL");

    assert_eq!(fid(&["oracle-check", "--max", "10"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["dim", "--d", "2", "--gen", "[2,3]", "--range", "0..2"][..],
        &["dim", "--d", "0", "--gen", "M(0)", "--range", "0..2"],
        &["decompose", "--d", "2", "--gen", "bogus", "--n", "2"],
        &["stabilize", "--d", "2", "--gen", "M(0)", "--lambda", "[]", "--pads", "1,2"],
        &["stabilize", "--d", "2", "--gen", "M(0)", "--lambda", "[]", "--pads", "1"],
        &["frobnicate"],
    ] {
        assert_eq!(fid(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn short_horizon_exits_3() {
    let args = ["stabilize", "--d", "1", "--gen", "[2]", "--lambda", "[]", "--pads", "0"];
    let out = Command::new(env!("CARGO_BIN_EXE_fid"))
        .args(args)
        .env("FID_MAX_HORIZON", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = fid(&[&args[..], &["--horizon", "2"]].concat());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn tsv_output() {
    let out = fid(&[
        "--format", "tsv", "dim", "--d", "2", "--gen", "M(0)", "--range", "0..2",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n\tdim\n0\t1\n1\t2\n2\t4\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["decompose", "--d", "3", "--gen", "M(2)", "--n", "6"];
    let first = fid(&args).stdout;
    for _ in 0..3 {
        assert_eq!(fid(&args).stdout, first);
    }
}
