use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn topes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = topes(&all);
    let v = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("topes-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn zero_timing(mut v: Value) -> Value {
    for c in v["checks"].as_array_mut().unwrap() {
        c["wall_ms"] = Value::from(0.0);
    }
    v
}

#[test]
fn describe_builtins() {
    let (code, v) = json(&["describe", "u23"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    let d = &v["checks"][0]["data"];
    assert_eq!(d["covectors"], 13);
    assert_eq!(d["topes"], 6);
    assert_eq!(d["salvetti_cells"], serde_json::json!([6, 12, 6]));
    let (_, v) = json(&["describe", "u22", "--ring", "z"]);
    let d = &v["checks"][0]["data"];
    assert_eq!(
        (d["covectors"].as_u64(), d["topes"].as_u64()),
        (Some(9), Some(4))
    );
    assert_eq!(d["torsion"], serde_json::json!([[], [], []]));
}

#[test]
fn describe_restricted_degree_and_order() {
    let (code, v) = json(&["describe", "u23", "--p", "2", "--order", "3,2,1"]);
    assert_eq!(code, 0);
    let nbc = &v["checks"][0]["data"]["nbc"];
    assert_eq!(nbc.as_array().unwrap().len(), 1);
    assert_eq!(nbc[0]["count"], 2);
}

#[test]
fn input_errors_exit_with_two() {
    let bad = scratch("bad.txt", "2 2\n1 0\n0 x\n");
    let out = topes(&["describe", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    // closed under negation but not under composition
    let not_om = scratch("not_om.txt", "00\n+0\n-0\n0+\n0-\n");
    let out = topes(&["describe", not_om.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Composition"));

    assert_eq!(topes(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(topes(&["corpus", "u22", "nope"]).status.code(), Some(2));
    assert_eq!(
        topes(&["verify", "u22", "--order", "1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(topes(&["verify", "u22", "thmZ"]).status.code(), Some(2));
    std::fs::remove_file(bad).ok();
    std::fs::remove_file(not_om).ok();
}

#[test]
fn verify_suites() {
    let (code, v) = json(&["verify", "u23", "all"]);
    assert_eq!(code, 0);
    let ids: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["thmA", "thmB", "thmC", "proj", "asym", "quillenZ"]);

    let (code, v) = json(&["verify", "u22", "thmA"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["checks"][0]["data"]["quillen"],
        serde_json::json!([4, 3, 1, 0])
    );

    let (code, v) = json(&["verify", "u22", "quillenZ", "--p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["data"]["powers"][0]["rank"], 3);
}

#[test]
fn covector_input_skips_the_asymptotic_assertion() {
    let path = scratch("u11.txt", "0\n+\n-\n");
    let (code, v) = json(&["verify", path.to_str().unwrap(), "asym"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["data"]["asserted"], false);
    std::fs::remove_file(path).ok();
}

#[test]
fn corpus_is_deterministic_across_job_counts() {
    let (c1, one) = json(&["corpus", "u11", "u22", "u23", "--jobs", "1"]);
    let (c3, three) = json(&["corpus", "u11", "u22", "u23", "--jobs", "3"]);
    assert_eq!((c1, c3), (0, 0));
    assert_eq!(one["checks"].as_array().unwrap().len(), 18);
    assert_eq!(
        serde_json::to_string(&zero_timing(one)).unwrap(),
        serde_json::to_string(&zero_timing(three)).unwrap()
    );
}

#[test]
fn report_file_is_written() {
    let path = std::env::temp_dir().join(format!("topes-cli-{}-report.json", std::process::id()));
    let out = topes(&["verify", "u11", "thmA", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("pass"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "verify");
    assert_eq!(v["pass"], true);
    std::fs::remove_file(path).ok();
}
