use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn tracemult(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tracemult")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tracemult-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn eval_single_partition() {
    let o = tracemult(&["eval", "--kind", "pure", "--lambda", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
    let o = tracemult(&["eval", "--kind", "mixed", "--lambda", "1,0"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn eval_grid_csv_and_json() {
    let o = tracemult(&["eval", "--kind", "mixed", "--grid", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "1,0,2"), "{text}");
    let o = tracemult(&["eval", "--kind", "pure", "--grid", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn bad_partition_is_a_usage_error() {
    assert_eq!(tracemult(&["eval", "--kind", "pure", "--lambda", "1,3"]).status.code(), Some(2));
    assert_eq!(tracemult(&["eval", "--kind", "pure", "--lambda", "x"]).status.code(), Some(2));
    assert_eq!(tracemult(&["eval", "--kind", "other", "--lambda", "1,0"]).status.code(), Some(2));
}

#[test]
fn hilbert_forms_print() {
    let o = tracemult(&["hilbert", "--kind", "pure", "--form", "factored", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "pure");
    assert!(v["denominator"].as_str().unwrap().contains("1-x"));
}

#[test]
fn mult_series_sources_agree() {
    let a = tracemult(&["mult-series", "--kind", "mixed"]);
    let b = tracemult(&["mult-series", "--kind", "mixed", "--source", "solved"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn solve_from_files() {
    // f = 1/((1-x)(1-y)) = sum of S_(l1,0), so M' = 1/(1-t).
    let num = scratch("num.txt", "2");
    let q = scratch("q.txt", "1-x");
    let c = scratch("c.txt", "1/2");
    let o = tracemult(&[
        "solve",
        "--num-file",
        num.to_str().unwrap(),
        "--q-file",
        q.to_str().unwrap(),
        "--zfactor",
        c.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let series = v["series"].as_str().unwrap().replace(' ', "");
    assert_eq!(series, "(1)/(1-t)");
}

#[test]
fn solve_rejects_bad_input() {
    let num = scratch("bad.txt", "x +* y");
    let q = scratch("q1.txt", "1-x");
    let o = tracemult(&["solve", "--num-file", num.to_str().unwrap(), "--q-file", q.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = tracemult(&["solve", "--num-file", "/nonexistent/file", "--q-file", q.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_prop5_passes() {
    let o = tracemult(&["verify", "--check", "prop5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_failure_exits_one() {
    let o = tracemult(&["verify", "--check", "asympt", "--scales", "8,16", "--tolerance", "0.0001"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], false);
}

#[test]
fn asympt_json() {
    let o = tracemult(&["asympt", "--kind", "pure", "--lambda", "50,10"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["region"], "R1");
}
