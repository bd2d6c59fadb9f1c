use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn powg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powg"))
        .args(args)
        .output()
        .expect("spawn powg")
}

fn powg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_powg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn powg");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_small_values() {
    let v = json(&powg(&["solve", "--u", "17"]));
    assert_eq!(v["lower"], 1);
    assert_eq!(v["upper"], 1);
    assert_eq!(v["exact"], true);

    let v = json(&powg(&["solve", "--u", "3"]));
    assert_eq!((v["lower"].clone(), v["upper"].clone()), (2.into(), 2.into()));

    let v = json(&powg(&["solve", "--u", "16"]));
    assert_eq!(v["lower"], "inf");
    assert_eq!(v["upper"], "inf");
}

#[test]
fn solve_accepts_expressions() {
    let v = json(&powg(&["solve", "--u", "pow(2,8)*9", "--rounds", "3"]));
    assert_eq!(v["u"], "2304");
    assert_eq!(v["lower"], 2);
    assert_eq!(v["upper"], 3);
}

#[test]
fn table_writes_csv_with_inf() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = powg(&[
        "table",
        "--from",
        "1",
        "--to",
        "20",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("u,lower,lower_method,upper,upper_method,exact")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 20);
    for (i, row) in rows.iter().enumerate() {
        let u = i as u64 + 1;
        assert_eq!(row[0], u.to_string());
        if u.is_power_of_two() {
            assert_eq!(row[3], "inf", "u = {u}");
        } else {
            assert_ne!(row[3], "inf", "u = {u}");
        }
    }
}

#[test]
fn table_to_unwritable_path_exits_2() {
    let out = powg(&[
        "table",
        "--from",
        "1",
        "--to",
        "3",
        "--out",
        "/nonexistent/dir/t.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(powg(&["solve"]).status.code(), Some(2));
    assert_eq!(powg(&["solve", "--u", "fact(3"]).status.code(), Some(2));
    assert_eq!(powg(&["verify-paper", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(powg(&["--help"]).status.code(), Some(0));
}

#[test]
fn certify_examples() {
    let v = json(&powg(&[
        "certify", "--v", "3", "--l", "18", "--r", "6", "--k", "2",
    ]));
    assert_eq!(v["conditions"]["eq31"], true);
    assert_eq!(v["conditions"]["eq32"], true);
    assert_eq!(v["certified_lower"], 2);

    let v = json(&powg(&[
        "certify", "--v", "3", "--l", "fact(16)", "--r", "fact(16)", "--k", "3",
    ]));
    assert_eq!(v["l"][0], "fact(16)");
    assert_eq!(v["certified_lower"], 3);

    let v = json(&powg(&[
        "certify", "--v", "3", "--l", "0", "--r", "5", "--k", "2",
    ]));
    assert_eq!(v["certified_lower"], Value::Null);
}

#[test]
fn certify_rejects_mismatched_lists() {
    let out = powg(&["certify", "--v", "3", "--l", "1,2", "--r", "6", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dnb_table_rows() {
    let v = json(&powg(&["dnb", "--v", "3", "--kmax", "5"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[3]["bprime"], "99353223");
    assert_eq!(
        rows[4]["bprime"],
        "63330329727753280687547832680122255890934662927"
    );
}

#[test]
fn bounds_for_concrete_and_symbolic_input() {
    let v = json(&powg(&["bounds", "--u", "2304"]));
    assert_eq!(v["upper"]["best"], 4);
    assert!(v["nu_nu"].is_object());

    let v = json(&powg(&[
        "bounds", "--v", "3", "--l", "fact(16)", "--r", "fact(16)",
    ]));
    assert_eq!(v["lower_formula"]["value"], 2);

    assert_eq!(powg(&["bounds"]).status.code(), Some(2));
}

#[test]
fn axioms_pass_on_the_standard_model() {
    let v = json(&powg(&[
        "axioms",
        "--limit",
        "5000",
        "--eq26-limit",
        "500",
        "--oddless-limit",
        "500",
    ]));
    let results = v["results"].as_array().unwrap();
    assert!(results.len() >= 8);
    assert!(results.iter().all(|r| r["result"] == "pass"), "{v}");
}

#[test]
fn verify_single_suites() {
    for suite in ["c1", "bprime"] {
        let out = powg(&["--format", "text", "verify-paper", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        let text = stdout(&out);
        assert!(text.contains("PASS"));
        assert!(!text.contains("FAIL"));
    }
    let v = json(&powg(&["verify-paper", "--suite", "c2"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 2024);
}

#[test]
fn play_as_powerator_rejects_illegal_answer() {
    // the engine opens on 5 with a challenge whose interval excludes 9
    let out = powg_stdin(&["play", "--role", "powerator", "--u", "5"], "9\n");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("9 is not in ["), "{text}");
}

#[test]
fn play_as_challenger_writes_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = powg_stdin(
        &[
            "play",
            "--role",
            "challenger",
            "--u",
            "6",
            "--transcript",
            path.to_str().unwrap(),
        ],
        "3\n",
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("position lost: 2 * 2 < 6 < 2 * 2 * 2"));
    let t: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(t["outcome"], "challenger_wins");
    assert_eq!(t["rounds"][0]["challenge"], "3");
    assert_eq!(t["rounds"][0]["response"], "2");
}
