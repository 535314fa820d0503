use std::process::{Command, Output};

use qlat::exact::text::parse_matrix;
use qlat::report::generator_matrix;

fn qlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlat"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = qlat(&["verify", "unit24", "f4-kissing", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("2/2 checks passed"));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["overall"], true);
    assert!(json["version"].is_string() && json["timestamp"].is_string());
    let checks = json["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert_eq!(checks[0]["name"], "unit24");
    assert_eq!(checks[0]["status"], "pass");
    assert_eq!(checks[1]["actual"], "24");
    assert!(checks[1]["seconds"].is_number());
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = qlat(&["verify", "nonexistent"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonexistent"));
    assert_eq!(qlat(&["order", "--group", "nope"]).status.code(), Some(2));
    assert_eq!(qlat(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn order_emits_bsgs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unit24.bsgs");
    let out = qlat(&["order", "--group", "unit24", "--emit-bsgs", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order: 24\n"));
    assert!(text.contains("factorization: 2^3 * 3\n"));
    assert!(text.contains("degree: 24\n"));
    let bsgs = std::fs::read_to_string(&path).unwrap();
    assert_eq!(bsgs.lines().next(), Some("24"));
}

#[test]
fn kissing_numbers() {
    let text = stdout(&qlat(&["kissing", "--lattice", "f4"]));
    assert!(text.contains("minimal norm: 1\n") && text.contains("kissing number: 24\n"));
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["x4", "e1", "tau-omega"] {
        let path = dir.path().join(name);
        let out = qlat(&["export", "--generator", name, "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let parsed = parse_matrix(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parsed, generator_matrix(name).unwrap(), "{name}");
    }
}

#[test]
fn membership() {
    let dir = tempfile::tempdir().unwrap();
    let inside = dir.path().join("in");
    let outside = dir.path().join("out");
    std::fs::write(&inside, "1 4\n1/2 1/2 1/2 1/2\n").unwrap();
    std::fs::write(&outside, "1 4\n1/4 0 0 0\n").unwrap();
    for (path, expected) in [(&inside, "true\n"), (&outside, "false\n")] {
        let out = qlat(&["member", "--lattice", "f4", "--vector", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), expected);
    }
}

#[test]
fn missing_file_fails() {
    let out = qlat(&["member", "--lattice", "f4", "--vector", "/nonexistent/v.txt"]);
    assert_eq!(out.status.code(), Some(1));
}
