use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_starclusters"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Runs a pipeline of commands, feeding each one's stdout to the next.
fn pipe(stages: &[&[&str]]) -> Output {
    let mut input = String::new();
    let mut last = None;
    for args in stages {
        let o = run(args, &input);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        input = stdout(&o);
        last = Some(o);
    }
    last.unwrap()
}

#[test]
fn family_indep_homology_pipeline() {
    let o = pipe(&[&["family", "cycle", "6"], &["indep"], &["homology"]]);
    assert_eq!(stdout(&o).trim(), r#"{"1":{"betti":2,"torsion":[]}}"#);
    let o = pipe(&[&["family", "cycle", "5"], &["indep"], &["homology"]]);
    assert_eq!(stdout(&o).trim(), r#"{"1":{"betti":1,"torsion":[]}}"#);
}

#[test]
fn families_print_json() {
    let o = run(&["family", "kneser", "2", "1"], "");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 15);
    let o = run(&["family", "stirling", "4"], "");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ground"].as_array().unwrap().len(), 6);
    let o = run(&["family", "cycle", "6"], "");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "cycles", "--nmax", "12"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "cycles");
    assert_eq!(v["summary"]["pass"], 10);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(run(&["verify", "nope"], "").status.code(), Some(2));
}

#[test]
fn seeded_reports_are_reproducible() {
    let args = ["verify", "forests", "--count", "10", "--seed", "42"];
    let a = stdout(&run(&args, ""));
    let b = stdout(&run(&["--threads", "1", "verify", "forests", "--count", "10", "--seed", "42"], ""));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], 42);
}

#[test]
fn construct_suspension_over_edges() {
    let g = stdout(&run(&["family", "cycle", "4"], ""));
    let o = run(&["construct", "suspension", "--over-edges", "0 1;2 3"], &g);
    assert!(o.status.success());
    let h = run(&["homology"], &stdout(&o));
    // I of C_4 is S^0, so the result is a circle
    assert_eq!(stdout(&h).trim(), r#"{"1":{"betti":1,"torsion":[]}}"#);
}

#[test]
fn bad_input_reports_position() {
    let o = run(&["homology"], "{\"vertices\":[0,1],\n\"edges\":[[0,1],\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["family", "nope"], "").status.code(), Some(2));
    assert_eq!(run(&["family", "cycle"], "").status.code(), Some(2));
    assert_eq!(run(&["family", "pentagon-prism", "4"], "").status.code(), Some(2));
    let claw = r#"{"vertices":[0,1,2,3],"edges":[[0,1],[0,2],[0,3]]}"#;
    let o = run(&["bounds", "clawfree"], claw);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("claw"));
}

#[test]
fn bounds_and_covers() {
    let p7 = stdout(&run(&["family", "path", "7"], ""));
    let o = run(&["bounds", "distance3", "--set", "0 3 6"], &p7);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["claimed"], 1);
    assert_eq!(v["evidence"]["holds"], true);
    let pet = stdout(&run(&["family", "petersen"], ""));
    let o = run(&["bounds", "chromatic"], &pet);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cover"].as_array().unwrap().len(), 3);
    assert_eq!(v["check"]["union_equals"], true);
}

#[test]
fn collapse_and_formats() {
    let o = pipe(&[&["family", "path", "3"], &["clique"], &["collapse"]]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "collapsible");
    let csv = pipe(&[&["family", "cycle", "9"], &["homology", "--format", "csv"]]);
    assert_eq!(stdout(&csv), "degree,betti,torsion\n2,2,\n");
    let text = pipe(&[&["family", "cycle", "9"], &["homology", "--format", "text"]]);
    assert_eq!(stdout(&text).trim(), "H2 = Z^2");
}
