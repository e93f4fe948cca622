use std::path::Path;
use std::process::{Command, Output};

use fedder::ddelta::ideal_difference_witness;
use fedder::groebner::Ideal;
use fedder::polyring::{parse_polynomial, RingContext, TermOrder};
use fedder::runner::{VerificationReport, MAX_PAIRS_ENV};
use serde_json::Value;

fn fedder(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fedder"));
    cmd.args(args).env_remove("FEDDER_MAX_DEGREE").env_remove(MAX_PAIRS_ENV);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn report(path: &Path) -> VerificationReport {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn colon_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.json",
        r#"{"p":2,"vars":["x","y"],"sequence":["x","y"],"checks":[{"check":"colon_identities","max":4}]}"#,
    );
    let out = fedder(&["run", &cfg], &[]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["records"][0]["status"], "pass");
    assert_eq!(json["records"][0]["instance"], "p=2;vars=x,y;order=degrevlex;f=x,y");
}

#[test]
fn zero_divisor_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.json",
        r#"{"p":2,"vars":["x","y"],"sequence":["x","x"],"checks":[{"check":"colon_identities"}]}"#,
    );
    let out = fedder(&["run", &cfg], &[]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("T={1}, j=2"));
}

#[test]
fn malformed_configs_report_their_location() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.json", "{\"p\":2,\n \"checks\": [}");
    let out = fedder(&["run", &cfg], &[]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let cfg = write(dir.path(), "d.json", r#"{"p":2,"vars":["x"],"sequence":["q"],"checks":[]}"#);
    assert_eq!(fedder(&["run", &cfg], &[]).status.code(), Some(3));
    assert_eq!(fedder(&["run", "/nonexistent.json"], &[]).status.code(), Some(3));
}

#[test]
fn small_bound_is_not_a_failure() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.json",
        r#"{"p":2,"vars":["x","y"],"sequence":["x","y"],
            "checks":[{"check":"verify_vanishing","levels":[2],"degrees":[1],"bound":1}]}"#,
    );
    let path = dir.path().join("r.json");
    let out = fedder(&["run", &cfg, "--report", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(2));
    let r = report(&path);
    assert_eq!(serde_json::to_value(r.records[0].status).unwrap(), "bound_exceeded");
}

#[test]
fn budget_can_be_overridden_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.json",
        r#"{"p":3,"vars":["x","y"],"sequence":["x+y","x*y"],"checks":[{"check":"colon_identities","max":3}]}"#,
    );
    let path = dir.path().join("r.json");
    let out = fedder(&["run", &cfg, "--report", path.to_str().unwrap()], &[(MAX_PAIRS_ENV, "1")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(serde_json::to_value(report(&path).records[0].status).unwrap(), "budget_exceeded");
    let out = fedder(&["run", &cfg, "--report", path.to_str().unwrap()], &[(MAX_PAIRS_ENV, "oops")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reports_are_deterministic_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.json",
        r#"{"instances":[{"p":2,"vars":["x","y"],"sequence":["x+y","x*y"]},
                         {"p":3,"vars":["x","y","z"],"sequence":["x","y","z"]}],
            "checks":[{"check":"cech_fedder_algebra","samples":10},
                      {"check":"complex_wellformed","levels":[1,2]},
                      {"check":"verify_structure_kernels"}],
            "seed":11}"#,
    );
    let strip = |jobs: &str| {
        let path = dir.path().join(format!("r{jobs}.json"));
        let out = fedder(&["run", &cfg, "--jobs", jobs, "--report", path.to_str().unwrap()], &[]);
        assert_eq!(out.status.code(), Some(0));
        serde_json::to_string(&report(&path).without_timings()).unwrap()
    };
    let one = strip("1");
    assert_eq!(one, strip("4"));
    assert_eq!(one, strip("1"));
}

#[test]
fn dot_diagrams_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let cfg =
        write(dir.path(), "c.json", r#"{"p":2,"vars":["x","y"],"sequence":["x","y"],"checks":[],"dot_levels":[2,3]}"#);
    let dot = dir.path().join("dot");
    let out = fedder(&["run", &cfg, "--dot", dot.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dot.join("instance0_level3.dot")).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("x^2"));
    assert!(dot.join("instance0_level2.dot").exists());
}

#[test]
fn list_checks_is_stable_and_complete() {
    let first = fedder(&["list-checks"], &[]);
    assert_eq!(first.status.code(), Some(0));
    let text = String::from_utf8(first.stdout).unwrap();
    for name in ["colon_identities", "verify_codim2_V", "verify_vanishing", "filtration", "cech_fedder_algebra"] {
        assert!(text.contains(name), "{name}");
    }
    assert_eq!(text, String::from_utf8(fedder(&["list-checks"], &[]).stdout).unwrap());
}

#[test]
fn fail_witnesses_replay() {
    let ctx = RingContext::new(3, &["x", "y"], TermOrder::DegRevLex).unwrap();
    let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
    let small = Ideal::new(&ctx, vec![p("x^2"), p("y")]);
    let big = Ideal::new(&ctx, vec![p("x"), p("y")]);
    let w = ideal_difference_witness(&small, &big).unwrap().unwrap();
    let replayed = parse_polynomial(&w.to_string(), &ctx).unwrap();
    assert!(big.contains(&replayed).unwrap() != small.contains(&replayed).unwrap());
    assert!(ideal_difference_witness(&big, &big.sum(&small)).unwrap().is_none());
}
