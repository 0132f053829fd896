//! End-to-end checks of the binary: output contracts, determinism, the
//! cache, formats, and exit codes.

use std::process::{Command, Output};

fn hpdwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hpdwb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn dual_of_empty_in_unit_square() {
    let out = hpdwb(&["dual", "--s", "1", "--q", "1", "--partition", "[]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[1]\n");
}

#[test]
fn witten_index_value() {
    let out = hpdwb(&["witten", "--s", "2", "--q", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "10\n");
}

#[test]
fn kernel_small_passes() {
    let out = hpdwb(&["kernel", "--s", "1", "--q", "1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert!(stdout(&out).contains("\"2\"") || stdout(&out).contains(":2"));
}

#[test]
fn lr_coefficient_value() {
    let out = hpdwb(&[
        "lr",
        "--lambda",
        "[2,1]",
        "--mu",
        "[2,1]",
        "--nu",
        "[3,2,1]",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn homdim_example() {
    let out = hpdwb(&[
        "homdim",
        "--s",
        "1",
        "--q",
        "1",
        "--w1",
        r#"{"t":[0],"d":0}"#,
        "--w2",
        r#"{"t":[0],"d":2}"#,
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "10\n");
}

#[test]
fn tsv_is_a_flat_projection() {
    let out = hpdwb(&["cy", "--s", "1", "--q", "1", "--format", "tsv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().count() >= 5);
    assert!(text.lines().all(|l| l.split('\t').count() == 4));
    assert!(text.contains("pass"));
}

#[test]
fn deterministic_output() {
    let args = ["window", "--s", "1", "--q", "2", "--case", "odd"];
    let first = hpdwb(&args);
    let second = hpdwb(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn cache_roundtrip_and_bypass() {
    let dir = tempfile::tempdir().unwrap();
    let dir_str = dir.path().to_str().unwrap();
    let base = ["enumerate", "--a", "2", "--b", "3"];
    let mut cached = base.to_vec();
    cached.extend(["--cache-dir", dir_str]);
    let cold = hpdwb(&cached);
    assert!(cold.status.success());
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 1);
    let warm = hpdwb(&cached);
    assert_eq!(cold.stdout, warm.stdout);
    let mut bypass = cached.clone();
    bypass.push("--no-cache");
    let fresh = hpdwb(&bypass);
    assert_eq!(cold.stdout, fresh.stdout);
}

#[test]
fn cache_env_variable() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hpdwb"))
        .args(["witten", "--s", "1", "--q", "1"])
        .env("HPDWB_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn usage_error_is_exit_two_with_json() {
    let out = hpdwb(&["dual", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"], "USAGE");
}

#[test]
fn invalid_partition_is_usage_error() {
    let out = hpdwb(&["dual", "--s", "1", "--q", "1", "--partition", "[1,2]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_is_exit_three() {
    let out = hpdwb(&[
        "vdb-chars",
        "--i",
        "1",
        "--q",
        "2",
        "--v",
        "6",
        "--delta-lo",
        "0",
        "--delta-hi",
        "30",
        "--t-bound",
        "8",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"], "RESOURCE_EXCEEDED");
}

#[test]
fn oversize_rank_is_resource_error() {
    let out = hpdwb(&[
        "vdb-vanish",
        "--s",
        "1",
        "--q",
        "4",
        "--t",
        "[0,0,0,0]",
        "--d",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn single_criterion_report() {
    let out = hpdwb(&["report", "--criterion", "10", "--format", "tsv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 16);
    assert!(text.lines().all(|l| l.ends_with("pass")));
}

#[test]
fn decompose_reads_stdin() {
    use std::io::Write as _;
    use std::process::Stdio;
    // (x1 + x1^{-1})^2 over Sp(2)
    let poly = r#"{"vars":["x1"],"terms":[{"exp":[-2],"coef":1},{"exp":[0],"coef":2},{"exp":[2],"coef":1}]}"#;
    let mut child = Command::new(env!("CARGO_BIN_EXE_hpdwb"))
        .args(["decompose", "--group", "Sp(2)"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(poly.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
}
