//! End-to-end tests of the `pressure-consensus` binary: exit codes, file
//! formats, determinism, and agreement with the library.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use pressure_consensus::experiments::run_counterexample;

fn run(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pressure-consensus"));
    cmd.args(args);
    cmd.env_remove("PRESSURE_CONSENSUS_MAX_RHO");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary spawns")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn demo_config(schedule: &str, steps: u64) -> String {
    format!(
        r#"{{
  "system": {{
    "adjacency": [[0.0, 1.0], [1.0, 0.0]],
    "stubbornness": [1.0, 1.0],
    "preferred": [0.1, 0.5]
  }},
  "schedule": {schedule},
  "steps": {steps}
}}"#
    )
}

fn write_config(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn counterexample_writes_the_reproduction_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("results");
    let output = run(
        &["counterexample", "--out-dir", out_dir.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));

    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("summary.json")).unwrap()).unwrap();
    let phi = summary["euler_phi_one_tenth"].as_f64().unwrap();
    assert!((phi - 0.89001).abs() <= 1e-5);
    let product = summary["counterexample"]["partial_product_final"]
        .as_f64()
        .unwrap();
    assert!((product - 0.0310128).abs() <= 1e-4);
    assert_eq!(summary["counterexample"]["converged"], false);
    assert_eq!(
        summary["counterexample"]["classification"],
        "PositiveLimitSuspected"
    );
    assert_eq!(summary["convergent"]["converged"], true);
    assert!(summary["counterexample"]["residual_floor"].as_f64().unwrap() > 4.7e-3);

    // Byte-identical on rerun.
    let first = fs::read(out_dir.join("counterexample.csv")).unwrap();
    let second_dir = dir.path().join("again");
    let output = run(
        &[
            "--quiet",
            "counterexample",
            "--out-dir",
            second_dir.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
    let second = fs::read(second_dir.join("counterexample.csv")).unwrap();
    assert_eq!(first, second);
}

#[test]
fn simulate_agrees_with_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "scenario.json",
        &demo_config(r#"{ "kind": "ExpSqrt", "params": { "base": 2.0 } }"#, 10_000),
    );
    let out = dir.path().join("trajectory.csv");
    let output = run(
        &["simulate", "--config", &config, "--out", out.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));

    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 10_002, "header + k=0..=10^4");
    let last = rows.last().unwrap();
    assert_eq!(last[0], "10000");
    let dist: f64 = last[7].parse().unwrap();
    assert!(dist > 0.0);

    // The 17-digit serialization round-trips, so the CSV value must equal
    // the library's bit for bit.
    let reference = run_counterexample(10_000).unwrap();
    let expected = reference.trajectory.dist_to_limit[9_999];
    assert_eq!(dist.to_bits(), expected.to_bits());
}

#[test]
fn simulate_minimal_run_has_three_rows() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "one.json",
        &demo_config(r#"{ "kind": "Linear", "params": { "slope": 1.0 } }"#, 1),
    );
    let out = dir.path().join("one.csv");
    let output = run(
        &["simulate", "--config", &config, "--out", out.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(
        lines[0],
        "k,rho,x_0,x_1,alpha,partial_product,dist_to_fixed_point,dist_to_limit"
    );
    assert!(lines[1].starts_with("0,,"));
    assert!(lines[2].starts_with("1,"));
}

#[test]
fn simulate_honors_explicit_x0_and_tolerance() {
    let dir = tempfile::tempdir().unwrap();
    let config_text = demo_config(r#"{ "kind": "Linear", "params": { "slope": 1.0 } }"#, 5)
        .replace("\"steps\": 5", "\"steps\": 5, \"x0\": [0.25, 0.75], \"tolerance\": 0.5");
    let config = write_config(dir.path(), "explicit.json", &config_text);
    let out = dir.path().join("explicit.csv");
    let output = run(
        &["simulate", "--config", &config, "--out", out.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    let rows = csv_rows(&out);
    let x0_row = &rows[1];
    assert_eq!(x0_row[0], "0");
    let (a, b): (f64, f64) = (x0_row[2].parse().unwrap(), x0_row[3].parse().unwrap());
    assert_eq!((a, b), (0.25, 0.75));
}

#[test]
fn invalid_config_exits_2_with_machine_readable_code() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "bad.json",
        &demo_config(r#"{ "kind": "Linear", "params": { "slope": 1.0 } }"#, 100)
            .replace("[1.0, 1.0]", "[1.0, -3.0]"),
    );
    let out = dir.path().join("never.csv");
    let output = run(
        &["simulate", "--config", &config, "--out", out.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 2);
    let err = stderr(&output);
    assert!(
        err.contains("error: code=NonpositiveStubbornness"),
        "stderr: {err}"
    );
    assert!(!out.exists());
}

#[test]
fn malformed_json_and_unknown_fields_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let garbled = write_config(dir.path(), "garbled.json", "{ not json");
    let output = run(
        &["analyze", "--config", &garbled, "--out", "/dev/null"],
        &[],
    );
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("code=MalformedConfig"));

    let unknown = write_config(
        dir.path(),
        "unknown.json",
        &demo_config(r#"{ "kind": "Linear", "params": { "slope": 1.0 } }"#, 100)
            .replace("\"steps\": 100", "\"steps\": 100, \"extra\": 1"),
    );
    let output = run(
        &["analyze", "--config", &unknown, "--out", "/dev/null"],
        &[],
    );
    assert_eq!(exit_code(&output), 2);

    let missing = dir.path().join("missing.json");
    let output = run(
        &[
            "analyze",
            "--config",
            missing.to_str().unwrap(),
            "--out",
            "/dev/null",
        ],
        &[],
    );
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("code=UnreadableConfig"));
}

#[test]
fn analyze_reports_the_three_classifications() {
    let dir = tempfile::tempdir().unwrap();

    let linear = write_config(
        dir.path(),
        "linear.json",
        &demo_config(r#"{ "kind": "Linear", "params": { "slope": 1.0 } }"#, 10),
    );
    let out = dir.path().join("linear.json.out");
    let output = run(
        &[
            "analyze",
            "--config",
            &linear,
            "--steps",
            "10000",
            "--out",
            out.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["classification"], "Inconclusive");
    assert_eq!(report["alphas_summary"]["count"], 10_000);
    let product = report["partial_product_final"].as_f64().unwrap();
    let expected = 1.0 / 10_001.0;
    assert!(((product - expected) / expected).abs() <= 1e-9);

    let expsqrt = write_config(
        dir.path(),
        "expsqrt.json",
        &demo_config(r#"{ "kind": "ExpSqrt", "params": { "base": 2.0 } }"#, 10_000),
    );
    let out = dir.path().join("expsqrt.json.out");
    let output = run(
        &["analyze", "--config", &expsqrt, "--out", out.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["classification"], "PositiveLimitSuspected");
    let product = report["partial_product_final"].as_f64().unwrap();
    assert!((product - 0.0310128).abs() <= 1e-4);

    let constant = write_config(
        dir.path(),
        "constant.json",
        &demo_config(r#"{ "kind": "Constant", "params": { "value": 1.0 } }"#, 10_000),
    );
    let out = dir.path().join("constant.json.out");
    let output = run(
        &["analyze", "--config", &constant, "--out", out.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["classification"], "VanishesNumerically");
    let first = report["alphas_summary"]["first"].as_f64().unwrap();
    assert!((first - 0.5).abs() <= 1e-12);
}

#[test]
fn env_cap_aborts_with_numeric_exit() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "runaway.json",
        &demo_config(r#"{ "kind": "ExpSqrt", "params": { "base": 2.0 } }"#, 100),
    );
    let out = dir.path().join("never.csv");
    let output = run(
        &["simulate", "--config", &config, "--out", out.to_str().unwrap()],
        &[("PRESSURE_CONSENSUS_MAX_RHO", "10")],
    );
    assert_eq!(exit_code(&output), 3);
    assert!(stderr(&output).contains("code=ScheduleOverflow"));

    let output = run(
        &["simulate", "--config", &config, "--out", out.to_str().unwrap()],
        &[("PRESSURE_CONSENSUS_MAX_RHO", "not-a-number")],
    );
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn unwritable_output_directory_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    // A regular file where a directory must be created.
    let blocker = dir.path().join("blocker");
    fs::write(&blocker, "not a directory").unwrap();
    let target = blocker.join("nested");
    let output = run(
        &["counterexample", "--out-dir", target.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 4);
    assert!(stderr(&output).contains("code=Io"));
}

#[test]
fn quiet_suppresses_the_asymmetry_warning() {
    let dir = tempfile::tempdir().unwrap();
    let asymmetric = demo_config(r#"{ "kind": "Linear", "params": { "slope": 1.0 } }"#, 5)
        .replace("[[0.0, 1.0], [1.0, 0.0]]", "[[0.0, 2.0], [1.0, 0.0]]");
    let config = write_config(dir.path(), "asym.json", &asymmetric);
    let out = dir.path().join("asym.csv");

    let output = run(
        &["simulate", "--config", &config, "--out", out.to_str().unwrap()],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
    assert!(stderr(&output).contains("warning"), "{}", stderr(&output));

    let output = run(
        &[
            "--quiet",
            "simulate",
            "--config",
            &config,
            "--out",
            out.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
    assert!(!stderr(&output).contains("warning"));
    assert!(stderr(&output).is_empty());
}
