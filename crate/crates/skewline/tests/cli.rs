//! End-to-end tests of the installed `skewline` binary: every subcommand is
//! exercised through a real process, and exit codes follow the documented
//! taxonomy (0 = everything passed, 1 = a check or assertion failed,
//! 2 = the invocation itself was unusable).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewline"))
}

fn script(name: &str) -> String {
    format!(
        "{}/../../scripts/{name}",
        env!("CARGO_MANIFEST_DIR")
    )
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn skewline")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn every_bundled_script_runs_clean() {
    for name in [
        "addition.geo",
        "multiplication.geo",
        "quaternions.geo",
        "projection.geo",
    ] {
        let out = run(&["run", &script(name)]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{name} failed:\n{}\n{}",
            stdout(&out),
            stderr(&out)
        );
        assert!(
            stdout(&out).contains("run passed"),
            "{name} did not report success: {}",
            stdout(&out)
        );
    }
}

#[test]
fn run_reports_json_with_stable_shape() {
    let out = run(&["run", &script("addition.geo"), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value =
        serde_json::from_str(&stdout(&out)).expect("stdout is a JSON document");
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["model"], "rational");
    assert_eq!(report["passed"], true);
    let outcomes = report["outcomes"].as_array().expect("outcomes array");
    assert!(!outcomes.is_empty());
    for outcome in outcomes {
        assert!(outcome["line"].is_u64());
        let status = outcome["status"].as_str().expect("status string");
        assert!(
            ["bound", "pass", "fail", "error", "skipped"].contains(&status),
            "unexpected status {status}"
        );
    }
    let traces = report["traces"].as_array().expect("traces array");
    assert_eq!(traces.len(), 1);
    skewline::trace::validate_trace_value(&traces[0]).expect("embedded trace is schema-valid");
}

#[test]
fn trace_files_are_deterministic_and_schema_valid() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("one.json");
    let second = dir.path().join("two.json");
    for path in [&first, &second] {
        let out = bin()
            .args(["run", &script("quaternions.geo"), "--trace"])
            .arg(path)
            .output()
            .expect("spawn");
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    }
    let one = std::fs::read(&first).unwrap();
    let two = std::fs::read(&second).unwrap();
    assert_eq!(one, two, "trace bytes differ across identical runs");

    let value: serde_json::Value = serde_json::from_slice(&one).unwrap();
    let items = value.as_array().expect("trace file is a JSON array");
    // the script multiplies twice and negates once
    assert_eq!(items.len(), 3);
    for item in items {
        skewline::trace::validate_trace_value(item).expect("schema-valid trace");
    }
}

#[test]
fn projection_script_has_no_construction_traces() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("traces.json");
    let out = bin()
        .args(["run", &script("projection.geo"), "--trace"])
        .arg(&path)
        .output()
        .expect("spawn");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let value: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(value, serde_json::json!([]));
}

#[test]
fn quaternion_svg_request_fails_but_plain_run_passes() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("out.svg");
    let out = bin()
        .args(["run", &script("quaternions.geo"), "--svg"])
        .arg(&svg)
        .output()
        .expect("spawn");
    assert_eq!(
        out.status.code(),
        Some(1),
        "rendering a quaternion trace should fail the run"
    );
    assert!(
        stderr(&out).contains("quaternion"),
        "stderr should name the unplottable model: {}",
        stderr(&out)
    );
    assert!(!svg.exists(), "no SVG file should be left behind");
}

#[test]
fn parse_errors_exit_with_usage_code_and_locations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.geo");
    std::fs::write(&path, "model gf(4)\npoint A = (1, 2)\nline l = A A\n").unwrap();
    let out = bin().args(["run"]).arg(&path).output().expect("spawn");
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("error at 1:"), "missing location: {err}");
    assert!(err.contains("4 is not prime"), "missing cause: {err}");
}

#[test]
fn missing_script_is_a_usage_error() {
    let out = run(&["run", "/nonexistent/nowhere.geo"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_honest_failures_with_nonzero_exit() {
    // hexagon closure genuinely fails over a noncommutative ring
    let out = run(&[
        "verify",
        "pappus",
        "--model",
        "quaternion",
        "--samples",
        "500",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("[FAIL]"), "no failing claim line: {text}");
    assert!(text.contains("result: FAIL"), "no failing summary: {text}");
}

#[test]
fn verify_rejects_inapplicable_suite_model_pairs() {
    let out = run(&["verify", "order-axioms", "--model", "gf(5)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("cannot run over"),
        "unexpected stderr: {}",
        stderr(&out)
    );
}

#[test]
fn verify_json_report_is_schema_valid() {
    let out = run(&[
        "verify",
        "skew-field",
        "--model",
        "gf(3)",
        "--exhaustive",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    skewline::verification::validate_report_value(&value).expect("schema-valid report");
    assert_eq!(value["model"], "gf(3)");
    assert_eq!(value["mode"], "exhaustive");
}

#[test]
fn constructed_tables_match_modular_arithmetic_through_the_cli() {
    let out = run(&["table", "--model", "gf(5)", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["schema_version"], 1);
    let add = value["add"].as_array().expect("addition table");
    let mul = value["mul"].as_array().expect("multiplication table");
    for s in 0..5u64 {
        for t in 0..5u64 {
            let sum = add[s as usize][t as usize].as_u64().unwrap();
            let prod = mul[s as usize][t as usize].as_u64().unwrap();
            assert_eq!(sum, (s + t) % 5, "add table wrong at ({s},{t})");
            assert_eq!(prod, (s * t) % 5, "mul table wrong at ({s},{t})");
        }
    }
}

#[test]
fn table_rejects_infinite_models() {
    let out = run(&["table", "--model", "rational"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_and_bad_usage_exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "pappus"]).status.code(), Some(2)); // --model is required
}

// ---------------------------------------------------------------------------
// golden SVG: byte-exact rendering is part of the contract
// ---------------------------------------------------------------------------

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Renders `addition.geo` and compares the bytes against the checked-in
/// golden file. Run with `UPDATE_GOLDEN=1` to re-bless after an intentional
/// rendering change.
#[test]
fn addition_svg_matches_golden_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("addition.svg");
    let out = bin()
        .args(["run", &script("addition.geo"), "--svg"])
        .arg(&svg)
        .output()
        .expect("spawn");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rendered = std::fs::read(&svg).unwrap();

    let golden = golden_path("addition.svg");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden.parent().unwrap()).unwrap();
        std::fs::write(&golden, &rendered).unwrap();
        return;
    }
    let expected = std::fs::read(&golden).unwrap_or_else(|e| {
        panic!(
            "missing golden file {} ({e}); run with UPDATE_GOLDEN=1 to create it",
            golden.display()
        )
    });
    assert_eq!(
        rendered,
        expected,
        "rendering drifted from the golden file; if intentional, re-bless with UPDATE_GOLDEN=1"
    );
}
