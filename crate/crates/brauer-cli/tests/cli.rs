//! Black-box tests of the command-line interface: exit-code contract, JSON
//! report shape, file output, refusals, and byte-level determinism.

use std::process::{Command, Output};

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(args)
        .output()
        .expect("failed to launch the CLI binary")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is not valid JSON")
}

#[test]
fn passing_command_exits_zero_with_well_formed_report() {
    let out = brauer(&["kernel", "--m", "2", "--n", "3", "--char", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["command"], "kernel");
    assert_eq!(report["status"], "pass");
    assert_eq!(report["params"]["m"], 2);
    assert_eq!(report["params"]["n"], 3);
    assert_eq!(report["params"]["field"], "char5");
    let assertions = report["assertions"].as_array().unwrap();
    assert!(!assertions.is_empty());
    for a in assertions {
        assert!(a["name"].is_string());
        assert!(!a["expected"].is_null());
        assert!(!a["computed"].is_null());
        assert_eq!(a["pass"], true);
    }
    assert_eq!(report["digest"].as_str().unwrap().len(), 64);
    assert!(report["version"].is_string());
    assert!(report["timing_ms"].is_number());
}

#[test]
fn failing_assertion_exits_one_and_reports_both_values() {
    let out = brauer(&["ideal-sym", "--n", "6", "--a", "3", "--char", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["status"], "fail");
    let a = &report["assertions"][0];
    assert_eq!(a["name"], "ideal_dim");
    assert_eq!(a["expected"], 132);
    assert_eq!(a["computed"], 131);
    assert_eq!(a["pass"], false);
}

#[test]
fn characteristic_two_is_refused_as_usage_error() {
    let out = brauer(&["kernel", "--m", "2", "--n", "3", "--char", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("characteristic not equal to 2"),
        "refusal must quote the standing hypothesis, got: {stderr}"
    );
}

#[test]
fn unknown_flags_are_usage_errors() {
    assert_eq!(brauer(&["kernel", "--m", "2"]).status.code(), Some(2));
    assert_eq!(brauer(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        brauer(&["kernel", "--m", "2", "--n", "3", "--rational", "--char", "5"])
            .status
            .code(),
        Some(2),
        "--rational and --char must be mutually exclusive"
    );
    assert_eq!(
        brauer(&["ideal-sym", "--n", "4", "--a", "3", "--rational"])
            .status
            .code(),
        Some(2),
        "a > n/2 is out of range"
    );
}

#[test]
fn resource_guards_exit_three() {
    let out = brauer(&["kernel", "--m", "3", "--n", "5", "--rational"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource guard"));
    assert_eq!(brauer(&["dims", "--n", "9"]).status.code(), Some(3));
    assert_eq!(brauer(&["seminormal", "--n", "6"]).status.code(), Some(3));
}

#[test]
fn out_flag_writes_the_same_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = brauer(&[
        "identity",
        "--m",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let from_file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(from_file, stdout_json(&out));
}

#[test]
fn repeated_runs_are_identical_up_to_timing() {
    let args = ["verify-main", "--m", "2", "--n", "3", "--char", "7"];
    let mut first = stdout_json(&brauer(&args));
    let mut second = stdout_json(&brauer(&args));
    assert_eq!(first["digest"], second["digest"]);
    first["timing_ms"] = 0.into();
    second["timing_ms"] = 0.into();
    assert_eq!(first, second);
}

#[test]
fn progress_goes_to_stderr_only() {
    let out = brauer(&["dims", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    // stdout must parse as one JSON document; stderr carries progress lines.
    stdout_json(&out);
    assert!(String::from_utf8_lossy(&out.stderr).contains("[brauer]"));
}

#[test]
fn seminormal_reports_the_failing_two_row_identities() {
    let out = brauer(&["seminormal", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    let get = |name: &str| -> bool {
        report["assertions"]
            .as_array()
            .unwrap()
            .iter()
            .find(|a| a["name"] == name)
            .unwrap_or_else(|| panic!("missing assertion {name}"))["pass"]
            .as_bool()
            .unwrap()
    };
    for core in [
        "idempotents_orthogonal",
        "resolution_of_identity",
        "block_idempotents_central",
        "matrix_units",
        "triangular_expansion",
        "two_row_scalar",
    ] {
        assert!(get(core), "{core} should pass");
    }
    assert!(get("leading_term_congruence_k0"));
    assert!(!get("leading_term_congruence_k1"));
    assert!(!get("leading_term_congruence_k2"));
    assert!(get("sandwich_identity_k0"));
    assert!(!get("sandwich_identity_k1"));
    assert!(!get("sandwich_identity_k2"));
}
