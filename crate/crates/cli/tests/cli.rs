//! Black-box tests of the command-line surface: formats, determinism,
//! exit codes, and batch handling.

use std::process::{Command, Output};

use frobenius_cli::report::JsonReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobenius"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn json_mode_is_byte_identical_across_runs() {
    let a = run(&["compare", "7", "8", "9", "11", "--format", "json"]);
    let b = run(&["compare", "7", "8", "9", "11", "--format", "json"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(
        a.stdout, b.stdout,
        "identical invocations must emit identical bytes"
    );
}

#[test]
fn emitted_json_round_trips() {
    let output = run(&["compare", "6", "8", "9", "--format", "json"]);
    let text = stdout_of(&output);
    let parsed: JsonReport = serde_json::from_str(text.trim()).unwrap();
    let again = serde_json::to_string(&parsed).unwrap();
    assert_eq!(text.trim(), again);
}

#[test]
fn timings_flag_fills_the_timing_field() {
    let output = run(&["compare", "6", "8", "9", "--format", "json", "--timings"]);
    let parsed: JsonReport = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    let timing = parsed.timing_us.expect("timings requested");
    assert!(timing.apery.is_some() && timing.socle.is_some());
}

#[test]
fn single_route_reports_fill_only_their_fields() {
    let output = run(&[
        "compute", "6", "8", "9", "--method", "apery", "--format", "json",
    ]);
    let parsed: JsonReport = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(parsed.method, "apery");
    assert_eq!(parsed.apery_max, Some(28));
    assert_eq!(parsed.socle_degrees, None);
    assert_eq!(parsed.agree, None);

    let output = run(&[
        "compute", "6", "8", "9", "--method", "socle", "--format", "json",
    ]);
    let parsed: JsonReport = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(parsed.method, "socle");
    assert_eq!(parsed.apery_max, None);
    assert_eq!(parsed.socle_degrees, Some(vec![28]));
}

#[test]
fn modulus_override_changes_the_table_but_not_the_answer() {
    let output = run(&[
        "compute",
        "6",
        "8",
        "9",
        "--method",
        "apery",
        "--modulus",
        "14",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let parsed: JsonReport = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(parsed.frobenius, 19);
    assert_eq!(parsed.apery_max, Some(33)); // max Ap(H, 14) = 19 + 14

    let output = run(&[
        "compute",
        "6",
        "8",
        "9",
        "--method",
        "apery",
        "--modulus",
        "7",
    ]);
    assert!(!output.status.success(), "7 is not in the semigroup");
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("E_INPUT"), "stderr: {stderr}");
}

#[test]
fn socle_var_override_changes_the_quotient_but_not_the_answer() {
    for var in ["1", "2", "3"] {
        let output = run(&[
            "compare",
            "6",
            "8",
            "9",
            "--socle-var",
            var,
            "--format",
            "json",
        ]);
        assert!(output.status.success(), "--socle-var {var}");
        let parsed: JsonReport = serde_json::from_str(stdout_of(&output).trim()).unwrap();
        assert_eq!(parsed.frobenius, 19);
        assert_eq!(parsed.agree, Some(true));
    }
    let output = run(&["compare", "6", "8", "9", "--socle-var", "4"]);
    assert!(!output.status.success());
    assert!(String::from_utf8(output.stderr)
        .unwrap()
        .contains("E_INPUT"));
}

#[test]
fn non_minimal_generators_are_noted_on_stderr() {
    let output = run(&["compare", "2", "3", "5", "--format", "json"]);
    assert!(output.status.success());
    let parsed: JsonReport = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(parsed.generators, vec![2, 3]);
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("minimized"), "stderr: {stderr}");
}

#[test]
fn generator_cap_is_enforced() {
    let output = run(&["compute", "1000001", "3"]);
    assert!(!output.status.success());
    assert!(String::from_utf8(output.stderr)
        .unwrap()
        .contains("E_INPUT"));
}

#[test]
fn batch_processes_all_lines_in_order() {
    let dir = std::env::temp_dir().join(format!("frobenius-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ok.txt");
    std::fs::write(&path, "# demo\n6 8 9\r\n\n7 8 9 11\n").unwrap();

    let output = run(&["batch", path.to_str().unwrap(), "--format", "json"]);
    assert!(output.status.success());
    let lines: Vec<JsonReport> = stdout_of(&output)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].generators, vec![6, 8, 9]);
    assert_eq!(lines[0].frobenius, 19);
    assert_eq!(lines[1].generators, vec![7, 8, 9, 11]);
    assert_eq!(lines[1].frobenius, 13);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn batch_keeps_going_past_bad_lines_and_exits_nonzero() {
    let dir = std::env::temp_dir().join(format!("frobenius-batch-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "4 6\n6 8 9\n").unwrap();

    let output = run(&["batch", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(output.status.code(), Some(2));
    let lines: Vec<JsonReport> = stdout_of(&output)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 1, "the good line still gets its report");
    assert_eq!(lines[0].frobenius, 19);
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("E_GCD"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn validate_summary_round_trips_and_exits_zero() {
    let output = run(&[
        "validate",
        "--seed",
        "9",
        "--count",
        "10",
        "--max-d",
        "3",
        "--max-gen",
        "25",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(value["passes"], 10);
    assert_eq!(value["failures"], 0);
    assert_eq!(value["first_counterexample"], serde_json::Value::Null);
}

#[test]
fn bench_reports_both_routes() {
    let output = run(&["bench", "6", "8", "9", "--repeat", "3"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("apery:"), "{text}");
    assert!(text.contains("socle:"), "{text}");
    assert!(text.contains("agree: yes"));
}
