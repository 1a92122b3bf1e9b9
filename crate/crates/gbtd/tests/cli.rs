//! Exercises the command-line surface: exit codes, formats, and the
//! generate/verify/convert pipelines.

use std::fs;
use std::process::{Command, Output, Stdio};

use gbtd::fixtures;

fn gbtd_cmd(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gbtd"));
    cmd.args(args);
    cmd
}

fn run(args: &[&str]) -> Output {
    gbtd_cmd(args).output().expect("spawn gbtd")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = gbtd_cmd(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn gbtd");
    use std::io::Write;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait gbtd")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn generate_matrix_matches_fixture() {
    let output = run(&["generate", "--p", "5", "--kind", "matrix"]);
    assert_eq!(output.status.code(), Some(0));
    let doc = gbtd::parse(&stdout(&output)).unwrap();
    assert_eq!(doc.to_matrix().unwrap(), fixtures::example3_matrix());
}

#[test]
fn generate_rejects_composite_p() {
    let output = run(&["generate", "--p", "4"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn generated_design_passes_verify() {
    let output = run(&["generate", "--p", "7", "--kind", "design"]);
    assert_eq!(output.status.code(), Some(0));
    let verify = run_with_stdin(&["verify"], &stdout(&output));
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout(&verify).contains("overall: PASS"));
}

#[test]
fn generate_grid_format_round_trips() {
    let output = run(&["generate", "--p", "5", "--format", "grid"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 25);
    let verify = run_with_stdin(&["verify"], &text);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn verify_bundled_design_fixture() {
    let output = run_with_stdin(&["verify"], fixtures::EXAMPLE1_DESIGN_JSON);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn verify_mutated_fixture_fails_with_counterexample() {
    let mutated = fixtures::EXAMPLE1_DESIGN_JSON.replacen("[0, 1, 8]", "[0, 1, 7]", 1);
    let output = run_with_stdin(&["verify"], &mutated);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("FAIL"));
}

#[test]
fn verify_garbage_is_a_usage_error() {
    let output = run_with_stdin(&["verify"], "{{{ not a document");
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn convert_design_to_matrix_matches_fixture() {
    let output = run_with_stdin(
        &["convert", "--direction", "to-matrix"],
        fixtures::EXAMPLE1_DESIGN_JSON,
    );
    assert_eq!(output.status.code(), Some(0));
    let doc = gbtd::parse(&stdout(&output)).unwrap();
    assert_eq!(doc.to_matrix().unwrap(), fixtures::example2_matrix());
}

#[test]
fn normalize_then_to_design_verifies() {
    let normalized = run_with_stdin(
        &["convert", "--direction", "normalize"],
        fixtures::EXAMPLE2_MATRIX_JSON,
    );
    assert_eq!(normalized.status.code(), Some(0));
    let design = run_with_stdin(
        &["convert", "--direction", "to-design"],
        &stdout(&normalized),
    );
    assert_eq!(design.status.code(), Some(0));
    let verify = run_with_stdin(&["verify"], &stdout(&design));
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn convert_defective_design_is_a_domain_error() {
    // Duplicate a point within one column.
    let defective = fixtures::EXAMPLE1_DESIGN_JSON.replacen("[0, 1, 8]", "[1, 2, 4]", 1);
    let output = run_with_stdin(&["convert", "--direction", "to-matrix"], &defective);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn file_input_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("m5.json");
    let output = run(&[
        "generate",
        "--p",
        "5",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let verify = run(&["verify", "--in", out_path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0));
    // emit is deterministic: file content round-trips byte-for-byte
    let text = fs::read_to_string(&out_path).unwrap();
    assert_eq!(gbtd::emit(&gbtd::parse(&text).unwrap()), text);
}

#[test]
fn lemma3_output_and_exit_codes() {
    let output = run(&["lemma3", "--p", "5"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "4 2\n".repeat(5));
    let output = run(&["lemma3", "--p", "13"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "12 6\n".repeat(13));
    let output = run(&["lemma3", "--p", "6"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn fixture_files_round_trip_byte_exact() {
    for text in [
        fixtures::EXAMPLE1_DESIGN_JSON,
        fixtures::EXAMPLE2_MATRIX_JSON,
        fixtures::EXAMPLE3_MATRIX_JSON,
    ] {
        assert_eq!(gbtd::emit(&gbtd::parse(text).unwrap()), text);
    }
}
