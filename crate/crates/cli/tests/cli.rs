//! End-to-end tests of the `pfrep` binary: exit codes, the RESULT line
//! contract, file roundtrips, and byte determinism.

use std::fs;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pfrep"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

/// The last line the process writes to stderr must be the RESULT summary,
/// carrying the same exit code the process returned.
fn result_line(stderr: &str, code: i32) -> String {
    let last = stderr
        .trim_end()
        .lines()
        .last()
        .unwrap_or_default()
        .to_string();
    assert!(
        last.starts_with("RESULT command="),
        "last stderr line should be the RESULT summary, got: {last:?}"
    );
    assert!(
        last.contains(&format!("exit={code}")),
        "RESULT should carry exit={code}: {last:?}"
    );
    last
}

#[test]
fn represent_verify_roundtrip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let rep_path = dir.path().join("rep.json");

    let (code, stdout, stderr) = run(&["represent", "--ring", "int", "x^4 + y^4 + z^4"]);
    assert_eq!(code, 0, "stderr: {stderr}");
    result_line(&stderr, 0);

    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("stdout is one JSON doc");
    assert_eq!(doc["degree"], 4);
    assert_eq!(doc["size"], 8);
    assert_eq!(doc["ring"], "int");
    fs::write(&rep_path, &stdout).unwrap();

    let (code, stdout, stderr) = run(&[
        "verify",
        "--cross-check",
        "x^4 + y^4 + z^4",
        rep_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("pfaffian: match"));
    assert!(stdout.contains("determinant: match"));
    result_line(&stderr, 0);
}

#[test]
fn represent_rejects_degree_six() {
    let (code, _, stderr) = run(&["represent", "x^6"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("unsupported degree 6"));
    result_line(&stderr, 3);
}

#[test]
fn represent_reports_parse_offset() {
    let (code, _, stderr) = run(&["represent", "x^"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("offset 2"), "stderr: {stderr}");
    result_line(&stderr, 2);
}

#[test]
fn represent_handles_composite_modulus() {
    let (code, stdout, _) = run(&["represent", "--ring", "mod:6", "x*y"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["size"], 4);
    assert_eq!(doc["ring"], "mod:6");
}

#[test]
fn represent_symbolic_ring_needs_degree() {
    let (code, _, stderr) = run(&["represent", "--ring", "sym", "x^2"]);
    assert_eq!(code, 2);
    result_line(&stderr, 2);

    let (code, stdout, _) = run(&[
        "represent",
        "--ring",
        "sym",
        "--degree",
        "2",
        "T1*x^2 + T2*y^2 + T3*z^2 + T4*x*y + T5*x*z + T6*y*z",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["ring"], "sym");
}

#[test]
fn verify_flags_a_tampered_entry() {
    let dir = tempfile::tempdir().unwrap();
    let rep_path = dir.path().join("rep.json");

    let (code, stdout, _) = run(&["represent", "x^2 + 3*y*z"]);
    assert_eq!(code, 0);
    let mut doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    doc["matrices"]["A"][0][2] = serde_json::Value::String("2".into());
    fs::write(&rep_path, serde_json::to_string(&doc).unwrap()).unwrap();

    let (code, stdout, stderr) = run(&["verify", "x^2 + 3*y*z", rep_path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("pfaffian: mismatch"));
    assert!(
        stdout.contains("Pf(M) - f = "),
        "difference printed: {stdout}"
    );
    result_line(&stderr, 1);
}

#[test]
fn verify_rejects_ring_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let rep_path = dir.path().join("rep.json");
    let (code, stdout, _) = run(&["represent", "x^2"]);
    assert_eq!(code, 0);
    fs::write(&rep_path, &stdout).unwrap();

    let (code, _, stderr) = run(&["verify", "--ring", "rat", "x^2", rep_path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("ring mismatch"));
    result_line(&stderr, 2);
}

#[test]
fn verify_rejects_malformed_document() {
    let dir = tempfile::tempdir().unwrap();
    let rep_path = dir.path().join("rep.json");
    fs::write(&rep_path, "{ not json").unwrap();
    let (code, _, stderr) = run(&["verify", "x^2", rep_path.to_str().unwrap()]);
    assert_eq!(code, 2);
    result_line(&stderr, 2);
}

#[test]
fn pf_computes_the_four_by_four_instance() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    fs::write(
        &path,
        r#"{"size": 4, "entries": [[1,2,"2"],[1,3,"3"],[1,4,"1"],[2,3,"4"],[2,4,"7"],[3,4,"5"]]}"#,
    )
    .unwrap();
    let (code, stdout, stderr) = run(&["pf", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "-7");
    assert!(result_line(&stderr, 0).contains("value=-7"));
}

#[test]
fn pf_base_case_and_empty_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let two = dir.path().join("two.json");
    fs::write(&two, r#"{"size": 2, "entries": [[1,2,"5"]]}"#).unwrap();
    let (code, stdout, _) = run(&["pf", two.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "5");

    let empty = dir.path().join("empty.json");
    fs::write(&empty, r#"{"size": 4, "entries": []}"#).unwrap();
    let (code, stdout, _) = run(&["pf", empty.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "0");
}

#[test]
fn pf_rejects_odd_size_with_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("odd.json");
    fs::write(&path, r#"{"size": 3, "entries": [[1,2,"1"]]}"#).unwrap();
    let (code, _, stderr) = run(&["pf", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    result_line(&stderr, 3);

    let bad = dir.path().join("bad.json");
    fs::write(&bad, "nope").unwrap();
    let (code, _, stderr) = run(&["pf", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    result_line(&stderr, 2);
}

#[test]
fn nice_verdicts_by_degree() {
    for degree in ["2", "3", "4"] {
        let (code, stdout, _) = run(&["nice", degree]);
        assert_eq!(code, 0, "degree {degree}");
        assert!(stdout.contains("nice: true"), "degree {degree}: {stdout}");
    }

    let (code, stdout, _) = run(&["nice", "5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("nice: false"));
    assert!(
        stdout.contains("entry A(2,3) = "),
        "witnesses listed: {stdout}"
    );

    let (code, _, stderr) = run(&["nice", "7"]);
    assert_eq!(code, 3);
    result_line(&stderr, 3);
}

#[test]
fn nice_json_format_is_structured() {
    let (code, stdout, _) = run(&["nice", "--format", "json", "5"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["nice"], false);
    assert!(!doc["entry_violations"].as_array().unwrap().is_empty());
}

#[test]
fn selftest_is_deterministic_and_passes() {
    let (code, out1, err1) = run(&["selftest", "--trials", "2"]);
    assert_eq!(code, 0, "stderr: {err1}");
    let (code, out2, err2) = run(&["selftest", "--trials", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out1, out2, "stdout must be byte-identical across runs");
    assert_eq!(err1, err2);
    assert!(out1.contains("5/5 symbolic identities, 2\u{d7}4 ring trials: all pass"));
    result_line(&err1, 0);
}

#[test]
fn selftest_single_ring_narrows_the_trials() {
    let (code, stdout, _) = run(&["selftest", "--trials", "1", "--ring", "mod:6"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("trials degree 5 ring mod:6: 1/1"));
    assert!(!stdout.contains("ring int:"));
}

#[test]
fn usage_errors_still_emit_the_result_line() {
    let (code, _, stderr) = run(&["bogus"]);
    assert_eq!(code, 2);
    result_line(&stderr, 2);

    let (code, _, stderr) = run(&["selftest", "--trials", "0"]);
    assert_eq!(code, 2);
    result_line(&stderr, 2);
}
