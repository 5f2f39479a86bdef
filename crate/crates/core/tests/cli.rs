//! End-to-end runs of the `haratara` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_haratara");

fn fixture_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/ad_perception.rsk")
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture_arg() -> String {
    fixture_path().to_str().unwrap().to_string()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_fixture_reports_only_the_override() {
    let o = run(&["check", &fixture_arg()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
    let err = stderr(&o);
    let lines: Vec<&str> = err.lines().collect();
    assert_eq!(lines.len(), 1, "{err}");
    assert!(lines[0].starts_with("warning W-OVR 144:"), "{}", lines[0]);
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write_temp(&dir, "broken.rsk", "item \"x\" {\n  function\n}\n");
    let o = run(&["check", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error E-SYNTAX 3:1"), "{}", stderr(&o));

    let fixture = fs::read_to_string(fixture_path()).unwrap();
    let lint_error = write_temp(
        &dir,
        "nogoal.rsk",
        &fixture.replace(
            "  safety_goal: \"Ensure robustness of perception models against adversarial manipulation in sensor inputs or the environment\"\n",
            "",
        ),
    );
    let o = run(&["check", &lint_error]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("error E-NOGOAL"), "{}", stderr(&o));

    let missing = dir.path().join("missing.rsk");
    let o = run(&["check", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn check_many_files_prefixes_paths_and_keeps_worst_status() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write_temp(&dir, "broken.rsk", "item {");
    let fixture = fixture_arg();
    let o = run(&["check", &fixture, &broken]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    let lines: Vec<&str> = err.lines().collect();
    assert!(lines[0].starts_with(&format!("{fixture}: warning W-OVR")), "{err}");
    assert!(lines[1..].iter().all(|l| l.starts_with(&format!("{broken}: error "))), "{err}");
}

#[test]
fn lookups() {
    let o = run(&["asil", "--severity", "S3", "--exposure", "E4", "--controllability", "C3"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "D\n"));
    let o = run(&["asil", "--severity", "S0", "--exposure", "E4", "--controllability", "C3"]);
    assert_eq!(stdout(&o), "QM\n");
    let o = run(&["risk", "--impact", "high", "--feasibility", "medium"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "High\n"));
    let o = run(&["risk", "--impact", "medium", "--feasibility", "low"]);
    assert_eq!(stdout(&o), "Low\n");
}

#[test]
fn custom_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let mut rows = String::from("# strict matrix\n");
    for i in ["low", "medium", "high"] {
        for f in ["low", "medium", "high"] {
            let r = if i == "low" && f == "low" { "low" } else { "high" };
            rows.push_str(&format!("{i},{f},{r}\n"));
        }
    }
    let strict = write_temp(&dir, "strict.csv", &rows);
    let o = run(&["risk", "--impact", "low", "--feasibility", "medium", "--matrix", &strict]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "High\n"));

    let o = run(&["what-if", &fixture_arg(), "--matrix", &strict, "--set", "T-E2.feasibility=low"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");

    let not_monotone = rows.replace("high,high,high", "high,high,low");
    let bad = write_temp(&dir, "bad.csv", &not_monotone);
    let o = run(&["check", &fixture_arg(), "--matrix", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("E-MONOTONE"), "{}", stderr(&o));

    let incomplete: String = rows.lines().take(5).map(|l| format!("{l}\n")).collect();
    let partial = write_temp(&dir, "partial.csv", &incomplete);
    let o = run(&["check", &fixture_arg(), "--matrix", &partial]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).matches("E-INCOMPLETE").count(), 5);

    let garbage = write_temp(&dir, "garbage.csv", "high;high;high\n");
    let o = run(&["check", &fixture_arg(), "--matrix", &garbage]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_to_stdout_and_file() {
    let o = run(&["report", &fixture_arg(), "--table", "hara", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let md = stdout(&o);
    assert_eq!(md.lines().filter(|l| l.starts_with("| ")).count(), 6, "{md}");
    assert!(md.lines().nth(2).unwrap().starts_with("| E | Delayed perception"), "{md}");

    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("tara.json");
    let o = run(&[
        "report",
        &fixture_arg(),
        "--table",
        "tara",
        "--format",
        "json",
        "-o",
        target.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 9);
}

#[test]
fn report_refuses_models_with_errors_unless_forced() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = fs::read_to_string(fixture_path()).unwrap();
    let text = fixture.replacen("treatment: reduction  # robust training, detection", "treatment: acceptance", 1);
    assert_ne!(text, fixture);
    let path = write_temp(&dir, "accept.rsk", &text);

    let o = run(&["report", &path, "--table", "tara", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "");
    assert!(stderr(&o).contains("E-ACCEPT"));

    let o = run(&["report", &path, "--table", "tara", "--format", "csv", "--force"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().count(), 10);
}

#[test]
fn what_if_prints_deltas_and_rejects_bad_overrides() {
    let o = run(&[
        "what-if",
        &fixture_arg(),
        "--set",
        "H-G.exposure=E2",
        "--set",
        "T-R1.feasibility=low",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "H-G: D -> B\nT-R1: High -> Medium\n");

    let o = run(&["what-if", &fixture_arg()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), ""));

    for (set, code) in [
        ("H-Z.exposure=E2", "E-REF"),
        ("H-G.exposure=E9", "E-ENUM"),
        ("H-G.impact=high", "E-FIELD"),
        ("T-R1.severity=S1", "E-FIELD"),
    ] {
        let o = run(&["what-if", &fixture_arg(), "--set", set]);
        assert_eq!(o.status.code(), Some(3), "{set}");
        assert!(stderr(&o).contains(code), "{set}: {}", stderr(&o));
        assert_eq!(stdout(&o), "");
    }
}

#[test]
fn standards_queries() {
    let o = run(&["standards", "--limitation", "efficiency"]);
    assert_eq!(stdout(&o), "ISO PAS 8800\nANSI/UL 4600\n");
    let o = run(&["standards", "--limitation", "P"]);
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = run(&["standards", "--id", "ISO 26262"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), ""));
    let o = run(&["standards", "--id", "ISO 9001"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("E-UNKNOWN-STD"));
}

#[test]
fn fmt_prints_canonical_text_and_write_is_idempotent() {
    let o = run(&["fmt", &fixture_arg()]);
    assert_eq!(o.status.code(), Some(0));
    let canonical = stdout(&o);
    assert!(canonical.starts_with("item \"DNN-based perception module\" {\n"));
    assert!(!canonical.contains('#'));

    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "m.rsk", &fs::read_to_string(fixture_path()).unwrap());
    assert_eq!(run(&["fmt", &path, "--write"]).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&path).unwrap(), canonical);
    assert_eq!(run(&["fmt", &path, "--write"]).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&path).unwrap(), canonical);
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(run(&[]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["report", &fixture_arg(), "--table", "hara"]).status.code(), Some(3));
    assert_eq!(
        run(&["report", &fixture_arg(), "--table", "nope", "--format", "md"]).status.code(),
        Some(3)
    );
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("what-if"));
}
