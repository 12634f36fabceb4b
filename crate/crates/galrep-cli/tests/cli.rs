//! End-to-end command-line tests, including the byte-level determinism
//! contract of the full run.

use std::process::{Command, Output};

fn galrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galrep"))
        .args(args)
        .env_remove("GALREP_GOLDEN_DIR")
        .output()
        .expect("binary runs")
}

#[test]
fn full_run_is_byte_identical() {
    let first = galrep(&["all"]);
    let second = galrep(&["all"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn full_run_matches_golden_file() {
    let golden_dir = concat!(env!("CARGO_MANIFEST_DIR"), "/golden");
    let out = Command::new(env!("CARGO_BIN_EXE_galrep"))
        .args(["all"])
        .env("GALREP_GOLDEN_DIR", golden_dir)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "golden comparison failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"matches\": true"));
}

#[test]
fn unknown_label_is_usage_error() {
    let out = galrep(&["reps", "show", "no-such-label"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = galrep(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_row() {
    let out = galrep(&["reps", "verify", "D(2,0,0)"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"outcome\": \"pass\""));
}

#[test]
fn classification_row_count() {
    let out = galrep(&["classify", "search", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    // Header plus the ten classes.
    assert_eq!(text.trim().lines().count(), 11);
}

#[test]
fn legacy_alias_accepted() {
    let out = galrep(&["reps", "verify", "D_5"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("D(1,2,1)"));
}

#[test]
fn fields_from_potential_file() {
    let dir = std::env::temp_dir().join("galrep-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("potential.json");
    std::fs::write(&path, r#"{"a4": "x1"}"#).unwrap();
    let out = galrep(&["em", "fields", "--potential", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"R\""));
    assert!(text.contains("boost_compatibility_square_commutes\": true"));
}
