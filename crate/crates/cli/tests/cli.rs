//! End-to-end runs of the `eqpent` binary: exit codes, written files and
//! the integrity record on stderr.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn eqpent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqpent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Shared with the core tests so the resultant is computed at most once.
fn cache_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("eqpent-cache")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn classify_verify_tamper_and_figures() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.toml");
    let cache = cache_dir();
    let out = eqpent(&["classify", "--out", arg(&cert), "--cache-dir", arg(&cache)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("2 certified of 36 candidates"));

    let out = eqpent(&["verify", arg(&cert)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(String::from_utf8_lossy(&out.stdout).contains("ok: 51 records checked"));

    let csv = dir.path().join("regular.csv");
    let out = eqpent(&[
        "figure",
        "regular",
        "--cert",
        arg(&cert),
        "--out",
        arg(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("config,branch,shape,vertex,x,y,x_digits,y_digits")
    );
    assert_eq!(lines.count(), 5);

    let out = eqpent(&["figure", "concave", "--cert", arg(&cert)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(String::from_utf8_lossy(&out.stdout).contains("concave,+,concave,5,0.000000000000,"));

    // a certified candidate relabelled as discarded
    let original = std::fs::read_to_string(&cert).unwrap();
    let tampered = dir.path().join("tampered.toml");
    let edited = original.replacen("verdict = \"certified\"", "verdict = \"discarded-h1\"", 1);
    assert_ne!(edited, original);
    std::fs::write(&tampered, edited).unwrap();
    let out = eqpent(&["verify", arg(&tampered)]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("[integrity_failure]"), "{err}");
    assert!(err.contains("kind = \"verification\""), "{err}");
    assert!(err.contains("[[integrity_failure.records]]"), "{err}");
}

#[test]
fn missing_certificate_is_an_integrity_failure() {
    let dir = tempfile::tempdir().unwrap();
    let out = eqpent(&["figure", "concave"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("missing-certificate"));
    let absent = dir.path().join("absent.toml");
    let out = eqpent(&["verify", arg(&absent)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("[integrity_failure]"));
}

#[test]
fn gallery_needs_no_certificate() {
    let out = eqpent(&["figure", "gallery"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 1 + 7 * 5);
    assert!(text.contains("plus-flat-sqrt3/2,+,degenerate,"));
}

#[test]
fn r60_roots() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r60.csv");
    let out = eqpent(&["roots", "R60", "--out", arg(&csv)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 14);
    assert!(text.contains(",R60,2.0970716051"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["roots", "X"][..],
        &["roots", "R60", "--range", "1,0"],
        &["classify", "--precision", "3e-4"],
        &["classify", "--precision", "1e-31"],
        &["frobnicate"],
        &["figure", "hexagon"],
        &[],
    ] {
        let out = eqpent(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}
