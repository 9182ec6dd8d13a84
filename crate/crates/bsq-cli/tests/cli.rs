//! End-to-end tests running the compiled binary.

use std::io::Write as _;
use std::path::Path;
use std::process::{Command, Output};

fn bsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn testdata(name: &str) -> String {
    format!("{}/testdata/{}", env!("CARGO_MANIFEST_DIR"), name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn k3_new_model_is_fifty_dimensional() {
    let out = bsq(&["quantize", "--model", "new", "--input", &testdata("k3.json")]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("Q = \u{2102}^50"), "got: {}", text);
    assert!(text.contains("dim = 50"), "got: {}", text);
}

#[test]
fn k3_old_model_is_infinite_dimensional() {
    let out = bsq(&["quantize", "--model", "old", "--input", &testdata("k3.json")]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("Q = \u{2102}^26 \u{2295} (C^\u{221e}(\u{211d};\u{2102}))^24"),
        "got: {}",
        text
    );
    assert!(!text.contains("dim ="), "no finite dim line for infinite spaces: {}", text);
}

#[test]
fn k3_new_json_report() {
    let out = bsq(&["quantize", "--model", "new", "--input", &testdata("k3.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(
        value,
        serde_json::json!({
            "model": "new",
            "degree": 2,
            "finite_dim": 50,
            "infinite": []
        })
    );
}

#[test]
fn one_dimensional_old_model_renders_taylor_summands() {
    let out = bsq(&["quantize", "--model", "old", "--input", &testdata("old_dim1.json")]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("Q = \u{2102}^5 \u{2295} (\u{2102}^\u{2115})^4"),
        "got: {}",
        text
    );
}

#[test]
fn toric_count_matches_interior_lattice() {
    let out = bsq(&["quantize", "--model", "toric", "--input", &testdata("triangle8.json")]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("Q = \u{2102}^21"), "got: {}", text);
    assert!(text.contains("dim = 21"), "got: {}", text);
}

#[test]
fn polytope_report_lines() {
    let out = bsq(&[
        "polytope",
        "--input",
        &testdata("triangle8.json"),
        "--check-delzant",
        "--count-interior",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for line in ["dim = 2", "vertices = 3", "facets = 3", "delzant = ok", "interior = 21"] {
        assert!(text.contains(line), "missing {:?} in {}", line, text);
    }
}

#[test]
fn delzant_check_reports_violation_without_failing() {
    let out = bsq(&["polytope", "--input", &testdata("nondelzant.json"), "--check-delzant"]);
    assert_eq!(out.status.code(), Some(0), "inspection is not an error: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("delzant = 1 violations"), "got: {}", text);
    assert!(text.contains("violation at (0, 1): non-unimodular (det = 2)"), "got: {}", text);
}

#[test]
fn toric_model_rejects_nonsmooth_polytope() {
    let out = bsq(&["quantize", "--model", "toric", "--input", &testdata("nondelzant.json")]);
    assert_eq!(out.status.code(), Some(1), "domain error: {}", stdout(&out));
    assert!(stderr(&out).contains("smoothness"), "got: {}", stderr(&out));
}

#[test]
fn svg_output_is_byte_stable_with_21_points() {
    let dir = tempfile::tempdir().expect("tempdir");
    let first = dir.path().join("a.svg");
    let second = dir.path().join("b.svg");
    for path in [&first, &second] {
        let out = bsq(&[
            "polytope",
            "--input",
            &testdata("triangle8.json"),
            "--svg",
            path.to_str().expect("utf8 path"),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    }
    let a = std::fs::read(&first).expect("svg written");
    let b = std::fs::read(&second).expect("svg written");
    assert_eq!(a, b, "identical bytes across runs");
    let doc = String::from_utf8(a).expect("utf8 svg");
    assert_eq!(doc.matches("<circle").count(), 21);
    assert!(doc.starts_with("<?xml"));
}

#[test]
fn svg_refuses_three_dimensional_input() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("cube.svg");
    let out = bsq(&[
        "polytope",
        "--input",
        &testdata("cube3.json"),
        "--svg",
        path.to_str().expect("utf8 path"),
    ]);
    assert_eq!(out.status.code(), Some(1), "stdout: {}", stdout(&out));
    assert!(!path.exists(), "no partial output file");
}

#[test]
fn cech_band_summary() {
    let out = bsq(&["cech", "--input", &testdata("band.json")]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "H0=0 H1=3 BS={0,1,2}\n");
}

#[test]
fn verify_suites_pass() {
    for suite in ["lifts", "connection", "blocks"] {
        let out = bsq(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "suite {}: {}", suite, stdout(&out));
        let text = stdout(&out);
        assert!(text.contains("ok "), "got: {}", text);
        assert!(!text.contains("FAIL"), "got: {}", text);
        assert!(text.lines().last().expect("summary line").starts_with("passed "));
    }
}

#[test]
fn hyperbolic_multiplicity_refused_with_exit_2() {
    let out = bsq(&["quantize", "--model", "new", "--input", &testdata("hyperbolic2.json")]);
    assert_eq!(out.status.code(), Some(2), "stdout: {}", stdout(&out));
    assert!(stderr(&out).contains("refusing hyperbolic multiplicity 2"), "got: {}", stderr(&out));
}

#[test]
fn usage_errors_exit_64() {
    let unknown = bsq(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(64));
    let missing = bsq(&["quantize", "--model", "new"]);
    assert_eq!(missing.status.code(), Some(64));
    let bad_value = bsq(&["quantize", "--model", "newest", "--input", "x.json"]);
    assert_eq!(bad_value.status.code(), Some(64));
}

#[test]
fn help_exits_zero() {
    let out = bsq(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("quantize"));
}

fn write_temp(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).expect("create temp input");
    f.write_all(contents.as_bytes()).expect("write temp input");
    path.to_str().expect("utf8 path").to_string()
}

#[test]
fn input_errors_exit_65() {
    let dir = tempfile::tempdir().expect("tempdir");

    let missing = bsq(&["cech", "--input", "/nonexistent/band.json"]);
    assert_eq!(missing.status.code(), Some(65));

    let malformed = write_temp(dir.path(), "bad.json", "{not json");
    let out = bsq(&["cech", "--input", &malformed]);
    assert_eq!(out.status.code(), Some(65));

    let float = write_temp(
        dir.path(),
        "float.json",
        r#"{"band": {"interval": ["0.5", "2"], "cover_size": 3}}"#,
    );
    let out = bsq(&["cech", "--input", &float]);
    assert_eq!(out.status.code(), Some(65), "decimal strings are not rationals");
    assert!(stderr(&out).contains("band.interval[0]"), "got: {}", stderr(&out));

    let wrong_variant = bsq(&["cech", "--input", &testdata("triangle8.json")]);
    assert_eq!(wrong_variant.status.code(), Some(65), "polytope file fed to cech");

    let unknown_field = write_temp(
        dir.path(),
        "extra.json",
        r#"{"band": {"interval": ["0", "2"], "cover_size": 3, "color": "red"}}"#,
    );
    let out = bsq(&["cech", "--input", &unknown_field]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn reports_are_deterministic() {
    let a = bsq(&["quantize", "--model", "new", "--input", &testdata("k3.json"), "--json"]);
    let b = bsq(&["quantize", "--model", "new", "--input", &testdata("k3.json"), "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let c = bsq(&["cech", "--input", &testdata("band.json")]);
    let d = bsq(&["cech", "--input", &testdata("band.json")]);
    assert_eq!(c.stdout, d.stdout);
}
