//! End-to-end runs of the compiled binary: exit codes, formats, and the
//! grid export contract.

use std::process::{Command, Output};

use mnv_cli::CertRow;

fn mnv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mnv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("utf-8 stderr")
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = mnv(&["verify", "--check", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dbar_certificate_passes_in_json() {
    let out = mnv(&["verify", "--check", "dbar", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let rows: Vec<CertRow> = serde_json::from_str(stdout_of(&out).trim()).expect("json rows");
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].check, "dbar");
    assert_eq!(rows[0].status, "pass");
    assert!(rows[0].terms > 0);
}

#[test]
fn too_tight_tolerance_exits_one() {
    let out = mnv(&["integrate", "--s", "1", "--tol", "1e-12"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("1e-12"));
}

#[test]
fn ray_probe_off_the_singular_slice_is_rejected() {
    let out = mnv(&["probe", "ray", "--phi", "0", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("s = 0"));
}

#[test]
fn ray_probe_recovers_the_angular_limit() {
    let out = mnv(&["probe", "ray", "--phi", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let parsed: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    let limit = parsed["extrapolated_limit"].as_f64().unwrap();
    assert!((limit - (-1.0)).abs() < 1e-6, "limit {limit}");
    assert_eq!(parsed["reference"].as_f64().unwrap(), -1.0);
    assert!(parsed["deviation"].as_f64().unwrap() < 1e-6);
}

#[test]
fn export_grid_holds_the_exact_corner_value() {
    let out = mnv(&[
        "export", "--nx", "3", "--ny", "3", "--xmin", "-1", "--xmax", "1", "--ymin", "-1",
        "--ymax", "1", "--s", "1", "--field", "U",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<&str> = stdout_of(&out).lines().collect();
    assert_eq!(lines[0], "x,y,re,im");
    assert_eq!(lines.len(), 1 + 9);
    let corner = lines
        .iter()
        .find(|l| l.starts_with("1.0000000000000000e0,1.0000000000000000e0"))
        .expect("corner row");
    let re: f64 = corner.split(',').nth(2).unwrap().parse().unwrap();
    assert!((re - 18.0 / 29.0).abs() < 1e-15, "corner value {re}");
}

#[test]
fn export_leaves_singular_cells_empty() {
    let out = mnv(&[
        "export", "--nx", "3", "--ny", "3", "--xmin", "-1", "--xmax", "1", "--ymin", "-1",
        "--ymax", "1", "--s", "0", "--field", "U",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let singular: Vec<&str> = stdout_of(&out)
        .lines()
        .filter(|l| l.ends_with(",,"))
        .collect();
    assert_eq!(singular.len(), 1);
    assert!(singular[0].starts_with("0.0000000000000000e0,0.0000000000000000e0"));
}

#[test]
fn export_of_q_is_purely_real() {
    let out = mnv(&[
        "export", "--nx", "4", "--ny", "4", "--xmin", "-2", "--xmax", "2", "--ymin", "-2",
        "--ymax", "2", "--s", "1", "--field", "Q",
    ]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout_of(&out).lines().skip(1) {
        assert_eq!(line.split(',').nth(3), Some("0.0000000000000000e0"));
    }
}

#[test]
fn degenerate_grids_are_usage_errors() {
    let bad_n = mnv(&[
        "export", "--nx", "1", "--ny", "3", "--xmin", "-1", "--xmax", "1", "--ymin", "-1",
        "--ymax", "1",
    ]);
    assert_eq!(bad_n.status.code(), Some(2));
    let bad_range = mnv(&[
        "export", "--nx", "3", "--ny", "3", "--xmin", "1", "--xmax", "-1", "--ymin", "-1",
        "--ymax", "1",
    ]);
    assert_eq!(bad_range.status.code(), Some(2));
}

#[test]
fn exact_eval_prints_a_ratio() {
    let out = mnv(&[
        "eval", "--expr", "(x^2 - y^2)/(x^2 + y^2 + 1)", "--x", "1", "--y", "0", "--exact",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "1/2\n");
}

#[test]
fn dangling_operator_reports_its_position() {
    let out = mnv(&["eval", "--expr", "x +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("position 3"), "{}", stderr_of(&out));
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = std::env::temp_dir().join("mnv-cli-out-flag");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.csv");
    let args = [
        "export", "--nx", "3", "--ny", "2", "--xmin", "0", "--xmax", "1", "--ymin", "0",
        "--ymax", "1", "--s", "1",
    ];
    let direct = mnv(&args);
    let mut with_out: Vec<&str> = args.to_vec();
    let path_text = path.to_str().unwrap();
    with_out.extend_from_slice(&["--out", path_text]);
    let redirected = mnv(&with_out);
    assert_eq!(redirected.status.code(), Some(0));
    assert!(redirected.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}
