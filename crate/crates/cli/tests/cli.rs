//! End-to-end tests of the command-line front end: binary invocations over
//! real problem files, exit codes, CSV formats and the JSON round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

use deltashell_cli::commands::{self, Options};
use deltashell_cli::problem::ProblemFile;
use deltashell_cli::report::Report;

fn write_problem(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltashell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

const SINGLE_DEEP: &str = r#"
[shells]
radii = [1.0]
strengths = [-3.0]

[channel]
l = 0.0

[space]
n = 3
"#;

const DEGENERATE_PAIR: &str = r#"
[shells]
radii = [1.0, 1.5]
strengths = [-2.0, 2.0]

[channel]
l = 0.0
"#;

#[test]
fn kappa_reports_the_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "p.toml", SINGLE_DEEP);
    let out = run(&["kappa", path.to_str().unwrap(), "--oracle"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kappa_minus: 1"), "{text}");
    assert!(text.contains("oracle_agrees: true"), "{text}");
}

#[test]
fn kappa_notes_the_degenerate_determinant() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "p.toml", DEGENERATE_PAIR);
    let out = run(&["kappa", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kappa_minus: 0"), "{text}");
    assert!(text.contains("singular"), "{text}");
}

#[test]
fn malformed_file_fails_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "broken.toml", "[shells]\nradii = [1.0]\nstrengths = [1.0, 2.0]\n[channel]\nl = 0.0\n");
    let out = run(&["kappa", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("differ in length"), "{err}");

    let out = run(&["kappa", dir.path().join("missing.toml").to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn bounds_reports_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"
[shells]
radii = [0.3333333333333333, 1.0]
strengths = [-2.0, -0.3333333333333333]

[channel]
l = 0.0
"#;
    let path = write_problem(&dir, "p.toml", body);
    let out = run(&["bounds", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("bargmann_bound: 1"), "{text}");
    assert!(text.contains("matrix-norm-certificate"), "{text}");
    assert!(text.contains("kappa_minus: 0"), "{text}");
}

#[test]
fn bounds_short_circuits_for_repulsive_families() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"
[shells]
radii = [1.0, 2.0]
strengths = [3.0, 0.5]

[channel]
l = 0.0
"#;
    let path = write_problem(&dir, "p.toml", body);
    let out = run(&["bounds", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kappa_minus: 0"), "{text}");
    assert!(text.contains("negative-strength-count-bound"), "{text}");
}

#[test]
fn total_respects_the_channel_cap() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"
[shells]
radii = [1.0]
strengths = [-60.0]

[channel]
l = 0.0

[space]
n = 3
"#;
    let path = write_problem(&dir, "p.toml", body);
    let out = run(&["total", path.to_str().unwrap(), "--lmax", "3"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("channel cap"), "{err}");

    let out = run(&["total", path.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn criteria_reports_infinite_deficiency_for_the_critical_family() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"
[family]
kind = "harmonic"
law = "linear"
slope = 1.0
remainder = "power"
remainder_exponent = 0.5
"#;
    let path = write_problem(&dir, "p.toml", body);
    let out = run(&["criteria", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n_pm: infinite"), "{text}");
    assert!(text.contains("channel/discrete"), "{text}");
}

#[test]
fn criteria_inconclusive_for_unasserted_samples() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"
[family]
kind = "sampled"
spacings = [1.0, 1.0, 1.0, 1.0]
strengths = [-1.0, -0.5, -0.25, -0.125]
"#;
    let path = write_problem(&dir, "p.toml", body);
    let out = run(&["criteria", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("inconclusive"), "{text}");
}

#[test]
fn total_writes_the_ledger_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "p.toml", SINGLE_DEEP);
    let csv_path = dir.path().join("ledger.csv");
    let out = run(&[
        "total",
        path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("kappa_minus_total: 1"));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("l,l_eff,mult,kappa"));
    assert_eq!(lines.next(), Some("0,0,1,1"));
}

#[test]
fn sweep_emits_csv_rows_in_grid_order() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"
[shells]
radii = [1.0]
strengths = [-3.0]

[channel]
l = 0.0

[sweep]
x = { param = "strength", index = 1, from = -4.0, to = -1.0, steps = 4 }
"#;
    let path = write_problem(&dir, "p.toml", body);
    let out = run(&["sweep", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "strength1,kappa");
    assert_eq!(lines[1], "-4,1");
    assert_eq!(lines[4], "-1,0");

    // deterministic output
    let again = run(&["sweep", path.to_str().unwrap()]);
    assert_eq!(text, stdout(&again));
}

#[test]
fn sweep_supports_two_axes() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"
[shells]
radii = [1.0, 2.0]
strengths = [-2.0, -2.0]

[channel]
l = 0.0

[sweep]
x = { param = "strength", index = 1, from = -4.0, to = -1.0, steps = 2 }
y = { param = "radius", index = 1, from = 0.5, to = 1.5, steps = 2 }
"#;
    let path = write_problem(&dir, "p.toml", body);
    let csv_path = dir.path().join("grid.csv");
    let out = run(&[
        "sweep",
        path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "strength1,radius1,kappa");
    assert_eq!(lines.len(), 5, "{csv}");
    // deep first shell at either radius plus the deep outer shell: two states
    assert_eq!(lines[1], "-4,0.5,2");
}

#[test]
fn criteria_for_finite_families() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "p.toml", SINGLE_DEEP);
    let out = run(&["criteria", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("essential_spectrum: positive half line"), "{text}");
    assert!(text.contains("channel/self-adjoint/finite-family"), "{text}");
}

#[test]
fn oracle_check_agrees_with_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "p.toml", SINGLE_DEEP);
    let out = run(&[
        "oracle-check",
        path.to_str().unwrap(),
        "--length",
        "50",
        "--mesh",
        "0.001",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("agreement: true"), "{text}");
    assert!(text.contains("fd_count: 1"), "{text}");
}

#[test]
fn json_report_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "p.toml", SINGLE_DEEP);

    // through the binary
    let out = run(&["kappa", path.to_str().unwrap(), "--json", "--oracle"]);
    assert!(out.status.success());
    let parsed: Report = serde_json::from_str(&stdout(&out)).unwrap();

    // and in-process: the parsed report must equal the library result
    let problem = ProblemFile::load(&path).unwrap();
    let direct = commands::run_kappa(
        &problem,
        &Options {
            oracle: true,
            ..Options::default()
        },
    )
    .unwrap();
    assert_eq!(parsed, direct);

    // numeric fields survive the round trip bit-exactly
    let reparsed: Report = serde_json::from_str(&direct.to_json()).unwrap();
    assert_eq!(reparsed, direct);
}

#[test]
fn json_total_preserves_float_values_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"
[shells]
radii = [0.7, 1.9]
strengths = [-2.3, -0.6]

[channel]
l = 0.5

[space]
n = 2
"#;
    let path = write_problem(&dir, "p.toml", body);
    let problem = ProblemFile::load(&path).unwrap();
    let report = commands::run_total(&problem, &Options::default()).unwrap();
    let reparsed: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(reparsed, report);
}
