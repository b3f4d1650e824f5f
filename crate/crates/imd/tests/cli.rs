//! End-to-end tests of the `imd` binary: subcommands, exit codes, file
//! outputs, and run-to-run determinism of the CSV report.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn imd() -> Command {
    Command::new(env!("CARGO_BIN_EXE_imd"))
}

fn run(args: &[&str]) -> Output {
    imd().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const TINY_CONFIG: &str = r#"
experiment_id = "cli-tiny"
mode = "discrete"
problem = "linear_loss"
geometry = "entropic_simplex"
dimension = 5
horizon = 200
checkpoints = [50, 200]
replications = 8
base_seed = 11
"#;

fn write_config(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("tiny.toml");
    fs::write(&path, TINY_CONFIG).unwrap();
    path
}

/// Drop the wall_time column so byte comparisons ignore timing noise.
fn strip_wall(csv: &str) -> String {
    csv.lines()
        .map(|l| &l[..l.rfind(',').unwrap()])
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["run"]); // missing --config
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "experiment_id = \"x\"\nmode = \"discrete\"\n").unwrap();
    let out = run(&["run", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "run",
        "--config",
        dir.path().join("absent.toml").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_all_passes_and_prints_verdicts() {
    let out = run(&["check", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!text.contains("FAIL"));
    // Individual suites work too.
    for suite in ["gradients", "lipschitz", "feasibility"] {
        let out = run(&["check", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0));
    }
    let out = run(&["check", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_writes_csv_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");

    let out = run(&[
        "run",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_a.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));

    // Second run with an explicit thread count.
    let out = run(&[
        "run",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_b.to_str().unwrap(),
        "--threads",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let csv_a = fs::read_to_string(out_a.join("cli-tiny.csv")).unwrap();
    let csv_b = fs::read_to_string(out_b.join("cli-tiny.csv")).unwrap();
    assert!(csv_a.starts_with("run_id,seed,t,gap,bound,feasibility_violation,wall_time\n"));
    assert_eq!(strip_wall(&csv_a), strip_wall(&csv_b));
    // 8 replications x 2 checkpoints + 2 aggregate rows + header.
    assert_eq!(csv_a.lines().count(), 1 + 8 * 2 + 2);
}

#[test]
fn run_overrides_replications_and_seed() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let out = run(&[
        "run",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.path().join("o").to_str().unwrap(),
        "--replications",
        "3",
        "--seed",
        "99",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = fs::read_to_string(dir.path().join("o/cli-tiny.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 3 * 2 + 2);
    assert!(csv.contains("0000,99,"));
}

#[test]
fn report_summarizes_existing_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let out_dir = dir.path().join("r");
    let out = run(&[
        "run",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = out_dir.join("cli-tiny.csv");
    let out = run(&["report", "--in", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));

    let out = run(&[
        "report",
        "--in",
        dir.path().join("nope.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_flags_bound_violations_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("violated.csv");
    fs::write(
        &csv,
        "run_id,seed,t,gap,bound,feasibility_violation,wall_time\n\
         0000,1,10,0.9,0.5,0,0.001\n\
         mean,1,10,0.9,0.5,0,0.001\n",
    )
    .unwrap();
    let out = run(&["report", "--in", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    assert!(text.contains("10"));
}

#[test]
fn sweep_runs_a_beta0_grid() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let out_dir = dir.path().join("sweep");
    let out = run(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "--beta0",
        "0.5,1.0,2.0",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let csv = fs::read_to_string(out_dir.join("cli-tiny_sweep.csv")).unwrap();
    assert!(csv.starts_with("beta0,t,mean_gap,bound,ratio\n"));
    // 3 beta0 values x 2 checkpoints.
    assert_eq!(csv.lines().count(), 1 + 6);

    let out = run(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "--beta0",
        "0.5,nope",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn continuous_config_runs_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flow.toml");
    fs::write(
        &path,
        r#"
experiment_id = "cli-flow"
mode = "continuous"
problem = "quadratic"
dimension = 3
matrix_diag = [0.5, 1.0, 2.0]
x_star = [0.6, 0.0, -0.8]
t_end = 20.0
checkpoints = [1.0, 10.0, 20.0]
"#,
    )
    .unwrap();
    let out = run(&[
        "run",
        "--config",
        path.to_str().unwrap(),
        "--out",
        dir.path().join("flow").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let csv = fs::read_to_string(dir.path().join("flow/cli-flow.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 3 + 3);
}
