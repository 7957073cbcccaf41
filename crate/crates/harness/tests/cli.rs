//! End-to-end checks of the `mscs` binary: flags, config-file overrides and
//! output files.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mscs"))
}

fn tmp(tag: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("mscs_cli_{tag}"));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn bench_writes_expected_csvs() {
    let out = tmp("bench");
    let status = bin()
        .args([
            "bench", "--function", "f5", "--dim", "2", "--algo", "both",
            "--trials", "2", "--iters", "20", "--seed", "5",
        ])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let results = std::fs::read_to_string(out.join("results.csv")).unwrap();
    assert_eq!(
        results.lines().next().unwrap(),
        "problem,algo,trial,best_f,e_f,fe_used"
    );
    assert_eq!(results.lines().count(), 5, "2 trials x 2 algorithms + header");
    let summary = std::fs::read_to_string(out.join("summary.csv")).unwrap();
    assert_eq!(
        summary.lines().next().unwrap(),
        "problem,algo,best_e,mean_e,fe_mean"
    );
    assert!(results.ends_with('\n'));
    assert!(!results.contains('\r'), "newlines must be plain \\n");
}

#[test]
fn config_file_overrides_cli_flags() {
    let out_flag = tmp("cfg_flag");
    let out_file = tmp("cfg_file");
    let cfg_path = std::env::temp_dir().join("mscs_cli_cfg.txt");
    std::fs::write(
        &cfg_path,
        format!("trials = 1\nout = {}\n", out_file.display()),
    )
    .unwrap();
    let status = bin()
        .args([
            "bench", "--function", "f5", "--dim", "2", "--algo", "mscs",
            "--trials", "4", "--iters", "10", "--seed", "5",
        ])
        .arg("--out")
        .arg(&out_flag)
        .arg("--config")
        .arg(&cfg_path)
        .status()
        .unwrap();
    assert!(status.success());
    assert!(!out_flag.exists(), "config file should override --out");
    let results = std::fs::read_to_string(out_file.join("results.csv")).unwrap();
    assert_eq!(results.lines().count(), 2, "config file trials=1 wins over --trials 4");
}

#[test]
fn trace_rejects_single_algorithm() {
    let status = bin()
        .args([
            "trace", "--function", "f5", "--dim", "2", "--algo", "cs",
            "--trials", "2", "--iters", "10",
        ])
        .arg("--out")
        .arg(tmp("trace_bad"))
        .status()
        .unwrap();
    assert!(!status.success());
}

#[test]
fn case_subcommand_reports_summary() {
    let out = tmp("case");
    let output = bin()
        .args(["case", "--name", "vibration", "--seed", "3", "--iters", "60"])
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("case vibration"), "stdout: {text}");
    assert!(text.contains("mean estimates"), "stdout: {text}");
    assert!(out.join("case_vibration.csv").exists());
    assert!(out.join("vibration_data.csv").exists());
}

#[test]
fn unknown_function_fails_cleanly() {
    let output = bin()
        .args(["bench", "--function", "f8", "--dim", "10", "--trials", "1"])
        .arg("--out")
        .arg(tmp("bad_fn"))
        .output()
        .unwrap();
    assert!(!output.status.success());
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("f8"), "stderr: {err}");
}
