//! End-to-end tests of the binary: exit codes, exact output bytes, and the
//! format contracts.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polycollatz"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn stop_prints_the_stopping_time() {
    let out = run(&["stop", "x^2+1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "6\n");
    // hex and symbolic forms of the same polynomial agree
    let hex = run(&["stop", "0x25"]);
    let sym = run(&["stop", "x^5+x^2+1"]);
    assert_eq!(stdout(&hex), stdout(&sym));
    // all three engines give the same answer
    for method in ["direct", "reduced", "both"] {
        let out = run(&["stop", "x^2+1", "--method", method]);
        assert_eq!(stdout(&out), "6\n", "method {method}");
    }
}

#[test]
fn stop_zero_is_a_computation_error() {
    let out = run(&["stop", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("zero polynomial has no stopping time"));
}

#[test]
fn malformed_polynomial_is_a_usage_error() {
    for bad in ["x^^2", "x^2+x^2", "0xzz", "y+1"] {
        let out = run(&["stop", bad]);
        assert_eq!(out.status.code(), Some(2), "input {bad:?}");
        assert!(stdout(&out).is_empty(), "usage errors produce no output");
    }
    let out = run(&["traj", "x+1", "--map", "S9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn traj_json_matches_the_wire_format() {
    let out = run(&["traj", "0x5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"map\":\"T\",\"input\":\"0x5\",\"steps\":[\"0x5\",\"0xe\",\"0x7\",\"0x8\",\"0x4\",\"0x2\",\"0x1\"],\"t_min\":6,\"truncated\":false}\n"
    );
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["t_min"], 6);
}

#[test]
fn traj_text_and_budgets() {
    let out = run(&["traj", "x^2+1"]);
    assert_eq!(stdout(&out), "0x5\n0xe\n0x7\n0x8\n0x4\n0x2\n0x1\nt_min=6\n");
    // a tiny budget truncates; JSON then carries t_min: null
    let out = run(&["traj", "x^2+1", "--budget", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["truncated"], true);
    assert_eq!(parsed["t_min"], serde_json::Value::Null);
    // other maps are reachable
    let out = run(&["traj", "x^2+1", "--map", "S3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0x5\n0x7\n0x1\nt_min=2\n");
}

#[test]
fn family_formula_and_verification() {
    let out = run(&["family", "--a", "1", "--b", "0", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "6\n");
    let out = run(&["family", "--a", "1", "--b", "0", "--n", "2", "--verify"]);
    assert_eq!(stdout(&out), "6\n");
    // domain error: the family requires (a, b) != (0, 0)
    let out = run(&["family", "--a", "0", "--b", "0", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ap_runs_formats() {
    let out = run(&[
        "ap-runs", "--a", "1", "--b", "0", "--d-min", "2", "--d-max", "2",
    ]);
    assert_eq!(
        stdout(&out),
        "a,b,d,n_start,n_end,diff,first_value,length\n1,0,2,5,8,1,21,4\n"
    );
    let out = run(&[
        "ap-runs", "--a", "0", "--b", "1", "--d-min", "3", "--d-max", "3", "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed[0]["diff"], -1);
    assert_eq!(parsed[0]["length"], 8);
    assert_eq!(parsed[0]["first_value"], 23);
}

#[test]
fn sweep_outputs_and_cap() {
    let out = run(&["sweep", "--d-min", "0", "--d-max", "2"]);
    assert_eq!(
        stdout(&out),
        "d,count,sigma,rho,argmax_hex,bound_margin\n\
         0,1,0,0.000000,0x1,0\n\
         1,2,3,2.000000,0x3,1\n\
         2,4,6,4.000000,0x5,4\n"
    );
    let out = run(&["sweep", "--d-min", "0", "--d-max", "3", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed[2]["sigma"], 6);
    // the default cap refuses d > 24
    let out = run(&["sweep", "--d-min", "0", "--d-max", "25"]);
    assert_eq!(out.status.code(), Some(1));
    // the env var overrides the cap in both directions
    let out = bin()
        .args(["sweep", "--d-min", "0", "--d-max", "6"])
        .env("POLY_COLLATZ_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin()
        .args(["sweep", "--d-min", "0", "--d-max", "6"])
        .env("POLY_COLLATZ_CAP", "30")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sweep_to_file_and_threads_match_stdout() {
    let dir = std::env::temp_dir().join(format!("polycollatz-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.csv");
    let to_file = bin()
        .args(["sweep", "--d-min", "0", "--d-max", "10", "--threads", "4"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(to_file.status.code(), Some(0));
    assert!(stdout(&to_file).is_empty());
    let from_file = std::fs::read_to_string(&path).unwrap();
    let on_stdout = run(&["sweep", "--d-min", "0", "--d-max", "10"]);
    assert_eq!(from_file, stdout(&on_stdout));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sweep_cross_check_and_growth() {
    let out = run(&["sweep", "--d-min", "0", "--d-max", "8", "--cross-check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("cross-check ok"));
    let out = run(&["sweep", "--d-min", "0", "--d-max", "4", "--growth"]);
    assert!(
        stdout(&out).starts_with("d,sigma_over_d,sigma_over_d_log_d,sigma_over_d15,rho_over_d\n")
    );
    let out = run(&[
        "sweep", "--d-min", "0", "--d-max", "4", "--growth", "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed[0]["sigma_over_d"], serde_json::Value::Null);
}

#[test]
fn fp_single_and_sweep() {
    let out = run(&["fp", "--p", "2", "x^2+1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "pre_period=5 cycle_length=2 cycle_entry=x\n");
    let out = run(&["fp", "--p", "3", "--sweep", "--d-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let row: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(row["max_pre_period"].as_u64() <= row["bound"].as_u64());
    }
    // flag grammar: --sweep needs --d-max, a polynomial conflicts with --sweep
    let out = run(&["fp", "--p", "3", "--sweep"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["fp", "--p", "3", "x", "--sweep", "--d-max", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["fp", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["fp", "--p", "4", "x"]);
    assert_eq!(out.status.code(), Some(2));
    // zero polynomial: parses, then fails as a computation error
    let out = run(&["fp", "--p", "3", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_quick_passes() {
    let out = run(&["check", "--quick"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("[PASS]")));
    // seeds are accepted and deterministic
    let a = run(&["check", "--quick", "--seed", "42"]);
    let b = run(&["check", "--quick", "--seed", "42"]);
    assert_eq!(stdout(&a), stdout(&b));
    // --quick and --full conflict
    let out = run(&["check", "--quick", "--full"]);
    assert_eq!(out.status.code(), Some(2));
}
