//! Deterministic CSV and JSON renderings of every machine-readable output.
//!
//! The sweep JSON is assembled by hand so that `rho` appears as a plain
//! number token with exactly six decimal places, byte-identical to the CSV
//! column; everything else goes through serde.

use std::fmt::Write as _;

use polycollatz::closed_form::ApRun;
use polycollatz::dynamics::Trajectory;
use polycollatz::fp_dynamics::{FpStoppingResult, FpSweepRow};
use polycollatz::sweep::SweepRow;
use polycollatz::{FpPoly, Gf2Poly};
use serde::Serialize;

use crate::report::GrowthRow;

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("d,count,sigma,rho,argmax_hex,bound_margin\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.d,
            r.count,
            r.sigma,
            r.rho_decimal(),
            r.argmax_hex(),
            r.bound_margin
        )
        .unwrap();
    }
    out
}

pub fn sweep_json(rows: &[SweepRow]) -> String {
    let mut out = String::from("[");
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(
            out,
            "{{\"d\":{},\"count\":{},\"sigma\":{},\"rho\":{},\"argmax_hex\":\"{}\",\"bound_margin\":{}}}",
            r.d,
            r.count,
            r.sigma,
            r.rho_decimal(),
            r.argmax_hex(),
            r.bound_margin
        )
        .unwrap();
    }
    out.push_str("]\n");
    out
}

fn opt_ratio_csv(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.6}")).unwrap_or_default()
}

fn opt_ratio_json(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.6}"))
        .unwrap_or_else(|| "null".into())
}

pub fn growth_csv(rows: &[GrowthRow]) -> String {
    let mut out = String::from("d,sigma_over_d,sigma_over_d_log_d,sigma_over_d15,rho_over_d\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.d,
            opt_ratio_csv(r.sigma_over_d),
            opt_ratio_csv(r.sigma_over_d_log_d),
            opt_ratio_csv(r.sigma_over_d15),
            opt_ratio_csv(r.rho_over_d)
        )
        .unwrap();
    }
    out
}

pub fn growth_json(rows: &[GrowthRow]) -> String {
    let mut out = String::from("[");
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(
            out,
            "{{\"d\":{},\"sigma_over_d\":{},\"sigma_over_d_log_d\":{},\"sigma_over_d15\":{},\"rho_over_d\":{}}}",
            r.d,
            opt_ratio_json(r.sigma_over_d),
            opt_ratio_json(r.sigma_over_d_log_d),
            opt_ratio_json(r.sigma_over_d15),
            opt_ratio_json(r.rho_over_d)
        )
        .unwrap();
    }
    out.push_str("]\n");
    out
}

pub fn ap_runs_csv(runs: &[ApRun]) -> String {
    let mut out = String::from("a,b,d,n_start,n_end,diff,first_value,length\n");
    for r in runs {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.a,
            r.b,
            r.d,
            r.n_start,
            r.n_end,
            r.common_difference,
            r.first_value(),
            r.len()
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct ApRunOut {
    a: u64,
    b: u64,
    d: u32,
    n_start: u64,
    n_end: u64,
    diff: i64,
    first_value: u64,
    length: u64,
}

pub fn ap_runs_json(runs: &[ApRun]) -> String {
    let rows: Vec<ApRunOut> = runs
        .iter()
        .map(|r| ApRunOut {
            a: r.a,
            b: r.b,
            d: r.d,
            n_start: r.n_start,
            n_end: r.n_end,
            diff: r.common_difference,
            first_value: r.first_value(),
            length: r.len(),
        })
        .collect();
    let mut s = serde_json::to_string(&rows).expect("plain integers serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct TrajectoryOut {
    map: String,
    input: String,
    steps: Vec<String>,
    t_min: Option<u64>,
    truncated: bool,
}

pub fn traj_json(traj: &Trajectory) -> String {
    let out = TrajectoryOut {
        map: traj.map.to_string(),
        input: traj.steps[0].to_hex(),
        steps: traj.steps.iter().map(Gf2Poly::to_hex).collect(),
        t_min: traj.t_min(),
        truncated: traj.truncated,
    };
    let mut s = serde_json::to_string(&out).expect("strings and integers serialize");
    s.push('\n');
    s
}

pub fn traj_text(traj: &Trajectory) -> String {
    let mut out = String::new();
    for step in &traj.steps {
        out.push_str(&step.to_hex());
        out.push('\n');
    }
    match traj.t_min() {
        Some(t) => writeln!(out, "t_min={t}").unwrap(),
        None => writeln!(out, "truncated after {} steps", traj.steps.len() - 1).unwrap(),
    }
    out
}

#[derive(Serialize)]
struct FpRowOut {
    p: u64,
    d: u32,
    count: u64,
    max_pre_period: u64,
    bound: u64,
}

/// One JSON object per line, one line per degree.
pub fn fp_rows_jsonl(rows: &[FpSweepRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let row = FpRowOut {
            p: r.p,
            d: r.d,
            count: r.count,
            max_pre_period: r.max_pre_period,
            bound: r.bound,
        };
        out.push_str(&serde_json::to_string(&row).expect("plain integers serialize"));
        out.push('\n');
    }
    out
}

pub fn fp_result_text(r: &FpStoppingResult) -> String {
    format!(
        "pre_period={} cycle_length={} cycle_entry={}\n",
        r.pre_period,
        r.cycle_length,
        FpPoly::to_symbolic(&r.cycle_entry)
    )
}
