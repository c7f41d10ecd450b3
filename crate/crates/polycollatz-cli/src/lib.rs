//! Command-line front end: every library operation behind one binary with
//! machine-readable output. Exit codes: 0 success, 1 computation error
//! (budget exhausted, domain errors), 2 usage error.

pub mod check;
pub mod output;
pub mod parallel;
pub mod report;
pub mod rng;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use polycollatz::closed_form::{ap_runs, family_poly, family_stopping_time, FamilyParams};
use polycollatz::dynamics::{
    default_budget, stopping_time_direct, stopping_time_reduced, trajectory, MapKind,
};
use polycollatz::fp_dynamics::{fp_bound_sweep, fp_default_budget, fp_stopping_time};
use polycollatz::sweep::DEFAULT_DEGREE_CAP;
use polycollatz::{Error, FpPoly, Gf2Poly};

use check::CheckConfig;

#[derive(Parser)]
#[command(
    name = "polycollatz",
    version,
    about = "Collatz-style dynamics on F_2[x] and F_p[x]: orbits, stopping times, closed forms, AP runs and exhaustive sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CsvJson {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    Reduced,
    Both,
}

fn parse_poly(s: &str) -> Result<Gf2Poly, String> {
    s.parse()
        .map_err(|e: polycollatz::ParseError| e.to_string())
}

fn parse_map(s: &str) -> Result<MapKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|_| "expected an integer".to_string())?;
    FpPoly::zero(p).map_err(|e| e.to_string())?;
    Ok(p)
}

#[derive(Subcommand)]
enum Command {
    /// Print the orbit of a polynomial under one of the maps
    Traj {
        /// Polynomial, symbolic ("x^2+1") or hex-bits ("0x5")
        #[arg(value_parser = parse_poly)]
        poly: Gf2Poly,
        /// One of T, T1, T2, T3, S1, S2, S3
        #[arg(long, default_value = "T", value_parser = parse_map)]
        map: MapKind,
        /// Maximum number of map applications (default: proven bound plus slack)
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Stopping time of a polynomial under the map T
    Stop {
        #[arg(value_parser = parse_poly)]
        poly: Gf2Poly,
        /// Engine to use; "both" cross-checks them against each other
        #[arg(long, value_enum, default_value_t = MethodArg::Reduced)]
        method: MethodArg,
    },
    /// Closed-form stopping time of (x^a (x+1)^b)^n + 1
    Family {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        n: u64,
        /// Also run the direct engine and fail on any mismatch
        #[arg(long)]
        verify: bool,
    },
    /// Arithmetic-progression runs of family stopping times
    ApRuns {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        d_min: u32,
        #[arg(long)]
        d_max: u32,
        #[arg(long, value_enum, default_value_t = CsvJson::Csv)]
        format: CsvJson,
    },
    /// Exhaustive per-degree stopping-time statistics (sigma and rho)
    Sweep {
        #[arg(long)]
        d_min: u32,
        #[arg(long)]
        d_max: u32,
        #[arg(long, default_value_t = 1)]
        threads: u32,
        /// Write the output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CsvJson::Csv)]
        format: CsvJson,
        /// Recompute every sigma with the direct engine and fail on mismatch
        #[arg(long)]
        cross_check: bool,
        /// Emit growth ratios (sigma/d, sigma/(d ln d), ...) instead of rows
        #[arg(long)]
        growth: bool,
    },
    /// The generalized map on F_p[x]: single orbit or exhaustive bound sweep
    Fp {
        #[arg(long, value_parser = parse_prime)]
        p: u64,
        /// Polynomial over F_p, e.g. "2x^3+x+2"
        #[arg(conflicts_with = "sweep")]
        poly: Option<String>,
        /// Exhaustively verify the pre-period bound for degrees up to --d-max
        #[arg(long, requires = "d_max")]
        sweep: bool,
        #[arg(long, requires = "sweep")]
        d_max: Option<u32>,
    },
    /// Run the cross-validation suites and exit nonzero on any mismatch
    Check {
        /// Small exhaustive scales (the default)
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        /// Acceptance-level scales (slower)
        #[arg(long)]
        full: bool,
        /// Seed for the randomized suites
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum CliError {
    Usage(String),
    Compute(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

/// The sweep degree cap: `POLY_COLLATZ_CAP` when set, 24 otherwise.
fn degree_cap() -> Result<u32, CliError> {
    match std::env::var("POLY_COLLATZ_CAP") {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Usage("POLY_COLLATZ_CAP must be an integer".into())),
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
    }
}

fn emit(out: Option<&PathBuf>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| CliError::Compute(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn cmd_traj(
    poly: Gf2Poly,
    map: MapKind,
    budget: Option<u64>,
    format: TextJson,
) -> Result<(), CliError> {
    let budget = budget.unwrap_or_else(|| default_budget(map, poly.degree()));
    let traj = trajectory(&poly, map, budget)?;
    let payload = match format {
        TextJson::Text => output::traj_text(&traj),
        TextJson::Json => output::traj_json(&traj),
    };
    print!("{payload}");
    Ok(())
}

fn cmd_stop(poly: Gf2Poly, method: MethodArg) -> Result<(), CliError> {
    if poly.is_zero() {
        return Err(CliError::Compute(
            "zero polynomial has no stopping time".into(),
        ));
    }
    let budget = default_budget(MapKind::T, poly.degree());
    let t = match method {
        MethodArg::Direct => stopping_time_direct(&poly, MapKind::T, budget)?.t_min,
        MethodArg::Reduced => stopping_time_reduced(&poly)?.t_min,
        MethodArg::Both => {
            let direct = stopping_time_direct(&poly, MapKind::T, budget)?.t_min;
            let reduced = stopping_time_reduced(&poly)?.t_min;
            if direct != reduced {
                return Err(CliError::Compute(format!(
                    "engines disagree: direct={direct} reduced={reduced}"
                )));
            }
            direct
        }
    };
    println!("{t}");
    Ok(())
}

fn cmd_family(a: u64, b: u64, n: u64, verify: bool) -> Result<(), CliError> {
    let params = FamilyParams::new(a, b, n)?;
    let t = family_stopping_time(&params);
    if verify {
        let f = family_poly(&params);
        let direct = stopping_time_direct(&f, MapKind::T, default_budget(MapKind::T, f.degree()))?;
        if direct.t_min != t {
            return Err(CliError::Compute(format!(
                "formula mismatch: closed form {t}, direct {}",
                direct.t_min
            )));
        }
    }
    println!("{t}");
    Ok(())
}

fn cmd_ap_runs(a: u64, b: u64, d_min: u32, d_max: u32, format: CsvJson) -> Result<(), CliError> {
    if d_min > d_max {
        return Err(CliError::Usage("--d-min must not exceed --d-max".into()));
    }
    let runs = ap_runs(a, b, d_min, d_max)?;
    let payload = match format {
        CsvJson::Csv => output::ap_runs_csv(&runs),
        CsvJson::Json => output::ap_runs_json(&runs),
    };
    print!("{payload}");
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    d_min: u32,
    d_max: u32,
    threads: u32,
    out: Option<PathBuf>,
    format: CsvJson,
    cross_check: bool,
    growth: bool,
) -> Result<(), CliError> {
    if d_min > d_max {
        return Err(CliError::Usage("--d-min must not exceed --d-max".into()));
    }
    if threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let rows = parallel::sweep_parallel(d_min, d_max, threads, degree_cap()?)?;
    if cross_check {
        for row in &rows {
            let lead = 1u64 << row.d;
            let budget = default_budget(MapKind::T, Some(u64::from(row.d)));
            let mut sigma = 0;
            for low in 0..lead {
                let f = Gf2Poly::from_mask(lead | low);
                sigma = sigma.max(stopping_time_direct(&f, MapKind::T, budget)?.t_min);
            }
            if sigma != row.sigma {
                return Err(CliError::Compute(format!(
                    "cross-check failed at d = {}: direct sigma {sigma}, reduced sigma {}",
                    row.d, row.sigma
                )));
            }
            eprintln!("cross-check ok: d={} sigma={sigma}", row.d);
        }
    }
    let payload = if growth {
        let report = report::growth_report(&rows);
        match format {
            CsvJson::Csv => output::growth_csv(&report),
            CsvJson::Json => output::growth_json(&report),
        }
    } else {
        match format {
            CsvJson::Csv => output::sweep_csv(&rows),
            CsvJson::Json => output::sweep_json(&rows),
        }
    };
    emit(out.as_ref(), &payload)
}

fn cmd_fp(p: u64, poly: Option<String>, sweep: bool, d_max: Option<u32>) -> Result<(), CliError> {
    if sweep {
        let rows = fp_bound_sweep(p, d_max.expect("clap enforces --d-max with --sweep"))?;
        print!("{}", output::fp_rows_jsonl(&rows));
        return Ok(());
    }
    let Some(text) = poly else {
        return Err(CliError::Usage(
            "provide a polynomial, or --sweep --d-max D".into(),
        ));
    };
    let f = FpPoly::parse(p, &text).map_err(|e| CliError::Usage(e.to_string()))?;
    if f.is_zero() {
        return Err(CliError::Compute(
            "zero polynomial has no stopping time".into(),
        ));
    }
    let result = fp_stopping_time(&f, fp_default_budget(p, f.degree()))?;
    print!("{}", output::fp_result_text(&result));
    Ok(())
}

fn cmd_check(full: bool, seed: u64) -> Result<(), CliError> {
    let cfg = CheckConfig { full, seed };
    let outcomes = check::run_suites(&cfg);
    let mut failed = 0;
    for suite in &outcomes {
        let tag = if suite.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {}: {}", suite.name, suite.detail);
        if !suite.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(CliError::Compute(format!("{failed} check suite(s) failed")));
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Traj {
            poly,
            map,
            budget,
            format,
        } => cmd_traj(poly, map, budget, format),
        Command::Stop { poly, method } => cmd_stop(poly, method),
        Command::Family { a, b, n, verify } => cmd_family(a, b, n, verify),
        Command::ApRuns {
            a,
            b,
            d_min,
            d_max,
            format,
        } => cmd_ap_runs(a, b, d_min, d_max, format),
        Command::Sweep {
            d_min,
            d_max,
            threads,
            out,
            format,
            cross_check,
            growth,
        } => cmd_sweep(d_min, d_max, threads, out, format, cross_check, growth),
        Command::Fp {
            p,
            poly,
            sweep,
            d_max,
        } => cmd_fp(p, poly, sweep, d_max),
        Command::Check {
            quick: _,
            full,
            seed,
        } => cmd_check(full, seed),
    }
}

/// Parses argv and runs one subcommand, returning the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

pub fn run() -> i32 {
    run_from(std::env::args_os())
}
