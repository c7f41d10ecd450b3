//! The `check` subcommand: cross-validation suites that pit the independent
//! computation routes against each other (direct vs reduced engines, closed
//! forms vs iteration, chunked vs serial sweeps) and verify the proven bounds
//! at exhaustive scale.

use polycollatz::bounds::{s3_degree_bound, t_min_degree_bound, t_min_quadratic_bound};
use polycollatz::closed_form::{
    ap_run_length, ap_runs, fab_reduce_check, family_poly, family_stopping_time, FamilyParams,
};
use polycollatz::dynamics::{
    default_budget, s3_stopping_time_mask, step, stopping_time_direct, stopping_time_reduced,
    t_min_mask, MapKind,
};
use polycollatz::fp_dynamics::{fp_bound_sweep, fp_default_budget, fp_step, fp_stopping_time};
use polycollatz::gf2::Gf2Poly;
use polycollatz::sweep::sweep_serial;
use polycollatz::FpPoly;

use crate::output::sweep_csv;
use crate::parallel::sweep_parallel;
use crate::rng::SplitMix64;

pub struct CheckConfig {
    pub full: bool,
    pub seed: u64,
}

pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, passed: bool, detail: String) -> SuiteOutcome {
    SuiteOutcome {
        name,
        passed,
        detail,
    }
}

fn direct_t(f: &Gf2Poly) -> u64 {
    stopping_time_direct(f, MapKind::T, default_budget(MapKind::T, f.degree()))
        .unwrap()
        .t_min
}

fn direct_vs_reduced_exhaustive(cfg: &CheckConfig) -> SuiteOutcome {
    let max_d = if cfg.full { 14 } else { 10 };
    let mut checked = 0u64;
    for d in 0..=max_d {
        let lead = 1u64 << d;
        for low in 0..lead {
            let mask = lead | low;
            if mask & 1 == 0 {
                continue;
            }
            let f = Gf2Poly::from_mask(mask);
            if direct_t(&f) != stopping_time_reduced(&f).unwrap().t_min {
                return outcome(
                    "direct-vs-reduced exhaustive",
                    false,
                    format!("mismatch at {}", f.to_hex()),
                );
            }
            checked += 1;
        }
    }
    outcome(
        "direct-vs-reduced exhaustive",
        true,
        format!("all odd f with deg <= {max_d} ({checked} inputs)"),
    )
}

fn direct_vs_reduced_random(cfg: &CheckConfig) -> SuiteOutcome {
    let (cases, max_d) = if cfg.full { (100, 512) } else { (100, 256) };
    let mut rng = SplitMix64::new(cfg.seed ^ 0xd1);
    for _ in 0..cases {
        let d = 1 + rng.below(max_d);
        let f = rng.odd_poly_of_degree(d);
        if direct_t(&f) != stopping_time_reduced(&f).unwrap().t_min {
            return outcome(
                "direct-vs-reduced random",
                false,
                format!("mismatch at {}", f.to_hex()),
            );
        }
    }
    outcome(
        "direct-vs-reduced random",
        true,
        format!("{cases} odd inputs with deg <= {max_d}"),
    )
}

fn stopping_time_bounds(cfg: &CheckConfig) -> SuiteOutcome {
    let max_d: u32 = if cfg.full { 16 } else { 12 };
    for d in 0..=max_d {
        let lead = 1u64 << d;
        let dd = u64::from(d);
        for low in 0..lead {
            let t = t_min_mask(lead | low);
            if t > t_min_degree_bound(dd) || t > t_min_quadratic_bound(dd) {
                return outcome(
                    "stopping-time bounds",
                    false,
                    format!("bound violated at degree {d}, mask {:#x}", lead | low),
                );
            }
        }
        for low in (1..lead).step_by(2) {
            let k = u128::from(s3_stopping_time_mask(lead | low));
            let dc = u128::from(d);
            if k * k > 2 * dc * dc * dc || k > u128::from(s3_degree_bound(dd)) {
                return outcome(
                    "stopping-time bounds",
                    false,
                    format!("S3 bound violated at degree {d}, mask {:#x}", lead | low),
                );
            }
        }
    }
    outcome(
        "stopping-time bounds",
        true,
        format!("all nonzero f with deg <= {max_d}, both T bounds plus the S3 bound"),
    )
}

fn pow_formula(cfg: &CheckConfig) -> SuiteOutcome {
    let max_n = if cfg.full { 4096 } else { 512 };
    for n in 1..=max_n {
        let f = Gf2Poly::pow_x_plus_1(n);
        let direct = stopping_time_direct(&f, MapKind::S3, 4 * n + 8)
            .unwrap()
            .t_min;
        if polycollatz::closed_form::s3_time_of_pow(n) != direct {
            return outcome("pow stopping-time formula", false, format!("n = {n}"));
        }
    }
    outcome(
        "pow stopping-time formula",
        true,
        format!("n in [1, {max_n}]"),
    )
}

fn family_ranges(cfg: &CheckConfig) -> impl Iterator<Item = (u64, u64, u64)> {
    let (max_ab, max_n) = if cfg.full { (4, 128) } else { (2, 32) };
    (0..=max_ab).flat_map(move |a| {
        (0..=max_ab).flat_map(move |b| {
            (1..=max_n)
                .map(move |n| (a, b, n))
                .filter(|&(a, b, _)| (a, b) != (0, 0))
        })
    })
}

fn family_formula(cfg: &CheckConfig) -> SuiteOutcome {
    let mut checked = 0u64;
    for (a, b, n) in family_ranges(cfg) {
        let params = FamilyParams::new(a, b, n).unwrap();
        if family_stopping_time(&params) != direct_t(&family_poly(&params)) {
            return outcome(
                "family formula vs direct",
                false,
                format!("(a, b, n) = ({a}, {b}, {n})"),
            );
        }
        checked += 1;
    }
    outcome(
        "family formula vs direct",
        true,
        format!("{checked} family members, d = -1 edge included"),
    )
}

fn family_reduction(cfg: &CheckConfig) -> SuiteOutcome {
    let mut checked = 0u64;
    for (a, b, n) in family_ranges(cfg) {
        if n * (a + b) < 2 {
            continue;
        }
        let params = FamilyParams::new(a, b, n).unwrap();
        if fab_reduce_check(&params) != Ok(true) {
            return outcome(
                "family reduction identity",
                false,
                format!("(a, b, n) = ({a}, {b}, {n})"),
            );
        }
        checked += 1;
    }
    outcome(
        "family reduction identity",
        true,
        format!("{checked} family members"),
    )
}

fn ap_runs_structure(cfg: &CheckConfig) -> SuiteOutcome {
    let (max_d, oracle_d) = if cfg.full { (12, 7) } else { (8, 6) };
    for (a, b) in [(1u64, 0u64), (0, 1), (1, 1), (2, 1)] {
        let d_min = if a + b > 2 { 2 } else { 3 };
        let runs = match ap_runs(a, b, d_min, max_d) {
            Ok(runs) => runs,
            Err(e) => {
                return outcome(
                    "ap-runs structure",
                    false,
                    format!("(a, b) = ({a}, {b}): {e}"),
                )
            }
        };
        for run in &runs {
            if run.len() != ap_run_length(a, b, run.d)
                || run.common_difference != a as i64 - b as i64
            {
                return outcome(
                    "ap-runs structure",
                    false,
                    format!("(a, b) = ({a}, {b}), d = {}", run.d),
                );
            }
            if run.d <= oracle_d {
                for (i, &value) in run.values.iter().enumerate() {
                    let n = run.n_start + i as u64;
                    let params = FamilyParams::new(a, b, n).unwrap();
                    if value != direct_t(&family_poly(&params)) {
                        return outcome(
                            "ap-runs structure",
                            false,
                            format!("(a, b, n) = ({a}, {b}, {n})"),
                        );
                    }
                }
            }
        }
    }
    outcome(
        "ap-runs structure",
        true,
        format!("4 families, d <= {max_d}, values oracle-checked for d <= {oracle_d}"),
    )
}

fn hat_algebra(cfg: &CheckConfig) -> SuiteOutcome {
    let cases = if cfg.full { 10_000 } else { 1_000 };
    let mut rng = SplitMix64::new(cfg.seed ^ 0xa7);
    for _ in 0..cases {
        let df = rng.below(257);
        let f = rng.poly_of_degree(df);
        let dg = rng.below(257);
        let g = rng.poly_of_degree(dg);
        let k = rng.below(64);
        let ok = (&f * &g).reverse() == &f.reverse() * &g.reverse()
            && (&f << k).reverse() == f.reverse()
            && f.reverse().reverse() == f.strip_x().0
            && (f.is_even() || f.reverse().reverse() == f);
        if !ok {
            return outcome(
                "hat-transform algebra",
                false,
                format!("failed at f = {}", f.to_hex()),
            );
        }
    }
    outcome(
        "hat-transform algebra",
        true,
        format!("{cases} random cases at degrees <= 256"),
    )
}

fn truncation_identities(cfg: &CheckConfig) -> SuiteOutcome {
    let cases = if cfg.full { 1_000 } else { 200 };
    let mut rng = SplitMix64::new(cfg.seed ^ 0x77);
    for _ in 0..cases {
        // S3 iterates of x^n + g are the truncated products ((x+1)^i f)|<=n
        let n = 2 + rng.below(63);
        let dg = rng.below(n);
        let g = rng.poly_of_degree(dg);
        let f = &Gf2Poly::monomial(n) + &g;
        let reach = n - g.degree().unwrap();
        let mut iterate = f.clone();
        for i in 0..=reach {
            if iterate != (&Gf2Poly::pow_x_plus_1(i) * &f).truncate(n) {
                return outcome(
                    "truncation identities",
                    false,
                    format!("iterations formula at n = {n}, i = {i}"),
                );
            }
            if i < reach {
                iterate = step(&iterate, MapKind::S3).unwrap();
            }
        }
        // restriction: S3^k(f) = ((x+1)^k f)|<=deg(S3^k(f)) for odd f
        let d = 1 + rng.below(48);
        let f = rng.odd_poly_of_degree(d);
        let t = stopping_time_direct(&f, MapKind::S3, default_budget(MapKind::S3, Some(d)))
            .unwrap()
            .t_min;
        let mut iterate = f.clone();
        for k in 0..=t {
            let m = iterate.degree().unwrap();
            if iterate != (&Gf2Poly::pow_x_plus_1(k) * &f).truncate(m) {
                return outcome(
                    "truncation identities",
                    false,
                    format!("restriction at {}, k = {k}", f.to_hex()),
                );
            }
            if k < t {
                iterate = step(&iterate, MapKind::S3).unwrap();
            }
        }
    }
    outcome(
        "truncation identities",
        true,
        format!("{cases} random cases at n <= 64"),
    )
}

fn sweep_goldens(cfg: &CheckConfig) -> SuiteOutcome {
    let max_d = if cfg.full { 14 } else { 10 };
    let rows = match sweep_serial(0, max_d, 62) {
        Ok(rows) => rows,
        Err(e) => return outcome("sweep goldens and margins", false, e.to_string()),
    };
    let sigma: Vec<u64> = rows.iter().take(3).map(|r| r.sigma).collect();
    let rho: Vec<(u128, u64)> = rows.iter().take(3).map(|r| r.rho_pair()).collect();
    if sigma != [0, 3, 6] || rho != [(0, 1), (4, 2), (16, 4)] {
        return outcome(
            "sweep goldens and margins",
            false,
            format!("golden rows mismatch: sigma = {sigma:?}"),
        );
    }
    if let Some(bad) = rows.iter().find(|r| r.bound_margin < 0) {
        return outcome(
            "sweep goldens and margins",
            false,
            format!("negative bound margin at d = {}", bad.d),
        );
    }
    // row invariant: sigma >= rho >= d, in exact arithmetic
    for row in &rows {
        let (sum, count) = row.rho_pair();
        if u128::from(row.sigma) * u128::from(count) < sum
            || sum < u128::from(row.d) * u128::from(count)
        {
            return outcome(
                "sweep goldens and margins",
                false,
                format!("sigma >= rho >= d violated at d = {}", row.d),
            );
        }
    }
    // the family gives certified lower bounds: sigma(d) dominates every
    // family stopping time at that degree
    for row in &rows {
        for (a, b) in [(1u64, 0u64), (0, 1), (1, 1), (2, 1)] {
            let d = u64::from(row.d);
            if d >= 1 && d % (a + b) == 0 {
                let params = FamilyParams::new(a, b, d / (a + b)).unwrap();
                if family_stopping_time(&params) > row.sigma {
                    return outcome(
                        "sweep goldens and margins",
                        false,
                        format!("family member beats sigma at d = {d}"),
                    );
                }
            }
        }
    }
    // engine cross-check at modest degrees: sigma recomputed with direct T
    let cross_d = if cfg.full { 12 } else { 10 };
    for row in rows.iter().filter(|r| r.d <= cross_d) {
        let lead = 1u64 << row.d;
        let direct_sigma = (0..lead)
            .map(|low| direct_t(&Gf2Poly::from_mask(lead | low)))
            .max()
            .unwrap();
        if direct_sigma != row.sigma {
            return outcome(
                "sweep goldens and margins",
                false,
                format!("direct-engine sigma mismatch at d = {}", row.d),
            );
        }
    }
    // determinism across thread counts, compared as output bytes
    let csv1 = sweep_csv(&sweep_parallel(0, max_d, 1, 62).unwrap());
    let csv2 = sweep_csv(&sweep_parallel(0, max_d, 2, 62).unwrap());
    if csv1 != csv2 || csv1 != sweep_csv(&rows) {
        return outcome(
            "sweep goldens and margins",
            false,
            "thread count changed the output bytes".into(),
        );
    }
    outcome(
        "sweep goldens and margins",
        true,
        format!("goldens, margins and determinism up to d = {max_d}"),
    )
}

fn fp_pre_periodicity(cfg: &CheckConfig) -> SuiteOutcome {
    let max_d = if cfg.full { 6 } else { 4 };
    for p in [2u64, 3, 5] {
        let rows = match fp_bound_sweep(p, max_d) {
            Ok(rows) => rows,
            Err(e) => return outcome("fp pre-periodicity", false, e.to_string()),
        };
        if let Some(bad) = rows.iter().find(|r| r.max_pre_period > r.bound) {
            return outcome(
                "fp pre-periodicity",
                false,
                format!("bound exceeded at p = {p}, d = {}", bad.d),
            );
        }
    }
    // at p = 2 the orbit must coincide with the T engine, element by element
    let coincide_d = if cfg.full { 12 } else { 8 };
    for d in 0..=coincide_d {
        let lead = 1u64 << d;
        for low in 0..lead {
            let f2 = Gf2Poly::from_mask(lead | low);
            let t_min = direct_t(&f2);
            let coeffs: Vec<u64> = (0..=d).map(|i| u64::from(f2.coeff(i))).collect();
            let mut fp = FpPoly::new(2, &coeffs).unwrap();
            let mut g2 = f2.clone();
            for step_idx in 0..=t_min {
                let back: Vec<u64> = fp.coeffs().to_vec();
                let as_mask: u64 = back.iter().enumerate().map(|(i, &c)| c << i).sum();
                if Gf2Poly::from_mask(as_mask) != g2 {
                    return outcome(
                        "fp pre-periodicity",
                        false,
                        format!("orbit divergence at {}", f2.to_hex()),
                    );
                }
                if step_idx < t_min {
                    fp = fp_step(&fp).unwrap();
                    g2 = step(&g2, MapKind::T).unwrap();
                }
            }
            // reaching the cycle at the element 1 is exactly t_min steps
            if !g2.is_one() {
                return outcome(
                    "fp pre-periodicity",
                    false,
                    format!("orbit of {} missed 1", f2.to_hex()),
                );
            }
            let result = fp_stopping_time(
                &FpPoly::new(2, &coeffs).unwrap(),
                fp_default_budget(2, Some(d)),
            )
            .unwrap();
            if result.pre_period > t_min {
                return outcome(
                    "fp pre-periodicity",
                    false,
                    format!("pre-period exceeds t_min at {}", f2.to_hex()),
                );
            }
        }
    }
    outcome(
        "fp pre-periodicity",
        true,
        format!(
            "p in {{2, 3, 5}} exhaustive to deg {max_d}; p = 2 orbits match T to deg {coincide_d}"
        ),
    )
}

pub fn run_suites(cfg: &CheckConfig) -> Vec<SuiteOutcome> {
    vec![
        direct_vs_reduced_exhaustive(cfg),
        direct_vs_reduced_random(cfg),
        stopping_time_bounds(cfg),
        pow_formula(cfg),
        family_formula(cfg),
        family_reduction(cfg),
        ap_runs_structure(cfg),
        hat_algebra(cfg),
        truncation_identities(cfg),
        sweep_goldens(cfg),
        fp_pre_periodicity(cfg),
    ]
}
