//! The generalized Collatz map on F_p[x] and its pre-period statistics.
//!
//! The map sends f with nonzero constant term to f(x+1) - f_0 and even f to
//! f/x. Orbits of nonzero polynomials need not reach 1 for p > 2, but every
//! orbit eventually enters a cycle; the stopping time here is the pre-period,
//! the minimal k for which the k-th iterate is periodic.

use alloc::vec::Vec;
use hashbrown::HashMap;

use crate::error::Error;
use crate::fp::{is_prime, FpPoly};

/// Outcome of following one orbit to its first repeated state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpStoppingResult {
    /// Minimal k such that the k-th iterate is periodic.
    pub pre_period: u64,
    /// Length of the cycle the orbit falls into.
    pub cycle_length: u64,
    /// The first periodic element along the orbit.
    pub cycle_entry: FpPoly,
}

/// One step of the map: f(x+1) - f_0 when f_0 != 0, otherwise f/x.
pub fn fp_step(f: &FpPoly) -> Result<FpPoly, Error> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let c0 = f.constant_term();
    if c0 != 0 {
        Ok(f.mul_x_plus_1().sub_constant(c0))
    } else {
        f.div_x()
    }
}

/// A budget that cannot be hit before the orbit repeats: one more than the
/// number of states of degree <= d + 1 (the orbit never leaves that set).
pub fn fp_default_budget(p: u64, degree: Option<u64>) -> u64 {
    let Some(d) = degree else { return 4 };
    let mut states: u64 = 1;
    for _ in 0..=(d + 1).min(63) {
        states = states.saturating_mul(p);
    }
    states.saturating_add(2)
}

/// Follows the orbit of f until a state repeats, storing every visited state
/// exactly (a hash map keyed by the canonical coefficient encoding), and
/// reports the pre-period, the cycle length, and the first periodic element.
pub fn fp_stopping_time(f: &FpPoly, budget: u64) -> Result<FpStoppingResult, Error> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut seen: HashMap<FpPoly, u64> = HashMap::new();
    let mut orbit: Vec<FpPoly> = Vec::new();
    let mut cur = f.clone();
    let mut step_idx = 0u64;
    loop {
        if let Some(&first) = seen.get(&cur) {
            return Ok(FpStoppingResult {
                pre_period: first,
                cycle_length: step_idx - first,
                cycle_entry: orbit[first as usize].clone(),
            });
        }
        if step_idx == budget {
            return Err(Error::BudgetExhausted { budget });
        }
        seen.insert(cur.clone(), step_idx);
        orbit.push(cur.clone());
        cur = fp_step(&cur)?;
        step_idx += 1;
    }
}

/// The proven bound on the pre-period of a degree-d polynomial: p(d^2+d) - d.
pub fn fp_pre_period_bound(p: u64, d: u64) -> u64 {
    p * (d * d + d) - d
}

/// Per-degree aggregate of an exhaustive pre-period scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpSweepRow {
    pub p: u64,
    pub d: u32,
    /// Number of polynomials of degree exactly d scanned: (p-1) p^d.
    pub count: u64,
    pub max_pre_period: u64,
    /// p(d^2+d) - d, for comparison against `max_pre_period`.
    pub bound: u64,
}

/// Exhaustively computes the pre-period of every nonzero polynomial of degree
/// at most d_max over F_p and reports the observed maximum per degree.
pub fn fp_bound_sweep(p: u64, d_max: u32) -> Result<Vec<FpSweepRow>, Error> {
    if !is_prime(p) {
        return Err(Error::InvalidModulus { p });
    }
    // (p-1) p^d orbits per degree; refuse scans that cannot finish.
    let mut total: u64 = 1;
    for _ in 0..=d_max {
        total = total.saturating_mul(p);
        if total > 1 << 34 {
            return Err(Error::CapExceeded {
                requested: d_max,
                cap: d_max.saturating_sub(1),
            });
        }
    }
    let mut rows = Vec::with_capacity(d_max as usize + 1);
    let mut coeffs = alloc::vec![0u64; d_max as usize + 1];
    for d in 0..=d_max {
        let budget = fp_default_budget(p, Some(u64::from(d)));
        let count = (p - 1) * p.pow(d);
        let mut max_pre_period = 0u64;
        for idx in 0..count {
            // decode idx into d low coefficients plus a nonzero leading one
            let mut rest = idx;
            for c in coeffs[..d as usize].iter_mut() {
                *c = rest % p;
                rest /= p;
            }
            coeffs[d as usize] = 1 + rest;
            let f = FpPoly::new(p, &coeffs[..=d as usize]).expect("prime modulus");
            let result = fp_stopping_time(&f, budget)?;
            max_pre_period = max_pre_period.max(result.pre_period);
        }
        rows.push(FpSweepRow {
            p,
            d,
            count,
            max_pre_period,
            bound: fp_pre_period_bound(p, u64::from(d)),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, s: &str) -> FpPoly {
        FpPoly::parse(p, s).unwrap()
    }

    #[test]
    fn step_examples() {
        // p = 2: coincides with the F_2 map T
        assert_eq!(fp_step(&fp(2, "x+1")).unwrap(), fp(2, "x^2"));
        assert_eq!(fp_step(&fp(3, "x")).unwrap(), fp(3, "1"));
        assert_eq!(fp_step(&fp(3, "2")).unwrap(), fp(3, "2x"));
        assert_eq!(fp_step(&FpPoly::zero(3).unwrap()), Err(Error::ZeroInput));
    }

    #[test]
    fn constants_sit_on_two_cycles() {
        // T(c) = cx and T(cx) = c, so every nonzero constant is periodic.
        for p in [2u64, 3, 5] {
            for c in 1..p {
                let f = FpPoly::constant(p, c).unwrap();
                let r = fp_stopping_time(&f, 100).unwrap();
                assert_eq!(r.pre_period, 0, "p={p} c={c}");
                assert_eq!(r.cycle_length, 2);
                assert_eq!(r.cycle_entry, f);
            }
        }
    }

    #[test]
    fn orbit_of_x2_plus_1_over_f2() {
        // The T-orbit is x^2+1, x^3+x^2+x, x^2+x+1, x^3, x^2, x, 1, x, ...
        // The first periodic state is x at step 5 (1 follows at step 6).
        let r = fp_stopping_time(&fp(2, "x^2+1"), 100).unwrap();
        assert_eq!(r.pre_period, 5);
        assert_eq!(r.cycle_length, 2);
        assert_eq!(r.cycle_entry, fp(2, "x"));
    }

    #[test]
    fn x_lies_on_the_cycle() {
        let r = fp_stopping_time(&fp(2, "x"), 100).unwrap();
        assert_eq!(r.pre_period, 0);
        assert_eq!(r.cycle_length, 2);
        // cycle invariant: cycle_length applications return to cycle_entry
        let mut g = r.cycle_entry.clone();
        for _ in 0..r.cycle_length {
            g = fp_step(&g).unwrap();
        }
        assert_eq!(g, r.cycle_entry);
    }

    #[test]
    fn orbit_of_one_mod_3() {
        // 1 -> x -> 1: a 2-cycle, so the pre-period of 1 is 0.
        let r = fp_stopping_time(&fp(3, "1"), 100).unwrap();
        assert_eq!(r.pre_period, 0);
        assert_eq!(r.cycle_length, 2);
    }

    #[test]
    fn determinism() {
        let f = fp(5, "3x^4+2x+1");
        let a = fp_stopping_time(&f, 10_000).unwrap();
        let b = fp_stopping_time(&f, 10_000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion() {
        assert_eq!(
            fp_stopping_time(&fp(2, "x^2+1"), 3),
            Err(Error::BudgetExhausted { budget: 3 })
        );
    }

    #[test]
    fn bound_sweep_small() {
        let rows = fp_bound_sweep(3, 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].count, 2); // the constants 1 and 2
        assert_eq!(rows[0].bound, 0);
        assert_eq!(rows[0].max_pre_period, 0);
        assert_eq!(rows[1].count, 6); // degree exactly 1 over F_3
        assert_eq!(rows[1].bound, 5); // 3 * 2 - 1
        assert!(rows[1].max_pre_period <= rows[1].bound);

        let rows = fp_bound_sweep(5, 1).unwrap();
        assert_eq!(rows[1].bound, 9);
        assert_eq!(rows[1].count, 20);
        assert!(rows[1].max_pre_period <= 9);

        assert_eq!(fp_bound_sweep(4, 1), Err(Error::InvalidModulus { p: 4 }));
    }
}
