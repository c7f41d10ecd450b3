//! The Collatz-style maps on F_2[x] and their stopping-time engines.
//!
//! The map T sends odd f to (1+x)f + 1 and even f to f/x. The auxiliary maps
//! factor T into pieces: T1(f) = (1+x)f + 1, T2 strips every factor of x,
//! T3 = T2∘T1. Under coefficient reversal T3 is conjugate to S3 = S2∘S1,
//! where S1(f) = (x+1)f and S2 deletes the leading term. Iterating S3 is a
//! shift-xor and a bit clear, which is what makes the reduced engine fast.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bounds::{s3_degree_bound, t_min_degree_bound};
use crate::error::Error;
use crate::gf2::Gf2Poly;

/// The seven maps exposed by the trajectory and stopping-time engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    T,
    T1,
    T2,
    T3,
    S1,
    S2,
    S3,
}

impl MapKind {
    pub const ALL: [MapKind; 7] = [
        MapKind::T,
        MapKind::T1,
        MapKind::T2,
        MapKind::T3,
        MapKind::S1,
        MapKind::S2,
        MapKind::S3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::T => "T",
            MapKind::T1 => "T1",
            MapKind::T2 => "T2",
            MapKind::T3 => "T3",
            MapKind::S1 => "S1",
            MapKind::S2 => "S2",
            MapKind::S3 => "S3",
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        MapKind::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or(Error::Parse(crate::error::ParseError::Syntax {
                offset: 0,
                message: "unknown map (expected T, T1, T2, T3, S1, S2 or S3)",
            }))
    }
}

/// How a stopping time was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Reduced,
}

/// A computed stopping time together with the step budget that was in effect,
/// expressed in the same units as `t_min` (so `t_min <= budget_used`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoppingResult {
    pub t_min: u64,
    pub method: Method,
    pub budget_used: u64,
}

/// An explicit orbit under one of the maps, iterate 0 being the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub map: MapKind,
    pub steps: Vec<Gf2Poly>,
    /// Set when the step budget ran out before the orbit reached 1.
    pub truncated: bool,
}

impl Trajectory {
    /// The stopping time, when the orbit reached 1.
    pub fn t_min(&self) -> Option<u64> {
        (!self.truncated).then(|| self.steps.len() as u64 - 1)
    }
}

/// Applies one step of the chosen map.
///
/// Only T2 is defined on the zero polynomial (T2(0) = 0); every other map
/// reports `ZeroInput`. Note that S2(1) = 0 and that intermediate zeros can
/// therefore appear along S2 orbits.
pub fn step(f: &Gf2Poly, map: MapKind) -> Result<Gf2Poly, Error> {
    if f.is_zero() {
        return match map {
            MapKind::T2 => Ok(Gf2Poly::zero()),
            _ => Err(Error::ZeroInput),
        };
    }
    match map {
        MapKind::T => {
            if f.is_odd() {
                Ok(&f.mul_x_plus_1() + &Gf2Poly::one())
            } else {
                f.div_x()
            }
        }
        MapKind::T1 => Ok(&f.mul_x_plus_1() + &Gf2Poly::one()),
        MapKind::T2 => Ok(f.strip_x().0),
        MapKind::T3 => step(&step(f, MapKind::T1)?, MapKind::T2),
        MapKind::S1 => Ok(f.mul_x_plus_1()),
        MapKind::S2 => {
            let deg = f.degree().expect("nonzero");
            Ok(f + &Gf2Poly::monomial(deg))
        }
        MapKind::S3 => step(&step(f, MapKind::S1)?, MapKind::S2),
    }
}

/// A step budget large enough that running out signals a bug rather than a
/// slow orbit: the proven degree bound plus slack for T (and the maps with no
/// termination guarantee), and the proven S3 bound plus slack for T3 and S3.
pub fn default_budget(map: MapKind, degree: Option<u64>) -> u64 {
    let Some(d) = degree else { return 4 };
    match map {
        MapKind::T | MapKind::T1 | MapKind::T2 | MapKind::S1 | MapKind::S2 => {
            t_min_degree_bound(d) + 4
        }
        MapKind::S3 => s3_degree_bound(d) + 4,
        // an even input gains a degree on its first T3 step before the odd
        // orbit bound takes over
        MapKind::T3 => s3_degree_bound(d + 1) + 5,
    }
}

/// Iterates `map` from f, recording every iterate, until the orbit reaches 1
/// or `budget` applications have been spent (then `truncated` is set).
pub fn trajectory(f: &Gf2Poly, map: MapKind, budget: u64) -> Result<Trajectory, Error> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut steps = alloc::vec![f.clone()];
    let mut truncated = false;
    while !steps.last().unwrap().is_one() {
        if steps.len() as u64 - 1 == budget {
            truncated = true;
            break;
        }
        let next = step(steps.last().unwrap(), map)?;
        steps.push(next);
    }
    Ok(Trajectory {
        map,
        steps,
        truncated,
    })
}

/// Minimal k >= 0 with map^k(f) = 1, found by plain iteration in O(1) state.
pub fn stopping_time_direct(
    f: &Gf2Poly,
    map: MapKind,
    budget: u64,
) -> Result<StoppingResult, Error> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut cur = f.clone();
    let mut k = 0u64;
    while !cur.is_one() {
        if k == budget {
            return Err(Error::BudgetExhausted { budget });
        }
        cur = step(&cur, map)?;
        k += 1;
    }
    Ok(StoppingResult {
        t_min: k,
        method: Method::Direct,
        budget_used: budget,
    })
}

/// S3 stopping time of an odd polynomial given as a coefficient mask.
///
/// Each step is `h <- (h ^ (h << 1))` with the new leading bit cleared.
/// Requires `h` odd and of degree at most 62; the degree never grows along
/// the iteration.
pub fn s3_stopping_time_mask(mut h: u64) -> u64 {
    assert!(h & 1 == 1, "input must be odd");
    assert!(h.leading_zeros() >= 1, "degree must be at most 62");
    let mut k = 0u64;
    while h != 1 {
        let t = h ^ (h << 1);
        h = t ^ (1u64 << (63 - t.leading_zeros()));
        k += 1;
    }
    k
}

/// t_min under T for a nonzero polynomial given as a coefficient mask whose
/// odd part has degree at most 62. This is the reduced engine's fast path and
/// the kernel of the exhaustive sweeps.
pub fn t_min_mask(mask: u64) -> u64 {
    assert!(mask != 0, "zero polynomial has no stopping time");
    let r = mask.trailing_zeros() as u64;
    let g = mask >> r;
    let d = 63 - g.leading_zeros() as u64;
    let rev = g.reverse_bits() >> g.leading_zeros();
    r + 2 * s3_stopping_time_mask(rev) + d
}

/// t_min under T computed without running T: strip the even part (r steps),
/// reverse the odd part, count S3 steps k, and return r + 2k + deg.
///
/// Agrees exactly with `stopping_time_direct(f, T, _)`.
pub fn stopping_time_reduced(f: &Gf2Poly) -> Result<StoppingResult, Error> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (g, r) = f.strip_x();
    let d = g.degree().expect("odd part of a nonzero polynomial");
    let s3_budget = s3_degree_bound(d) + 4;
    let k = if d <= 62 {
        let mask = g.to_mask().expect("degree <= 62 fits one limb");
        s3_stopping_time_mask(mask.reverse_bits() >> mask.leading_zeros())
    } else {
        let mut h = g.reverse();
        let mut k = 0u64;
        while !h.is_one() {
            if k == s3_budget {
                // Unreachable for valid inputs: the S3 stopping time of an
                // odd polynomial is bounded by s3_degree_bound(d).
                return Err(Error::BudgetExhausted { budget: s3_budget });
            }
            h = step(&h, MapKind::S3)?;
            k += 1;
        }
        k
    };
    Ok(StoppingResult {
        t_min: r + 2 * k + d,
        method: Method::Reduced,
        budget_used: r + 2 * s3_budget + d,
    })
}

/// Checks, for one odd polynomial, both halves of the reduction that powers
/// the fast engine: t_min(f) = 2 t_min(f, T3) + deg f, and the step-by-step
/// conjugacy reverse(T3(g)) = S3(reverse(g)) along the whole T3 orbit.
pub fn t3_equivalence_check(f: &Gf2Poly) -> Result<bool, Error> {
    if f.is_even() {
        return Err(Error::EvenInput);
    }
    let d = f.degree().expect("odd implies nonzero");
    let t = stopping_time_direct(f, MapKind::T, default_budget(MapKind::T, Some(d)))?;
    let t3 = stopping_time_direct(f, MapKind::T3, default_budget(MapKind::T3, Some(d)))?;
    if t.t_min != 2 * t3.t_min + d {
        return Ok(false);
    }
    let mut g = f.clone();
    let mut h = f.reverse();
    while !g.is_one() {
        g = step(&g, MapKind::T3)?;
        h = step(&h, MapKind::S3)?;
        if g.reverse() != h {
            return Ok(false);
        }
    }
    Ok(true)
}
