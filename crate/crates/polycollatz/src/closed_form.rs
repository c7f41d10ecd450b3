//! Exact stopping times for the family (x^a (x+1)^b)^n + 1 and the
//! arithmetic-progression runs they form.
//!
//! The S3 stopping time of (x+1)^n is 2^d - n where 2^(d-1) <= n < 2^d, and
//! from it the whole family's stopping time collapses to 2^(d+2) + (a-b)n
//! with 2^d < n(a+b) <= 2^(d+1). Ranging n over an interval on which d is
//! constant yields arithmetic runs with common difference a - b.

use alloc::vec::Vec;

use crate::error::Error;
use crate::gf2::Gf2Poly;

/// The triple (a, b, n) selecting the family member (x^a (x+1)^b)^n + 1.
/// Requires a > 0 or b > 0, and n >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    a: u64,
    b: u64,
    n: u64,
}

impl FamilyParams {
    pub fn new(a: u64, b: u64, n: u64) -> Result<Self, Error> {
        if (a == 0 && b == 0) || n == 0 {
            return Err(Error::InvalidFamily);
        }
        Ok(FamilyParams { a, b, n })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// Builds (x^a (x+1)^b)^n + 1 = x^(an) (x+1)^(bn) + 1 exactly.
pub fn family_poly(params: &FamilyParams) -> Gf2Poly {
    let shifted = &Gf2Poly::pow_x_plus_1(params.b * params.n) << (params.a * params.n);
    &shifted + &Gf2Poly::one()
}

/// The S3 stopping time of (x+1)^n for n >= 1: 2^d - n, where d is the unique
/// integer with 2^(d-1) <= n < 2^d. In other words, the distance from n up to
/// the next power of two (counting 2^d itself when n is one).
///
/// Panics when n = 0; the closed form has no meaning there.
pub fn s3_time_of_pow(n: u64) -> u64 {
    assert!(n >= 1, "the S3 closed form requires n >= 1");
    let d = u64::BITS - n.leading_zeros(); // 2^(d-1) <= n < 2^d
    (1u64 << d) - n
}

/// The stopping time of (x^a (x+1)^b)^n + 1 under T: 2^(d+2) + (a-b)n, where
/// d is the unique integer (possibly -1) with 2^d < n(a+b) <= 2^(d+1).
pub fn family_stopping_time(params: &FamilyParams) -> u64 {
    let m = u128::from(params.n) * u128::from(params.a + params.b);
    // For m = 1 the defining inequality forces d = -1 and 2^(d+2) = 2.
    let pow_d_plus_2: u128 = if m == 1 {
        2
    } else {
        let d = 127 - (m - 1).leading_zeros(); // 2^d <= m-1 < 2^(d+1)
        1u128 << (d + 2)
    };
    let signed = pow_d_plus_2 as i128 + (params.a as i128 - params.b as i128) * params.n as i128;
    u64::try_from(signed).expect("family stopping times are nonnegative")
}

/// Checks the reduction of the family stopping time to the S3 time of a pure
/// power of (x+1):
/// t_min(f_{a,b,n}) = 2 t_min((x+1)^(na+nb-1), S3) + 3na + nb - 2.
///
/// Defined only for n(a+b) >= 2; at n(a+b) = 1 the right-hand side would need
/// the S3 closed form at exponent 0, outside its domain.
pub fn fab_reduce_check(params: &FamilyParams) -> Result<bool, Error> {
    let m = params.n * (params.a + params.b);
    if m < 2 {
        return Err(Error::DomainTooSmall);
    }
    let lhs = family_stopping_time(params);
    let rhs = 2 * s3_time_of_pow(m - 1) + 3 * params.n * params.a + params.n * params.b - 2;
    Ok(lhs == rhs)
}

/// One arithmetic run of family stopping times: for fixed (a, b) and scale d,
/// the values over n in [n_start, n_end] differ by exactly a - b step to step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApRun {
    pub a: u64,
    pub b: u64,
    pub d: u32,
    pub n_start: u64,
    pub n_end: u64,
    pub common_difference: i64,
    pub values: Vec<u64>,
}

impl ApRun {
    pub fn len(&self) -> u64 {
        self.n_end - self.n_start + 1
    }

    pub fn is_empty(&self) -> bool {
        false // runs are constructed nonempty
    }

    pub fn first_value(&self) -> u64 {
        self.values[0]
    }
}

/// Predicted run length at scale d: floor(2^(d+1)/(a+b)) - floor(2^d/(a+b)).
pub fn ap_run_length(a: u64, b: u64, d: u32) -> u64 {
    let s = u128::from(a + b);
    (((1u128 << (d + 1)) / s) - ((1u128 << d) / s)) as u64
}

/// Emits the run of family stopping times for every scale d in
/// [d_min, d_max]: n ranges over [floor(2^d/(a+b)) + 1, floor(2^(d+1)/(a+b))].
/// Requires (a, b) != (0, 0) and 2^d_min >= a + b, so every run is nonempty.
///
/// The constant-difference invariant is re-verified on every run before it is
/// returned.
pub fn ap_runs(a: u64, b: u64, d_min: u32, d_max: u32) -> Result<Vec<ApRun>, Error> {
    if a == 0 && b == 0 {
        return Err(Error::InvalidFamily);
    }
    if d_max >= 62 {
        return Err(Error::CapExceeded {
            requested: d_max,
            cap: 61,
        });
    }
    if d_min > d_max || (1u64 << d_min) < a + b {
        return Err(Error::DomainTooSmall);
    }
    let diff = a as i64 - b as i64;
    let mut runs = Vec::with_capacity((d_max - d_min + 1) as usize);
    for d in d_min..=d_max {
        let n_start = (1u64 << d) / (a + b) + 1;
        let n_end = (1u64 << (d + 1)) / (a + b);
        let values: Vec<u64> = (n_start..=n_end)
            .map(|n| family_stopping_time(&FamilyParams::new(a, b, n).expect("validated")))
            .collect();
        for pair in values.windows(2) {
            assert_eq!(
                pair[1] as i64 - pair[0] as i64,
                diff,
                "run at d = {d} is not arithmetic"
            );
        }
        assert_eq!(values.len() as u64, ap_run_length(a, b, d));
        runs.push(ApRun {
            a,
            b,
            d,
            n_start,
            n_end,
            common_difference: diff,
            values,
        });
    }
    Ok(runs)
}
