//! Exact integer forms of the stopping-time bounds, evaluated with integer
//! square roots so sweeps and margins never touch floating point.

/// Ceiling of the square root of n.
pub(crate) fn ceil_sqrt(n: u128) -> u64 {
    let s = n.isqrt();
    let s = if s * s == n { s } else { s + 1 };
    s as u64
}

/// `ceil((2d)^1.5) + d`, the degree bound on t_min over F_2[x].
pub fn t_min_degree_bound(d: u64) -> u64 {
    let m = 2 * u128::from(d);
    ceil_sqrt(m * m * m) + d
}

/// `d^2 + 2d`, the older quadratic bound on t_min.
pub fn t_min_quadratic_bound(d: u64) -> u64 {
    d * d + 2 * d
}

/// `ceil(sqrt(2) * d^1.5)`, the degree bound on the S3 stopping time of an
/// odd polynomial.
pub fn s3_degree_bound(d: u64) -> u64 {
    let d = u128::from(d);
    ceil_sqrt(2 * d * d * d)
}
