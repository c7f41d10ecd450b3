//! Exhaustive per-degree stopping-time statistics over F_2[x].
//!
//! A degree-d scan walks all 2^d polynomials with leading coefficient at
//! index d, computing each stopping time with the reduced S3 engine. The
//! per-chunk aggregates (max, argmax, exact sum) are associative and
//! commutative with a strict-greater argmax rule, so any partition of the
//! mask range merged in ascending order yields an identical row; callers may
//! fan chunks out across threads and remain deterministic.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::t_min_degree_bound;
use crate::dynamics::t_min_mask;
use crate::error::Error;

/// Default ceiling on sweep degrees; each extra degree doubles the work.
pub const DEFAULT_DEGREE_CAP: u32 = 24;

/// Aggregate statistics of all 2^d polynomials of degree exactly d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub d: u32,
    /// Number of polynomials scanned: 2^d.
    pub count: u64,
    /// Maximal stopping time at this degree.
    pub sigma: u64,
    /// Exact sum of all stopping times; the average is `rho_sum / count`.
    pub rho_sum: u128,
    /// Coefficient mask of the smallest polynomial attaining sigma.
    pub argmax_mask: u64,
    /// `t_min_degree_bound(d) - sigma`; nonnegative whenever the bound holds.
    pub bound_margin: i64,
}

impl SweepRow {
    /// The average stopping time as an exact pair (numerator, denominator).
    pub fn rho_pair(&self) -> (u128, u64) {
        (self.rho_sum, self.count)
    }

    /// The average stopping time rendered to six decimal places with
    /// round-half-even, entirely in integer arithmetic.
    pub fn rho_decimal(&self) -> String {
        render_decimal_6(self.rho_sum, u128::from(self.count))
    }

    pub fn argmax_hex(&self) -> String {
        crate::gf2::Gf2Poly::from_mask(self.argmax_mask).to_hex()
    }
}

fn render_decimal_6(num: u128, den: u128) -> String {
    use core::fmt::Write;
    let mut int_part = num / den;
    let rem = num % den;
    let scaled = rem * 1_000_000;
    let mut frac = scaled / den;
    let tail = scaled % den;
    // round half to even on the 6th decimal place
    if 2 * tail > den || (2 * tail == den && frac % 2 == 1) {
        frac += 1;
        if frac == 1_000_000 {
            frac = 0;
            int_part += 1;
        }
    }
    let mut s = String::new();
    write!(s, "{int_part}.{frac:06}").unwrap();
    s
}

/// Partial aggregate over a nonempty sub-range of degree-d masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChunkStats {
    pub max: u64,
    /// Full coefficient mask (leading bit included) of the first polynomial
    /// in the range attaining `max`.
    pub argmax_mask: u64,
    pub sum: u128,
}

impl ChunkStats {
    /// Folds a later (higher-mask) chunk into this one. Ties keep the earlier
    /// argmax, so merging in ascending range order yields the smallest mask.
    pub fn merge(&mut self, later: &ChunkStats) {
        if later.max > self.max {
            self.max = later.max;
            self.argmax_mask = later.argmax_mask;
        }
        self.sum += later.sum;
    }
}

/// Scans masks `lo..hi` (low d bits; the leading bit is implied) of degree-d
/// polynomials with the reduced engine. Requires `lo < hi <= 2^d` and d <= 62.
pub fn sweep_chunk(d: u32, lo: u64, hi: u64) -> ChunkStats {
    assert!(d <= 62, "masks are u64");
    assert!(lo < hi && hi <= 1u64 << d);
    let lead = 1u64 << d;
    let mut stats = ChunkStats {
        max: 0,
        argmax_mask: lead | lo,
        sum: 0,
    };
    for low_bits in lo..hi {
        let mask = lead | low_bits;
        let t = t_min_mask(mask);
        if t > stats.max || low_bits == lo {
            stats.max = t;
            stats.argmax_mask = mask;
        }
        stats.sum += u128::from(t);
    }
    stats
}

/// Assembles the row for degree d from chunk aggregates listed in ascending
/// range order covering all of `0..2^d`.
pub fn row_from_chunks(d: u32, chunks: &[ChunkStats]) -> SweepRow {
    let mut merged = chunks[0];
    for chunk in &chunks[1..] {
        merged.merge(chunk);
    }
    SweepRow {
        d,
        count: 1u64 << d,
        sigma: merged.max,
        rho_sum: merged.sum,
        argmax_mask: merged.argmax_mask,
        bound_margin: t_min_degree_bound(u64::from(d)) as i64 - merged.max as i64,
    }
}

/// Single-threaded sweep over every degree in `[d_min, d_max]`.
///
/// `cap` is the configured safety cap (callers usually pass
/// `DEFAULT_DEGREE_CAP` or an operator override); degrees beyond it are
/// refused rather than silently attempted.
pub fn sweep_serial(d_min: u32, d_max: u32, cap: u32) -> Result<Vec<SweepRow>, Error> {
    check_cap(d_max, cap)?;
    assert!(d_min <= d_max);
    Ok((d_min..=d_max)
        .map(|d| row_from_chunks(d, &[sweep_chunk(d, 0, 1u64 << d)]))
        .collect())
}

/// Validates a requested top degree against the configured cap (and the hard
/// u64-mask limit of 62).
pub fn check_cap(d_max: u32, cap: u32) -> Result<(), Error> {
    let effective = cap.min(62);
    if d_max > effective {
        return Err(Error::CapExceeded {
            requested: d_max,
            cap: effective,
        });
    }
    Ok(())
}
