//! Threaded sweep driver. The mask range of each degree is split into
//! contiguous chunks, one scoped thread per chunk, and the chunk aggregates
//! are merged in range order; the merge is partition-independent, so the
//! result is byte-identical for any thread count.

use polycollatz::error::Error;
use polycollatz::sweep::{check_cap, row_from_chunks, sweep_chunk, ChunkStats, SweepRow};

fn split_range(total: u64, parts: u64) -> Vec<(u64, u64)> {
    let parts = parts.clamp(1, total.max(1));
    let base = total / parts;
    let rem = total % parts;
    let mut ranges = Vec::with_capacity(parts as usize);
    let mut lo = 0;
    for i in 0..parts {
        let hi = lo + base + u64::from(i < rem);
        if hi > lo {
            ranges.push((lo, hi));
        }
        lo = hi;
    }
    ranges
}

/// Sweeps every degree in `[d_min, d_max]` using up to `threads` worker
/// threads per degree.
pub fn sweep_parallel(
    d_min: u32,
    d_max: u32,
    threads: u32,
    cap: u32,
) -> Result<Vec<SweepRow>, Error> {
    check_cap(d_max, cap)?;
    assert!(d_min <= d_max);
    let mut rows = Vec::with_capacity((d_max - d_min + 1) as usize);
    for d in d_min..=d_max {
        let ranges = split_range(1u64 << d, u64::from(threads.max(1)));
        let chunks: Vec<ChunkStats> = if ranges.len() == 1 {
            vec![sweep_chunk(d, ranges[0].0, ranges[0].1)]
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> = ranges
                    .iter()
                    .map(|&(lo, hi)| scope.spawn(move || sweep_chunk(d, lo, hi)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("sweep worker panicked"))
                    .collect()
            })
        };
        rows.push(row_from_chunks(d, &chunks));
    }
    Ok(rows)
}
