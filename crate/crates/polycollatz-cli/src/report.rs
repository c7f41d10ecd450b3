//! Descriptive growth ratios of the sweep statistics. The ratios are
//! reported, never asserted: whether sigma grows like d log d or rho stays
//! linear is exactly what the sweeps exist to explore.

use polycollatz::sweep::SweepRow;

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub d: u32,
    pub sigma_over_d: Option<f64>,
    pub sigma_over_d_log_d: Option<f64>,
    pub sigma_over_d15: Option<f64>,
    pub rho_over_d: Option<f64>,
}

/// One row of ratios per sweep row; denominators that vanish (d = 0, and
/// d log d at d = 1) yield `None`.
pub fn growth_report(rows: &[SweepRow]) -> Vec<GrowthRow> {
    rows.iter()
        .map(|row| {
            let d = f64::from(row.d);
            let sigma = row.sigma as f64;
            let rho = row.rho_sum as f64 / row.count as f64;
            GrowthRow {
                d: row.d,
                sigma_over_d: (row.d > 0).then(|| sigma / d),
                sigma_over_d_log_d: (row.d > 1).then(|| sigma / (d * d.ln())),
                sigma_over_d15: (row.d > 0).then(|| sigma / d.powf(1.5)),
                rho_over_d: (row.d > 0).then(|| rho / d),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycollatz::sweep::sweep_serial;

    #[test]
    fn ratios_from_golden_rows() {
        let rows = sweep_serial(0, 2, 24).unwrap();
        let report = growth_report(&rows);
        assert_eq!(report[0].sigma_over_d, None);
        assert_eq!(report[0].sigma_over_d_log_d, None);
        assert_eq!(report[1].sigma_over_d, Some(3.0));
        assert_eq!(report[1].sigma_over_d_log_d, None);
        assert_eq!(report[2].sigma_over_d, Some(3.0));
        assert_eq!(report[2].rho_over_d, Some(2.0));
        let dlogd = report[2].sigma_over_d_log_d.unwrap();
        assert!((dlogd - 6.0 / (2.0 * 2f64.ln())).abs() < 1e-12);
    }
}
