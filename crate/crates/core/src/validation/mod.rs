//! Verification harness: measured error decay against the oracle,
//! cross-checks between coefficient representations, and the seeded
//! parameter corpus the checks draw from.

mod corpus;
mod crosscheck;
mod suite;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::evaluate;
use crate::kernels::{oracle_ratio, ParameterSet};

pub use corpus::{ParameterCorpus, GRID_DENOMINATOR};
pub use crosscheck::{relative_discrepancy, representation_crosscheck, ABSOLUTE_FLOOR};
pub use suite::{run_suite, CheckOutcome, DEFAULT_SEED};

/// Relative accuracy assumed for [`oracle_ratio`].
pub const ORACLE_RELATIVE_ERROR: f64 = 1e-12;

/// Rows whose error is within this factor of the oracle's accuracy are left
/// out of the order fit.
pub const ADMISSIBILITY_FACTOR: f64 = 1e3;

/// Allowed distance between fitted and expected order.
pub const SLOPE_TOLERANCE: f64 = 0.3;

pub const MIN_FIT_POINTS: usize = 3;

/// The doubling grid 20, 40, ..., 640.
pub const DOUBLING_GRID: [u64; 6] = [20, 40, 80, 160, 320, 640];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridRow {
    pub n: u64,
    pub oracle: f64,
    pub series: f64,
    pub abs_error: f64,
}

impl GridRow {
    fn new(n: u64, oracle: f64, series: f64) -> Self {
        Self {
            n,
            oracle,
            series,
            abs_error: (series - oracle).abs(),
        }
    }

    /// Whether the error stands clear of oracle rounding.
    pub fn admissible(&self) -> bool {
        self.abs_error > ADMISSIBILITY_FACTOR * ORACLE_RELATIVE_ERROR * self.oracle.abs()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub params: ParameterSet,
    pub order: usize,
    pub grid: Vec<GridRow>,
    pub fitted_order: f64,
    pub expected_order: f64,
}

impl ConvergenceReport {
    pub fn within_tolerance(&self) -> bool {
        (self.fitted_order - self.expected_order).abs() <= SLOPE_TOLERANCE
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_log_log_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < MIN_FIT_POINTS {
        return Err(Error::InsufficientData {
            admissible: points.len(),
            required: MIN_FIT_POINTS,
        });
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let count = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / count;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in &logs {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    Ok(sxy / sxx)
}

fn fit_rows(rows: &[GridRow]) -> Result<f64> {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.admissible())
        .map(|r| (r.n as f64, r.abs_error))
        .collect();
    fit_log_log_slope(&points)
}

fn check_grid(n_grid: &[u64]) -> Result<()> {
    if n_grid.is_empty() {
        return Err(Error::InvalidParameters("empty n grid".into()));
    }
    if n_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameters(
            "n grid must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Builds a report from precomputed rows.
pub fn report_from_rows(
    params: &ParameterSet,
    order: usize,
    grid: Vec<GridRow>,
) -> Result<ConvergenceReport> {
    let fitted_order = fit_rows(&grid)?;
    Ok(ConvergenceReport {
        params: params.clone(),
        order,
        grid,
        fitted_order,
        expected_order: -((order + 1) as f64),
    })
}

/// Oracle and series values over the grid, without the fit.
pub fn scan_rows(params: &ParameterSet, order: usize, n_grid: &[u64]) -> Result<Vec<GridRow>> {
    check_grid(n_grid)?;
    n_grid
        .iter()
        .map(|&n| {
            Ok(GridRow::new(
                n,
                oracle_ratio(params, n)?,
                evaluate(params, n, order)?.value,
            ))
        })
        .collect()
}

/// Series error against the oracle over `n_grid` and its fitted decay order.
pub fn convergence_scan(
    params: &ParameterSet,
    order: usize,
    n_grid: &[u64],
) -> Result<ConvergenceReport> {
    let rows = scan_rows(params, order, n_grid)?;
    report_from_rows(params, order, rows)
}

/// `log2(error(n_{i+1}) / error(n_i))` for consecutive rows.
pub fn successive_log2_ratios(rows: &[GridRow]) -> Vec<f64> {
    rows.windows(2)
        .map(|w| (w[1].abs_error / w[0].abs_error).log2())
        .collect()
}

/// Differences between the series with `a_i` and `a_j` (0-based) exchanged
/// and the series in the given order. In each row `oracle` holds the
/// given-order value and `series` the swapped one.
pub fn permutation_differences(
    params: &ParameterSet,
    swap: (usize, usize),
    n_grid: &[u64],
    order: usize,
) -> Result<Vec<GridRow>> {
    if params.p() < 2 {
        return Err(Error::InvalidParameters(
            "permutation sensitivity needs p >= 2; for p = 1 both role assignments coincide".into(),
        ));
    }
    check_grid(n_grid)?;
    let swapped = params.with_swapped_a(swap.0, swap.1)?;
    n_grid
        .iter()
        .map(|&n| {
            Ok(GridRow::new(
                n,
                evaluate(params, n, order)?.value,
                evaluate(&swapped, n, order)?.value,
            ))
        })
        .collect()
}

/// Decay of the difference between the user ordering and the ordering with
/// `a_2` and `a_3` exchanged in their roles.
///
/// The truncated series is in fact symmetric in the `a`-list, so the
/// differences are normally pure rounding. When no row stands clear of the
/// noise floor the report carries `fitted_order = -inf`.
pub fn permutation_sensitivity(
    params: &ParameterSet,
    n_grid: &[u64],
    order: usize,
) -> Result<ConvergenceReport> {
    let rows = permutation_differences(params, (1, 2), n_grid, order)?;
    if rows.iter().all(|r| !r.admissible()) {
        return Ok(ConvergenceReport {
            params: params.clone(),
            order,
            grid: rows,
            fitted_order: f64::NEG_INFINITY,
            expected_order: -((order + 1) as f64),
        });
    }
    report_from_rows(params, order, rows)
}
