use crate::coefficients::{coeff_a, coeff_a3_rep_b, coeff_a3_rep_c};
use crate::error::Result;
use crate::kernels::ParameterSet;

/// Differences at or below this size count as agreement regardless of scale.
pub const ABSOLUTE_FLOOR: f64 = 1e-13;

/// `|x - y| / max(|x|, |y|)`, or 0 when `|x - y| <= ABSOLUTE_FLOOR`.
pub fn relative_discrepancy(x: f64, y: f64) -> f64 {
    let diff = (x - y).abs();
    if diff <= ABSOLUTE_FLOOR {
        0.0
    } else {
        diff / x.abs().max(y.abs())
    }
}

/// Largest pairwise discrepancy among the three `A_k^(3)` evaluations for `k <= K`.
pub fn representation_crosscheck(params: &ParameterSet, k_max: usize) -> Result<f64> {
    let mut worst = 0.0f64;
    for k in 0..=k_max {
        let nested = coeff_a(params, k)?;
        let rep_b = coeff_a3_rep_b(params, k)?;
        let rep_c = coeff_a3_rep_c(params, k)?;
        worst = worst
            .max(relative_discrepancy(nested, rep_b))
            .max(relative_discrepancy(nested, rep_c))
            .max(relative_discrepancy(rep_b, rep_c));
    }
    Ok(worst)
}
