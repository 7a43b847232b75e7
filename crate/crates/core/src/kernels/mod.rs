//! Overflow-safe building blocks: Pochhammer symbols, sign-tracked log-gamma
//! and the direct gamma-ratio oracle used as ground truth.

mod double_double;
mod gamma;
mod oracle;
mod params;
mod pochhammer;
mod signed_log;
mod sum;

pub use double_double::DoubleDouble;
pub use gamma::{log_gamma_ratio, signed_log_gamma, sin_pi};
pub use oracle::{gamma_arguments, oracle_ratio, GammaArgument};
pub use params::ParameterSet;
pub use pochhammer::{
    pair_over_factorial, pair_over_factorial_dd, pochhammer, pochhammer_over_factorial,
    pochhammer_signed_log,
};
pub use signed_log::SignedLog;
pub use sum::CompensatedSum;

/// Distance from a nonpositive integer below which a value is treated as a pole.
pub const POLE_TOLERANCE: f64 = 1e-8;

/// Returns `Some(k)` when `x` lies within [`POLE_TOLERANCE`] of the nonpositive integer `-k`.
pub fn nonpositive_integer_near(x: f64) -> Option<u64> {
    if !x.is_finite() {
        return None;
    }
    let r = x.round();
    if r <= 0.0 && (x - r).abs() <= POLE_TOLERANCE {
        Some((-r) as u64)
    } else {
        None
    }
}
