use super::{CompensatedSum, DoubleDouble, SignedLog};
use crate::error::{Error, Result};

/// Rising factorial `x (x+1) ... (x+m-1)`; exactly `0.0` when a factor is zero.
pub fn pochhammer(x: f64, m: usize) -> Result<f64> {
    let mut product = 1.0;
    for j in 0..m {
        let factor = x + j as f64;
        if factor == 0.0 {
            return Ok(0.0);
        }
        product *= factor;
    }
    if product.is_finite() {
        Ok(product)
    } else {
        Err(Error::Range { x, m })
    }
}

/// `(x)_m` in signed-log form, or `None` when the product is exactly zero.
pub fn pochhammer_signed_log(x: f64, m: usize) -> Option<SignedLog> {
    let mut log_abs = CompensatedSum::new();
    let mut sign = 1i8;
    for j in 0..m {
        let factor = x + j as f64;
        if factor == 0.0 {
            return None;
        }
        if factor < 0.0 {
            sign = -sign;
        }
        log_abs += factor.abs().ln();
    }
    Some(SignedLog::new(log_abs.total(), sign))
}

/// `(x)_k / k!`, accumulated factor by factor so intermediate values stay small.
pub fn pochhammer_over_factorial(x: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for j in 0..k {
        acc *= (x + j as f64) / (j + 1) as f64;
    }
    acc
}

/// `(x)_k (y)_k / k!`. Symmetric in `x` and `y` bit for bit.
pub fn pair_over_factorial(x: f64, y: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for j in 0..k {
        let jf = j as f64;
        acc *= (x + jf) * (y + jf) / (jf + 1.0);
    }
    acc
}

/// [`pair_over_factorial`] carried in double-double arithmetic.
pub fn pair_over_factorial_dd(x: DoubleDouble, y: DoubleDouble, k: usize) -> DoubleDouble {
    let mut acc = DoubleDouble::ONE;
    for j in 0..k {
        let jf = DoubleDouble::new(j as f64);
        acc = acc * (x + jf) * (y + jf) / DoubleDouble::new(j as f64 + 1.0);
    }
    acc
}
