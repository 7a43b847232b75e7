use std::f64::consts::PI;

use super::{nonpositive_integer_near, SignedLog};
use crate::error::{Error, Result};

/// ½ ln(2π)
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Arguments are shifted upward until they reach this value before the
/// Stirling series is applied.
const STIRLING_MIN: f64 = 15.0;

/// `B_{2k} / (2k (2k-1))` for k = 1..=8.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// `sin(πx)` with exact argument reduction, so integer `x` gives exactly zero.
pub fn sin_pi(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r <= -1.0 {
        r += 2.0;
    }
    let t = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * t).sin()
}

fn stirling_tail(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut power = inv;
    let mut tail = 0.0;
    for c in STIRLING_COEFFS {
        tail += c * power;
        power *= inv2;
    }
    tail
}

/// ln Γ(x) for x >= STIRLING_MIN.
fn stirling_log_gamma(x: f64) -> f64 {
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + stirling_tail(x)
}

fn log_gamma_positive(x: f64) -> f64 {
    if x >= STIRLING_MIN {
        return stirling_log_gamma(x);
    }
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < STIRLING_MIN {
        product *= shifted;
        shifted += 1.0;
    }
    stirling_log_gamma(shifted) - product.ln()
}

/// `ln|Γ(x)|` together with the sign of `Γ(x)`.
///
/// Fails with [`Error::Pole`] within `POLE_TOLERANCE` of a nonpositive integer.
pub fn signed_log_gamma(x: f64) -> Result<SignedLog> {
    if !x.is_finite() {
        return Err(Error::Domain(format!(
            "log-gamma of non-finite argument {x}"
        )));
    }
    if nonpositive_integer_near(x).is_some() {
        return Err(Error::Pole {
            label: "x".into(),
            argument: x,
        });
    }
    if x >= 0.5 {
        return Ok(SignedLog::new(log_gamma_positive(x), 1));
    }
    // reflection: Γ(x) Γ(1-x) = π / sin(πx)
    let s = sin_pi(x);
    let log_abs = PI.ln() - s.abs().ln() - log_gamma_positive(1.0 - x);
    Ok(SignedLog::new(log_abs, if s < 0.0 { -1 } else { 1 }))
}

/// `Γ(base + num) / Γ(base + den)` in signed-log form.
///
/// The difference of the two log-gammas is formed without cancellation of the
/// large `x ln x` parts: both arguments are shifted above `STIRLING_MIN`, and
/// the Stirling difference is written in terms of `log1p((num - den) / w)`.
/// Callers must have checked both arguments for poles.
pub fn log_gamma_ratio(base: f64, num: f64, den: f64) -> SignedLog {
    let d = num - den;
    let y0 = base + num;
    let w0 = base + den;
    if d == 0.0 {
        return SignedLog::ONE;
    }

    let mut log_abs = 0.0;
    let mut sign = 1i8;
    let lowest = y0.min(w0);
    let shift = if lowest < STIRLING_MIN {
        (STIRLING_MIN - lowest).ceil()
    } else {
        0.0
    };
    let steps = shift as u64;
    for j in 0..steps {
        // Γ(y)/Γ(w) = Γ(y+1)/Γ(w+1) · w/y
        let yj = y0 + j as f64;
        let wj = w0 + j as f64;
        if (yj < 0.0) != (wj < 0.0) {
            sign = -sign;
        }
        let ratio = -d / yj;
        log_abs += if ratio.abs() <= 0.5 {
            ratio.ln_1p()
        } else {
            wj.abs().ln() - yj.abs().ln()
        };
    }

    let y = y0 + shift;
    let w = w0 + shift;
    let mut diff = (y - 0.5) * (d / w).ln_1p() + d * w.ln() - d;
    // first Bernoulli term, rewritten as c1 (1/y - 1/w) = -c1 d / (y w)
    diff -= STIRLING_COEFFS[0] * d / (y * w);
    let mut py = 1.0 / y;
    let mut pw = 1.0 / w;
    let (iy2, iw2) = (py * py, pw * pw);
    for c in &STIRLING_COEFFS[1..] {
        py *= iy2;
        pw *= iw2;
        diff += c * (py - pw);
    }
    SignedLog::new(log_abs + diff, sign)
}
