use std::ops::{Div, Mul};

use serde::{Deserialize, Serialize};

/// A nonzero real stored as `sign * exp(log_abs)`.
///
/// Zero is not representable; operations that can produce zero return
/// `Option<SignedLog>` instead.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignedLog {
    pub log_abs: f64,
    pub sign: i8,
}

impl SignedLog {
    pub const ONE: SignedLog = SignedLog {
        log_abs: 0.0,
        sign: 1,
    };

    pub fn new(log_abs: f64, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Self { log_abs, sign }
    }

    /// `None` for zero or non-finite input.
    pub fn from_f64(x: f64) -> Option<Self> {
        if x == 0.0 || !x.is_finite() {
            return None;
        }
        Some(Self::new(x.abs().ln(), if x < 0.0 { -1 } else { 1 }))
    }

    /// Converts back to binary64; overflows to ±inf and underflows to ±0.
    pub fn value(self) -> f64 {
        f64::from(self.sign) * self.log_abs.exp()
    }

    pub fn recip(self) -> Self {
        Self::new(-self.log_abs, self.sign)
    }
}

impl Mul for SignedLog {
    type Output = SignedLog;

    fn mul(self, rhs: SignedLog) -> SignedLog {
        SignedLog::new(self.log_abs + rhs.log_abs, self.sign * rhs.sign)
    }
}

impl Div for SignedLog {
    type Output = SignedLog;

    fn div(self, rhs: SignedLog) -> SignedLog {
        SignedLog::new(self.log_abs - rhs.log_abs, self.sign * rhs.sign)
    }
}
