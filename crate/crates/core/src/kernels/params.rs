use serde::Serialize;

use crate::error::{Error, Result};

/// Numerator shifts `a_1..a_{p+1}`, denominator shifts `b_1..b_p` and the
/// derived excess `s = b_1 + ... + b_p - a_1 - ... - a_{p+1}`.
///
/// Any `p >= 1` is accepted here; the coefficient families reject `p > 4`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParameterSet {
    p: usize,
    a: Vec<f64>,
    b: Vec<f64>,
    s: f64,
}

impl ParameterSet {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        let p = b.len();
        if p == 0 {
            return Err(Error::InvalidParameters(
                "need at least one b parameter".into(),
            ));
        }
        if a.len() != p + 1 {
            return Err(Error::InvalidParameters(format!(
                "need len(a) = len(b) + 1, got {} a-values and {} b-values",
                a.len(),
                p
            )));
        }
        if let Some(x) = a.iter().chain(&b).find(|x| !x.is_finite()) {
            return Err(Error::InvalidParameters(format!(
                "non-finite parameter {x}"
            )));
        }
        let s = excess(&a, &b);
        Ok(Self { p, a, b, s })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Copy with `a_i` and `a_j` (0-based) exchanged.
    pub fn with_swapped_a(&self, i: usize, j: usize) -> Result<Self> {
        if i > self.p || j > self.p {
            return Err(Error::InvalidParameters(format!(
                "swap indices ({i}, {j}) out of range for p = {}",
                self.p
            )));
        }
        let mut a = self.a.clone();
        a.swap(i, j);
        Self::new(a, self.b.clone())
    }

    /// Drops the last pair `(a_{p+1}, b_p)`, the order-lowering reduction
    /// that is exact when `b_p = a_{p+1}`.
    pub fn reduced(&self) -> Option<Self> {
        if self.p < 2 {
            return None;
        }
        Self::new(self.a[..self.p].to_vec(), self.b[..self.p - 1].to_vec()).ok()
    }
}

/// Left-to-right: all `b` added first, then all `a` subtracted.
fn excess(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for x in b {
        s += x;
    }
    for x in a {
        s -= x;
    }
    s
}
