//! Truncated asymptotic expansion of
//!
//! ```text
//! Γ(a_1+n)⋯Γ(a_{p+1}+n) / (Γ(b_1+n)⋯Γ(b_p+n) Γ(-s+n))
//!   = 1 + Σ_{m=1}^{M} (a_1+s)_m (a_2+s)_m / ((1)_m (1+s-n)_m)
//!           · Σ_{k=0}^{m} (-m)_k / ((a_1+s)_k (a_2+s)_k) · A_k^(p)
//!     + O(n^{-M-1})
//! ```
//!
//! Only Pochhammer symbols appear on this side, so no gamma function is
//! evaluated and integer `s` needs no special treatment. When `a_1+s` or
//! `a_2+s` is a nonpositive integer the outer numerator and the inner
//! denominators vanish together; such terms are evaluated in the combined
//! form
//!
//! ```text
//! Σ_k (-1)^k A_k (a_1+s+k)_{m-k} (a_2+s+k)_{m-k} / ((m-k)! (1+s-n)_m)
//! ```
//!
//! which is the analytic limit and free of `0/0`.

use serde::Serialize;

use crate::coefficients::{vanishing_index, CoefficientTable};
use crate::error::{Error, Result};
use crate::kernels::{nonpositive_integer_near, pair_over_factorial, ParameterSet};

/// Relative slack within which two term magnitudes count as tied in
/// [`optimal_truncation`].
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermRecord {
    pub m: usize,
    pub value: f64,
    /// The k-sum; `None` when the term needed the combined pole-safe form.
    pub inner_sum: Option<f64>,
    /// The Pochhammer-ratio prefactor; `None` together with `inner_sum`.
    pub outer_factor: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationResult {
    pub value: f64,
    pub terms: Vec<TermRecord>,
    /// `|term(M+1)|`, or 0 when the series terminated.
    pub error_estimate: f64,
    pub m_used: usize,
    pub terminated: bool,
}

pub fn s_of(params: &ParameterSet) -> f64 {
    params.s()
}

/// The inner k-sum for term `m`.
///
/// Fails with [`Error::DenominatorPole`] when `(a_1+s)_k` or `(a_2+s)_k`
/// vanishes for some `k <= m`; [`term`] switches to the combined form there.
pub fn inner_sum(params: &ParameterSet, m: usize) -> Result<f64> {
    let table = CoefficientTable::new(params, m)?;
    let (x1, x2) = role_shifts(params);
    inner_sum_with(&table.values, x1, x2, m)
}

fn inner_sum_with(coeffs: &[f64], x1: f64, x2: f64, m: usize) -> Result<f64> {
    let mut ratio = 1.0;
    let mut sum = coeffs[0];
    for k in 0..m {
        let kf = k as f64;
        for (which, x) in [(1, x1), (2, x2)] {
            if nonpositive_integer_near(x) == Some(k as u64) {
                return Err(Error::DenominatorPole { which, k: k + 1 });
            }
        }
        ratio *= (kf - m as f64) / ((x1 + kf) * (x2 + kf));
        sum += ratio * coeffs[k + 1];
    }
    Ok(sum)
}

fn role_shifts(params: &ParameterSet) -> (f64, f64) {
    let s = params.s();
    (params.a()[0] + s, params.a()[1] + s)
}

/// Index `m0` past which every term is identically zero, when the parameter
/// structure proves it.
///
/// A term `m > N` loses every k-component with `k <= N` when `a_i + s = -N`,
/// and the components with `k > N_A` vanish when `A_k = 0` for all `k > N_A`.
pub fn termination_index(params: &ParameterSet) -> Option<usize> {
    let support = vanishing_index(params)?;
    let (x1, x2) = role_shifts(params);
    [x1, x2]
        .into_iter()
        .filter_map(nonpositive_integer_near)
        .map(|n| n as usize)
        .filter(|&n| n >= support)
        .min()
}

/// Rejects `n` when a factor `1+s-n+i`, `i < needed`, of `(1+s-n)_needed`
/// vanishes, which can only happen for `n <= s + needed`.
fn check_point(params: &ParameterSet, n: u64, needed: usize) -> Result<()> {
    let too_small = Err(Error::EvaluationPointTooSmall {
        n,
        s: params.s(),
        needed,
    });
    if n == 0 {
        return too_small;
    }
    // the vanishing factor has index i = n - 1 - s
    match nonpositive_integer_near(params.s() + 1.0 - n as f64) {
        Some(i) if (i as usize) < needed => too_small,
        _ => Ok(()),
    }
}

/// Term evaluator for one parameter set and evaluation point.
struct Series<'a> {
    params: &'a ParameterSet,
    n: f64,
    coeffs: Vec<f64>,
    x1: f64,
    x2: f64,
    cut1: Option<usize>,
    cut2: Option<usize>,
}

impl<'a> Series<'a> {
    fn new(params: &'a ParameterSet, n: u64, m_max: usize) -> Result<Self> {
        let coeffs = CoefficientTable::new(params, m_max)?.values;
        let (x1, x2) = role_shifts(params);
        let cut1 = nonpositive_integer_near(x1).map(|c| c as usize);
        let cut2 = nonpositive_integer_near(x2).map(|c| c as usize);
        Ok(Self {
            params,
            n: n as f64,
            coeffs,
            x1,
            x2,
            cut1,
            cut2,
        })
    }

    /// `1 / (1+s-n)_m`
    fn recip_denominator(&self, m: usize) -> f64 {
        let base = 1.0 + self.params.s() - self.n;
        (0..m).fold(1.0, |acc, i| acc / (base + i as f64))
    }

    fn needs_combined_form(&self, m: usize) -> bool {
        self.cut1.is_some_and(|c| c < m) || self.cut2.is_some_and(|c| c < m)
    }

    fn term(&self, m: usize) -> TermRecord {
        if m == 0 {
            return TermRecord {
                m,
                value: 1.0,
                inner_sum: Some(1.0),
                outer_factor: Some(1.0),
            };
        }
        let recip = self.recip_denominator(m);
        if self.needs_combined_form(m) {
            // snap the vanishing shifts so the zero factors are exact
            let x1 = self.cut1.map_or(self.x1, |c| -(c as f64));
            let x2 = self.cut2.map_or(self.x2, |c| -(c as f64));
            let mut sum = 0.0;
            for k in 0..=m {
                let a_k = self.coeffs[k];
                if a_k == 0.0 {
                    continue;
                }
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let kf = k as f64;
                sum += sign * a_k * pair_over_factorial(x1 + kf, x2 + kf, m - k);
            }
            TermRecord {
                m,
                value: sum * recip,
                inner_sum: None,
                outer_factor: None,
            }
        } else {
            let outer = pair_over_factorial(self.x1, self.x2, m) * recip;
            let inner = inner_sum_with(&self.coeffs, self.x1, self.x2, m)
                .expect("inner denominators are nonzero outside the combined form");
            TermRecord {
                m,
                value: outer * inner,
                inner_sum: Some(inner),
                outer_factor: Some(outer),
            }
        }
    }
}

/// The `m`-th summand at evaluation point `n`.
pub fn term(params: &ParameterSet, n: u64, m: usize) -> Result<TermRecord> {
    check_point(params, n, m)?;
    Ok(Series::new(params, n, m)?.term(m))
}

/// The termination index if it is within `order`, and how far into
/// `(1+s-n)_m` the evaluation reaches: up to `m0` when the series
/// terminates, otherwise one past `order` for the error estimate.
fn reach(params: &ParameterSet, order: usize) -> (Option<usize>, usize) {
    match termination_index(params).filter(|&m0| m0 <= order) {
        Some(m0) => (Some(m0), m0),
        None => (None, order + 1),
    }
}

/// Sum of the terms `m = 0..=M`, stopping early when the series provably terminates.
pub fn evaluate(params: &ParameterSet, n: u64, order: usize) -> Result<EvaluationResult> {
    let (cutoff, needed) = reach(params, order);
    check_point(params, n, needed)?;
    let series = Series::new(params, n, needed)?;
    let last = cutoff.unwrap_or(order);

    let terms: Vec<TermRecord> = (0..=last).map(|m| series.term(m)).collect();
    let mut value = 0.0;
    for t in &terms {
        value += t.value;
    }
    let error_estimate = match cutoff {
        Some(_) => 0.0,
        None => series.term(order + 1).value.abs(),
    };
    Ok(EvaluationResult {
        value,
        terms,
        error_estimate,
        m_used: last,
        terminated: cutoff.is_some(),
    })
}

/// [`evaluate`] at the `M* <= M_cap` that minimises `|term(M*+1)|`; ties go
/// to the smaller `M*`. A series that terminates within the cap is summed
/// to its end.
pub fn optimal_truncation(
    params: &ParameterSet,
    n: u64,
    order_cap: usize,
) -> Result<EvaluationResult> {
    let (cutoff, needed) = reach(params, order_cap);
    if let Some(m0) = cutoff {
        return evaluate(params, n, m0);
    }
    check_point(params, n, needed)?;
    let series = Series::new(params, n, needed)?;
    let mut best = (0, series.term(1).value.abs());
    for order in 1..=order_cap {
        let size = series.term(order + 1).value.abs();
        if size < best.1 * (1.0 - TIE_TOLERANCE) {
            best = (order, size);
        }
    }
    evaluate(params, n, best.0)
}
