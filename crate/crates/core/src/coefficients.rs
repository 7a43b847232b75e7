//! The coefficient families `A_k^(p)` that feed the inner sum of the
//! expansion, for `p = 1..=4`.
//!
//! `p = 1` is the trivial family `A_0 = 1`, `A_k = 0` for `k > 0`. For
//! `p = 2, 3, 4` the coefficients are finite nested sums of Pochhammer
//! products over factorials. Two further closed forms for `p = 3`, each a
//! prefactor times a terminating `3F2` at unit argument, are provided as
//! independent cross-checks.
//!
//! Indexing follows the parameter lists: `a[0]` is `a_1`, `b[0]` is `b_1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernels::{
    nonpositive_integer_near, pair_over_factorial, pair_over_factorial_dd,
    pochhammer_over_factorial, DoubleDouble, ParameterSet,
};

/// Highest order with a known coefficient family.
pub const MAX_ORDER: usize = 4;

/// `A_k^(p)` for `k = 0..=K` of one parameter set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientTable {
    pub params: ParameterSet,
    pub values: Vec<f64>,
}

impl CoefficientTable {
    pub fn new(params: &ParameterSet, k_max: usize) -> Result<Self> {
        let values = (0..=k_max)
            .map(|k| coeff_a(params, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            params: params.clone(),
            values,
        })
    }

    pub fn k_max(&self) -> usize {
        self.values.len() - 1
    }
}

/// `A_k^(p)` by direct evaluation of the nested finite sums, inner indices
/// running upward. Products and sums are carried in double-double.
pub fn coeff_a(params: &ParameterSet, k: usize) -> Result<f64> {
    let (a, b) = (params.a(), params.b());
    match params.p() {
        1 => Ok(if k == 0 { 1.0 } else { 0.0 }),
        2 => Ok(pair_over_factorial(b[1] - a[2], b[0] - a[2], k)),
        3 => {
            let c = shift(&[b[2], b[1]], &[a[3], a[2]]);
            let mut sum = DoubleDouble::default();
            for k2 in 0..=k {
                let outer =
                    pair_over_factorial_dd(c + (k2 as f64).into(), shift(&[b[0]], &[a[2]]), k - k2);
                let inner =
                    pair_over_factorial_dd(shift(&[b[2]], &[a[3]]), shift(&[b[1]], &[a[3]]), k2);
                sum = sum + outer * inner;
            }
            Ok(sum.to_f64())
        }
        4 => {
            let c_outer = shift(&[b[3], b[2], b[1]], &[a[4], a[3], a[2]]);
            let c_inner = shift(&[b[3], b[2]], &[a[4], a[3]]);
            let mut sum = DoubleDouble::default();
            for k2 in 0..=k {
                let mut inner = DoubleDouble::default();
                for k3 in 0..=k2 {
                    inner = inner
                        + pair_over_factorial_dd(
                            c_inner + (k3 as f64).into(),
                            shift(&[b[1]], &[a[3]]),
                            k2 - k3,
                        ) * pair_over_factorial_dd(
                            shift(&[b[3]], &[a[4]]),
                            shift(&[b[2]], &[a[4]]),
                            k3,
                        );
                }
                sum = sum
                    + pair_over_factorial_dd(
                        c_outer + (k2 as f64).into(),
                        shift(&[b[0]], &[a[2]]),
                        k - k2,
                    ) * inner;
            }
            Ok(sum.to_f64())
        }
        p => Err(Error::UnsupportedOrder(p)),
    }
}

/// `sum(plus) - sum(minus)` without rounding the parameter combination to f64.
fn shift(plus: &[f64], minus: &[f64]) -> DoubleDouble {
    let up = plus
        .iter()
        .fold(DoubleDouble::default(), |acc, &x| acc + x.into());
    minus.iter().fold(up, |acc, &x| acc - x.into())
}

fn require_order_three(params: &ParameterSet) -> Result<()> {
    if params.p() == 3 {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!(
            "this representation exists only for p = 3 (got p = {})",
            params.p()
        )))
    }
}

/// `3F2(u1, u2, -k; l1, l2; 1)` summed term by term over `j = 0..=k`.
///
/// The terms alternate and can cancel heavily, so the recurrence and the
/// sum are carried in double-double arithmetic.
pub fn terminating_3f2(upper: [f64; 2], lower: [f64; 2], k: usize) -> Result<f64> {
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    for j in 0..k {
        let jf = j as f64;
        for l in lower {
            if nonpositive_integer_near(l + jf).is_some() {
                return Err(Error::DegenerateDenominator {
                    parameter: l,
                    index: j,
                });
            }
        }
        let numer = DoubleDouble::sum_of(upper[0], jf)
            * DoubleDouble::sum_of(upper[1], jf)
            * DoubleDouble::new(jf - k as f64);
        let denom = DoubleDouble::sum_of(lower[0], jf)
            * DoubleDouble::sum_of(lower[1], jf)
            * DoubleDouble::new(jf + 1.0);
        term = term * numer / denom;
        sum = sum + term;
    }
    Ok(sum.to_f64())
}

/// `A_k^(3)` as `(b_3+b_2-a_4-a_3)_k (b_1-a_3)_k / k!` times
/// `3F2(b_3-a_4, b_2-a_4, -k; b_3+b_2-a_4-a_3, 1+a_3-b_1-k; 1)`.
pub fn coeff_a3_rep_b(params: &ParameterSet, k: usize) -> Result<f64> {
    require_order_three(params)?;
    let (a, b) = (params.a(), params.b());
    let c = b[2] + b[1] - a[3] - a[2];
    let series = terminating_3f2(
        [b[2] - a[3], b[1] - a[3]],
        [c, 1.0 + a[2] - b[0] - k as f64],
        k,
    )?;
    Ok((pair_over_factorial_dd(
        shift(&[b[2], b[1]], &[a[3], a[2]]),
        shift(&[b[0]], &[a[2]]),
        k,
    ) * DoubleDouble::new(series))
    .to_f64())
}

/// `A_k^(3)` as `(b_1+b_3-a_3-a_4)_k (b_2+b_3-a_3-a_4)_k / k!` times
/// `3F2(b_3-a_3, b_3-a_4, -k; b_1+b_3-a_3-a_4, b_2+b_3-a_3-a_4; 1)`.
pub fn coeff_a3_rep_c(params: &ParameterSet, k: usize) -> Result<f64> {
    require_order_three(params)?;
    let (a, b) = (params.a(), params.b());
    let l1 = b[0] + b[2] - a[2] - a[3];
    let l2 = b[1] + b[2] - a[2] - a[3];
    let series = terminating_3f2([b[2] - a[2], b[2] - a[3]], [l1, l2], k)?;
    Ok((pair_over_factorial_dd(
        shift(&[b[0], b[2]], &[a[2], a[3]]),
        shift(&[b[1], b[2]], &[a[2], a[3]]),
        k,
    ) * DoubleDouble::new(series))
    .to_f64())
}

/// Coefficient `c_n` of `z^n` in `(1-z)^m ln(1-z)` for `n > m`:
/// `-(1/n) (-1)^m m! / (n-m)_m`.
pub fn log_series_coeff(m: usize, n: usize) -> Result<f64> {
    if n <= m {
        return Err(Error::Domain(format!(
            "log-series coefficient needs n > m (got m = {m}, n = {n})"
        )));
    }
    // m! / (n-m)_m = 1 / ((n-m)_m / m!)
    let sign = if m.is_multiple_of(2) { -1.0 } else { 1.0 };
    Ok(sign / (n as f64 * pochhammer_over_factorial((n - m) as f64, m)))
}

/// Smallest `N` for which the parameter structure guarantees `A_k = 0` for
/// every `k > N`, when such a guarantee can be read off the formulas.
///
/// Only product-structure zeros are recognised: a Pochhammer factor `(x)_j`
/// with `x` a nonpositive integer, and the reduction `b_p = a_{p+1}`.
pub fn vanishing_index(params: &ParameterSet) -> Option<usize> {
    let (a, b) = (params.a(), params.b());
    let cut = |x: f64| nonpositive_integer_near(x).map(|n| n as usize);
    let either = |x: Option<usize>, y: Option<usize>| match (x, y) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    };
    let direct = match params.p() {
        1 => Some(0),
        2 => either(cut(b[1] - a[2]), cut(b[0] - a[2])),
        3 => {
            let inner = either(cut(b[2] - a[3]), cut(b[1] - a[3]));
            cut(b[0] - a[2]).zip(inner).map(|(x, y)| x + y)
        }
        4 => {
            let innermost = either(cut(b[3] - a[4]), cut(b[2] - a[4]));
            cut(b[0] - a[2])
                .zip(cut(b[1] - a[3]))
                .zip(innermost)
                .map(|((x, y), z)| x + y + z)
        }
        _ => None,
    };
    let p = params.p();
    let via_reduction = if (2..=MAX_ORDER).contains(&p) && cut(b[p - 1] - a[p]) == Some(0) {
        params.reduced().and_then(|r| vanishing_index(&r))
    } else {
        None
    };
    either(direct, via_reduction)
}
