use num_rational::Ratio;
use serde::Serialize;

use super::{
    convergence_scan, permutation_sensitivity, relative_discrepancy, ParameterCorpus,
    DOUBLING_GRID, SLOPE_TOLERANCE,
};
use crate::coefficients::{log_series_coeff, CoefficientTable};
use crate::error::Result;
use crate::expansion::evaluate;
use crate::kernels::{oracle_ratio, signed_log_gamma, ParameterSet};

pub const DEFAULT_SEED: u64 = 20_010_101;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn from_result(name: &str, result: Result<(bool, String)>) -> Self {
        match result {
            Ok((passed, detail)) => Self {
                name: name.into(),
                passed,
                detail,
            },
            Err(e) => Self {
                name: name.into(),
                passed: false,
                detail: format!("error: {e}"),
            },
        }
    }
}

fn ps(a: &[f64], b: &[f64]) -> ParameterSet {
    ParameterSet::new(a.to_vec(), b.to_vec()).expect("built-in scenario is valid")
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs()
}

/// Runs every built-in property check; the corpus-driven checks use `seed`.
pub fn run_suite(seed: u64) -> Vec<CheckOutcome> {
    let mut corpus = ParameterCorpus::new(seed);
    let generic3 = corpus.generic_set(3, DOUBLING_GRID[0]);
    let generic4 = corpus.generic_set(4, DOUBLING_GRID[0]);
    let mut checks = vec![
        CheckOutcome::from_result("termination exactness", termination_exactness()),
        CheckOutcome::from_result("cancellation identity", cancellation_identity()),
    ];
    for (name, params, orders) in [
        (
            "convergence order p=1",
            ps(&[1.0, 1.0], &[2.0]),
            &[0usize, 1, 2, 3][..],
        ),
        (
            "convergence order p=2",
            ps(&[0.3, 0.7, 1.1], &[0.9, 1.3]),
            &[0, 1, 2, 3][..],
        ),
        ("convergence order p=3", generic3.clone(), &[1, 2][..]),
        ("convergence order p=4", generic4.clone(), &[1, 2][..]),
    ] {
        checks.push(CheckOutcome::from_result(
            name,
            convergence_orders(&params, orders),
        ));
    }
    checks.push(CheckOutcome::from_result(
        "permutation sensitivity p=2",
        permutation_sensitivity(&ps(&[0.3, 0.7, 1.1], &[0.9, 1.3]), &DOUBLING_GRID, 1).map(|r| {
            (
                r.fitted_order <= -2.0 + SLOPE_TOLERANCE,
                format!("slope {}", r.fitted_order),
            )
        }),
    ));
    checks.push(CheckOutcome::from_result(
        "representation agreement",
        representation_agreement(&mut corpus),
    ));
    checks.push(CheckOutcome::from_result(
        "reduction chain",
        reduction_chain(&generic4),
    ));
    checks.push(CheckOutcome::from_result(
        "log-series coefficients",
        log_series(),
    ));
    checks.push(CheckOutcome::from_result(
        "oracle self-checks",
        oracle_self_checks(),
    ));
    checks
}

fn termination_exactness() -> Result<(bool, String)> {
    let params = ps(&[1.0, 3.0], &[2.0]);
    let mut worst = 0.0f64;
    let mut all_terminated = true;
    for n in [5u64, 10, 50, 100] {
        let closed = (n as f64 + 2.0) / (n as f64 + 1.0);
        let oracle = oracle_ratio(&params, n)?;
        for order in 1..=4 {
            let r = evaluate(&params, n, order)?;
            all_terminated &= r.terminated;
            worst = worst.max(rel(r.value, closed)).max(rel(r.value, oracle));
        }
    }
    Ok((
        all_terminated && worst <= 1e-11,
        format!("max rel error {worst:e}, terminated {all_terminated}"),
    ))
}

fn cancellation_identity() -> Result<(bool, String)> {
    let params = ps(&[0.7, 1.9], &[1.9]);
    let mut exact = true;
    let mut worst = 0.0f64;
    for n in 5..=200u64 {
        worst = worst.max((oracle_ratio(&params, n)? - 1.0).abs());
        for order in 0..=6 {
            exact &= evaluate(&params, n, order)?.value == 1.0;
        }
    }
    Ok((
        exact && worst <= 1e-13,
        format!("series exactly 1: {exact}, oracle max |r-1| {worst:e}"),
    ))
}

fn convergence_orders(params: &ParameterSet, orders: &[usize]) -> Result<(bool, String)> {
    let mut passed = true;
    let mut detail = Vec::new();
    for &order in orders {
        let report = convergence_scan(params, order, &DOUBLING_GRID)?;
        passed &= report.within_tolerance();
        detail.push(format!("M={order}: {:.3}", report.fitted_order));
    }
    Ok((passed, detail.join(", ")))
}

fn representation_agreement(corpus: &mut ParameterCorpus) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for params in corpus.representation_sets(200, 10) {
        worst = worst.max(super::representation_crosscheck(&params, 10)?);
    }
    Ok((
        worst <= 1e-11,
        format!("max discrepancy {worst:e} over 200 sets"),
    ))
}

/// Sets `b_p = a_{p+1}` so that the order drops by one.
fn with_cancelling_tail(params: &ParameterSet) -> ParameterSet {
    let mut b = params.b().to_vec();
    b[params.p() - 1] = params.a()[params.p()];
    ParameterSet::new(params.a().to_vec(), b).expect("same shape")
}

fn reduction_chain(seed_set: &ParameterSet) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    let mut params = seed_set.clone();
    while params.p() >= 2 {
        let full = with_cancelling_tail(&params);
        let lower = full.reduced().expect("p >= 2");
        let upper_table = CoefficientTable::new(&full, 8)?;
        let lower_table = CoefficientTable::new(&lower, 8)?;
        for (x, y) in upper_table.values.iter().zip(&lower_table.values) {
            worst = worst.max(relative_discrepancy(*x, *y));
        }
        for order in 0..=3 {
            for n in [20u64, 80] {
                let x = evaluate(&full, n, order)?;
                let y = evaluate(&lower, n, order)?;
                for (s, t) in x.terms.iter().zip(&y.terms) {
                    worst = worst.max(relative_discrepancy(s.value, t.value));
                }
                worst = worst.max(relative_discrepancy(x.value, y.value));
            }
        }
        params = lower;
    }
    Ok((worst <= 1e-12, format!("max discrepancy {worst:e}")))
}

/// Coefficient of `z^n` in `(1-z)^m ln(1-z)` by exact rational convolution.
pub(crate) fn log_series_brute_force(m: usize, n: usize) -> Ratio<i128> {
    let mut sum = Ratio::from_integer(0);
    let mut binom: i128 = 1;
    for i in 0..=m.min(n - 1) {
        let sign: i128 = if i % 2 == 0 { 1 } else { -1 };
        sum -= Ratio::new(sign * binom, (n - i) as i128);
        binom = binom * (m - i) as i128 / (i + 1) as i128;
    }
    sum
}

fn log_series() -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for m in 0..=5 {
        for n in m + 1..=30 {
            let exact = log_series_brute_force(m, n);
            let expect = *exact.numer() as f64 / *exact.denom() as f64;
            worst = worst.max(rel(log_series_coeff(m, n)?, expect));
        }
    }
    Ok((worst <= 1e-12, format!("max rel error {worst:e}")))
}

fn oracle_self_checks() -> Result<(bool, String)> {
    let mut worst_shift = 0.0f64;
    let mut x: f64 = -10.5;
    while x <= 50.0 {
        if (x - x.round()).abs() > 1e-3 || x.round() > 0.0 {
            let step = signed_log_gamma(x + 1.0)? / signed_log_gamma(x)?;
            worst_shift = worst_shift.max((step.value() - x).abs() / x.abs());
        }
        x += 0.125;
    }
    let half = rel(signed_log_gamma(0.5)?.value(), std::f64::consts::PI.sqrt());
    let five = rel(signed_log_gamma(5.0)?.value(), 24.0);

    let params = ps(&[0.3, -1.2, 0.55, 2.0], &[1.1, 0.25, -0.6]);
    let permuted = ps(&[2.0, 0.55, 0.3, -1.2], &[-0.6, 1.1, 0.25]);
    let mut worst_perm = 0.0f64;
    for n in [5u64, 20, 160, 640] {
        worst_perm = worst_perm.max(rel(oracle_ratio(&permuted, n)?, oracle_ratio(&params, n)?));
    }
    let passed = worst_shift <= 1e-13 && half <= 1e-13 && five <= 1e-13 && worst_perm <= 1e-13;
    Ok((
        passed,
        format!(
            "shift {worst_shift:e}, Γ(1/2) {half:e}, Γ(5) {five:e}, permutation {worst_perm:e}"
        ),
    ))
}
