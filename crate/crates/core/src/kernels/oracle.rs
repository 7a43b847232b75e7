use super::{log_gamma_ratio, nonpositive_integer_near, CompensatedSum, ParameterSet};
use crate::error::{Error, Result};

/// One gamma factor of the ratio `Γ(a_1+n)⋯Γ(a_{p+1}+n) / (Γ(b_1+n)⋯Γ(b_p+n) Γ(-s+n))`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaArgument {
    pub label: String,
    pub shift: f64,
    pub value: f64,
    pub numerator: bool,
}

pub fn gamma_arguments(params: &ParameterSet, n: u64) -> Vec<GammaArgument> {
    let nf = n as f64;
    let numer = params.a().iter().enumerate().map(|(i, &a)| GammaArgument {
        label: format!("a_{}+n", i + 1),
        shift: a,
        value: a + nf,
        numerator: true,
    });
    let denom = params.b().iter().enumerate().map(|(j, &b)| GammaArgument {
        label: format!("b_{}+n", j + 1),
        shift: b,
        value: b + nf,
        numerator: false,
    });
    let excess = std::iter::once(GammaArgument {
        label: "-s+n".into(),
        shift: -params.s(),
        value: nf - params.s(),
        numerator: false,
    });
    numer.chain(denom).chain(excess).collect()
}

/// Direct evaluation of the gamma-function ratio at integer `n`.
///
/// Numerator and denominator shifts are sorted and paired, and each pair's
/// log-ratio is formed by [`log_gamma_ratio`]; the pair contributions are
/// combined with compensated summation. The result is symmetric in the
/// `a`-list and in the `b`-list.
pub fn oracle_ratio(params: &ParameterSet, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("n must be a positive integer".into()));
    }
    let args = gamma_arguments(params, n);
    for arg in &args {
        if !arg.value.is_finite() || arg.value.abs() > 1e6 {
            return Err(Error::Domain(format!(
                "gamma argument {} = {} outside |x| <= 1e6",
                arg.label, arg.value
            )));
        }
        if nonpositive_integer_near(arg.value).is_some() {
            return Err(Error::Pole {
                label: arg.label.clone(),
                argument: arg.value,
            });
        }
    }

    let mut numer: Vec<f64> = args
        .iter()
        .filter(|g| g.numerator)
        .map(|g| g.shift)
        .collect();
    let mut denom: Vec<f64> = args
        .iter()
        .filter(|g| !g.numerator)
        .map(|g| g.shift)
        .collect();
    numer.sort_by(f64::total_cmp);
    denom.sort_by(f64::total_cmp);

    let base = n as f64;
    let mut log_abs = CompensatedSum::new();
    let mut sign = 1i8;
    for (&x, &y) in numer.iter().zip(&denom) {
        let r = log_gamma_ratio(base, x, y);
        log_abs += r.log_abs;
        sign *= r.sign;
    }
    let value = f64::from(sign) * log_abs.total().exp();
    if value.is_finite() && value != 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain(format!(
            "gamma ratio at n = {n} is outside binary64 range"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(a: &[f64], b: &[f64]) -> ParameterSet {
        ParameterSet::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn closed_forms() {
        // Γ(n+1)² / (Γ(n+2) Γ(n)) = n / (n+1)
        let r = oracle_ratio(&ps(&[1.0, 1.0], &[2.0]), 10).unwrap();
        assert!((r - 10.0 / 11.0).abs() < 1e-14);
        // s = -2: Γ(n+1)Γ(n+3) / (Γ(n+2)Γ(n+2)) = (n+2)/(n+1)
        let r = oracle_ratio(&ps(&[1.0, 3.0], &[2.0]), 5).unwrap();
        assert!((r - 7.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn cancelling_pair_gives_one() {
        for n in [1, 7, 50, 400] {
            let r = oracle_ratio(&ps(&[0.35, 2.25], &[2.25]), n).unwrap();
            assert!((r - 1.0).abs() < 1e-13, "{n}: {r}");
        }
    }

    #[test]
    fn pole_names_the_factor() {
        let err = oracle_ratio(&ps(&[1.0, 1.0], &[-12.0]), 10).unwrap_err();
        assert_eq!(
            err,
            Error::Pole {
                label: "b_1+n".into(),
                argument: -2.0
            }
        );
        assert_eq!(
            err.to_string(),
            "Γ(b_1+n) = Γ(-2) is at a pole of the gamma function"
        );
        // s = 3 makes Γ(-s+n) singular at n = 3
        let err = oracle_ratio(&ps(&[0.5, 0.5], &[4.0]), 3).unwrap_err();
        assert!(matches!(err, Error::Pole { ref label, .. } if label == "-s+n"));
    }

    #[test]
    fn argument_labels() {
        let labels: Vec<_> = gamma_arguments(&ps(&[0.3, 0.7, 1.1], &[0.9, 1.3]), 4)
            .into_iter()
            .map(|g| g.label)
            .collect();
        assert_eq!(
            labels,
            ["a_1+n", "a_2+n", "a_3+n", "b_1+n", "b_2+n", "-s+n"]
        );
    }
}
