use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coefficients::{coeff_a3_rep_b, coeff_a3_rep_c};
use crate::kernels::ParameterSet;

/// Corpus entries are multiples of `1 / GRID_DENOMINATOR`.
pub const GRID_DENOMINATOR: i32 = 16;

const LOWEST: i32 = -2 * GRID_DENOMINATOR;
const HIGHEST: i32 = 3 * GRID_DENOMINATOR;

/// Largest `|s|`, `|a_1+s|`, `|a_2+s|` accepted for a generic convergence set;
/// beyond it n = 20 is too early in the asymptotic regime for a clean fit.
const GENERIC_SHIFT_BOUND: f64 = 2.0;

/// Reproducible stream of random parameter sets with rational entries
/// `m/16` in `[-2, 3]`.
pub struct ParameterCorpus {
    rng: ChaCha8Rng,
}

fn is_integer(x: f64) -> bool {
    x == x.round()
}

impl ParameterCorpus {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn entry(&mut self) -> f64 {
        f64::from(self.rng.random_range(LOWEST..=HIGHEST)) / f64::from(GRID_DENOMINATOR)
    }

    /// One unfiltered draw of order `p`.
    pub fn draw(&mut self, p: usize) -> ParameterSet {
        let a = (0..=p).map(|_| self.entry()).collect();
        let b = (0..p).map(|_| self.entry()).collect();
        ParameterSet::new(a, b).expect("corpus entries form a valid parameter set")
    }

    /// `count` sets of order 3 on which all three `A_k^(3)` evaluations are
    /// defined for `k <= k_max`.
    pub fn representation_sets(&mut self, count: usize, k_max: usize) -> Vec<ParameterSet> {
        let mut sets = Vec::with_capacity(count);
        while sets.len() < count {
            let params = self.draw(3);
            let defined = (0..=k_max)
                .all(|k| coeff_a3_rep_b(&params, k).is_ok() && coeff_a3_rep_c(&params, k).is_ok());
            if defined {
                sets.push(params);
            }
        }
        sets
    }

    /// First draw of order `p` with no integer coincidences among the shifts
    /// and no gamma pole for any `n >= n_min`.
    pub fn generic_set(&mut self, p: usize, n_min: u64) -> ParameterSet {
        loop {
            let params = self.draw(p);
            if is_generic(&params, n_min) {
                return params;
            }
        }
    }
}

/// No integer `s`, `a_1+s`, `a_2+s` or `b_j - a_i`; moderate `s`-shifts; all
/// gamma arguments positive from `n_min` on.
pub fn is_generic(params: &ParameterSet, n_min: u64) -> bool {
    let s = params.s();
    let (a, b) = (params.a(), params.b());
    let role_shifts = [s, a[0] + s, a[1] + s];
    if role_shifts
        .iter()
        .any(|&x| is_integer(x) || x.abs() > GENERIC_SHIFT_BOUND)
    {
        return false;
    }
    if b.iter().any(|&bj| a.iter().any(|&ai| is_integer(bj - ai))) {
        return false;
    }
    let floor = 1.0 - n_min as f64;
    a.iter()
        .chain(b)
        .chain(std::iter::once(&-s))
        .all(|&x| x > floor)
}
