use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A gamma argument sits on (or within the pole tolerance of) a nonpositive integer.
    #[error("Γ({label}) = Γ({argument}) is at a pole of the gamma function")]
    Pole { label: String, argument: f64 },

    #[error("Pochhammer symbol ({x})_{m} overflows binary64; use the signed-log form")]
    Range { x: f64, m: usize },

    #[error("coefficients A_k are only available for p <= 4 (got p = {0})")]
    UnsupportedOrder(usize),

    #[error("lower 3F2 parameter {parameter} hits a nonpositive integer at index {index} before the series terminates")]
    DegenerateDenominator { parameter: f64, index: usize },

    #[error("inner sum denominator (a_{which}+s)_{k} vanishes; use the pole-safe term form")]
    DenominatorPole { which: usize, k: usize },

    #[error("evaluation point n = {n} too small: need n > s + {needed} with s = {s}")]
    EvaluationPointTooSmall { n: u64, s: f64, needed: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("insufficient data for an order fit: {admissible} admissible rows, need at least {required}")]
    InsufficientData { admissible: usize, required: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}
