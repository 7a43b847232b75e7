//! Ratios of products of gamma functions at shifted arguments,
//!
//! ```text
//! Γ(a_1+n)⋯Γ(a_{p+1}+n) / (Γ(b_1+n)⋯Γ(b_p+n) Γ(-s+n)),   s = Σb - Σa,
//! ```
//!
//! evaluated through their large-`n` asymptotic expansion and checked
//! against a direct sign-tracked log-gamma evaluation.
//!
//! - [`kernels`]: Pochhammer symbols, log-gamma, and the direct oracle.
//! - [`coefficients`]: the coefficient families `A_k^(p)` for `p <= 4`.
//! - [`expansion`]: the truncated series, termination and optimal truncation.
//! - [`validation`]: convergence-order fits and representation cross-checks.

pub mod coefficients;
pub mod error;
pub mod expansion;
pub mod kernels;
pub mod validation;

pub use error::{Error, Result};
pub use kernels::ParameterSet;
