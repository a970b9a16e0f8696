//! Exact sparse polynomials and linear-form fractions.
//!
//! [`Polynomial`] lives in `Z[u_1..u_r, t_1..t_n]` (or any [`Scalar`] ring).
//! [`LinFormFraction`] restricts denominators to products of `t_a - t_b`,
//! which is all the localization sums ever produce, so cancellation is a
//! multiset operation plus synthetic division.
//!
//! [`Scalar`]: crate::Scalar

mod json;
mod laurent;
mod linform;
mod poly;

pub use json::{PolyJson, TermJson};
pub use laurent::LaurentFraction;
pub use linform::LinFormFraction;
pub use poly::{Monomial, Polynomial, Var, VarSpace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable spaces differ: {left:?} vs {right:?}")]
    SpaceMismatch { left: VarSpace, right: VarSpace },
    #[error("invalid variable space r={r}, n={n} (need 1 <= r <= n)")]
    InvalidSpace { r: usize, n: usize },
    #[error("invalid linear form t{a} - t{b}")]
    InvalidForm { a: usize, b: usize },
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no lowest form")]
    ZeroPolynomial,
    #[error("denominator forms remain after reduction: {forms:?}")]
    DenominatorRemains { forms: Vec<(usize, usize)> },
    #[error("denominator vanishes at the evaluation point (t{a} - t{b})")]
    DenominatorZero { a: usize, b: usize },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}
