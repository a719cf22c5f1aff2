//! Exact formal-power-series arithmetic.
//!
//! Coefficients are arbitrary-precision rationals ([`Rat`]), never floats:
//! every identity checked in this crate is exact, so tolerance-based
//! comparison would mask bugs. The layering is
//!
//! * [`Monomial`] / [`WPolynomial`] — sparse multivariate polynomials in the
//!   vertex weights `v_1, v_2, ...` (one formal variable per vertex degree),
//! * [`TSeries`] — series in the edge weight `t`, truncated at an explicit
//!   order, dense in `t` with `WPolynomial` coefficients,
//! * [`GenusSeries`] — a finite family of `TSeries` graded by genus.
//!
//! `TSeries` is dense in `t` because truncation orders stay small (≲ 20)
//! while `WPolynomial` is sparse because degree profiles are. Truncation
//! orders are carried explicitly and mismatches are reported as errors, not
//! silently re-truncated.

mod fixed_point;
mod genus;
mod poly;
mod rat;
mod tseries;

pub use fixed_point::fixed_point;
pub use genus::GenusSeries;
pub use poly::{Monomial, WPolynomial};
pub use rat::{
    binomial, double_factorial, factorial, parse_rat, rat, rat_int, rat_to_string, Rat,
};
pub use tseries::TSeries;

use thiserror::Error;

/// Errors from series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// Binary operation on series truncated at different orders.
    #[error("truncation mismatch: left is O(t^{left}), right is O(t^{right})")]
    TruncationMismatch { left: usize, right: usize },
    /// Coefficient requested beyond the truncation order.
    #[error("coefficient of t^{order} requested from a series truncated at t^{trunc}")]
    OutOfRange { order: usize, trunc: usize },
    /// `exp` needs a zero constant term, `log` a constant term equal to one.
    #[error("{op} requires constant term {expected}")]
    WrongConstantTerm { op: &'static str, expected: &'static str },
    /// A weight substitution did not cover some variable.
    #[error("no value supplied for weight v_{0}")]
    MissingWeight(usize),
    /// Fixed-point iteration detected a system that is not a t-adic contraction.
    #[error("fixed-point system is not a t-adic contraction (stalled at t-order {order})")]
    NotContractive { order: usize },
    /// Fixed-point system returned a vector of unexpected shape.
    #[error("fixed-point system returned {got} components, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    /// A rational literal could not be parsed.
    #[error("cannot parse {0:?} as an exact rational (expected \"p\" or \"p/q\")")]
    BadRational(String),
}
