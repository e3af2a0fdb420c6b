//! Exact polynomial arithmetic.
//!
//! [`UniPoly`] is a dense univariate polynomial over arbitrary-precision
//! integers, [`BiPoly`] a sparse two-variable polynomial over the same
//! coefficients, and [`RatPoly`] a dense univariate polynomial over exact
//! rationals (used by the Sturm machinery). All three are kept in canonical
//! form at all times, so structural equality is polynomial equality.

mod bi;
mod rat;
mod uni;

pub use bi::BiPoly;
pub use rat::RatPoly;
pub use uni::UniPoly;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
}
