//! Exact scalar arithmetic: rationals, real quadratic fields and sparse
//! multivariate polynomials over either.

mod number;
mod parse;
mod poly;
mod quad;
mod rational;
mod scalar;

pub use number::Number;
pub use parse::parse_scalar;
pub use poly::{Monomial, Poly, Symbol};
pub use quad::{is_square_free, QuadElement};
pub use rational::Rational;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cannot combine elements of Q(√{0}) and Q(√{1})")]
    FieldMismatch(u64, u64),
    #[error("{0} is not a square-free integer greater than one")]
    BadDiscriminant(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor does not divide exactly")]
    NotDivisible,
    #[error("divisor is not of total degree one")]
    NotLinear,
    #[error("no value assigned to symbol `{0}`")]
    MissingSymbol(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Sign of `x` as -1, 0 or +1.
pub fn quad_sign(x: &QuadElement) -> i8 {
    x.sign()
}

/// Evaluates a polynomial under a complete assignment.
pub fn poly_eval(
    p: &Poly,
    assignment: &std::collections::BTreeMap<Symbol, Scalar>,
) -> Result<Scalar, ExactError> {
    Scalar::Poly(p.clone()).eval(assignment)
}

/// Splits `p = q·ell + r` for a linear `ell`; `r` is divisible by `ell` only
/// if it is zero.
pub fn poly_divide_linear(p: &Poly, ell: &Poly) -> Result<(Poly, Poly), ExactError> {
    p.divide_linear(ell)
}
