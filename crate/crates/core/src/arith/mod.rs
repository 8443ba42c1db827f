//! Exact sparse multivariate polynomials over ℚ.

mod monomial;
mod parse;
mod poly;
mod ring;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::PolyRing;

/// Exact rational coefficients; always stored in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
}

/// Shorthand for an integer coefficient.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
