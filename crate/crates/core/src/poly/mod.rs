//! Exact sparse multivariate polynomials.

mod field;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use field::{frac, int, Field, PrimeField, Rational};
pub use monomial::{Monomial, TermOrder, MAX_EXPONENT};
pub use parse::{parse, parse_list};
pub use polynomial::Poly;
pub use ring::{Ring, RingRef};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("expected {expected} values, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("exponent exceeds the per-variable cap of {}", MAX_EXPONENT)]
    ExponentOverflow,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    InexactDivision,
    #[error("expected a homogeneous linear form")]
    NotLinear,
    #[error("invalid variable name `{0}`")]
    BadVariableName(String),
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at offset {pos}")]
    UnknownVariable { name: String, pos: usize },
}
