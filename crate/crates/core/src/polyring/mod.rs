//! Exact sparse multivariate polynomials over the rationals.
//!
//! The variable universe is fixed ([`VarId`]): the coefficients `a_i`, the
//! indeterminate `x`, the double-root parameter `lambda`, the cofactor
//! coefficients `b_i`, plus interned generic names. All values are immutable
//! and `Send + Sync`.

mod coeff;
mod json;
mod monomial;
mod poly;
mod var;
mod weights;

pub use coeff::{Coeff, ParseCoeffError};
pub use json::{PolyJson, TermJson};
pub use monomial::Monomial;
pub use poly::{Degree, MultiPoly};
pub use var::{VarId, VarKind};
pub use weights::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("variable {0} is not bound")]
    UnboundVariable(VarId),
    #[error("invalid polynomial JSON: {0}")]
    Format(String),
}

/// Shorthand for the coefficient variable `a_i`.
pub fn a(i: usize) -> MultiPoly {
    MultiPoly::var(VarId::a(i))
}

/// Shorthand for `b_i`.
pub fn b(i: usize) -> MultiPoly {
    MultiPoly::var(VarId::b(i))
}

pub fn x() -> MultiPoly {
    MultiPoly::var(VarId::X)
}

pub fn lambda() -> MultiPoly {
    MultiPoly::var(VarId::LAMBDA)
}

pub fn int(c: i64) -> MultiPoly {
    MultiPoly::constant(c)
}
