//! Sylvester matrices, exact determinants over the polynomial ring, and the
//! discriminant objects built from them.
//!
//! Signs follow the matrix convention exactly: a resultant is the
//! determinant of the Sylvester matrix with `f`'s rows first, nothing more.

mod matrix;
mod objects;
mod sylvester;

pub use matrix::PolyMatrix;
pub use objects::{d_tilde, declared_r_degree, discriminant_r, generic_p, p_k, p_k_resultant, v_k};
pub use sylvester::{discriminant_resultant, resultant, resultant_in, sylvester, UniPolyView};

use crate::polyring::{Degree, PolyError, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResultantError {
    #[error("declared degree must be at least 1")]
    DegreeZero,
    #[error("degree n = {0} is out of range (need n >= 2)")]
    BadDegree(usize),
    #[error("index k = {k} is out of range for n = {n}")]
    BadIndex { n: usize, k: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("declared degree {declared} in {variable} does not match actual degree {actual}")]
    DeclaredDegreeMismatch {
        variable: VarId,
        declared: usize,
        actual: Degree,
    },
    #[error("coefficient list mentions the view variable {0}")]
    CoefficientContainsVariable(VarId),
    #[error("views are in different variables ({0} vs {1})")]
    VariableMismatch(VarId, VarId),
    #[error("the zero polynomial has no univariate view")]
    ZeroPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
