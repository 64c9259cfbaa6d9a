use serde::{Deserialize, Serialize};

use super::{PolyMatrix, ResultantError};
use crate::polyring::{Coeff, Degree, MultiPoly, VarId};

/// A polynomial viewed as univariate in `variable`, with coefficients in the
/// ring of the remaining variables. `coefficients[i]` multiplies
/// `variable^i`; the coefficient at `declared_degree` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniPolyView {
    variable: VarId,
    coefficients: Vec<MultiPoly>,
    declared_degree: usize,
}

impl UniPolyView {
    /// Builds a view whose coefficient list is exactly `coefficients`
    /// (trailing zeros trimmed); fails unless the leading entry at
    /// `declared_degree` is nonzero.
    pub fn new(
        variable: VarId,
        mut coefficients: Vec<MultiPoly>,
        declared_degree: usize,
    ) -> Result<UniPolyView, ResultantError> {
        while coefficients.len() > 1 && coefficients.last().is_some_and(MultiPoly::is_zero) {
            coefficients.pop();
        }
        let actual = coefficients.len().saturating_sub(1);
        let honest = actual == declared_degree && coefficients.get(actual).is_some_and(|c| !c.is_zero());
        if !honest {
            return Err(ResultantError::DeclaredDegreeMismatch {
                variable,
                declared: declared_degree,
                actual: view_degree(&coefficients),
            });
        }
        for c in &coefficients {
            if c.vars().contains(&variable) {
                return Err(ResultantError::CoefficientContainsVariable(variable));
            }
        }
        Ok(UniPolyView {
            variable,
            coefficients,
            declared_degree,
        })
    }

    /// Views `f` in `variable` with a degree asserted by the caller.
    pub fn with_declared_degree(f: &MultiPoly, variable: VarId, declared: usize) -> Result<UniPolyView, ResultantError> {
        UniPolyView::new(variable, f.coeffs_in_var(variable), declared)
    }

    /// Views `f` in `variable` using its actual degree.
    pub fn from_poly(f: &MultiPoly, variable: VarId) -> Result<UniPolyView, ResultantError> {
        match f.degree_in_var(variable) {
            Degree::NegInfinity => Err(ResultantError::ZeroPolynomial),
            Degree::Finite(d) => UniPolyView::with_declared_degree(f, variable, d as usize),
        }
    }

    pub fn variable(&self) -> VarId {
        self.variable
    }

    pub fn degree(&self) -> usize {
        self.declared_degree
    }

    pub fn coefficients(&self) -> &[MultiPoly] {
        &self.coefficients
    }

    pub fn coeff(&self, power: usize) -> &MultiPoly {
        &self.coefficients[power]
    }

    pub fn leading(&self) -> &MultiPoly {
        &self.coefficients[self.declared_degree]
    }

    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::from_coeffs_in_var(self.variable, &self.coefficients)
    }

    /// Derivative in the view variable; the degree drops by exactly one over
    /// a field of characteristic zero.
    pub fn derivative(&self) -> Result<UniPolyView, ResultantError> {
        if self.declared_degree == 0 {
            return Err(ResultantError::DegreeZero);
        }
        let cs = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Coeff::from(i as i64)))
            .collect();
        UniPolyView::new(self.variable, cs, self.declared_degree - 1)
    }
}

fn view_degree(cs: &[MultiPoly]) -> Degree {
    cs.iter()
        .rposition(|c| !c.is_zero())
        .map_or(Degree::NegInfinity, |d| Degree::Finite(d as u32))
}

/// The `(n1+n2)×(n1+n2)` Sylvester matrix: `n2` shifted rows of
/// `f`'s coefficients (highest power first) followed by `n1` shifted rows of
/// `g`'s.
pub fn sylvester(f: &UniPolyView, g: &UniPolyView) -> Result<PolyMatrix, ResultantError> {
    let (n1, n2) = (f.degree(), g.degree());
    if n1 == 0 || n2 == 0 {
        return Err(ResultantError::DegreeZero);
    }
    if f.variable() != g.variable() {
        return Err(ResultantError::VariableMismatch(f.variable(), g.variable()));
    }
    let size = n1 + n2;
    let mut m = PolyMatrix::zeros(size, size);
    for i in 0..n2 {
        for j in 0..=n1 {
            m.set(i, i + j, f.coeff(n1 - j).clone());
        }
    }
    for i in 0..n1 {
        for j in 0..=n2 {
            m.set(n2 + i, i + j, g.coeff(n2 - j).clone());
        }
    }
    Ok(m)
}

/// `det(sylvester(f, g))`.
pub fn resultant(f: &UniPolyView, g: &UniPolyView) -> Result<MultiPoly, ResultantError> {
    sylvester(f, g)?.det()
}

/// Resultant in `v` of two polynomials at their actual degrees.
pub fn resultant_in(f: &MultiPoly, g: &MultiPoly, v: VarId) -> Result<MultiPoly, ResultantError> {
    resultant(&UniPolyView::from_poly(f, v)?, &UniPolyView::from_poly(g, v)?)
}

/// `Res(f, ∂f/∂v, v)` at the actual degree of `f`.
pub fn discriminant_resultant(f: &MultiPoly, v: VarId) -> Result<MultiPoly, ResultantError> {
    let view = UniPolyView::from_poly(f, v)?;
    resultant(&view, &view.derivative()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{a, int, x};

    fn quad() -> UniPolyView {
        UniPolyView::new(VarId::X, vec![a(2), a(1), int(1)], 2).unwrap()
    }

    #[test]
    fn sylvester_quadratic_with_derivative() {
        let f = quad();
        let g = f.derivative().unwrap();
        assert_eq!(g.coefficients(), &[a(1), int(2)]);
        let s = sylvester(&f, &g).unwrap();
        let expected = PolyMatrix::from_rows(vec![
            vec![int(1), a(1), a(2)],
            vec![int(2), a(1), int(0)],
            vec![int(0), int(2), a(1)],
        ])
        .unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.det().unwrap(), &int(4).mul(&a(2)) - &a(1).pow(2));
    }

    #[test]
    fn sylvester_linear_pair() {
        let f = UniPolyView::from_poly(&(&x() - &int(1)), VarId::X).unwrap();
        let g = UniPolyView::from_poly(&(&x() + &int(1)), VarId::X).unwrap();
        let s = sylvester(&f, &g).unwrap();
        assert_eq!(s, vec![vec![1, -1], vec![1, 1]].into());
    }

    #[test]
    fn common_root_gives_zero() {
        let f = &x().pow(2) - &int(1);
        let g = &x() - &int(1);
        assert!(resultant_in(&f, &g, VarId::X).unwrap().is_zero());
    }

    #[test]
    fn degree_zero_rejected() {
        let f = quad();
        let c = UniPolyView::new(VarId::X, vec![int(3)], 0).unwrap();
        assert_eq!(sylvester(&f, &c), Err(ResultantError::DegreeZero));
    }

    #[test]
    fn dishonest_declared_degree_rejected() {
        assert!(matches!(
            UniPolyView::new(VarId::X, vec![a(1), int(0)], 1),
            Err(ResultantError::DeclaredDegreeMismatch { .. })
        ));
        assert!(UniPolyView::with_declared_degree(&x().pow(3), VarId::X, 2).is_err());
    }

    #[test]
    fn monic_sizes() {
        for n in 2..=6 {
            let mut cs: Vec<MultiPoly> = (1..=n).rev().map(a).collect();
            cs.push(int(1));
            let p = UniPolyView::new(VarId::X, cs, n).unwrap();
            let s = sylvester(&p, &p.derivative().unwrap()).unwrap();
            assert_eq!((s.rows(), s.cols()), (2 * n - 1, 2 * n - 1));
        }
    }
}
