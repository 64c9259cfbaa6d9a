//! Brute-force reference computations for the test suites. Nothing here
//! calls into `resultant`: the Sylvester layout and the determinant are
//! rebuilt from scratch so a bug in the main path cannot hide itself.

use super::HarnessError;
use crate::polyring::{Coeff, MultiPoly};
use crate::resultant::UniPolyView;

/// Largest matrix dimension the cofactor expansion accepts.
pub const ORACLE_MAX_DIM: usize = 9;

/// Laplace expansion along the first row, skipping zero entries.
pub fn oracle_det(rows: &[Vec<MultiPoly>]) -> Result<MultiPoly, HarnessError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        let cols = rows.first().map_or(0, Vec::len);
        return Err(HarnessError::TooLarge { rows: n, cols });
    }
    if n > ORACLE_MAX_DIM {
        return Err(HarnessError::TooLarge { rows: n, cols: n });
    }
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    Ok(expand(rows, 0, &mut vec![false; n]))
}

fn expand(rows: &[Vec<MultiPoly>], row: usize, used: &mut [bool]) -> MultiPoly {
    if row == rows.len() {
        return MultiPoly::one();
    }
    let mut total = MultiPoly::zero();
    let mut sign_positive = true;
    for col in 0..used.len() {
        if used[col] {
            continue;
        }
        let entry = &rows[row][col];
        if !entry.is_zero() {
            used[col] = true;
            let minor = expand(rows, row + 1, used);
            used[col] = false;
            let term = entry.mul(&minor);
            total = if sign_positive { total.add(&term) } else { total.sub(&term) };
        }
        sign_positive = !sign_positive;
    }
    total
}

/// Resultant of two views by cofactor expansion of a freshly built
/// Sylvester matrix (rows of `f` first, highest power leftmost).
pub fn oracle_resultant(f: &UniPolyView, g: &UniPolyView) -> Result<MultiPoly, HarnessError> {
    let (n1, n2) = (f.degree(), g.degree());
    let size = n1 + n2;
    if size > ORACLE_MAX_DIM {
        return Err(HarnessError::TooLarge { rows: size, cols: size });
    }
    let shifted = |coeffs: &[MultiPoly], deg: usize, shift: usize| -> Vec<MultiPoly> {
        (0..size)
            .map(|c| {
                if c < shift || c > shift + deg {
                    MultiPoly::zero()
                } else {
                    coeffs[deg - (c - shift)].clone()
                }
            })
            .collect()
    };
    let mut rows = Vec::with_capacity(size);
    for i in 0..n2 {
        rows.push(shifted(f.coefficients(), n1, i));
    }
    for i in 0..n1 {
        rows.push(shifted(g.coefficients(), n2, i));
    }
    oracle_det(&rows)
}

/// Coefficients `(a_1, …, a_n)` of the monic `∏(x − r_i)` and the value
/// `∏_{i<j} (r_i − r_j)²`.
pub fn oracle_discriminant_from_roots(roots: &[Coeff]) -> (Vec<Coeff>, Coeff) {
    // e[j] holds the j-th elementary symmetric function of the roots seen so far.
    let mut e = vec![Coeff::one()];
    for r in roots {
        e.push(Coeff::zero());
        for j in (1..e.len()).rev() {
            let add = e[j - 1].clone() * r.clone();
            e[j] = e[j].clone() + add;
        }
    }
    let coeffs = e
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(j, v)| if j % 2 == 1 { -v } else { v })
        .collect();
    let mut product = Coeff::one();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = roots[i].clone() - roots[j].clone();
            product = product * d.clone() * d;
        }
    }
    (coeffs, product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{a, int, x, VarId};

    fn c(v: i64) -> Coeff {
        Coeff::from(v)
    }

    #[test]
    fn quadratic_resultant() {
        let f = UniPolyView::from_poly(&x().pow(2).add(&a(1).mul(&x())).add(&a(2)), VarId::X).unwrap();
        let r = oracle_resultant(&f, &f.derivative().unwrap()).unwrap();
        assert_eq!(r, int(4).mul(&a(2)).sub(&a(1).pow(2)));
    }

    #[test]
    fn identity_and_repeated_rows() {
        let id: Vec<Vec<MultiPoly>> = (0..5)
            .map(|i| (0..5).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect();
        assert_eq!(oracle_det(&id).unwrap(), int(1));
        let row = vec![a(1), a(2), int(3)];
        let m = vec![row.clone(), vec![int(1), int(0), a(3)], row];
        assert!(oracle_det(&m).unwrap().is_zero());
    }

    #[test]
    fn too_large_is_rejected() {
        let m: Vec<Vec<MultiPoly>> = vec![vec![int(1); 10]; 10];
        assert_eq!(oracle_det(&m), Err(HarnessError::TooLarge { rows: 10, cols: 10 }));
    }

    #[test]
    fn roots_to_coefficients() {
        let (cs, p) = oracle_discriminant_from_roots(&[c(1), c(-1)]);
        assert_eq!(cs, vec![c(0), c(-1)]);
        assert_eq!(p, c(4));
        let (cs, p) = oracle_discriminant_from_roots(&[c(0), c(1), c(2)]);
        assert_eq!(cs, vec![c(-3), c(2), c(0)]);
        assert_eq!(p, c(4));
        let (_, p) = oracle_discriminant_from_roots(&[c(5), c(5)]);
        assert!(p.is_zero());
    }
}
