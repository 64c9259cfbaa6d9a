use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ResultantError;
use crate::polyring::{Coeff, MultiPoly};

/// Dense row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

/// Dimension at or below which `det` uses cofactor expansion.
const COFACTOR_MAX_DIM: usize = 4;

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            entries: vec![MultiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, MultiPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<PolyMatrix, ResultantError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ResultantError::Ragged);
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<MultiPoly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The matrix with column `k` (0-based) removed, other columns in order.
    pub fn without_column(&self, k: usize) -> PolyMatrix {
        assert!(k < self.cols);
        let rows = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows).expect("rectangular by construction")
    }

    /// Exact determinant.
    ///
    /// Fraction-free Bareiss elimination: after step `k` every entry of the
    /// trailing block is a `(k+1)`-minor, so the division by the previous
    /// pivot is exact. Row updates within one step are independent and run in
    /// parallel. A zero pivot is repaired by swapping with the first lower row
    /// that is nonzero in the pivot column; if there is none the determinant
    /// is zero.
    pub fn det(&self) -> Result<MultiPoly, ResultantError> {
        if self.rows != self.cols {
            return Err(ResultantError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n <= COFACTOR_MAX_DIM {
            return Ok(cofactor_det(&self.to_rows()));
        }
        let mut m = self.to_rows();
        let mut negate = false;
        let mut prev = MultiPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(MultiPoly::zero()),
                }
            }
            let pivot = &m[k][k];
            let pivot_row = &m[k];
            let updated: Vec<Result<Vec<MultiPoly>, ResultantError>> =
                crate::par::map(&m[k + 1..], |row| {
                    (k + 1..n)
                        .map(|j| {
                            let num = if row[k].is_zero() {
                                pivot.mul(&row[j])
                            } else {
                                pivot.mul(&row[j]).sub(&row[k].mul(&pivot_row[j]))
                            };
                            if prev.is_one() {
                                Ok(num)
                            } else {
                                num.exact_divide(&prev).map_err(ResultantError::from)
                            }
                        })
                        .collect()
                });
            let mut new_rows = Vec::with_capacity(n - k - 1);
            for r in updated {
                new_rows.push(r?);
            }
            prev = pivot.clone();
            for (offset, vals) in new_rows.into_iter().enumerate() {
                let row = &mut m[k + 1 + offset];
                row[k] = MultiPoly::zero();
                for (j, v) in (k + 1..n).zip(vals) {
                    row[j] = v;
                }
            }
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }
}

/// Laplace expansion along the first row, skipping zero entries.
fn cofactor_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    match n {
        0 => return MultiPoly::one(),
        1 => return m[0][0].clone(),
        2 => return m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {}
    }
    let mut acc = MultiPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<MultiPoly>>::deserialize(d)?;
        PolyMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl From<Vec<Vec<i64>>> for PolyMatrix {
    fn from(rows: Vec<Vec<i64>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| MultiPoly::constant(Coeff::from(c))).collect())
            .collect();
        PolyMatrix::from_rows(rows).expect("integer matrix must be rectangular")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{a, int};

    #[test]
    fn identity_and_equal_rows() {
        assert!(PolyMatrix::identity(5).det().unwrap().is_one());
        assert!(PolyMatrix::identity(0).det().unwrap().is_one());
        let row: Vec<MultiPoly> = (1..=6).map(a).collect();
        let mut rows: Vec<Vec<MultiPoly>> = (0..6)
            .map(|i| (0..6).map(|j| int(((i * 7 + j * 3) % 5) as i64)).collect())
            .collect();
        rows[1] = row.clone();
        rows[4] = row;
        assert!(PolyMatrix::from_rows(rows).unwrap().det().unwrap().is_zero());
    }

    #[test]
    fn bareiss_needs_row_swap() {
        // Block diag(swap, 2, 3, 5): det = -1 * 30.
        let m: PolyMatrix = vec![
            vec![0, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![0, 0, 2, 0, 0],
            vec![0, 0, 0, 3, 0],
            vec![0, 0, 0, 0, 5],
        ]
        .into();
        assert_eq!(m.det().unwrap(), int(-30));
    }

    #[test]
    fn zero_column_gives_zero() {
        let m: PolyMatrix = vec![
            vec![1, 0, 2, 3, 4],
            vec![5, 0, 6, 7, 8],
            vec![9, 0, 1, 2, 3],
            vec![4, 0, 5, 6, 7],
            vec![8, 0, 9, 1, 2],
        ]
        .into();
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn not_square() {
        let m = PolyMatrix::zeros(2, 3);
        assert!(matches!(m.det(), Err(ResultantError::NotSquare { .. })));
        assert!(PolyMatrix::from_rows(vec![vec![int(1)], vec![]]).is_err());
    }

    #[test]
    fn json_is_row_major() {
        let m = PolyMatrix::from_rows(vec![vec![a(1), int(0)], vec![int(2), a(2)]]).unwrap();
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
        assert_eq!(v[0][0]["terms"][0]["exps"]["a1"], 1);
        let back: PolyMatrix = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
    }
}
