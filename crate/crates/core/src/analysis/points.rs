use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::polyring::{b, lambda, Coeff, MultiPoly, VarId};

/// A point of the discriminant set written as `(x+λ)² Q` with
/// `Q = x^(n−2) + b_1 x^(n−3) + … + b_(n−2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleRootPoint {
    pub n: usize,
    pub lambda: Coeff,
    pub b: Vec<Coeff>,
    pub a: Vec<Coeff>,
}

impl DoubleRootPoint {
    /// `a_j = b_j + 2λ b_(j−1) + λ² b_(j−2)` with `b_0 = 1`.
    pub fn new(lambda: Coeff, b: Vec<Coeff>) -> DoubleRootPoint {
        let n = b.len() + 2;
        let b_at = |j: isize| -> Coeff {
            match j {
                0 => Coeff::one(),
                j if j > 0 && (j as usize) <= b.len() => b[j as usize - 1].clone(),
                _ => Coeff::zero(),
            }
        };
        let two_l = &Coeff::from(2) * &lambda;
        let l2 = &lambda * &lambda;
        let a = (1..=n as isize)
            .map(|j| {
                let mut c = b_at(j);
                c += &(&two_l * &b_at(j - 1));
                c += &(&l2 * &b_at(j - 2));
                c
            })
            .collect();
        DoubleRootPoint { n, lambda, b, a }
    }

    /// `Q(−λ) = Σ b_j (−λ)^(n−2−j)`.
    pub fn q_at_minus_lambda(&self) -> Coeff {
        let t = -&self.lambda;
        self.b.iter().fold(Coeff::one(), |acc, bj| &(&acc * &t) + bj)
    }
}

/// The symbolic images `a_j ↦ b_j + 2λ b_(j−1) + λ² b_(j−2)` for degree `n`.
pub fn parametrization(n: usize) -> BTreeMap<VarId, MultiPoly> {
    assert!(n >= 2, "parametrization needs n >= 2");
    let b_at = |j: isize| -> MultiPoly {
        match j {
            0 => MultiPoly::one(),
            j if j > 0 && (j as usize) <= n - 2 => b(j as usize),
            _ => MultiPoly::zero(),
        }
    };
    let two_l = lambda().scale(&Coeff::from(2));
    let l2 = lambda().pow(2);
    (1..=n as isize)
        .map(|j| {
            let image = &(&b_at(j) + &(&two_l * &b_at(j - 1))) + &(&l2 * &b_at(j - 2));
            (VarId::a(j as usize), image)
        })
        .collect()
}
