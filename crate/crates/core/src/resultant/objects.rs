//! The discriminant objects of the generic monic polynomial
//! `P = x^n + a_1 x^(n-1) + … + a_n`.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

use super::sylvester::{resultant, UniPolyView};
use super::ResultantError;
use crate::polyring::{Coeff, MultiPoly, VarId};

/// Process-wide memo table. Racing computations of the same key may both
/// run; the first stored value wins and all callers see equal values.
struct Memo<K, V> {
    table: OnceLock<Mutex<HashMap<K, V>>>,
}

impl<K: Eq + Hash + Copy, V: Clone> Memo<K, V> {
    const fn new() -> Self {
        Memo {
            table: OnceLock::new(),
        }
    }

    fn get_or_try<E>(&self, key: K, compute: impl FnOnce() -> Result<V, E>) -> Result<V, E> {
        let table = self.table.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = table.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = compute()?;
        Ok(table.lock().unwrap().entry(key).or_insert(v).clone())
    }
}

static R_MEMO: Memo<usize, MultiPoly> = Memo::new();
static PK_RES_MEMO: Memo<(usize, usize), MultiPoly> = Memo::new();
static DTILDE_MEMO: Memo<(usize, usize), MultiPoly> = Memo::new();

fn check_degree(n: usize) -> Result<(), ResultantError> {
    if n < 2 {
        return Err(ResultantError::BadDegree(n));
    }
    Ok(())
}

fn check_index(n: usize, k: usize) -> Result<(), ResultantError> {
    check_degree(n)?;
    if k < 1 || k > n {
        return Err(ResultantError::BadIndex { n, k });
    }
    Ok(())
}

/// `x^n + a_1 x^(n-1) + … + a_n` as a view in `x`.
pub fn generic_p(n: usize) -> Result<UniPolyView, ResultantError> {
    check_degree(n)?;
    let mut cs: Vec<MultiPoly> = (1..=n).rev().map(crate::polyring::a).collect();
    cs.push(MultiPoly::one());
    UniPolyView::new(VarId::X, cs, n)
}

/// `R = Res(P, P', x)`, memoized per `n`.
pub fn discriminant_r(n: usize) -> Result<MultiPoly, ResultantError> {
    check_degree(n)?;
    R_MEMO.get_or_try(n, || {
        let p = generic_p(n)?;
        resultant(&p, &p.derivative()?)
    })
}

/// `P_k = P − x P' / (n − k)` for `k < n`, and `P_n = P'`.
///
/// For `k < n` the coefficient of `x^(n−j)` is `a_j (j − k)/(n − k)`, so the
/// leading coefficient is `−k/(n−k)` and the `x^(n−k)` coefficient vanishes.
pub fn p_k(n: usize, k: usize) -> Result<UniPolyView, ResultantError> {
    check_index(n, k)?;
    let p = generic_p(n)?;
    if k == n {
        return p.derivative();
    }
    let denom = (n - k) as i64;
    let cs = (0..=n)
        .map(|power| {
            let j = n - power;
            let factor = Coeff::ratio(j as i64 - k as i64, denom);
            p.coeff(power).scale(&factor)
        })
        .collect();
    UniPolyView::new(VarId::X, cs, n)
}

/// `Res(P_k, P_k', x)` before any division, memoized.
pub fn p_k_resultant(n: usize, k: usize) -> Result<MultiPoly, ResultantError> {
    check_index(n, k)?;
    PK_RES_MEMO.get_or_try((n, k), || {
        let pk = p_k(n, k)?;
        resultant(&pk, &pk.derivative()?)
    })
}

/// `V_k = Res(P_k, P_k', x)`, except `V_(n−1)` which is that resultant
/// divided by `a_n`. A failed division surfaces as `NotDivisible`.
pub fn v_k(n: usize, k: usize) -> Result<MultiPoly, ResultantError> {
    let r = p_k_resultant(n, k)?;
    if k + 1 == n {
        Ok(r.exact_divide(&MultiPoly::var(VarId::a(n)))?)
    } else {
        Ok(r)
    }
}

/// Degree of `R` in `a_k`: `n` for `k < n` and `n − 1` for `k = n`.
pub fn declared_r_degree(n: usize, k: usize) -> usize {
    if k == n {
        n - 1
    } else {
        n
    }
}

/// `D̃_k = Res(R, ∂R/∂a_k, a_k)` with the degree of `R` in `a_k` asserted
/// rather than inspected; a mismatch is a `DeclaredDegreeMismatch` error.
pub fn d_tilde(n: usize, k: usize) -> Result<MultiPoly, ResultantError> {
    check_index(n, k)?;
    DTILDE_MEMO.get_or_try((n, k), || {
        let r = discriminant_r(n)?;
        let v = VarId::a(k);
        let view = UniPolyView::with_declared_degree(&r, v, declared_r_degree(n, k))?;
        let dview = UniPolyView::with_declared_degree(&r.derivative(v), v, declared_r_degree(n, k) - 1)?;
        resultant(&view, &dview)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{a, int, x, Monomial, WeightVector};

    fn cubic_r() -> MultiPoly {
        let t = |c: i64, p: &[(usize, u32)]| {
            MultiPoly::term(c, Monomial::from_pairs(p.iter().map(|&(i, e)| (VarId::a(i), e))))
        };
        [
            t(4, &[(1, 3), (3, 1)]),
            t(-1, &[(1, 2), (2, 2)]),
            t(-18, &[(1, 1), (2, 1), (3, 1)]),
            t(4, &[(2, 3)]),
            t(27, &[(3, 2)]),
        ]
        .iter()
        .fold(MultiPoly::zero(), |acc, t| acc.add(t))
    }

    #[test]
    fn generic_p_shapes() {
        assert_eq!(generic_p(2).unwrap().to_poly(), &(&x().pow(2) + &a(1).mul(&x())) + &a(2));
        let p3 = generic_p(3).unwrap().to_poly();
        assert_eq!(p3.len(), 4);
        let p5 = generic_p(5).unwrap();
        assert_eq!(p5.degree(), 5);
        assert_eq!(p5.coefficients().len(), 6);
        assert_eq!(generic_p(1), Err(ResultantError::BadDegree(1)));
    }

    #[test]
    fn small_discriminants() {
        assert_eq!(discriminant_r(2).unwrap(), &int(4).mul(&a(2)) - &a(1).pow(2));
        assert_eq!(discriminant_r(3).unwrap(), cubic_r());
    }

    #[test]
    fn r_is_quasi_homogeneous() {
        for n in 3..=5 {
            let r = discriminant_r(n).unwrap();
            let w = WeightVector::discriminant(n);
            assert_eq!(r.qh_degree(&w).unwrap(), Some((n * (n - 1)) as u64));
        }
    }

    #[test]
    fn p_k_examples() {
        let half = Coeff::ratio(1, 2);
        let p31 = p_k(3, 1).unwrap().to_poly();
        let expected = &(&x().pow(3).scale(&-half.clone()) + &a(2).mul(&x()).scale(&half)) + &a(3);
        assert_eq!(p31, expected);
        assert!(p_k(3, 1).unwrap().coeff(2).is_zero());
        let p32 = p_k(3, 2).unwrap().to_poly();
        assert_eq!(p32, &(&int(-2).mul(&x().pow(3)) - &a(1).mul(&x().pow(2))) + &a(3));
        let p33 = p_k(3, 3).unwrap().to_poly();
        assert_eq!(p33, &(&int(3).mul(&x().pow(2)) + &int(2).mul(&a(1).mul(&x()))) + &a(2));
        assert_eq!(p_k(3, 0), Err(ResultantError::BadIndex { n: 3, k: 0 }));
        assert_eq!(p_k(3, 4), Err(ResultantError::BadIndex { n: 3, k: 4 }));
    }

    #[test]
    fn v_k_small() {
        // Res(3x^2 + 2a1 x + a2, 6x + 2a1, x) by 3×3 cofactor expansion.
        assert_eq!(v_k(3, 3).unwrap(), &int(36).mul(&a(2)) - &int(12).mul(&a(1).pow(2)));
        let raw = p_k_resultant(3, 2).unwrap();
        assert_eq!(raw.divisibility_order(VarId::a(3)).unwrap(), 1);
        let v = v_k(3, 2).unwrap();
        assert_eq!(&v * &a(3), raw);
    }

    #[test]
    fn d_tilde_orders_n3() {
        let d1 = d_tilde(3, 1).unwrap();
        assert_eq!(d1.divisibility_order(VarId::a(3)).unwrap(), 1);
        let d2 = d_tilde(3, 2).unwrap();
        assert_eq!(d2.divisibility_order(VarId::a(3)).unwrap(), 1);
        let d3 = d_tilde(3, 3).unwrap();
        assert_eq!(d3.divisibility_order(VarId::a(1)).unwrap(), 0);
        assert_eq!(d3.divisibility_order(VarId::a(2)).unwrap(), 0);
        assert!(!d3.vars().contains(&VarId::a(3)));
    }
}
