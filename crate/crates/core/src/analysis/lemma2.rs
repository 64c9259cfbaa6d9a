use super::{parametrization, ClaimResult, Params, Witness};
use crate::par;
use crate::polyring::{b, lambda, Coeff, MultiPoly, VarId};
use crate::registry::LEMMA2_DET_JK;
use crate::resultant::PolyMatrix;

/// The `(n−1)×n` matrix whose rows are the partials of `(a_1, …, a_n)` with
/// respect to `λ, b_1, …, b_(n−2)`.
pub fn jacobian_matrix(n: usize) -> PolyMatrix {
    assert!(n >= 3, "jacobian_matrix needs n >= 3");
    let images = parametrization(n);
    let params: Vec<VarId> = std::iter::once(VarId::LAMBDA).chain((1..=n - 2).map(VarId::b)).collect();
    let rows = params
        .iter()
        .map(|&p| (1..=n).map(|j| images[&VarId::a(j)].derivative(p)).collect())
        .collect();
    PolyMatrix::from_rows(rows).expect("rectangular by construction")
}

/// `Q(−λ) = Σ_j b_j (−λ)^(n−2−j)` with `b_0 = 1`.
fn q_at_minus_lambda(n: usize) -> MultiPoly {
    let t = lambda().neg();
    (1..=n - 2).fold(MultiPoly::one(), |acc, j| &(&acc * &t) + &b(j))
}

/// Checks `det J_k = (−1)^n 2 λ^(n−k) Q(−λ)` for every `k`, where `J_k` is
/// the Jacobian with column `k` deleted. If every `k` fails but each
/// determinant matches the negated formula, the results are flagged as a
/// sign convention mismatch and still reported as failures.
pub fn check_lemma2(n: usize) -> Vec<ClaimResult> {
    let jac = jacobian_matrix(n);
    let q = q_at_minus_lambda(n);
    let sign = if n.is_multiple_of(2) { 2 } else { -2 };
    let outcomes = par::map_range(n, |i| {
        let k = i + 1;
        let expected = &lambda().pow((n - k) as u32) * &q.scale(&Coeff::from(sign));
        let det = jac.without_column(i).det();
        (k, expected, det)
    });
    let all_negated = outcomes
        .iter()
        .all(|(_, e, d)| d.as_ref().is_ok_and(|d| *d != *e && *d == e.neg()));
    outcomes
        .into_iter()
        .map(|(k, expected, det)| match det {
            Ok(det) => {
                let passed = det == expected;
                let note = if passed {
                    String::new()
                } else if all_negated {
                    "sign convention mismatch".to_string()
                } else {
                    format!("expected {expected}")
                };
                ClaimResult::new(LEMMA2_DET_JK, Params::nk(n, k), passed)
                    .note(note)
                    .witness(Witness::Poly(det))
            }
            Err(e) => ClaimResult::failed(LEMMA2_DET_JK, Params::nk(n, k), e.to_string()),
        })
        .collect()
}
