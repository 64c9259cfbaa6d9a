use std::collections::BTreeMap;

use super::{ClaimResult, Params, Witness};
use crate::par;
use crate::polyring::{Coeff, Degree, Monomial, MultiPoly, VarId, WeightVector};
use crate::registry::*;
use crate::resultant::discriminant_r;

/// Degree, leading-coefficient, vanishing and quasi-homogeneity claims about
/// `R(n)`.
pub fn check_lemma1(n: usize) -> Vec<ClaimResult> {
    let r = match discriminant_r(n) {
        Ok(r) => r,
        Err(e) => return vec![ClaimResult::failed(LEMMA1_DEGREE_AK, Params::n(n), e.to_string())],
    };
    let mut out: Vec<ClaimResult> = par::map_range(n - 1, |i| per_index(&r, n, i + 1))
        .into_iter()
        .flatten()
        .collect();

    let an = VarId::a(n);
    let an1 = VarId::a(n - 1);
    let deg_an = r.degree_in_var(an);
    out.push(
        ClaimResult::new(LEMMA1_DEGREE_AN, Params::n(n), deg_an == Degree::Finite(n as u32 - 1))
            .note(format!("degree {deg_an}")),
    );

    let zeroed: BTreeMap<VarId, Coeff> = [(an1, Coeff::zero()), (an, Coeff::zero())].into();
    let restricted = r.specialize(&zeroed);
    out.push(
        ClaimResult::new(LEMMA1_VANISH, Params::n(n), restricted.is_zero())
            .note(format!("{} terms survive", restricted.len())),
    );

    for (id, v, e) in [(LEMMA1_MONOMIAL_AN, an, n - 1), (LEMMA1_MONOMIAL_AN1, an1, n)] {
        let c = r.coeff_of(&Monomial::var_pow(v, e as u32));
        out.push(
            ClaimResult::new(id, Params::n(n), !c.is_zero())
                .witness(Witness::Values(vec![c.clone()]))
                .note(format!("coefficient of {v}^{e} is {c}")),
        );
    }

    let expected = (n * (n - 1)) as u64;
    let (passed, note) = match r.qh_degree(&WeightVector::discriminant(n)) {
        Ok(Some(d)) => (d == expected, format!("qh degree {d}")),
        Ok(None) => (false, "not quasi-homogeneous".to_string()),
        Err(e) => (false, e.to_string()),
    };
    out.push(ClaimResult::new(LEMMA1_QH_DEGREE, Params::n(n), passed).note(note));
    out
}

fn per_index(r: &MultiPoly, n: usize, k: usize) -> Vec<ClaimResult> {
    let ak = VarId::a(k);
    let deg = r.degree_in_var(ak);
    let degree = ClaimResult::new(LEMMA1_DEGREE_AK, Params::nk(n, k), deg == Degree::Finite(n as u32))
        .note(format!("degree {deg}"));

    let coeffs = r.coeffs_in_var(ak);
    let leading = coeffs.get(n).cloned().unwrap_or_else(MultiPoly::zero);
    let magnitude = Coeff::from(k as i64).pow(k as u32) * Coeff::from((n - k) as i64).pow((n - k) as u32);
    let shape = MultiPoly::term(magnitude, Monomial::var_pow(VarId::a(n), (n - k - 1) as u32));
    let sign = if leading == shape {
        Some("+")
    } else if leading == shape.neg() {
        Some("-")
    } else {
        None
    };
    let leading_claim = ClaimResult::new(LEMMA1_LEADING_COEFF, Params::nk(n, k), sign.is_some())
        .note(match sign {
            Some(s) => format!("sign {s}"),
            None => format!("expected ±{shape}"),
        })
        .witness(Witness::Poly(leading));
    vec![degree, leading_claim]
}
