use std::collections::BTreeMap;

use super::{ClaimResult, Params, Witness};
use crate::polyring::{Coeff, Monomial, MultiPoly, VarId};
use crate::registry::*;
use crate::resultant::{discriminant_r, resultant, ResultantError, UniPolyView};

fn zero_except(n: usize, keep: &[usize]) -> BTreeMap<VarId, Coeff> {
    (1..=n).filter(|i| !keep.contains(i)).map(|i| (VarId::a(i), Coeff::zero())).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mono(pairs: &[(usize, usize)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().map(|&(i, e)| (VarId::a(i), e as u32)))
}

/// Passes when the support of `f` is exactly `expected` (all coefficients
/// are nonzero by construction of a sparse polynomial). On failure the note
/// records `gcd`: the restricted polynomial is a trinomial discriminant,
/// which has `gcd + 1` terms rather than two.
fn support_claim(id: &str, params: Params, f: MultiPoly, expected: &[Monomial], gcd: usize) -> ClaimResult {
    let mut support: Vec<&Monomial> = f.terms().iter().map(|(m, _)| m).collect();
    let mut want: Vec<&Monomial> = expected.iter().collect();
    support.sort();
    want.sort();
    let passed = support == want;
    let note = if passed {
        String::new()
    } else {
        let show = |ms: &[&Monomial]| ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ");
        format!(
            "support {{{}}}, expected {{{}}}; index gcd {gcd}",
            show(&support),
            show(&want)
        )
    };
    ClaimResult::new(id, params, passed).note(note).witness(Witness::Poly(f))
}

/// `P^0 = x^n + a_k x^(n−k) + a_(n−1) x` and `P^0 / x`, as views in `x`.
fn reduced_pair(n: usize, k: usize) -> Result<(UniPolyView, UniPolyView), ResultantError> {
    let mut cs = vec![MultiPoly::zero(); n + 1];
    cs[n] = MultiPoly::one();
    cs[n - k] = MultiPoly::var(VarId::a(k));
    cs[1] = MultiPoly::var(VarId::a(n - 1));
    let p0 = UniPolyView::new(VarId::X, cs.clone(), n)?;
    let p0_over_x = UniPolyView::new(VarId::X, cs[1..].to_vec(), n - 1)?;
    Ok((p0, p0_over_x))
}

fn statement_b(n: usize, k: usize) -> Result<Vec<ClaimResult>, ResultantError> {
    let (p0, p0_over_x) = reduced_pair(n, k)?;
    let dp0 = p0.derivative()?;
    let delta = resultant(&p0, &dp0)?;
    let delta1 = resultant(&p0_over_x, &dp0)?;
    let an1 = MultiPoly::var(VarId::a(n - 1));
    let factored = &an1 * &delta1;
    let factor = ClaimResult::new(STMT_B_FACTOR, Params::nk(n, k), delta == factored).witness(Witness::Poly(delta1));
    let shape = support_claim(
        STMT_B_SHAPE,
        Params::nk(n, k),
        delta,
        &[mono(&[(n - 1, n)]), mono(&[(k, n - 1), (n - 1, n - k)])],
        gcd(n - 1, k),
    );
    Ok(vec![shape, factor])
}

fn statement_c(n: usize, r: &MultiPoly) -> Result<Vec<ClaimResult>, crate::polyring::PolyError> {
    let an = VarId::a(n);
    let an1 = MultiPoly::var(VarId::a(n - 1));
    let at_zero = r.specialize(&[(an, Coeff::zero())].into());
    let order = at_zero.divisibility_order(VarId::a(n - 1))?;
    let divisible = ClaimResult::new(STMT_C_DIVISIBLE, Params::n(n), order >= 2).note(format!("order {order}"));
    if order < 2 {
        return Ok(vec![divisible]);
    }
    let u = at_zero.exact_divide(&an1.pow(2))?;
    let v = (r - &(&an1.pow(2) * &u)).exact_divide(&MultiPoly::var(an))?;
    let v0 = v.specialize(&[(an, Coeff::zero())].into());
    let cofactor = ClaimResult::new(STMT_C_COFACTOR, Params::n(n), !v0.is_zero())
        .note(format!("V at a{n} = 0 has {} terms", v0.len()))
        .witness(Witness::Poly(v0));
    Ok(vec![divisible, cofactor])
}

/// Support shapes of `R` and of `Res(P^0, P^0')` on coordinate subspaces, and
/// the decomposition `R = a_(n−1)² U + a_n V` with `V|_(a_n=0) ≠ 0`.
pub fn check_statements(n: usize) -> Vec<ClaimResult> {
    let r = match discriminant_r(n) {
        Ok(r) => r,
        Err(e) => return vec![ClaimResult::failed(STMT_A_SHAPE, Params::n(n), e.to_string())],
    };
    let mut out = Vec::new();
    for k in 1..n {
        let restricted = r.specialize(&zero_except(n, &[k, n]));
        out.push(support_claim(
            STMT_A_SHAPE,
            Params::nk(n, k),
            restricted,
            &[mono(&[(k, n), (n, n - k - 1)]), mono(&[(n, n - 1)])],
            gcd(n, k),
        ));
    }
    for k in 1..n.saturating_sub(1) {
        match statement_b(n, k) {
            Ok(rs) => out.extend(rs),
            Err(e) => out.push(ClaimResult::failed(STMT_B_SHAPE, Params::nk(n, k), e.to_string())),
        }
    }
    match statement_c(n, &r) {
        Ok(rs) => out.extend(rs),
        Err(e) => out.push(ClaimResult::failed(STMT_C_DIVISIBLE, Params::n(n), e.to_string())),
    }
    out
}
