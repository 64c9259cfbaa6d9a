//! The quasi-homogeneous split argument.
//!
//! Under positive weights every factor of a quasi-homogeneous polynomial is
//! quasi-homogeneous (a standard fact, assumed and not checked here), and a
//! factor of positive degree has no constant term. If `f = g h` with `g, h`
//! of degrees `h1, h2 > 0`, every monomial of `f` is a product of a monomial
//! of `g` and one of `h`, so it has a divisor of weighted degree exactly
//! `h1`. A monomial of `f` with no such divisor therefore blocks the split
//! `(h1, h2)`; when every split is blocked, `f` is irreducible.

use serde::{Deserialize, Serialize};

use super::{Certificate, CertificateWitness, IrreducibilityError, Method, Verdict};
use crate::polyring::{Monomial, MultiPoly, VarId, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitWitness {
    /// Degree of the first factor; the second has `qh_degree − h1`.
    pub h1: u64,
    /// A witness monomial with no divisor of weighted degree `h1`, if any.
    pub blocked_by: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QhWitness {
    pub weights: Vec<(VarId, u64)>,
    pub qh_degree: u64,
    /// Monomials of `f` with nonzero coefficient used to block splits.
    pub monomials: Vec<String>,
    pub splits: Vec<SplitWitness>,
}

fn require_term(f: &MultiPoly, m: &Monomial) -> Result<(), IrreducibilityError> {
    if f.coeff_of(m).is_zero() {
        return Err(IrreducibilityError::MissingPurePower(m.to_string()));
    }
    Ok(())
}

fn pure_power(f: &MultiPoly, w: &WeightVector, v: VarId, degree: u64) -> Result<Monomial, IrreducibilityError> {
    let wv = w.get(v);
    if wv == 0 {
        return Err(IrreducibilityError::ZeroWeight(v));
    }
    if !degree.is_multiple_of(wv) {
        return Err(IrreducibilityError::MissingPurePower(format!("{v}^({degree}/{wv})")));
    }
    let m = Monomial::var_pow(v, (degree / wv) as u32);
    require_term(f, &m)?;
    Ok(m)
}

fn has_divisor_of_degree(m: &Monomial, w: &WeightVector, target: u64) -> bool {
    m.divisors().iter().any(|d| w.degree_of(d) == target)
}

/// Certificate from the pure powers of `p` and `q` in `f`, optionally
/// strengthened by a further monomial of `f` (the mixed-monomial refinement).
pub fn qh_pure_power_certificate(
    f: &MultiPoly,
    w: &WeightVector,
    p: VarId,
    q: VarId,
    refinement: Option<&Monomial>,
) -> Result<Certificate, IrreducibilityError> {
    for v in f.vars() {
        if w.get(v) == 0 {
            return Err(IrreducibilityError::ZeroWeight(v));
        }
    }
    let degree = match f.qh_degree(w) {
        Ok(Some(d)) => d,
        Ok(None) => return Err(IrreducibilityError::NotQuasiHomogeneous),
        Err(_) => return Err(IrreducibilityError::ZeroPolynomial),
    };
    let mut witnesses = vec![pure_power(f, w, p, degree)?, pure_power(f, w, q, degree)?];
    if let Some(m) = refinement {
        require_term(f, m)?;
        witnesses.push(m.clone());
    }

    let splits: Vec<SplitWitness> = (1..degree)
        .map(|h1| SplitWitness {
            h1,
            blocked_by: witnesses
                .iter()
                .find(|m| !has_divisor_of_degree(m, w, h1))
                .map(Monomial::to_string),
        })
        .collect();
    let open: Vec<u64> = splits.iter().filter(|s| s.blocked_by.is_none()).map(|s| s.h1).collect();
    let verdict = if open.is_empty() { Verdict::Proven } else { Verdict::Inconclusive };
    let note = if open.is_empty() {
        String::new()
    } else {
        let open: Vec<String> = open.iter().map(u64::to_string).collect();
        format!("unblocked splits at h1 = {}", open.join(", "))
    };
    let mut weights: Vec<(VarId, u64)> = f.vars().into_iter().map(|v| (v, w.get(v))).collect();
    weights.sort();
    Ok(Certificate {
        verdict,
        method: Method::QhPurePower,
        witness: CertificateWitness::QhPurePower(QhWitness {
            weights,
            qh_degree: degree,
            monomials: witnesses.iter().map(Monomial::to_string).collect(),
            splits,
        }),
        note,
    })
}
