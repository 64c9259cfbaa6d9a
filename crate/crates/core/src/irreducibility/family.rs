use serde::{Deserialize, Serialize};

use super::{
    choose_variable, qh_pure_power_certificate, specialization_certificate_with, Certificate, SpecializationConfig,
};
use crate::analysis::Params;
use crate::polyring::{Monomial, MultiPoly, VarId, WeightVector};
use crate::registry::{PROP2_R, PROP2_VK, PROP2_VN1};
use crate::resultant::{discriminant_r, v_k};

/// Result of certifying one polynomial of the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedClaim {
    pub claim_id: String,
    pub params: Params,
    /// `None` when the instance was skipped or the certificate could not be
    /// built.
    pub certificate: Option<Certificate>,
    /// Why the certificate could not be built, e.g. a missing pure power.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyOptions {
    /// Run the specialization certificate for `V_5` at `n = 6`.
    pub extended: bool,
    pub attempts: usize,
    pub seed: u64,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            extended: false,
            attempts: 200,
            seed: 0,
        }
    }
}

fn qh(claim_id: &str, params: Params, f: &MultiPoly, n: usize, p: VarId, q: VarId, refinement: Option<&Monomial>) -> CertifiedClaim {
    let outcome = qh_pure_power_certificate(f, &WeightVector::discriminant(n), p, q, refinement);
    match outcome {
        Ok(c) => certified(claim_id, params, c),
        Err(e) => failed(claim_id, params, e.to_string()),
    }
}

fn certified(claim_id: &str, params: Params, c: Certificate) -> CertifiedClaim {
    CertifiedClaim {
        claim_id: claim_id.to_string(),
        params,
        certificate: Some(c),
        error: None,
        note: String::new(),
    }
}

fn skipped(claim_id: &str, params: Params, note: String) -> CertifiedClaim {
    CertifiedClaim {
        claim_id: claim_id.to_string(),
        params,
        certificate: None,
        error: None,
        note,
    }
}

fn failed(claim_id: &str, params: Params, error: String) -> CertifiedClaim {
    CertifiedClaim {
        claim_id: claim_id.to_string(),
        params,
        certificate: None,
        error: Some(error),
        note: String::new(),
    }
}

fn specialization(claim_id: &str, params: Params, f: &MultiPoly, opts: &FamilyOptions) -> CertifiedClaim {
    let Some(v) = choose_variable(f) else {
        return failed(claim_id, params, "constant polynomial".into());
    };
    match specialization_certificate_with(f, v, &SpecializationConfig::new(opts.attempts, opts.seed)) {
        Ok(c) => certified(claim_id, params, c),
        Err(e) => failed(claim_id, params, e.to_string()),
    }
}

/// `V_(n−1) = Res(P_(n−1), P_(n−1)')/a_n`: the coprime-weight pair for odd
/// `n`, the pair plus the `a_(n−3)^n a_n` refinement for even `n > 6`, and
/// specialization for `n ∈ {4, 6}` (`n = 6` only when extended).
fn certify_vn1(n: usize, opts: &FamilyOptions) -> CertifiedClaim {
    let params = Params::nk(n, n - 1);
    let naming = format!("certified polynomial is Res(P{0}, P{0}')/a{1}, also written P{0}/a{1}", n - 1, n);
    if n == 6 && !opts.extended {
        return skipped(PROP2_VN1, params, format!("specialization certificate for n = 6 is opt-in; {naming}"));
    }
    let v = match v_k(n, n - 1) {
        Ok(v) => v,
        Err(e) => return failed(PROP2_VN1, params, e.to_string()),
    };
    let mut claim = if n % 2 == 1 {
        qh(PROP2_VN1, params, &v, n, VarId::a(n - 2), VarId::a(n), None)
    } else if n > 6 {
        let refinement = Monomial::from_pairs([(VarId::a(n - 3), n as u32), (VarId::a(n), 1)]);
        qh(PROP2_VN1, params, &v, n, VarId::a(n - 2), VarId::a(n), Some(&refinement))
    } else {
        specialization(PROP2_VN1, params, &v, opts)
    };
    if n == 4 || n == 6 {
        claim.note = naming;
    }
    claim
}

/// Certificates for `R(n)` and every `V_k`.
pub fn certify_discriminant_irreducibility(n: usize, opts: &FamilyOptions) -> Vec<CertifiedClaim> {
    let mut out = Vec::new();
    match discriminant_r(n) {
        Ok(r) => out.push(qh(PROP2_R, Params::n(n), &r, n, VarId::a(n), VarId::a(n - 1), None)),
        Err(e) => out.push(failed(PROP2_R, Params::n(n), e.to_string())),
    }
    for k in 1..=n {
        if k + 1 == n {
            out.push(certify_vn1(n, opts));
            continue;
        }
        let params = Params::nk(n, k);
        let v = match v_k(n, k) {
            Ok(v) => v,
            Err(e) => {
                out.push(failed(PROP2_VK, params, e.to_string()));
                continue;
            }
        };
        let claim = if k == n {
            qh(PROP2_VK, params, &v, n, VarId::a(n - 1), VarId::a(n - 2), None)
        } else {
            qh(PROP2_VK, params, &v, n, VarId::a(n), VarId::a(n - 1), None)
        };
        out.push(claim);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreducibility::Method;

    #[test]
    fn cubic_family_is_proven() {
        let claims = certify_discriminant_irreducibility(3, &FamilyOptions::default());
        assert_eq!(claims.len(), 4);
        for c in &claims {
            let cert = c.certificate.as_ref().unwrap_or_else(|| panic!("{}: {:?}", c.claim_id, c.error));
            assert!(cert.is_proven(), "{} {:?}", c.claim_id, c.params);
            assert_eq!(cert.method, Method::QhPurePower);
        }
    }
}
