//! Checkers for the equalities and shape statements about `R`, `D̃_k`, `V_k`,
//! the Jacobian of the double-root parametrization, and the strata `D` and
//! `Σ`. Failures are recorded in [`ClaimResult`]s, never thrown.

mod divisibility;
mod lemma1;
mod lemma2;
mod points;
mod remark1;
mod sampling;
mod sigma;
mod smoothness;
mod statements;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyring::{Coeff, MultiPoly, VarId};

pub use divisibility::check_divisibility;
pub use lemma1::check_lemma1;
pub use lemma2::{check_lemma2, jacobian_matrix};
pub use points::{parametrization, DoubleRootPoint};
pub use remark1::check_remark1;
pub use sampling::{unit_rng, SampleRng, RETRY_BOUND, SAMPLE_RANGE};
pub use sigma::check_sigma;
pub use smoothness::{check_parametrization, check_smoothness};
pub use statements::check_statements;

/// Identifies a claim instance: the degree `n`, the index `k` when the
/// claim is per-index, and any auxiliary labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub aux: BTreeMap<String, String>,
}

impl Params {
    pub fn n(n: usize) -> Params {
        Params {
            n,
            k: None,
            aux: BTreeMap::new(),
        }
    }

    pub fn nk(n: usize, k: usize) -> Params {
        Params {
            k: Some(k),
            ..Params::n(n)
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Params {
        self.aux.insert(key.to_string(), value.to_string());
        self
    }
}

/// Supporting data attached to a claim result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Poly(MultiPoly),
    Values(Vec<Coeff>),
    Orders(BTreeMap<VarId, u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub params: Params,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub note: String,
}

impl ClaimResult {
    pub fn new(claim_id: &str, params: Params, passed: bool) -> ClaimResult {
        ClaimResult {
            claim_id: claim_id.to_string(),
            params,
            passed,
            witness: None,
            note: String::new(),
        }
    }

    pub fn failed(claim_id: &str, params: Params, note: impl Into<String>) -> ClaimResult {
        ClaimResult::new(claim_id, params, false).note(note)
    }

    pub fn witness(mut self, w: Witness) -> ClaimResult {
        self.witness = Some(w);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> ClaimResult {
        self.note = note.into();
        self
    }

    /// Ordering key used by reports.
    pub fn sort_key(&self) -> (&str, usize, Option<usize>, &BTreeMap<String, String>) {
        (&self.claim_id, self.params.n, self.params.k, &self.params.aux)
    }
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} n={}", self.claim_id, self.params.n)?;
        if let Some(k) = self.params.k {
            write!(f, " k={k}")?;
        }
        for (key, value) in &self.params.aux {
            write!(f, " {key}={value}")?;
        }
        if !self.note.is_empty() {
            write!(f, ": {}", self.note)?;
        }
        Ok(())
    }
}

/// A point `a = (a_1, …, a_n)` as an evaluation map.
pub fn a_point(a: &[Coeff]) -> BTreeMap<VarId, Coeff> {
    a.iter().enumerate().map(|(i, c)| (VarId::a(i + 1), c.clone())).collect()
}

/// Coefficients `(a_1, …, a_n)` of the monic product of the given monic
/// factors, each listed without its leading 1.
pub fn monic_product(factors: &[&[Coeff]]) -> Vec<Coeff> {
    let mut acc = vec![Coeff::one()];
    for f in factors {
        let mut next = vec![Coeff::zero(); acc.len() + f.len()];
        for (i, c) in acc.iter().enumerate() {
            next[i] += c;
            for (j, d) in f.iter().enumerate() {
                next[i + j + 1] += &(c * d);
            }
        }
        acc = next;
    }
    acc.remove(0);
    acc
}

/// Coefficients of `∏ (x − r)` without the leading 1.
pub fn coefficients_from_roots(roots: &[Coeff]) -> Vec<Coeff> {
    let linear: Vec<[Coeff; 1]> = roots.iter().map(|r| [-r]).collect();
    let factors: Vec<&[Coeff]> = linear.iter().map(|f| &f[..]).collect();
    monic_product(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(v: &[i64]) -> Vec<Coeff> {
        v.iter().map(|&c| Coeff::from(c)).collect()
    }

    #[test]
    fn products_of_factors() {
        // (x-1)^3 (x-2) = x^4 - 5x^3 + 9x^2 - 7x + 2
        assert_eq!(coefficients_from_roots(&cs(&[1, 1, 1, 2])), cs(&[-5, 9, -7, 2]));
        let q = cs(&[3, 5]);
        let lin = cs(&[2]);
        // (x+2)(x^2+3x+5) = x^3 + 5x^2 + 11x + 10
        assert_eq!(monic_product(&[&lin, &q]), cs(&[5, 11, 10]));
        assert!(monic_product(&[]).is_empty());
    }

    #[test]
    fn claim_result_display() {
        let r = ClaimResult::new("lemma1.degree_ak", Params::nk(3, 1), true);
        assert_eq!(r.to_string(), "PASS lemma1.degree_ak n=3 k=1");
        let r = ClaimResult::failed("x.y", Params::n(4).with("i", 2), "bad");
        assert_eq!(r.to_string(), "FAIL x.y n=4 i=2: bad");
    }
}
