//! Sound, possibly inconclusive irreducibility certificates over the
//! rationals. A `Proven` verdict is only issued when every soundness
//! condition of the method holds; `Inconclusive` claims nothing.

mod modp;
mod family;
mod qh;
mod specialization;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{PolyError, VarId};

pub use modp::{modp_irreducible, FpPoly};
pub use family::{certify_discriminant_irreducibility, CertifiedClaim, FamilyOptions};
pub use qh::{qh_pure_power_certificate, QhWitness, SplitWitness};
pub use specialization::{
    choose_variable, specialization_certificate, specialization_certificate_with, PrimeScreen, Primitivity,
    SpecializationConfig, SpecializationWitness, VariableCoprimality,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IrreducibilityError {
    #[error("polynomial is not quasi-homogeneous under the given weights")]
    NotQuasiHomogeneous,
    #[error("monomial {0} is missing or has zero coefficient")]
    MissingPurePower(String),
    #[error("variable {0} has weight zero")]
    ZeroWeight(VarId),
    #[error("{0} is not a prime or divides the leading coefficient")]
    BadPrime(u64),
    #[error("polynomial has degree zero in {0}")]
    DegreeZeroInV(VarId),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Proven,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    QhPurePower,
    Specialization,
    DegreeOne,
}

/// Method-specific data sufficient to replay the argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateWitness {
    QhPurePower(QhWitness),
    Specialization(SpecializationWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub method: Method,
    pub witness: CertificateWitness,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
}

impl Certificate {
    pub fn is_proven(&self) -> bool {
        self.verdict == Verdict::Proven
    }
}
