//! Irreducibility by specialization.
//!
//! Let `f` have degree `d ≥ 1` in `v` and be primitive as a polynomial in
//! `v` over the ring of the remaining variables. If some integer point for
//! the remaining variables keeps the `v`-degree at `d` and makes `f`
//! irreducible in `Q[v]`, then `f` is irreducible: a factorization into two
//! factors of positive `v`-degree would specialize to one (leading
//! coefficients stay nonzero), and a factor of `v`-degree zero would divide
//! every `v`-coefficient, contradicting primitivity. Irreducibility over `Q`
//! of the specialized polynomial follows from irreducibility modulo a prime
//! not dividing its leading coefficient.
//!
//! Primitivity is certified per remaining variable `u`: two `v`-coefficients
//! whose images under an integer specialization of every remaining variable
//! except `u` keep their `u`-degrees and are coprime in `Q[u]`. A common
//! factor involving `u` would survive with positive `u`-degree in both
//! images. Every nonconstant common factor involves some `u`, so
//! certificates for all `u` rule them out. A `v`-coefficient that is a
//! nonzero constant settles primitivity directly.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::modp::{is_prime, modp_irreducible};
use super::{Certificate, CertificateWitness, IrreducibilityError, Method, Verdict};
use crate::analysis::{unit_rng, SampleRng};
use crate::par;
use crate::polyring::{Coeff, Degree, MultiPoly, VarId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationConfig {
    pub attempts: usize,
    pub seed: u64,
    /// Points are drawn from integers in `[−range, range]`.
    pub range: i64,
    /// Number of primes screened per admissible point.
    pub primes: usize,
    /// Specializations tried per coefficient pair and variable when
    /// certifying primitivity.
    pub primitivity_attempts: usize,
}

impl SpecializationConfig {
    pub fn new(attempts: usize, seed: u64) -> SpecializationConfig {
        SpecializationConfig {
            attempts,
            seed,
            range: 20,
            primes: 8,
            primitivity_attempts: 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeScreen {
    pub prime: u64,
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableCoprimality {
    pub variable: VarId,
    /// Powers of `v` whose coefficients were compared.
    pub powers: (usize, usize),
    pub point: BTreeMap<VarId, Coeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Primitivity {
    /// The coefficient of `v^power` is a nonzero constant.
    ConstantCoefficient { power: usize },
    /// One coprimality certificate per remaining variable.
    Coprime(Vec<VariableCoprimality>),
    /// No certificate found for the listed variable.
    Uncertified { variable: VarId },
}

impl Primitivity {
    fn is_certified(&self) -> bool {
        !matches!(self, Primitivity::Uncertified { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationWitness {
    pub variable: VarId,
    pub degree: u32,
    pub attempts_tried: usize,
    /// Index of the certifying attempt, if any.
    pub attempt: Option<usize>,
    pub point: Option<BTreeMap<VarId, Coeff>>,
    /// Integer coefficients of the specialized polynomial, ascending powers.
    pub specialized: Vec<String>,
    pub screen: Vec<PrimeScreen>,
    pub primitivity: Primitivity,
}

/// The variable of smallest positive degree (ties go to the smaller
/// variable).
pub fn choose_variable(f: &MultiPoly) -> Option<VarId> {
    f.vars()
        .into_iter()
        .filter_map(|v| f.degree_in_var(v).finite().map(|d| (d, v)))
        .filter(|&(d, _)| d > 0)
        .min()
        .map(|(_, v)| v)
}

fn random_point(rng: &mut SampleRng, vars: &[VarId], range: i64) -> BTreeMap<VarId, Coeff> {
    vars.iter().map(|&u| (u, Coeff::from(rng.random_range(-range..=range)))).collect()
}

fn constant_coeffs(p: &MultiPoly, v: VarId) -> Vec<Coeff> {
    p.coeffs_in_var(v)
        .iter()
        .map(|c| c.as_constant().expect("all other variables specialized"))
        .collect()
}

/// Scales rational coefficients to coprime integers.
fn integer_coeffs(cs: &[Coeff]) -> Vec<BigInt> {
    let lcm = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    let ints: Vec<BigInt> = cs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn primes_not_dividing(lc: &BigInt, count: usize) -> Vec<u64> {
    (2u64..)
        .filter(|&p| is_prime(p) && !(lc % BigInt::from(p)).is_zero())
        .take(count)
        .collect()
}

/// Monic gcd in `Q[u]` of coefficient lists in ascending powers.
fn rational_gcd(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    fn trim(mut v: Vec<Coeff>) -> Vec<Coeff> {
        while v.last().is_some_and(Coeff::is_zero) {
            v.pop();
        }
        v
    }
    fn rem(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lead = b[db].clone();
        while r.len() > db {
            let top = r.len() - 1;
            let factor = &r[top] / &lead;
            if !factor.is_zero() {
                for (j, c) in b.iter().enumerate() {
                    let idx = top - db + j;
                    r[idx] -= &(&factor * c);
                }
            }
            r.pop();
            r = trim(r);
        }
        r
    }
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        x = x.iter().map(|c| c / &lead).collect();
    }
    x
}

fn certify_primitivity(
    f: &MultiPoly,
    v: VarId,
    cfg: &SpecializationConfig,
) -> Primitivity {
    let coeffs: Vec<(usize, MultiPoly)> = f
        .coeffs_in_var(v)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    if let Some((power, _)) = coeffs.iter().find(|(_, c)| c.is_constant()) {
        return Primitivity::ConstantCoefficient { power: *power };
    }
    let mut by_size: Vec<&(usize, MultiPoly)> = coeffs.iter().collect();
    by_size.sort_by_key(|(power, c)| (c.len(), *power));
    by_size.truncate(6);

    let remaining: BTreeSet<VarId> = coeffs.iter().flat_map(|(_, c)| c.vars()).collect();
    let mut certificates = Vec::new();
    for (index, &u) in remaining.iter().enumerate() {
        let others: Vec<VarId> = remaining.iter().copied().filter(|&w| w != u).collect();
        let found = (0..by_size.len())
            .flat_map(|i| (i + 1..by_size.len()).map(move |j| (i, j)))
            .find_map(|(i, j)| {
                let (pi, ci) = by_size[i];
                let (pj, cj) = by_size[j];
                let (di, dj) = (ci.degree_in_var(u), cj.degree_in_var(u));
                (0..cfg.primitivity_attempts).find_map(|t| {
                    let stream = format!("primitivity/{index}/{pi}/{pj}");
                    let point = random_point(&mut unit_rng(cfg.seed, &stream, 0, t), &others, cfg.range);
                    let (si, sj) = (ci.specialize(&point), cj.specialize(&point));
                    if si.degree_in_var(u) != di || sj.degree_in_var(u) != dj {
                        return None;
                    }
                    let g = rational_gcd(&constant_coeffs(&si, u), &constant_coeffs(&sj, u));
                    (g.len() == 1).then_some(VariableCoprimality {
                        variable: u,
                        powers: (*pi, *pj),
                        point,
                    })
                })
            });
        match found {
            Some(c) => certificates.push(c),
            None => return Primitivity::Uncertified { variable: u },
        }
    }
    Primitivity::Coprime(certificates)
}

struct Attempt {
    point: BTreeMap<VarId, Coeff>,
    specialized: Vec<BigInt>,
    screen: Vec<PrimeScreen>,
}

impl Attempt {
    fn certified(&self) -> bool {
        self.screen.iter().any(|s| s.irreducible)
    }
}

fn try_point(f: &MultiPoly, v: VarId, degree: u32, others: &[VarId], cfg: &SpecializationConfig, index: usize) -> Option<Attempt> {
    let point = random_point(&mut unit_rng(cfg.seed, "specialization", 0, index), others, cfg.range);
    let g = f.specialize(&point);
    if g.degree_in_var(v) != Degree::Finite(degree) {
        return None;
    }
    let specialized = integer_coeffs(&constant_coeffs(&g, v));
    let lc = specialized.last().expect("positive degree").clone();
    let mut screen = Vec::new();
    for p in primes_not_dividing(&lc, cfg.primes) {
        let irreducible = modp_irreducible(&specialized, p).expect("prime chosen not to divide the leading coefficient");
        screen.push(PrimeScreen { prime: p, irreducible });
        if irreducible {
            break;
        }
    }
    Some(Attempt {
        point,
        specialized,
        screen,
    })
}

pub fn specialization_certificate(f: &MultiPoly, v: VarId, attempts: usize, seed: u64) -> Result<Certificate, IrreducibilityError> {
    specialization_certificate_with(f, v, &SpecializationConfig::new(attempts, seed))
}

/// Specialization certificate with explicit bounds. Degree one in `v` takes
/// the shortcut: primitivity alone proves irreducibility. Attempts may run
/// concurrently; the recorded witness is always the smallest successful
/// attempt index.
pub fn specialization_certificate_with(
    f: &MultiPoly,
    v: VarId,
    cfg: &SpecializationConfig,
) -> Result<Certificate, IrreducibilityError> {
    if f.is_zero() {
        return Err(IrreducibilityError::ZeroPolynomial);
    }
    let degree = match f.degree_in_var(v) {
        Degree::Finite(d) if d > 0 => d,
        _ => return Err(IrreducibilityError::DegreeZeroInV(v)),
    };
    let primitivity = certify_primitivity(f, v, cfg);
    let mut witness = SpecializationWitness {
        variable: v,
        degree,
        attempts_tried: 0,
        attempt: None,
        point: None,
        specialized: Vec::new(),
        screen: Vec::new(),
        primitivity,
    };

    if degree == 1 {
        let proven = witness.primitivity.is_certified();
        return Ok(Certificate {
            verdict: if proven { Verdict::Proven } else { Verdict::Inconclusive },
            method: Method::DegreeOne,
            witness: CertificateWitness::Specialization(witness),
            note: if proven { String::new() } else { "primitivity not certified".into() },
        });
    }

    let others: Vec<VarId> = f.vars().into_iter().filter(|&u| u != v).collect();
    let chunk = par::threads().max(1);
    let mut found: Option<(usize, Attempt)> = None;
    let mut last_admissible: Option<(usize, Attempt)> = None;
    let mut start = 0;
    while start < cfg.attempts && found.is_none() {
        let len = chunk.min(cfg.attempts - start);
        let results = par::map_range(len, |i| try_point(f, v, degree, &others, cfg, start + i));
        for (i, r) in results.into_iter().enumerate() {
            witness.attempts_tried = start + i + 1;
            if let Some(a) = r {
                if a.certified() {
                    found = Some((start + i, a));
                    break;
                }
                last_admissible = Some((start + i, a));
            }
        }
        start += len;
    }

    let proven_univariate = found.is_some();
    if let Some((index, a)) = found.or(last_admissible) {
        witness.attempt = proven_univariate.then_some(index);
        witness.point = Some(a.point);
        witness.specialized = a.specialized.iter().map(BigInt::to_string).collect();
        witness.screen = a.screen;
    }
    let primitive = witness.primitivity.is_certified();
    let note = match (proven_univariate, primitive) {
        (true, true) => String::new(),
        (false, _) => format!("no specialization certified irreducible in {} attempts", witness.attempts_tried),
        (true, false) => "primitivity not certified".into(),
    };
    Ok(Certificate {
        verdict: if proven_univariate && primitive { Verdict::Proven } else { Verdict::Inconclusive },
        method: Method::Specialization,
        witness: CertificateWitness::Specialization(witness),
        note,
    })
}
