use std::collections::BTreeSet;

use rand::Rng;

use super::sampling::{draw, small_coeff, small_nonzero, unit_rng, SampleRng, RETRY_BOUND, SAMPLE_RANGE};
use super::{a_point, coefficients_from_roots, monic_product, ClaimResult, Params, Witness};
use crate::par;
use crate::polyring::{Coeff, MultiPoly, VarId};
use crate::registry::*;
use crate::resultant::{discriminant_r, generic_p, resultant, v_k, ResultantError};

struct Objects {
    r: MultiPoly,
    /// `Res(P', P'', x)`.
    r_prime: MultiPoly,
    /// `V_1, …, V_n`.
    v: Vec<MultiPoly>,
}

fn objects(n: usize) -> Result<Objects, ResultantError> {
    let dp = generic_p(n)?.derivative()?;
    Ok(Objects {
        r: discriminant_r(n)?,
        r_prime: resultant(&dp, &dp.derivative()?)?,
        v: (1..=n).map(|k| v_k(n, k)).collect::<Result<_, _>>()?,
    })
}

enum Outcome {
    Agrees,
    Degenerate,
    Disagrees(Vec<Coeff>, String),
}

fn eval(p: &MultiPoly, a: &[Coeff]) -> Coeff {
    p.evaluate(&a_point(a)).expect("polynomial in a_j")
}

/// `(x − β)³ · (monic cofactor)` coefficients.
fn triple_root_point(beta: &Coeff, cofactor: &[Coeff]) -> Vec<Coeff> {
    let cube = [
        &Coeff::from(-3) * beta,
        &Coeff::from(3) * &(beta * beta),
        -&(beta * &(beta * beta)),
    ];
    monic_product(&[&cube, cofactor])
}

/// Roots `β, β, r_1, …, r_(n−2)` with all `r_i` distinct, nonzero and
/// different from `β ≠ 0`.
fn double_root_only(rng: &mut SampleRng, n: usize) -> Option<Vec<Coeff>> {
    let beta = small_nonzero(rng);
    let mut others = BTreeSet::new();
    let candidates = (2 * SAMPLE_RANGE) as usize;
    if candidates < n - 1 {
        return None;
    }
    while others.len() < n - 2 {
        let r = rng.random_range(-SAMPLE_RANGE..=SAMPLE_RANGE);
        if r != 0 && Coeff::from(r) != beta {
            others.insert(r);
        }
    }
    let mut roots = vec![beta.clone(), beta];
    roots.extend(others.into_iter().map(Coeff::from));
    Some(roots)
}

/// Sampled membership checks for the triple-root stratum and its
/// projections, plus double-root-only samples lying off it.
pub fn check_sigma(n: usize, samples: usize, seed: u64) -> Vec<ClaimResult> {
    let params = Params::n(n).with("samples", samples);
    let obj = match objects(n) {
        Ok(o) => o,
        Err(e) => return vec![ClaimResult::failed(SIGMA_TRIPLE_ROOT, params, e.to_string())],
    };
    for (i, v) in obj.v.iter().enumerate() {
        if v.vars().contains(&VarId::a(i + 1)) {
            let note = format!("V_{} involves a{}", i + 1, i + 1);
            return vec![ClaimResult::failed(SIGMA_TRIPLE_ROOT, params, note)];
        }
    }

    let triple = |rng: &mut SampleRng| -> Outcome {
        let beta = small_nonzero(rng);
        let cofactor: Vec<Coeff> = (0..n - 3).map(|_| small_coeff(rng)).collect();
        let a = triple_root_point(&beta, &cofactor);
        if !eval(&obj.r, &a).is_zero() {
            return Outcome::Disagrees(a, "Res(P, P') != 0".into());
        }
        if !eval(&obj.r_prime, &a).is_zero() {
            return Outcome::Disagrees(a, "Res(P', P'') != 0".into());
        }
        match obj.v.iter().position(|v| !eval(v, &a).is_zero()) {
            None => Outcome::Agrees,
            Some(i) => Outcome::Disagrees(a, format!("V_{} != 0", i + 1)),
        }
    };

    let triple_zero = |rng: &mut SampleRng| -> Outcome {
        let cofactor: Vec<Coeff> = (0..n - 3).map(|_| small_coeff(rng)).collect();
        let a = triple_root_point(&Coeff::zero(), &cofactor);
        if !eval(&obj.v[n - 2], &a).is_zero() {
            return Outcome::Disagrees(a, format!("V_{} != 0", n - 1));
        }
        Outcome::Agrees
    };

    let double_only = |rng: &mut SampleRng| -> Outcome {
        let Some(roots) = draw(rng, |rng| double_root_only(rng, n), Option::is_some).flatten() else {
            return Outcome::Degenerate;
        };
        let a = coefficients_from_roots(&roots);
        if !eval(&obj.r, &a).is_zero() {
            return Outcome::Disagrees(a, "Res(P, P') != 0".into());
        }
        if eval(&obj.r_prime, &a).is_zero() {
            return Outcome::Disagrees(a, "Res(P', P'') = 0".into());
        }
        match obj.v.iter().position(|v| eval(v, &a).is_zero()) {
            None => Outcome::Agrees,
            Some(i) => Outcome::Disagrees(a, format!("V_{} = 0", i + 1)),
        }
    };

    type Case<'a> = &'a (dyn Fn(&mut SampleRng) -> Outcome + Sync);
    let cases: [(&str, Case); 3] = [
        (SIGMA_DOUBLE_ROOT_ONLY, &double_only),
        (SIGMA_TRIPLE_ROOT, &triple),
        (SIGMA_TRIPLE_ROOT_ZERO, &triple_zero),
    ];
    cases
        .iter()
        .map(|&(id, case)| {
            let outcomes = par::map_range(samples, |index| case(&mut unit_rng(seed, id, n, index)));
            summarize(id, params.clone(), outcomes)
        })
        .collect()
}

fn summarize(id: &str, params: Params, outcomes: Vec<Outcome>) -> ClaimResult {
    for outcome in outcomes {
        match outcome {
            Outcome::Agrees => {}
            Outcome::Degenerate => {
                return ClaimResult::failed(id, params, format!("degenerate sample after {RETRY_BOUND} redraws"))
            }
            Outcome::Disagrees(a, why) => return ClaimResult::failed(id, params, why).witness(Witness::Values(a)),
        }
    }
    ClaimResult::new(id, params, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(v: &[i64]) -> Vec<Coeff> {
        v.iter().map(|&c| Coeff::from(c)).collect()
    }

    #[test]
    fn quartic_examples() {
        let obj = objects(4).unwrap();
        // (x−1)³(x−2): every V_k vanishes
        let a = triple_root_point(&Coeff::one(), &cs(&[-2]));
        assert_eq!(a, cs(&[-5, 9, -7, 2]));
        for v in &obj.v {
            assert!(eval(v, &a).is_zero());
        }
        // (x−1)²(x−2)(x−3): on D but not on the triple-root stratum
        let a = coefficients_from_roots(&cs(&[1, 1, 2, 3]));
        assert!(eval(&obj.r, &a).is_zero());
        assert!(!eval(&obj.r_prime, &a).is_zero());
        // x³(x−1): a2 = a3 = a4 = 0 and V_3 vanishes
        let a = triple_root_point(&Coeff::zero(), &cs(&[-1]));
        assert_eq!(a, cs(&[-1, 0, 0, 0]));
        assert!(eval(&obj.v[2], &a).is_zero());
    }

    #[test]
    fn sampled_quartic_checks_pass() {
        for r in check_sigma(4, 10, 42) {
            assert!(r.passed, "{r}");
        }
    }
}
