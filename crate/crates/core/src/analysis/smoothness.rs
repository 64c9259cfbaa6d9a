use super::sampling::{draw, small_coeff, small_nonzero, unit_rng, SampleRng, RETRY_BOUND};
use super::{a_point, monic_product, parametrization, ClaimResult, DoubleRootPoint, Params, Witness};
use crate::par;
use crate::polyring::{Coeff, MultiPoly, VarId};
use crate::registry::*;
use crate::resultant::discriminant_r;

enum Outcome {
    Agrees,
    Degenerate,
    Disagrees(Vec<Coeff>, String),
}

/// `R(a(λ, b))` is the zero polynomial.
pub fn check_parametrization(n: usize) -> ClaimResult {
    match discriminant_r(n) {
        Ok(r) => {
            let image = r.substitute(&parametrization(n));
            ClaimResult::new(PROP1_PARAMETRIZATION, Params::n(n), image.is_zero())
                .note(format!("{} terms after substitution", image.len()))
        }
        Err(e) => ClaimResult::failed(PROP1_PARAMETRIZATION, Params::n(n), e.to_string()),
    }
}

/// `Q` has `n − 2` distinct roots: trivially for degree 1, otherwise by a
/// nonzero discriminant.
fn simple_roots(q_disc: &Option<MultiPoly>, b: &[Coeff]) -> bool {
    match q_disc {
        None => true,
        Some(d) => !d.evaluate(&a_point(b)).expect("discriminant in a_j").is_zero(),
    }
}

fn sample_b(rng: &mut SampleRng, len: usize) -> Vec<Coeff> {
    (0..len).map(|_| small_coeff(rng)).collect()
}

/// Sampled gradient checks at double-root points (cases (i) and (ii)) and
/// triple-root points, each sample drawn from its own seeded stream.
pub fn check_smoothness(n: usize, samples: usize, seed: u64) -> Vec<ClaimResult> {
    let params = Params::n(n).with("samples", samples);
    let r = match discriminant_r(n) {
        Ok(r) => r,
        Err(e) => return vec![ClaimResult::failed(PROP1_CASE_I, params, e.to_string())],
    };
    let q_disc = if n - 2 >= 2 {
        match discriminant_r(n - 2) {
            Ok(d) => Some(d),
            Err(e) => return vec![ClaimResult::failed(PROP1_CASE_I, params, e.to_string())],
        }
    } else {
        None
    };
    let grad: Vec<MultiPoly> = (1..=n).map(|k| r.derivative(VarId::a(k))).collect();
    let eval = |p: &MultiPoly, a: &[Coeff]| p.evaluate(&a_point(a)).expect("polynomial in a_j");
    let gradient = |a: &[Coeff]| -> Vec<Coeff> { grad.iter().map(|g| eval(g, a)).collect() };

    let case_i = |rng: &mut SampleRng| -> Outcome {
        let point = draw(
            rng,
            |rng| DoubleRootPoint::new(small_nonzero(rng), sample_b(rng, n - 2)),
            |p| !p.q_at_minus_lambda().is_zero() && simple_roots(&q_disc, &p.b),
        );
        let Some(point) = point else { return Outcome::Degenerate };
        if !eval(&r, &point.a).is_zero() {
            return Outcome::Disagrees(point.a, "R(a) != 0".into());
        }
        match gradient(&point.a).iter().position(Coeff::is_zero) {
            None => Outcome::Agrees,
            Some(i) => Outcome::Disagrees(point.a, format!("dR/da{} = 0", i + 1)),
        }
    };

    let case_ii = |rng: &mut SampleRng| -> Outcome {
        let point = draw(
            rng,
            |rng| DoubleRootPoint::new(Coeff::zero(), sample_b(rng, n - 2)),
            |p| !p.b[n - 3].is_zero() && simple_roots(&q_disc, &p.b),
        );
        let Some(point) = point else { return Outcome::Degenerate };
        if !eval(&r, &point.a).is_zero() {
            return Outcome::Disagrees(point.a, "R(a) != 0".into());
        }
        let g = gradient(&point.a);
        if let Some(i) = g[..n - 1].iter().position(|c| !c.is_zero()) {
            return Outcome::Disagrees(point.a, format!("dR/da{} != 0", i + 1));
        }
        if g[n - 1].is_zero() {
            return Outcome::Disagrees(point.a, format!("dR/da{n} = 0"));
        }
        Outcome::Agrees
    };

    let triple = |rng: &mut SampleRng| -> Outcome {
        let l = small_coeff(rng);
        let cube = [
            &Coeff::from(3) * &l,
            &Coeff::from(3) * &(&l * &l),
            &l * &(&l * &l),
        ];
        let cofactor = sample_b(rng, n - 3);
        let a = monic_product(&[&cube, &cofactor]);
        if !eval(&r, &a).is_zero() {
            return Outcome::Disagrees(a, "R(a) != 0".into());
        }
        match gradient(&a).iter().position(|c| !c.is_zero()) {
            None => Outcome::Agrees,
            Some(i) => Outcome::Disagrees(a, format!("dR/da{} != 0", i + 1)),
        }
    };

    type Case<'a> = &'a (dyn Fn(&mut SampleRng) -> Outcome + Sync);
    let cases: [(&str, Case); 3] = [(PROP1_CASE_I, &case_i), (PROP1_CASE_II, &case_ii), (PROP1_TRIPLE_ROOT, &triple)];
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
            Outcome::Disagrees(a, why) => {
                return ClaimResult::failed(id, params, why).witness(Witness::Values(a));
            }
        }
    }
    ClaimResult::new(id, params, true)
}
