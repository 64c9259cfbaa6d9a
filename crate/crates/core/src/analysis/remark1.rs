use std::collections::BTreeSet;

use rand::Rng;

use super::sampling::{unit_rng, SAMPLE_RANGE};
use super::{a_point, coefficients_from_roots, ClaimResult, Params, Witness};
use crate::par;
use crate::polyring::Coeff;
use crate::registry::REMARK1_PRODUCT;
use crate::resultant::discriminant_r;

/// `∏_{i<j} (x_i − x_j)²`.
pub fn squared_difference_product(roots: &[Coeff]) -> Coeff {
    let mut acc = Coeff::one();
    for (i, r) in roots.iter().enumerate() {
        for s in &roots[i + 1..] {
            let d = r - s;
            acc *= &(&d * &d);
        }
    }
    acc
}

/// Samples distinct integer roots and checks `|R(a)| = ∏ (x_i − x_j)²` with
/// one sign per `n`. The witness is `[sign]` when the check passes.
pub fn check_remark1(n: usize, samples: usize, seed: u64) -> Vec<ClaimResult> {
    let params = Params::n(n).with("samples", samples);
    let r = match discriminant_r(n) {
        Ok(r) => r,
        Err(e) => return vec![ClaimResult::failed(REMARK1_PRODUCT, params, e.to_string())],
    };
    let outcomes = par::map_range(samples, |index| {
        let mut rng = unit_rng(seed, REMARK1_PRODUCT, n, index);
        let mut roots = BTreeSet::new();
        while roots.len() < n {
            roots.insert(rng.random_range(-SAMPLE_RANGE..=SAMPLE_RANGE));
        }
        let roots: Vec<Coeff> = roots.into_iter().map(Coeff::from).collect();
        let value = r.evaluate(&a_point(&coefficients_from_roots(&roots))).expect("R involves only a_j");
        let product = squared_difference_product(&roots);
        if value.abs() != product || product.is_zero() {
            return Err((roots, value, product));
        }
        Ok(if value.is_negative() { -1 } else { 1 })
    });
    let mut signs = BTreeSet::new();
    for outcome in &outcomes {
        match outcome {
            Ok(s) => {
                signs.insert(*s);
            }
            Err((roots, value, product)) => {
                let roots: Vec<String> = roots.iter().map(Coeff::to_string).collect();
                let note = format!("roots ({}): R = {value}, product = {product}", roots.join(", "));
                return vec![ClaimResult::failed(REMARK1_PRODUCT, params, note)];
            }
        }
    }
    match signs.len() {
        0 => vec![ClaimResult::new(REMARK1_PRODUCT, params, true).note("no samples")],
        1 => {
            let s = *signs.first().unwrap();
            vec![ClaimResult::new(REMARK1_PRODUCT, params, true)
                .note(format!("sign {s:+}"))
                .witness(Witness::Values(vec![Coeff::from(s)]))]
        }
        _ => vec![ClaimResult::failed(REMARK1_PRODUCT, params, "sign varies between samples")],
    }
}
