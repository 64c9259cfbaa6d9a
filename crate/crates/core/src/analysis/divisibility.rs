use std::collections::BTreeMap;

use super::{ClaimResult, Params, Witness};
use crate::par;
use crate::polyring::VarId;
use crate::registry::*;
use crate::resultant::d_tilde;

/// Exact `a_i`-orders of `D̃_k` for every `k`: order 0 in the variables of
/// parts (1) and (2), order `n−k−1` in `a_n` for `k ≤ n−2`, order 1 for
/// `k = n−1`. A declared-degree mismatch while building `D̃_k` is a failure.
pub fn check_divisibility(n: usize) -> Vec<ClaimResult> {
    par::map_range(n, |i| per_index(n, i + 1)).into_iter().flatten().collect()
}

fn per_index(n: usize, k: usize) -> Vec<ClaimResult> {
    let params = Params::nk(n, k);
    let coprime_id = if k == n { DIV_PART2 } else { DIV_PART1 };
    let d = match d_tilde(n, k) {
        Ok(d) => d,
        Err(e) => return vec![ClaimResult::failed(coprime_id, params, e.to_string())],
    };
    let order = |v: VarId| d.divisibility_order(v);

    let coprime_vars: Vec<VarId> = (1..n).filter(|&i| i != k).map(VarId::a).collect();
    let mut orders = BTreeMap::new();
    let mut failure = None;
    for &v in &coprime_vars {
        match order(v) {
            Ok(o) => {
                orders.insert(v, o);
            }
            Err(e) => failure = Some(e.to_string()),
        }
    }
    let coprime = match failure {
        Some(e) => ClaimResult::failed(coprime_id, params.clone(), e),
        None => {
            let bad: Vec<String> = orders.iter().filter(|(_, &o)| o > 0).map(|(v, o)| format!("{v}^{o}")).collect();
            ClaimResult::new(coprime_id, params.clone(), bad.is_empty())
                .note(if bad.is_empty() { String::new() } else { format!("divisible by {}", bad.join(", ")) })
                .witness(Witness::Orders(orders))
        }
    };
    if k == n {
        return vec![coprime];
    }

    let (an_id, expected) = if k + 1 == n { (DIV_PART4, 1) } else { (DIV_PART3, (n - k - 1) as u32) };
    let an = VarId::a(n);
    let an_claim = match order(an) {
        Ok(o) => ClaimResult::new(an_id, params, o == expected)
            .note(format!("order {o}, expected {expected}"))
            .witness(Witness::Orders([(an, o)].into())),
        Err(e) => ClaimResult::failed(an_id, params, e.to_string()),
    };
    vec![coprime, an_claim]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_orders() {
        let results = check_divisibility(3);
        for r in &results {
            assert!(r.passed, "{r}");
        }
        let ids: Vec<_> = results.iter().map(|r| (r.claim_id.as_str(), r.params.k)).collect();
        assert_eq!(
            ids,
            [
                (DIV_PART1, Some(1)),
                (DIV_PART3, Some(1)),
                (DIV_PART1, Some(2)),
                (DIV_PART4, Some(2)),
                (DIV_PART2, Some(3)),
            ]
        );
    }
}
