use std::collections::BTreeMap;

use disclab_core::polyring::{Coeff, Monomial, MultiPoly, VarId};
use proptest::prelude::*;

/// Polynomials in `a1..a4`, total degree at most 4, coefficients in [−9, 9].
fn poly() -> impl Strategy<Value = MultiPoly> {
    let term = (prop::collection::vec(0u32..=4, 4), -9i64..=9).prop_map(|(exps, c)| {
        let mut budget = 4u32;
        let pairs: Vec<(VarId, u32)> = exps
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                let e = e.min(budget);
                budget -= e;
                (VarId::a(i + 1), e)
            })
            .collect();
        (Monomial::from_pairs(pairs), Coeff::from(c))
    });
    prop::collection::vec(term, 0..6).prop_map(MultiPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
        prop_assert_eq!(f.mul(&MultiPoly::one()), f.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn leibniz_rule(f in poly(), g in poly(), i in 1usize..=4) {
        let v = VarId::a(i);
        let lhs = f.mul(&g).derivative(v);
        let rhs = f.derivative(v).mul(&g).add(&f.mul(&g.derivative(v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divide_undoes_multiply(f in poly(), g in nonzero_poly()) {
        prop_assert_eq!(f.mul(&g).exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn substitute_is_a_homomorphism(f in poly(), g in poly(), img1 in poly(), img3 in poly()) {
        let bindings: BTreeMap<VarId, MultiPoly> = [(VarId::a(1), img1), (VarId::a(3), img3)].into();
        let lhs = f.mul(&g).substitute(&bindings);
        let rhs = f.substitute(&bindings).mul(&g.substitute(&bindings));
        prop_assert_eq!(lhs, rhs);
        let sum = f.add(&g).substitute(&bindings);
        prop_assert_eq!(sum, f.substitute(&bindings).add(&g.substitute(&bindings)));
    }

    #[test]
    fn json_round_trip(f in poly()) {
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(MultiPoly::from_json_str(&text).unwrap(), f);
    }

    #[test]
    fn coeffs_in_var_reassemble(f in poly(), i in 1usize..=4) {
        let v = VarId::a(i);
        let cs = f.coeffs_in_var(v);
        prop_assert_eq!(MultiPoly::from_coeffs_in_var(v, &cs), f);
    }

    #[test]
    fn evaluate_respects_products(f in poly(), g in poly(), pt in prop::collection::vec(-5i64..=5, 4)) {
        let point: BTreeMap<VarId, Coeff> =
            pt.iter().enumerate().map(|(i, &x)| (VarId::a(i + 1), Coeff::from(x))).collect();
        let fg = f.mul(&g).evaluate(&point).unwrap();
        prop_assert_eq!(fg, f.evaluate(&point).unwrap() * g.evaluate(&point).unwrap());
    }
}
