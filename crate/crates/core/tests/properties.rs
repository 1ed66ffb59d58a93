//! Algebraic laws on random inputs.

use proptest::prelude::*;

use cyclohecke::affine::{self, AffineAlgebra, AffineElement, EpsilonOptions};
use cyclohecke::expr::{self, EvalContext, Expr};
use cyclohecke::hecke::{AkAlgebra, Exps, HeckeElement};
use cyclohecke::perm;
use cyclohecke::ring::RingElem;

fn coeff(m: usize) -> impl Strategy<Value = RingElem> {
    (prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), -2i32..=2, 0..=m).prop_map(move |(c, e, u)| {
        let mut ue = vec![0u16; m];
        if u > 0 {
            ue[u - 1] = 1;
        }
        RingElem::monomial(m, c, e, &ue)
    })
}

fn ring_elem(m: usize) -> impl Strategy<Value = RingElem> {
    prop::collection::vec(coeff(m), 0..4).prop_map(move |cs| cs.iter().fold(RingElem::zero(m), |acc, c| &acc + c))
}

/// Shapes kept small enough that a product takes milliseconds.
fn shape() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![(1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
}

fn hecke_elem(m: usize, r: usize, terms: usize) -> impl Strategy<Value = HeckeElement> {
    let n = perm::all_permutations(r).len();
    prop::collection::vec((0..n, prop::collection::vec(0..m as i64, r), coeff(m)), 0..=terms).prop_map(move |items| {
        let alg = AkAlgebra::new(m, r).unwrap();
        let ws = perm::all_permutations(r);
        alg.from_terms(items.into_iter().map(|(w, a, c)| (ws[w], Exps::from_slice(&a).unwrap(), c))).unwrap()
    })
}

fn affine_elem(m: usize, r: usize) -> impl Strategy<Value = AffineElement> {
    let n = perm::all_permutations(r).len();
    (0..n, prop::collection::vec(0..=m as i64, r), coeff(m)).prop_map(move |(w, a, c)| {
        let aff = AffineAlgebra::new(m, r).unwrap();
        aff.basis_element(perm::all_permutations(r)[w], Exps::from_slice(&a).unwrap(), c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn ring_is_a_commutative_ring(a in ring_elem(2), b in ring_elem(2), c in ring_elem(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ring_json_round_trip(a in ring_elem(3)) {
        let v = serde_json::to_value(&a).unwrap();
        prop_assert_eq!(RingElem::from_json(&v, 3).unwrap(), a);
    }

    #[test]
    fn multiplication_is_associative(
        (m, r, x, y, z) in shape().prop_flat_map(|(m, r)| (Just(m), Just(r), hecke_elem(m, r, 2), hecke_elem(m, r, 2), hecke_elem(m, r, 2)))
    ) {
        let alg = AkAlgebra::new(m, r).unwrap();
        let l = alg.multiply(&alg.multiply(&x, &y).unwrap(), &z).unwrap();
        let rr = alg.multiply(&x, &alg.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, rr);
    }

    #[test]
    fn multiplication_is_bilinear(
        (m, r, x, y, z) in shape().prop_flat_map(|(m, r)| (Just(m), Just(r), hecke_elem(m, r, 2), hecke_elem(m, r, 2), hecke_elem(m, r, 2)))
    ) {
        let alg = AkAlgebra::new(m, r).unwrap();
        let lhs = alg.multiply(&x, &y.add(&z)).unwrap();
        let rhs = alg.multiply(&x, &y).unwrap().add(&alg.multiply(&x, &z).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tau_is_an_anti_involution(
        (m, r, x, y) in shape().prop_flat_map(|(m, r)| (Just(m), Just(r), hecke_elem(m, r, 2), hecke_elem(m, r, 2)))
    ) {
        let alg = AkAlgebra::new(m, r).unwrap();
        prop_assert_eq!(alg.tau(&alg.multiply(&x, &y).unwrap()), alg.multiply(&alg.tau(&y), &alg.tau(&x)).unwrap());
        prop_assert_eq!(alg.tau(&alg.tau(&x)), x);
    }

    #[test]
    fn left_form_round_trip(
        (m, r, x) in shape().prop_flat_map(|(m, r)| (Just(m), Just(r), hecke_elem(m, r, 4)))
    ) {
        let alg = AkAlgebra::new(m, r).unwrap();
        prop_assert_eq!(alg.from_left_form(&alg.to_left_form(&x)), x);
    }

    #[test]
    fn element_json_round_trip(
        (_m, _r, x) in shape().prop_flat_map(|(m, r)| (Just(m), Just(r), hecke_elem(m, r, 4)))
    ) {
        prop_assert_eq!(HeckeElement::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn printed_elements_parse_back(
        (m, r, x) in shape().prop_flat_map(|(m, r)| (Just(m), Just(r), hecke_elem(m, r, 4)))
    ) {
        let ctx = EvalContext::cyclotomic(m, r).unwrap();
        let back = expr::eval_str(&x.to_string(), &ctx).unwrap();
        prop_assert_eq!(back, expr::Value::Hecke(x));
    }

    #[test]
    fn epsilon_is_multiplicative(
        (m, r, x, y) in prop::sample::select(vec![(2usize, 2usize), (2, 3), (3, 2)])
            .prop_flat_map(|(m, r)| (Just(m), Just(r), affine_elem(m, r), affine_elem(m, r)))
    ) {
        let h = AkAlgebra::new(m, r).unwrap();
        let aff = AffineAlgebra::new(m, r).unwrap();
        let o = EpsilonOptions::default();
        let lhs = affine::epsilon(&h, &aff.multiply(&x, &y).unwrap(), o).unwrap();
        let rhs = h.multiply(&affine::epsilon(&h, &x, o).unwrap(), &affine::epsilon(&h, &y, o).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..5).prop_map(|k| Expr::Int(k.into())),
        Just(Expr::Q),
        (1usize..=2).prop_map(Expr::U),
        (1usize..=2).prop_map(Expr::T),
        (1usize..=3).prop_map(Expr::L),
        Just(Expr::XLambda(vec![2, 1])),
        (0usize..=3).prop_map(Expr::Sigma),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), 0i64..3).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn printing_then_parsing_is_the_identity(e in expr_tree()) {
        let printed = e.to_string();
        let back = expr::parse(&printed).unwrap();
        prop_assert_eq!(&back, &e, "{}", printed);
        let ctx = EvalContext::cyclotomic(2, 3).unwrap();
        prop_assert_eq!(expr::eval(&back, &ctx).unwrap(), expr::eval(&e, &ctx).unwrap());
    }
}
