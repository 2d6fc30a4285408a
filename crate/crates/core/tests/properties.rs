use std::cmp::Ordering;
use std::sync::Arc;

use odcodes::codes::{dual_code, evaluation_code, min_distance};
use odcodes::mpoly::json::{from_json, to_json};
use odcodes::mpoly::{buchberger_reduced, is_groebner_basis, normal_form, spoly};
use odcodes::orderdomain::toric_ideal;
use odcodes::varieties::{hermitian_presentation, PointSet};
use odcodes::{build_field, Field, Limits, Monomial, MonomialOrder, PolyRing, Polynomial, WeightMatrix};
use proptest::prelude::*;

fn gf(p: u32, m: u32) -> Arc<Field> {
    build_field(p, m).unwrap()
}

fn poly_strategy(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -3i64..=3), 1..=max_terms)
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::Grevlex),
        prop::collection::vec(prop::collection::vec(0u64..4, 3), 1..=2)
            .prop_map(|rows| { MonomialOrder::weight(WeightMatrix::new(rows).unwrap(), MonomialOrder::Grevlex) }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(p_m in prop::sample::select(vec![(2u32, 1u32), (3, 1), (2, 3), (3, 2), (5, 2)]), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = gf(p_m.0, p_m.1);
        let e = |v: u32| f.element(v % f.size()).unwrap();
        let (a, b, c) = (e(a), e(b), e(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        prop_assert_eq!(f.pow(a, f.size() as i64).unwrap(), a);
    }

    #[test]
    fn orders_are_total_and_multiplicative(order in orders(), a in prop::collection::vec(0u32..5, 3), b in prop::collection::vec(0u32..5, 3), c in prop::collection::vec(0u32..5, 3)) {
        let (a, b, c) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        let ab = order.cmp(&a, &b);
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(order.cmp(&b, &a), ab.reverse());
        prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert!(order.cmp(&a.mul(&c), &a) != Ordering::Less);
    }

    #[test]
    fn buchberger_output_is_reduced_groebner(order in orders(), gens in prop::collection::vec(poly_strategy(3, 2, 3), 1..=3)) {
        let ring = PolyRing::new(gf(5, 1), ["x", "y", "z"]);
        let gens: Vec<Polynomial> = gens.iter().map(|t| Polynomial::from_int_terms(&ring, t).unwrap()).collect();
        let gb = buchberger_reduced(&gens, &order).unwrap();
        prop_assert!(is_groebner_basis(&gb, &order).unwrap());
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let s = spoly(&gb[i], &gb[j], &order).unwrap();
                prop_assert!(normal_form(&s, &gb, &order).unwrap().is_zero());
            }
        }
        for g in &gens {
            prop_assert!(normal_form(g, &gb, &order).unwrap().is_zero());
        }
        for (i, g) in gb.iter().enumerate() {
            let (_, c) = g.leading_term(&order).unwrap();
            prop_assert_eq!(c, ring.field().one());
            let others: Vec<Polynomial> = gb.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
            prop_assert_eq!(&normal_form(g, &others, &order).unwrap(), g);
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(order in orders(), gens in prop::collection::vec(poly_strategy(3, 2, 3), 1..=2), f in poly_strategy(3, 4, 5), h in poly_strategy(3, 4, 5)) {
        let ring = PolyRing::new(gf(7, 1), ["x", "y", "z"]);
        let gens: Vec<Polynomial> = gens.iter().map(|t| Polynomial::from_int_terms(&ring, t).unwrap()).collect();
        let gb = buchberger_reduced(&gens, &order).unwrap();
        let f = Polynomial::from_int_terms(&ring, &f).unwrap();
        let h = Polynomial::from_int_terms(&ring, &h).unwrap();
        let nf = |p: &Polynomial| normal_form(p, &gb, &order).unwrap();
        prop_assert_eq!(nf(&nf(&f)), nf(&f));
        prop_assert_eq!(nf(&(&f + &h)), &nf(&f) + &nf(&h));
        if let Some(g) = gb.first() {
            prop_assert_eq!(nf(&(&f + &(&h * g))), nf(&f));
        }
    }

    #[test]
    fn toric_generators_are_tied_binomials(rows in prop::collection::vec(prop::collection::vec(1u64..4, 4), 1..=2)) {
        let ring = PolyRing::new(gf(3, 1), ["a", "b", "c", "d"]);
        let w = WeightMatrix::new(rows).unwrap();
        let gens = toric_ideal(&w, &ring).unwrap();
        for g in &gens {
            let sup: Vec<&Monomial> = g.support().collect();
            prop_assert_eq!(sup.len(), 2);
            prop_assert_eq!(w.weight(sup[0].exponents()), w.weight(sup[1].exponents()));
            let coeffs: Vec<_> = g.terms().map(|(_, c)| *c).collect();
            prop_assert_eq!(ring.field().add(coeffs[0], coeffs[1]), ring.field().zero());
        }
    }

    #[test]
    fn polynomial_json_round_trip(t in poly_strategy(3, 5, 6)) {
        let ring = PolyRing::new(gf(3, 2), ["x", "y", "z"]);
        let f = Polynomial::from_int_terms(&ring, &t).unwrap();
        let j = serde_json::to_string(&to_json(&f)).unwrap();
        let back = from_json(&serde_json::from_str(&j).unwrap(), Some(&ring)).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn permuting_points_keeps_parameters(perm in Just((0..36usize).collect::<Vec<_>>()).prop_shuffle()) {
        let l = Limits::default();
        let p = hermitian_presentation(2, 2, &l).unwrap();
        let pts = odcodes::varieties::affine_points(p.ring(), p.ideal(), &l).unwrap();
        let ms = odcodes::orderdomain::standard_monomials(&p, odcodes::orderdomain::StandardQuery::First(4), &l).unwrap();
        let a = evaluation_code(&pts, &ms, p.ring().field()).unwrap();
        let shuffled: PointSet = pts.permuted(&perm);
        let b = evaluation_code(&shuffled, &ms, p.ring().field()).unwrap();
        prop_assert_eq!(b.evaluation_matrix(), &a.evaluation_matrix().permute_columns(&perm));
        prop_assert_eq!(b.dimension(), a.dimension());
        prop_assert_eq!(min_distance(&b, &l).unwrap(), min_distance(&a, &l).unwrap());
        let h = dual_code(&b);
        prop_assert!(b.generator_matrix().mul(&h.transpose()).unwrap().is_zero());
        prop_assert_eq!(h.rows(), 36 - b.dimension());
    }
}
