use super::*;
use crate::gf::build_field;

fn surface_q2() -> Presentation {
    let f = build_field(2, 2).unwrap();
    let r = PolyRing::new(f, ["X1", "U", "X3"]);
    let g = Polynomial::from_int_terms(
        &r,
        &[(vec![0, 0, 3], 1), (vec![2, 1, 0], 1), (vec![1, 2, 0], 1), (vec![0, 3, 0], 1), (vec![0, 0, 0], 1)],
    )
    .unwrap();
    let m = WeightMatrix::new(vec![vec![1, 1, 1], vec![3, 0, 2]]).unwrap();
    let tie = MonomialOrder::weight(WeightMatrix::new(vec![vec![0, 0, 1]]).unwrap(), MonomialOrder::Lex);
    Presentation::new("surface", r, vec![g], m, tie).unwrap().verified(Some(10), &Limits::default()).unwrap()
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

#[test]
fn weights_of_monomials() {
    let m = WeightMatrix::new(vec![vec![1, 1, 1], vec![3, 0, 2]]).unwrap();
    assert_eq!(m_weight(&mono(&[1, 0, 0]), &m).unwrap(), vec![1, 3]);
    assert_eq!(m_weight(&mono(&[0, 0, 0]), &m).unwrap(), vec![0, 0]);
    assert_eq!(m_weight(&mono(&[0, 3, 0]), &m).unwrap(), vec![3, 0]);
    assert!(m_weight(&mono(&[1, 0]), &m).is_err());
}

#[test]
fn surface_passes_with_the_expected_pair() {
    let p = surface_q2();
    let r = p.report().unwrap();
    assert!(r.passed);
    assert_eq!(r.generators[0].max_weight_terms, vec![mono(&[0, 0, 3]), mono(&[2, 1, 0])]);
}

#[test]
fn surface_order_function_values() {
    let p = surface_q2();
    let ring = p.ring().clone();
    let x3 = Polynomial::var(&ring, 2);
    assert_eq!(rho(&x3, &p).unwrap(), OrderValue::Finite(vec![1, 2]));
    let c = Polynomial::constant(&ring, ring.field().generator_root());
    assert_eq!(rho(&c, &p).unwrap(), OrderValue::Finite(vec![0, 0]));
    let x1u = &Polynomial::var(&ring, 0) * &Polynomial::var(&ring, 1);
    assert_eq!(rho(&x1u, &p).unwrap(), OrderValue::Finite(vec![2, 3]));
    assert_eq!(rho(&Polynomial::zero(&ring), &p).unwrap(), OrderValue::NegInfinity);
}

#[test]
fn first_standard_monomials_of_the_surface() {
    let p = surface_q2();
    let l = standard_monomials(&p, StandardQuery::First(4), &Limits::default()).unwrap();
    assert_eq!(l, vec![mono(&[0, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 1]), mono(&[1, 0, 0])]);
    let first = standard_monomials(&p, StandardQuery::First(1), &Limits::default()).unwrap();
    assert_eq!(first, vec![mono(&[0, 0, 0])]);
    // both queries agree on an initial segment
    let by_degree = standard_monomials(&p, StandardQuery::DegreeAtMost(1), &Limits::default()).unwrap();
    assert_eq!(by_degree, l);
}

#[test]
fn unit_hyperbola_fails_condition_a() {
    let f = build_field(3, 1).unwrap();
    let r = PolyRing::new(f, ["X", "Y"]);
    let g = Polynomial::from_int_terms(&r, &[(vec![1, 1], 1), (vec![0, 0], -1)]).unwrap();
    let mut p = Presentation::new("xy-1", r, vec![g], WeightMatrix::new(vec![vec![1, 1]]).unwrap(), MonomialOrder::Lex)
        .unwrap();
    let rep = p.verify(None, &Limits::default()).unwrap().clone();
    assert!(!rep.passed && !rep.condition_a);
    let w = rep.witness.unwrap();
    assert!(matches!(&w, Witness::MaxWeightCount { count: 1, .. }));
    assert!(w.describe().contains("single max-weight monomial"));
    assert!(matches!(rho(&Polynomial::one(p.ring()), &p), Err(Error::NotVerified)));
}

#[test]
fn parabola_passes() {
    let f = build_field(3, 1).unwrap();
    let r = PolyRing::new(f, ["X", "Y"]);
    let g = Polynomial::from_int_terms(&r, &[(vec![1, 0], 1), (vec![0, 2], -1)]).unwrap();
    let p = Presentation::new("parabola", r, vec![g], WeightMatrix::new(vec![vec![2, 1]]).unwrap(), MonomialOrder::Lex)
        .unwrap()
        .verified(Some(10), &Limits::default())
        .unwrap();
    let rep = p.report().unwrap();
    assert_eq!(rep.footprint_checked, 11);
    let l = standard_monomials(&p, StandardQuery::DegreeAtMost(10), &Limits::default()).unwrap();
    assert!(l.iter().enumerate().all(|(b, m)| m.exponents() == [0, b as u32]));
}

#[test]
fn weight_collision_is_reported_lex_least() {
    // zero ideal with M = [[1, 1]]: X and Y collide first
    let f = build_field(2, 1).unwrap();
    let r = PolyRing::new(f, ["X", "Y"]);
    let mut p = Presentation::new("plane", r, vec![], WeightMatrix::new(vec![vec![1, 1]]).unwrap(), MonomialOrder::Lex)
        .unwrap();
    let rep = p.verify(Some(3), &Limits::default()).unwrap();
    assert_eq!(rep.witness, Some(Witness::WeightCollision { a: mono(&[0, 1]), b: mono(&[1, 0]), weight: vec![1] }));
}

#[test]
fn semigroup_two_three() {
    let s = SemigroupData::new(vec![vec![2], vec![3]]).unwrap();
    assert!(semigroup_membership(&[1], &s).is_none());
    assert_eq!(semigroup_membership(&[0], &s).unwrap().coefficients, vec![0, 0]);
    assert_eq!(semigroup_membership(&[7], &s).unwrap().coefficients, vec![2, 1]);
    assert_eq!(s.gaps(10).unwrap(), vec![1]);
    assert!(s.is_inverse_free());
}

#[test]
fn small_toric_ideals() {
    let f = build_field(5, 1).unwrap();
    let r = PolyRing::new(f, ["X1", "X2"]);
    let t = toric_ideal(&WeightMatrix::new(vec![vec![2, 3]]).unwrap(), &r).unwrap();
    let expect = Polynomial::from_int_terms(&r, &[(vec![3, 0], 1), (vec![0, 2], -1)]).unwrap();
    assert_eq!(t, vec![expect]);
    let id = WeightMatrix::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
    assert!(toric_ideal(&id, &r).unwrap().is_empty());
}

#[test]
fn surface_deforms_to_its_toric_ideal() {
    let p = surface_q2();
    let d = deform_to_toric(&p, &OmegaChoice::Auto, &Limits::default()).unwrap();
    assert_eq!(d.row_coefficients, Some(vec![1, 1]));
    assert_eq!(d.omega, Some(vec![4, 1, 3]));
    assert_eq!(d.limit_basis.len(), 1);
    let sup: Vec<_> = d.limit_basis[0].support().cloned().collect();
    assert_eq!(sup, vec![mono(&[0, 0, 3]), mono(&[2, 1, 0])]);
    assert!(d.supports_match && d.toric_match);
    // scaling omega leaves the special fibre unchanged
    let d2 = deform_to_toric(&p, &OmegaChoice::Given(vec![8, 2, 6]), &Limits::default()).unwrap();
    assert_eq!(d2.limit_basis, d.limit_basis);
}

#[test]
fn presentation_json_round_trip() {
    let p = surface_q2();
    let j = serde_json::to_string(&p.to_json()).unwrap();
    let back = Presentation::from_json(&serde_json::from_str(&j).unwrap(), &Limits::default()).unwrap();
    assert_eq!(back.groebner_basis(), p.groebner_basis());
    assert!(!back.is_verified());
}
