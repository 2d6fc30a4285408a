use odcodes::codes::{c_a_code, compute_distance, CodeBundleJson};
use odcodes::orderdomain::{rho, standard_monomials, OrderValue, PresentationJson, StandardQuery};
use odcodes::varieties::{affine_points, hermitian_presentation, hermitian_tangent_presentation};
use odcodes::{Limits, Polynomial, Presentation};

#[test]
fn presentation_survives_json() {
    let l = Limits::default();
    let p = hermitian_presentation(2, 3, &l).unwrap();
    let text = serde_json::to_string_pretty(&p.to_json()).unwrap();
    let j: PresentationJson = serde_json::from_str(&text).unwrap();
    let back = Presentation::from_json(&j, &l).unwrap().verified(None, &l).unwrap();
    assert_eq!(back.groebner_basis(), p.groebner_basis());
    assert_eq!(back.notes(), p.notes());
    assert_eq!(serde_json::to_string_pretty(&back.to_json()).unwrap(), text);
}

#[test]
fn rho_is_multiplicative_on_the_surface() {
    let l = Limits::default();
    let p = hermitian_tangent_presentation(2, 2, &l).unwrap();
    let ms = standard_monomials(&p, StandardQuery::First(8), &l).unwrap();
    let ring = p.ring();
    let one = ring.field().one();
    for a in &ms {
        for b in &ms {
            let fa = Polynomial::monomial(ring, a.clone(), one);
            let fb = Polynomial::monomial(ring, b.clone(), one);
            let prod = rho(&(&fa * &fb), &p).unwrap();
            assert_eq!(prod, rho(&fa, &p).unwrap().add(&rho(&fb, &p).unwrap()));
        }
    }
    assert_eq!(rho(&Polynomial::zero(ring), &p).unwrap(), OrderValue::NegInfinity);
}

#[test]
fn code_bundle_is_stable() {
    let l = Limits::default();
    let p = hermitian_presentation(3, 2, &l).unwrap();
    let pts = affine_points(p.ring(), p.ideal(), &l).unwrap();
    let mut c = c_a_code(&p, &pts, 1, &l).unwrap();
    c.set_distance(compute_distance(&c, &l).unwrap().unwrap());
    let a = serde_json::to_string(&c.to_json("herm:3:2")).unwrap();
    let b: CodeBundleJson = serde_json::from_str(&a).unwrap();
    assert_eq!((b.params.n, b.params.k), (120, 5));
    assert_eq!(serde_json::to_string(&b).unwrap(), a);
}
