use super::*;
use crate::gf::build_field;
use crate::varieties::{affine_points, hermitian_presentation, hermitian_tangent, rational_points};

fn limits() -> Limits {
    Limits::default()
}

fn hermitian_c1(r: u32, q: u32) -> EvaluationCode {
    let p = hermitian_presentation(r, q, &limits()).unwrap();
    let pts = affine_points(p.ring(), p.ideal(), &limits()).unwrap();
    c_a_code(&p, &pts, 1, &limits()).unwrap()
}

#[test]
fn repetition_code() {
    let f = build_field(3, 1).unwrap();
    let pts = PointSet { field: f.clone(), dim: 1, points: f.elements().map(|x| vec![x]).collect() };
    let c = evaluation_code(&pts, &[Monomial::one(1)], &f).unwrap();
    assert_eq!((c.length(), c.dimension()), (3, 1));
    assert_eq!(c.evaluation_matrix().row(0), vec![f.one(); 3]);
    assert_eq!(min_distance(&c, &limits()).unwrap(), 3);
}

#[test]
fn reed_solomon_distance() {
    // Monomials 1, x, x^2 on GF(7) give the [7, 3, 5] Reed-Solomon code.
    let f = build_field(7, 1).unwrap();
    let pts = PointSet { field: f.clone(), dim: 1, points: f.elements().map(|x| vec![x]).collect() };
    let ms: Vec<Monomial> = (0..3).map(|e| Monomial::new(vec![e])).collect();
    let c = evaluation_code(&pts, &ms, &f).unwrap();
    assert_eq!(c.params(), (7, 3, None));
    assert_eq!(min_distance(&c, &limits()).unwrap(), 5);
    let h = dual_code(&c);
    assert_eq!(h.rows(), 4);
    assert!(c.generator_matrix().mul(&h.transpose()).unwrap().is_zero());
}

#[test]
fn class_messages_enumerate_each_line_once() {
    for (q, k) in [(2u64, 3usize), (3, 2), (4, 3)] {
        let n = scalar_classes(q, k).unwrap();
        let mut seen = std::collections::HashSet::new();
        for i in 0..n {
            let m = class_message(i, q, k);
            assert_eq!(m.iter().find(|&&c| c != 0), Some(&1));
            assert!(seen.insert(m));
        }
        assert_eq!(seen.len() as u64 * (q - 1) + 1, q.pow(k as u32));
    }
}

#[test]
fn hermitian_surface_q2() {
    let c = hermitian_c1(2, 2);
    assert_eq!((c.length(), c.dimension()), (36, 4));
    assert_eq!(min_distance(&c, &limits()).unwrap(), 24);
    assert_eq!(dual_code(&c).rows(), 32);
    assert_eq!(griesmer_bound(4, 24, 4), 33);
}

#[test]
fn c_a_agrees_with_first_monomials() {
    let p = hermitian_presentation(2, 3, &limits()).unwrap();
    let pts = affine_points(p.ring(), p.ideal(), &limits()).unwrap();
    for a in 0..=3u32 {
        let ca = c_a_code(&p, &pts, a, &limits()).unwrap();
        let count = crate::mpoly::monomial::binomial(a as u128 + 3, a as u128) as usize;
        assert_eq!(ca.monomials().len(), count);
        let first = first_ell_code(&p, &pts, count, &limits()).unwrap();
        let mut x = ca.monomials().to_vec();
        let mut y = first.monomials().to_vec();
        x.sort();
        y.sort();
        assert_eq!(x, y, "a = {a}");
    }
    let c2 = c_a_code(&p, &pts, 2, &limits()).unwrap();
    assert_eq!(c2.dimension(), c2.evaluation_matrix().rank());
    assert_eq!(c2.dimension(), 10);
}

#[test]
fn predicted_parameters() {
    assert_eq!(hermitian_predicted_params(2, 2), (36, 4, 24));
    assert_eq!(hermitian_predicted_params(3, 2), (120, 5, 84));
    assert_eq!(hermitian_predicted_params(4, 2), (528, 6, 384));
    assert_eq!(hermitian_predicted_params(2, 3), (252, 4, 216));
}

#[test]
fn griesmer_values() {
    assert_eq!(griesmer_bound(1, 17, 5), 17);
    assert_eq!(griesmer_bound(7, 1488, 4), 1986);
}

#[test]
fn over_ceiling_is_an_error() {
    let c = hermitian_c1(2, 2);
    let tight = Limits { max_codewords: 100, ..limits() };
    assert!(matches!(min_distance(&c, &tight), Err(Error::Ceiling(_))));
    assert_eq!(compute_distance(&c, &tight).unwrap(), None);
    let b = distance_bounds(&c, 200, 0);
    assert!(b.lower <= 24 && 24 <= b.upper);
}

#[test]
fn orbits_on_tangent_surface() {
    for (q, big, small) in [(2u32, 10usize, 2usize), (3, 30, 1)] {
        let v = hermitian_tangent(2, q, &limits()).unwrap();
        let pts = rational_points(&v, &limits()).unwrap();
        let o = orbit_decomposition(&pts, q).unwrap();
        let qq = q as usize;
        assert_eq!(o.histogram[&(qq * qq - 1)], big);
        if q == 3 {
            assert_eq!(o.histogram[&2], small);
            assert_eq!(o.histogram[&1], 1);
        } else {
            assert_eq!(o.histogram[&1], small);
        }
        let total: usize = o.orbits.iter().map(Vec::len).sum();
        assert_eq!(total, pts.len());
        assert!(o.histogram.keys().all(|s| (o.group_order as usize).is_multiple_of(*s)));
    }
}

#[test]
fn identity_map_gives_singletons() {
    let v = hermitian_tangent(2, 2, &limits()).unwrap();
    let pts = rational_points(&v, &limits()).unwrap();
    let one = pts.field.one();
    let o = orbit_decomposition_with(&pts, &[one, one, one], "identity").unwrap();
    assert_eq!(o.histogram.get(&1), Some(&32));
}

#[test]
fn bundle_serialization() {
    let mut c = hermitian_c1(2, 2);
    let d = compute_distance(&c, &limits()).unwrap().unwrap();
    c.set_distance(d);
    let j = serde_json::to_string(&c.to_json("herm:2:2")).unwrap();
    let back: CodeBundleJson = serde_json::from_str(&j).unwrap();
    assert_eq!(back.params.distance.and_then(|d| d.exact()), Some(24));
    assert_eq!(back.generator.len(), 4);
    assert_eq!(c.generator_text().lines().count(), 36);
}
