use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::VarietyInstance;
use crate::error::{Error, Result};
use crate::gf::{hermitian_constants, HermitianConstants};
use crate::limits::Limits;
use crate::mpoly::{Monomial, MonomialOrder, PolyRing, Polynomial, WeightMatrix};
use crate::orderdomain::Presentation;

/// Rational point counts of the Hermitian hypersurface of dimension `r`
/// over `GF(q^2)`: projective, on the hyperplane `X_0 = 0`, and affine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermitianCounts {
    pub projective: u64,
    pub at_infinity: u64,
    pub affine: u64,
}

fn projective_count(r: u32, q: u64) -> u64 {
    let sign: i128 = if (r + 1).is_multiple_of(2) { 1 } else { -1 };
    let q = q as i128;
    let num = (q.pow(r + 2) + sign) * (q.pow(r + 1) - sign);
    (num / (q * q - 1)) as u64
}

pub fn hermitian_counts(r: u32, q: u64) -> HermitianCounts {
    let projective = projective_count(r, q);
    let at_infinity = if r == 0 { 0 } else { projective_count(r - 1, q) };
    HermitianCounts { projective, at_infinity, affine: projective - at_infinity }
}

fn check_dimension(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::Invalid("Hermitian dimension must be at least 1".into()));
    }
    Ok(())
}

/// `X_0^(q+1) + ... + X_(r+1)^(q+1)` in `P^(r+1)` over `GF(q^2)`, with the
/// chart `X_0 = 1` and the transverse presentation attached.
pub fn hermitian_projective(r: u32, q: u32, limits: &Limits) -> Result<VarietyInstance> {
    check_dimension(r)?;
    let c = hermitian_constants(q)?;
    let ring = PolyRing::new(c.field.clone(), (0..=r + 1).map(|i| format!("X{i}")));
    let n = ring.nvars();
    let f = Polynomial::from_terms(&ring, (0..n).map(|i| (Monomial::var(n, i, q + 1), c.field.one())))?;
    let (affine_ring, affine) = VarietyInstance::dehomogenize(&ring, std::slice::from_ref(&f), 0);
    let counts = hermitian_counts(r, q as u64);
    Ok(VarietyInstance {
        name: format!("herm:{r}:{q}"),
        field: c.field.clone(),
        projective_ring: ring,
        homogeneous: vec![f],
        chart_variable: 0,
        affine_ring,
        affine,
        presentation: Some(presentation_from(&c, r, limits)?),
        expected_projective_points: Some(counts.projective),
        expected_affine_points: Some(counts.affine),
    })
}

/// The presentation obtained from a flag of hyperplane sections ending in a
/// tangent line. For `r >= 2` the variables are `X_1..X_(r-1), U, X_(r+1)`
/// with `X_r = delta X_(r-1) - U`, and the generator is
/// `X_(r+1)^(q+1) + sum_(j <= r-2) X_j^(q+1) - delta^q X_(r-1)^q U
///  - delta X_(r-1) U^q + U^(q+1) + 1`.
/// For `r = 1` the chart is `U = 1` in variables `X_0, X_2`.
pub fn hermitian_presentation(r: u32, q: u32, limits: &Limits) -> Result<Presentation> {
    check_dimension(r)?;
    presentation_from(&hermitian_constants(q)?, r, limits)
}

fn presentation_from(c: &HermitianConstants, r: u32, limits: &Limits) -> Result<Presentation> {
    let f = &c.field;
    let q = c.q;
    let delta = c.delta;
    let delta_q = f.pow(delta, q as i64)?;
    let minus = |x| f.neg(x);
    let (ring, gen, weights, lift) = if r == 1 {
        let ring = PolyRing::new(f.clone(), ["X0", "X2"]);
        // X_1 = delta X_0 - U substituted, then U = 1
        let g = Polynomial::from_terms(
            &ring,
            [
                (Monomial::new(vec![0, q + 1]), f.one()),
                (Monomial::new(vec![q, 0]), minus(delta_q)),
                (Monomial::new(vec![1, 0]), minus(delta)),
                (Monomial::new(vec![0, 0]), f.one()),
            ],
        )?;
        let w = WeightMatrix::new(vec![vec![q as u64 + 1, q as u64]])?;
        (ring, g, w, "chart U = 1 of the tangent line; weights (q+1, q)".to_string())
    } else {
        let r = r as usize;
        let mut names: Vec<String> = (1..r).map(|i| format!("X{i}")).collect();
        names.push("U".into());
        names.push(format!("X{}", r + 1));
        let ring = PolyRing::new(f.clone(), names);
        let s = r + 1;
        let (xr1, u, top) = (r - 2, r - 1, r);
        let mut terms = vec![
            (Monomial::var(s, top, q + 1), f.one()),
            (Monomial::var(s, xr1, q).mul(&Monomial::var(s, u, 1)), minus(delta_q)),
            (Monomial::var(s, xr1, 1).mul(&Monomial::var(s, u, q)), minus(delta)),
            (Monomial::var(s, u, q + 1), f.one()),
            (Monomial::one(s), f.one()),
        ];
        for j in 0..r - 2 {
            terms.push((Monomial::var(s, j, q + 1), f.one()));
        }
        let g = Polynomial::from_terms(&ring, terms)?;
        let q1 = q as u64 + 1;
        let mut rows = vec![vec![1u64; s]];
        for i in 0..r - 2 {
            rows.push((0..s).map(|j| if j == i { 0 } else { 1 }).collect());
        }
        rows.push(
            (0..s)
                .map(|j| {
                    if j == u {
                        0
                    } else if j == top {
                        q1 - 1
                    } else {
                        q1
                    }
                })
                .collect(),
        );
        let w = WeightMatrix::new(rows)?;
        (ring, g, w, "value (a, b_1..b_(r-1)) lifted to (a, a+b_1, .., a+b_(r-2), (q+1)a+b_(r-1))".to_string())
    };
    let s = ring.nvars();
    let mut indicator = vec![0u64; s];
    indicator[s - 1] = 1;
    let tie = MonomialOrder::weight(WeightMatrix::new(vec![indicator])?, MonomialOrder::Lex);
    let mut p = Presentation::with_limits(format!("herm:{r}:{q}"), ring, vec![gen], weights, tie, limits)?;
    p.add_note("lift", lift);
    p.add_note("delta", f.render(delta));
    p.verified(None, limits)
}

fn tangent_ring(dim: u32, c: &HermitianConstants) -> Result<(Arc<PolyRing>, Polynomial)> {
    let f = &c.field;
    let q = c.q;
    let minus_one = f.neg(f.one());
    match dim {
        1 => {
            let ring = PolyRing::new(f.clone(), ["X", "Y"]);
            let g = Polynomial::from_terms(
                &ring,
                [
                    (Monomial::new(vec![q + 1, 0]), f.one()),
                    (Monomial::new(vec![0, q]), minus_one),
                    (Monomial::new(vec![0, 1]), minus_one),
                ],
            )?;
            Ok((ring, g))
        }
        2 => {
            let ring = PolyRing::new(f.clone(), ["X", "X1", "Y"]);
            let g = Polynomial::from_terms(
                &ring,
                [
                    (Monomial::new(vec![q + 1, 0, 0]), f.one()),
                    (Monomial::new(vec![0, q + 1, 0]), f.one()),
                    (Monomial::new(vec![0, 0, q]), minus_one),
                    (Monomial::new(vec![0, 0, 1]), minus_one),
                ],
            )?;
            Ok((ring, g))
        }
        _ => Err(Error::Invalid(format!("tangent forms are provided for dimension 1 and 2, not {dim}"))),
    }
}

/// `X^(q+1) - Y^q - Y` with weights `(q, q+1)`, or
/// `X^(q+1) + X_1^(q+1) - Y^q - Y` with weights `[[q, 0, q+1], [0, 1, 0]]`,
/// both ordered with lex as tie-break.
pub fn hermitian_tangent_presentation(dim: u32, q: u32, limits: &Limits) -> Result<Presentation> {
    let c = hermitian_constants(q)?;
    tangent_presentation_from(&c, dim, limits)
}

fn tangent_presentation_from(c: &HermitianConstants, dim: u32, limits: &Limits) -> Result<Presentation> {
    let (ring, g) = tangent_ring(dim, c)?;
    let q = c.q as u64;
    let weights = if dim == 1 {
        WeightMatrix::new(vec![vec![q, q + 1]])?
    } else {
        WeightMatrix::new(vec![vec![q, 0, q + 1], vec![0, 1, 0]])?
    };
    Presentation::with_limits(
        format!("herm-tangent:{dim}:{}", c.q),
        ring,
        vec![g],
        weights,
        MonomialOrder::Lex,
        limits,
    )?
    .verified(None, limits)
}

/// The tangent-form models as varieties: homogenized with `Z`, chart `Z = 1`.
pub fn hermitian_tangent(dim: u32, q: u32, limits: &Limits) -> Result<VarietyInstance> {
    let c = hermitian_constants(q)?;
    let presentation = tangent_presentation_from(&c, dim, limits)?;
    let f = &c.field;
    let minus_one = f.neg(f.one());
    let qq = q;
    let (ring, homogeneous) = if dim == 1 {
        let ring = PolyRing::new(f.clone(), ["X", "Y", "Z"]);
        let g = Polynomial::from_terms(
            &ring,
            [
                (Monomial::new(vec![qq + 1, 0, 0]), f.one()),
                (Monomial::new(vec![0, qq, 1]), minus_one),
                (Monomial::new(vec![0, 1, qq]), minus_one),
            ],
        )?;
        (ring, g)
    } else {
        let ring = PolyRing::new(f.clone(), ["X", "X1", "Y", "Z"]);
        let g = Polynomial::from_terms(
            &ring,
            [
                (Monomial::new(vec![qq + 1, 0, 0, 0]), f.one()),
                (Monomial::new(vec![0, qq + 1, 0, 0]), f.one()),
                (Monomial::new(vec![0, 0, qq, 1]), minus_one),
                (Monomial::new(vec![0, 0, 1, qq]), minus_one),
            ],
        )?;
        (ring, g)
    };
    let chart = ring.nvars() - 1;
    let (affine_ring, affine) = VarietyInstance::dehomogenize(&ring, std::slice::from_ref(&homogeneous), chart);
    let q = q as u64;
    let counts = hermitian_counts(dim, q);
    Ok(VarietyInstance {
        name: format!("herm-tangent:{dim}:{qq}"),
        field: f.clone(),
        projective_ring: ring,
        homogeneous: vec![homogeneous],
        chart_variable: chart,
        affine_ring,
        affine,
        presentation: Some(presentation),
        expected_projective_points: Some(counts.projective),
        expected_affine_points: Some(q.pow(2 * dim + 1)),
    })
}
