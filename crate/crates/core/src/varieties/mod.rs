//! Hermitian hypersurfaces, Grassmannians and the flag varieties
//! `F(1, n-1; n)`, with rational-point enumeration.

mod flag;
pub mod golden;
mod grassmann;
mod hermitian;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::limits::Limits;
use crate::mpoly::{PolyRing, Polynomial};
use crate::orderdomain::Presentation;

pub use flag::{flag_presentation, FlagData, LatticeH};
pub use grassmann::{gaussian_binomial, grassmann_points, grassmann_presentation, grassmannian_data, GrassmannianData};
pub use hermitian::{
    hermitian_counts, hermitian_presentation, hermitian_projective, hermitian_tangent, hermitian_tangent_presentation,
    HermitianCounts,
};

/// A variety with its projective model, one affine chart and, when known, an
/// order-domain presentation and expected point counts.
#[derive(Clone, Debug)]
pub struct VarietyInstance {
    pub name: String,
    pub field: Arc<Field>,
    pub projective_ring: Arc<PolyRing>,
    pub homogeneous: Vec<Polynomial>,
    /// Index in the projective ring of the variable set to 1.
    pub chart_variable: usize,
    pub affine_ring: Arc<PolyRing>,
    pub affine: Vec<Polynomial>,
    pub presentation: Option<Presentation>,
    pub expected_projective_points: Option<u64>,
    pub expected_affine_points: Option<u64>,
}

impl VarietyInstance {
    /// Affine ideal obtained by setting the chart variable to 1.
    pub(crate) fn dehomogenize(
        projective_ring: &Arc<PolyRing>,
        homogeneous: &[Polynomial],
        chart: usize,
    ) -> (Arc<PolyRing>, Vec<Polynomial>) {
        let vars: Vec<String> =
            projective_ring.vars().iter().enumerate().filter(|(i, _)| *i != chart).map(|(_, v)| v.clone()).collect();
        let affine_ring = PolyRing::new(projective_ring.field().clone(), vars);
        let n = affine_ring.nvars();
        let images: Vec<Polynomial> = (0..projective_ring.nvars())
            .map(|i| match i.cmp(&chart) {
                std::cmp::Ordering::Less => Polynomial::var(&affine_ring, i),
                std::cmp::Ordering::Equal => Polynomial::one(&affine_ring),
                std::cmp::Ordering::Greater => Polynomial::var(&affine_ring, i - 1),
            })
            .collect();
        debug_assert_eq!(n + 1, projective_ring.nvars());
        let affine = homogeneous.iter().map(|g| g.compose(&affine_ring, &images).unwrap()).collect();
        (affine_ring, affine)
    }
}

/// Distinct affine points, in lexicographic order of coordinate codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub field: Arc<Field>,
    pub dim: usize,
    pub points: Vec<Vec<FieldElement>>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub(crate) fn raw(&self) -> Vec<Vec<u32>> {
        self.points.iter().map(|p| p.iter().map(|x| x.value()).collect()).collect()
    }

    /// Each point as a list of coefficient vectors.
    pub fn to_json(&self) -> PointSetJson {
        PointSetJson {
            field: self.field.spec().clone(),
            dim: self.dim,
            points: self.points.iter().map(|p| p.iter().map(|&x| self.field.coeffs(x)).collect()).collect(),
        }
    }

    /// Reorders points; `perm[j]` is the old index of the new `j`-th point.
    pub fn permuted(&self, perm: &[usize]) -> PointSet {
        PointSet {
            field: self.field.clone(),
            dim: self.dim,
            points: perm.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetJson {
    pub field: crate::gf::FieldSpec,
    pub dim: usize,
    pub points: Vec<Vec<Vec<u32>>>,
}

/// All points of the chart of `v`.
pub fn rational_points(v: &VarietyInstance, limits: &Limits) -> Result<PointSet> {
    affine_points(&v.affine_ring, &v.affine, limits)
}

/// Affine `F`-points of `V(ideal)`. Coordinates are assigned in variable
/// order and each generator is tested as soon as all its variables are set;
/// the first coordinate is split across worker threads.
pub fn affine_points(ring: &Arc<PolyRing>, ideal: &[Polynomial], limits: &Limits) -> Result<PointSet> {
    if ideal.iter().any(|g| **g.ring() != **ring) {
        return Err(Error::RingMismatch);
    }
    let field = ring.field().clone();
    let s = ring.nvars();
    let q = field.size() as u64;
    let candidates = q.checked_pow(s as u32).unwrap_or(u64::MAX);
    if candidates > limits.max_points {
        return Err(Error::Ceiling(format!("{q}^{s} candidate points exceed the limit {}", limits.max_points)));
    }
    // generators grouped by the last variable they involve
    let mut by_depth: Vec<Vec<&Polynomial>> = vec![Vec::new(); s + 1];
    for g in ideal {
        if g.is_zero() {
            continue;
        }
        let last = g
            .support()
            .flat_map(|m| m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1))
            .max()
            .unwrap_or(0);
        by_depth[last].push(g);
    }
    if by_depth[0].iter().any(|g| !g.terms().next().unwrap().1.is_zero()) {
        return Ok(PointSet { field, dim: s, points: Vec::new() });
    }
    let walk = |first: Option<u32>| -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; s];
        descend(&field, &by_depth, &mut cur, 0, first, &mut out);
        out
    };
    let raw: Vec<Vec<u32>> = if s == 0 {
        walk(None)
    } else {
        (0..field.size()).into_par_iter().map(|a| walk(Some(a))).collect::<Vec<_>>().concat()
    };
    let points = raw.into_iter().map(|p| p.into_iter().map(|c| field.element(c).unwrap()).collect()).collect();
    Ok(PointSet { field, dim: s, points })
}

fn descend(
    field: &Field,
    by_depth: &[Vec<&Polynomial>],
    cur: &mut Vec<u32>,
    depth: usize,
    first: Option<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if depth == cur.len() {
        out.push(cur.clone());
        return;
    }
    let range = match (depth, first) {
        (0, Some(a)) => a..a + 1,
        _ => 0..field.size(),
    };
    for x in range {
        cur[depth] = x;
        if by_depth[depth + 1].iter().all(|g| g.evaluate_raw(cur) == 0) {
            descend(field, by_depth, cur, depth + 1, first, out);
        }
    }
    cur[depth] = 0;
}
