//! Evaluation codes on the rational points of a presentation, exact minimum
//! distance by exhaustive search, duals and the orbit decomposition of the
//! Hermitian tangent-form surface.

mod orbits;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldSpec};
use crate::limits::Limits;
use crate::matrix::Matrix;
use crate::mpoly::Monomial;
use crate::orderdomain::{standard_monomials, Presentation, StandardQuery};
use crate::varieties::PointSet;

pub use orbits::{orbit_decomposition, orbit_decomposition_with, OrbitDecomposition};

/// How a minimum distance was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    Exhaustive,
    Bound,
}

/// Minimum distance or an interval containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distance {
    pub method: DistanceMethod,
    pub lower: usize,
    pub upper: usize,
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        (self.method == DistanceMethod::Exhaustive).then_some(self.lower)
    }
}

/// `C(P, L)`: rows are monomials, columns are points.
#[derive(Clone, Debug)]
pub struct EvaluationCode {
    field: Arc<Field>,
    points: PointSet,
    monomials: Vec<Monomial>,
    evaluation: Matrix,
    generator: Matrix,
    distance: Option<Distance>,
}

impl EvaluationCode {
    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Entry `(i, j)` is monomial `i` at point `j`.
    pub fn evaluation_matrix(&self) -> &Matrix {
        &self.evaluation
    }

    /// Reduced row-echelon form of the evaluation matrix, zero rows dropped.
    pub fn generator_matrix(&self) -> &Matrix {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn distance(&self) -> Option<&Distance> {
        self.distance.as_ref()
    }

    pub fn set_distance(&mut self, d: Distance) {
        self.distance = Some(d);
    }

    /// `(n, k, d)` once the distance is known exactly.
    pub fn params(&self) -> (usize, usize, Option<usize>) {
        (self.length(), self.dimension(), self.distance.as_ref().and_then(Distance::exact))
    }

    /// Evaluation vector of `sum c_i m_i`; `coefficients` follows `monomials()`.
    pub fn encode_polynomial(&self, coefficients: &[crate::gf::FieldElement]) -> Result<Vec<crate::gf::FieldElement>> {
        if coefficients.len() != self.monomials.len() {
            return Err(Error::Dimension("one coefficient per monomial".into()));
        }
        let row = Matrix::from_rows(self.field.clone(), &[coefficients.to_vec()])?;
        Ok(row.mul(&self.evaluation)?.row(0))
    }

    /// One generator-matrix column per line, in point order.
    pub fn generator_text(&self) -> String {
        let g = &self.generator;
        let mut out = String::new();
        for c in 0..g.cols() {
            let col: Vec<String> = (0..g.rows()).map(|r| self.field.render(g.get(r, c))).collect();
            out.push_str(&col.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, points_ref: &str) -> CodeBundleJson {
        let f = &self.field;
        let g = &self.generator;
        CodeBundleJson {
            field: f.spec().clone(),
            points_ref: points_ref.to_string(),
            monomials: self.monomials.iter().map(|m| m.exponents().to_vec()).collect(),
            generator: (0..g.rows()).map(|r| g.row(r).into_iter().map(|x| f.coeffs(x)).collect()).collect(),
            params: CodeParams { n: self.length(), k: self.dimension(), distance: self.distance.clone() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<Distance>,
}

/// Serialized code: field, a reference to the point set, the monomials, the
/// generator matrix (entries as coefficient vectors) and the parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeBundleJson {
    pub field: FieldSpec,
    pub points_ref: String,
    pub monomials: Vec<Vec<u32>>,
    pub generator: Vec<Vec<Vec<u32>>>,
    pub params: CodeParams,
}

/// Evaluation code of `monomials` on `points`.
pub fn evaluation_code(points: &PointSet, monomials: &[Monomial], field: &Arc<Field>) -> Result<EvaluationCode> {
    if points.is_empty() {
        return Err(Error::Invalid("empty point set".into()));
    }
    if points.field != *field {
        return Err(Error::MixedFields);
    }
    if let Some(m) = monomials.iter().find(|m| m.nvars() != points.dim) {
        return Err(Error::Dimension(format!(
            "monomial in {} variables on {}-dimensional points",
            m.nvars(),
            points.dim
        )));
    }
    let raw = points.raw();
    let n = raw.len();
    let mut data = Vec::with_capacity(monomials.len() * n);
    for m in monomials {
        for p in &raw {
            let mut v = 1u32;
            for (&x, &e) in p.iter().zip(m.exponents()) {
                if e > 0 {
                    v = field.mul_raw(v, field.pow_raw(x, e as i64).unwrap_or(0));
                }
            }
            data.push(v);
        }
    }
    let evaluation = Matrix::from_raw(field.clone(), monomials.len(), n, data);
    let generator = evaluation.row_basis();
    Ok(EvaluationCode {
        field: field.clone(),
        points: points.clone(),
        monomials: monomials.to_vec(),
        evaluation,
        generator,
        distance: None,
    })
}

/// `C_a`: all standard monomials of total degree at most `a`.
pub fn c_a_code(p: &Presentation, points: &PointSet, a: u32, limits: &Limits) -> Result<EvaluationCode> {
    let ms = standard_monomials(p, StandardQuery::DegreeAtMost(a), limits)?;
    evaluation_code(points, &ms, p.ring().field())
}

/// The first `ell` standard monomials under the presentation's order.
pub fn first_ell_code(p: &Presentation, points: &PointSet, ell: usize, limits: &Limits) -> Result<EvaluationCode> {
    let ms = standard_monomials(p, StandardQuery::First(ell), limits)?;
    evaluation_code(points, &ms, p.ring().field())
}

/// Number of messages with first nonzero coordinate 1.
fn scalar_classes(q: u64, k: usize) -> Option<u64> {
    let total = q.checked_pow(k as u32)?;
    Some((total - 1) / (q - 1))
}

/// Message digits (as field codes) of class index `idx`: class `idx` has its
/// leading 1 at the first position `lead` with `idx < q^(k-1) + ... + q^(k-1-lead)`.
fn class_message(idx: u64, q: u64, k: usize) -> Vec<u32> {
    let mut rest = idx;
    let mut msg = vec![0u32; k];
    for lead in 0..k {
        let block = q.pow((k - 1 - lead) as u32);
        if rest < block {
            msg[lead] = 1;
            let mut r = rest;
            for slot in msg[lead + 1..].iter_mut().rev() {
                *slot = (r % q) as u32;
                r /= q;
            }
            return msg;
        }
        rest -= block;
    }
    unreachable!("class index out of range")
}

const CHUNK: u64 = 1 << 12;

/// Exact minimum distance by enumerating one message per scalar class.
///
/// Work is split into fixed blocks of consecutive classes; inside a block
/// the codeword is updated one row at a time as the message odometer ticks.
pub fn min_distance(code: &EvaluationCode, limits: &Limits) -> Result<usize> {
    let f = &code.field;
    let g = &code.generator;
    let k = g.rows();
    let n = g.cols();
    if k == 0 {
        return Err(Error::Invalid("zero code has no minimum distance".into()));
    }
    let q = f.size() as u64;
    let classes = scalar_classes(q, k).filter(|_| q.checked_pow(k as u32).is_some_and(|t| t <= limits.max_codewords));
    let Some(classes) = classes else {
        return Err(Error::Ceiling(format!(
            "{q}^{k} codewords exceed max_codewords = {}; use bound mode",
            limits.max_codewords
        )));
    };
    let rows: Vec<&[u32]> = (0..k).map(|r| g.row_raw(r)).collect();
    let blocks = classes.div_ceil(CHUNK);
    let best = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let start = b * CHUNK;
            let end = (start + CHUNK).min(classes);
            let mut msg = class_message(start, q, k);
            let mut word = vec![0u32; n];
            for (i, &c) in msg.iter().enumerate() {
                if c != 0 {
                    for (w, &x) in word.iter_mut().zip(rows[i]) {
                        *w = f.add_raw(*w, f.mul_raw(c, x));
                    }
                }
            }
            let mut best = n;
            for idx in start..end {
                if idx > start {
                    let next = class_message(idx, q, k);
                    for i in 0..k {
                        if next[i] != msg[i] {
                            let delta = f.sub_raw(next[i], msg[i]);
                            for (w, &x) in word.iter_mut().zip(rows[i]) {
                                *w = f.add_raw(*w, f.mul_raw(delta, x));
                            }
                        }
                    }
                    msg = next;
                }
                let mut wt = 0;
                for &w in &word {
                    if w != 0 {
                        wt += 1;
                        if wt >= best {
                            break;
                        }
                    }
                }
                best = best.min(wt);
            }
            best
        })
        .min()
        .unwrap_or(n);
    Ok(best)
}

/// Distance interval from `samples` random codewords plus the generator rows.
/// The upper end is the lightest word seen, capped by the Singleton bound;
/// the lower end is 1, the only bound valid for every nonzero linear code.
pub fn distance_bounds(code: &EvaluationCode, samples: usize, seed: u64) -> Distance {
    let f = &code.field;
    let g = &code.generator;
    let k = g.rows();
    let n = g.cols();
    let weight = |w: &[u32]| w.iter().filter(|&&x| x != 0).count();
    let mut upper = n + 1 - k.min(n);
    for r in 0..k {
        upper = upper.min(weight(g.row_raw(r)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mut word = vec![0u32; n];
        let mut nonzero = false;
        for r in 0..k {
            let c = rng.gen_range(0..f.size());
            if c != 0 {
                nonzero = true;
                for (w, &x) in word.iter_mut().zip(g.row_raw(r)) {
                    *w = f.add_raw(*w, f.mul_raw(c, x));
                }
            }
        }
        if nonzero {
            upper = upper.min(weight(&word));
        }
    }
    Distance { method: DistanceMethod::Bound, lower: 1.min(upper), upper }
}

/// Exhaustive distance when the ceiling allows it, otherwise `None`.
pub fn compute_distance(code: &EvaluationCode, limits: &Limits) -> Result<Option<Distance>> {
    match min_distance(code, limits) {
        Ok(d) => Ok(Some(Distance { method: DistanceMethod::Exhaustive, lower: d, upper: d })),
        Err(Error::Ceiling(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Parity-check matrix: a basis of the dual code, one codeword per row.
pub fn dual_code(code: &EvaluationCode) -> Matrix {
    code.generator.nullspace()
}

/// `sum_{i < k} ceil(d / Q^i)`, the least length of a `[n, k, d]_Q` code.
pub fn griesmer_bound(k: u32, d: u64, field_size: u64) -> u64 {
    let mut total = 0;
    let mut pw = 1u64;
    for _ in 0..k {
        total += d.div_ceil(pw);
        pw = pw.saturating_mul(field_size);
    }
    total
}

/// Closed-form `(n, k, d)` of `C_1` on the Hermitian hypersurface chart.
pub fn hermitian_predicted_params(r: u32, q: u64) -> (u64, u64, u64) {
    let n = crate::varieties::hermitian_counts(r, q).affine;
    let k = r as u64 + 2;
    let top = q.pow(2 * r + 1) - q.pow(2 * r - 1);
    let d = if r.is_multiple_of(2) { top } else { top - q.pow(r) - q.pow(r - 1) };
    (n, k, d)
}

#[cfg(test)]
mod tests;
