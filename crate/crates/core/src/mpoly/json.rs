//! JSON encodings of polynomials and ideals.
//!
//! A polynomial is `{"vars":[...],"field":{...},"terms":[{"exp":[...],"coeff":[...]}]}`
//! where `coeff` is the coefficient vector of the field element. Terms are
//! written in decreasing lexicographic order of exponents, so encoding is
//! canonical and files round-trip byte for byte.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: Vec<String>,
    pub field: FieldSpec,
    pub terms: Vec<TermJson>,
}

/// Terms only; used inside bundles that carry the ring once.
pub fn terms_to_json(p: &Polynomial) -> Vec<TermJson> {
    let f = p.field();
    p.terms().rev().map(|(m, c)| TermJson { exp: m.exponents().to_vec(), coeff: f.coeffs(*c) }).collect()
}

pub fn terms_from_json(ring: &Arc<PolyRing>, terms: &[TermJson]) -> Result<Polynomial> {
    let f = ring.field();
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        if t.exp.len() != ring.nvars() {
            return Err(Error::Dimension(format!("term has {} exponents for {} variables", t.exp.len(), ring.nvars())));
        }
        out.push((Monomial::new(t.exp.clone()), f.from_coeffs(&t.coeff)?));
    }
    Polynomial::from_terms(ring, out)
}

pub fn to_json(p: &Polynomial) -> PolynomialJson {
    PolynomialJson { vars: p.ring().vars().to_vec(), field: p.field().spec().clone(), terms: terms_to_json(p) }
}

/// Decodes into `ring` when given, otherwise into a fresh ring.
pub fn from_json(j: &PolynomialJson, ring: Option<&Arc<PolyRing>>) -> Result<Polynomial> {
    let ring = match ring {
        Some(r) => {
            if r.vars() != j.vars.as_slice() || r.field().spec() != &j.field {
                return Err(Error::RingMismatch);
            }
            r.clone()
        }
        None => PolyRing::new(Field::from_spec(&j.field)?, j.vars.iter().cloned()),
    };
    terms_from_json(&ring, &j.terms)
}

/// An ideal as a list of polynomials sharing one ring.
pub fn ideal_to_json(gens: &[Polynomial]) -> Vec<PolynomialJson> {
    gens.iter().map(to_json).collect()
}

pub fn ideal_from_json(js: &[PolynomialJson]) -> Result<Vec<Polynomial>> {
    let Some(first) = js.first() else {
        return Ok(Vec::new());
    };
    let ring = PolyRing::new(Field::from_spec(&first.field)?, first.vars.iter().cloned());
    js.iter().map(|j| from_json(j, Some(&ring))).collect()
}

/// Compact integer-coefficient form for prime-field data: leading term
/// first under the caller's order is not implied; terms are `[exp, c]` with
/// `c` a signed integer representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPolynomialJson(pub Vec<(Vec<u32>, i64)>);

impl IntPolynomialJson {
    pub fn to_polynomial(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        Polynomial::from_int_terms(ring, &self.0)
    }
}
