//! Order-domain presentations `F[X]/I` with a weight order, the two-condition
//! Groebner criterion, the order function it defines, value semigroups and
//! toric degenerations.

mod json;
mod probe;
mod semigroup;
mod toric;

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::mpoly::monomial::{count_up_to_degree, monomials_up_to_degree};
use crate::mpoly::{buchberger_reduced_with, normal_form, Monomial, MonomialOrder, PolyRing, Polynomial, WeightMatrix};

pub use json::PresentationJson;
pub use probe::{axiom_probe, ProbeReport, Violation};
pub use semigroup::{semigroup_membership, Membership, SemigroupData};
pub use toric::{deform_to_toric, toric_ideal, toric_ideal_with, Deformation, DeformedGenerator, OmegaChoice};

/// A value of the order function: `-inf` for zero, otherwise a weight vector.
/// The derived ordering puts `-inf` below everything and compares vectors
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderValue {
    NegInfinity,
    Finite(Vec<u64>),
}

impl OrderValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, OrderValue::Finite(_))
    }

    /// Semigroup sum; `-inf` absorbs.
    pub fn add(&self, other: &OrderValue) -> OrderValue {
        match (self, other) {
            (OrderValue::Finite(a), OrderValue::Finite(b)) => {
                OrderValue::Finite(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => OrderValue::NegInfinity,
        }
    }
}

impl fmt::Display for OrderValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderValue::NegInfinity => write!(f, "-inf"),
            OrderValue::Finite(v) => write!(f, "{v:?}"),
        }
    }
}

/// `M alpha`.
pub fn m_weight(m: &Monomial, weights: &WeightMatrix) -> Result<Vec<u64>> {
    if m.nvars() != weights.ncols() {
        return Err(Error::Dimension(format!(
            "monomial has {} variables, weight matrix {} columns",
            m.nvars(),
            weights.ncols()
        )));
    }
    Ok(weights.weight(m.exponents()))
}

/// Max-weight data for one basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCheck {
    pub index: usize,
    pub max_weight: Vec<u64>,
    pub max_weight_terms: Vec<Monomial>,
}

/// Why a presentation failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A basis element whose support does not have exactly two monomials of
    /// maximal weight.
    MaxWeightCount { index: usize, count: usize, monomials: Vec<Monomial> },
    /// Two standard monomials with the same weight (lex-least such pair).
    WeightCollision { a: Monomial, b: Monomial, weight: Vec<u64> },
}

impl Witness {
    pub fn describe(&self) -> String {
        match self {
            Witness::MaxWeightCount { index, count: 1, .. } => {
                format!("single max-weight monomial in basis element {index}")
            }
            Witness::MaxWeightCount { index, count, .. } => {
                format!("{count} max-weight monomials in basis element {index}")
            }
            Witness::WeightCollision { a, b, weight } => {
                format!("standard monomials {:?} and {:?} share weight {weight:?}", a.exponents(), b.exponents())
            }
        }
    }
}

/// Outcome of checking both conditions of the criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GPReport {
    pub tie: MonomialOrder,
    pub generators: Vec<GeneratorCheck>,
    pub condition_a: bool,
    pub bound: u32,
    pub footprint_checked: usize,
    pub condition_b: bool,
    pub witness: Option<Witness>,
    pub passed: bool,
}

/// Candidate order domain `F[X_1..X_s]/I` ordered by `>_{M,tau}`, with its
/// reduced Groebner basis cached on construction.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    ring: Arc<PolyRing>,
    ideal: Vec<Polynomial>,
    weights: WeightMatrix,
    tie: MonomialOrder,
    order: MonomialOrder,
    gb: Vec<Polynomial>,
    leading: Vec<Monomial>,
    report: Option<GPReport>,
    notes: BTreeMap<String, String>,
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        ring: Arc<PolyRing>,
        ideal: Vec<Polynomial>,
        weights: WeightMatrix,
        tie: MonomialOrder,
    ) -> Result<Presentation> {
        Self::with_limits(name, ring, ideal, weights, tie, &Limits::default())
    }

    pub fn with_limits(
        name: impl Into<String>,
        ring: Arc<PolyRing>,
        ideal: Vec<Polynomial>,
        weights: WeightMatrix,
        tie: MonomialOrder,
        limits: &Limits,
    ) -> Result<Presentation> {
        if weights.ncols() != ring.nvars() {
            return Err(Error::Dimension(format!(
                "weight matrix has {} columns for {} variables",
                weights.ncols(),
                ring.nvars()
            )));
        }
        if weights.nrows() == 0 {
            return Err(Error::Invalid("weight matrix has no rows".into()));
        }
        tie.validate(ring.nvars())?;
        if ideal.iter().any(|g| **g.ring() != *ring) {
            return Err(Error::RingMismatch);
        }
        let order = MonomialOrder::weight(weights.clone(), tie.clone());
        let gb = if ideal.iter().all(Polynomial::is_zero) {
            Vec::new()
        } else {
            buchberger_reduced_with(&ideal, &order, limits)?
        };
        let leading = gb.iter().map(|g| g.leading_monomial(&order).unwrap()).collect();
        Ok(Presentation {
            name: name.into(),
            ring,
            ideal,
            weights,
            tie,
            order,
            gb,
            leading,
            report: None,
            notes: BTreeMap::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn weights(&self) -> &WeightMatrix {
        &self.weights
    }

    pub fn tie(&self) -> &MonomialOrder {
        &self.tie
    }

    /// The order `>_{M,tau}`.
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self.gb
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn report(&self) -> Option<&GPReport> {
        self.report.as_ref()
    }

    pub fn is_verified(&self) -> bool {
        self.report.as_ref().is_some_and(|r| r.passed)
    }

    pub fn notes(&self) -> &BTreeMap<String, String> {
        &self.notes
    }

    pub fn add_note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.notes.insert(key.into(), value.into());
    }

    /// Runs [`verify_gp`] and stores the report.
    pub fn verify(&mut self, bound: Option<u32>, limits: &Limits) -> Result<&GPReport> {
        let report = verify_gp(self, bound, limits)?;
        self.report = Some(report);
        Ok(self.report.as_ref().unwrap())
    }

    /// Like [`Presentation::verify`], but an unmet condition becomes an error.
    pub fn verified(mut self, bound: Option<u32>, limits: &Limits) -> Result<Presentation> {
        let r = self.verify(bound, limits)?;
        if !r.passed {
            let why = r.witness.as_ref().map(Witness::describe).unwrap_or_default();
            return Err(Error::Internal(format!("presentation {} failed verification: {why}", self.name)));
        }
        Ok(self)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading.iter().any(|l| l.divides(m))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if **f.ring() != *self.ring {
            return Err(Error::RingMismatch);
        }
        normal_form(f, &self.gb, &self.order)
    }

    fn require_verified(&self) -> Result<()> {
        if self.is_verified() {
            Ok(())
        } else {
            Err(Error::NotVerified)
        }
    }

    /// Default distinctness bound: four times the largest leading degree.
    pub fn default_bound(&self) -> u32 {
        4 * self.leading.iter().map(Monomial::degree).max().unwrap_or(1).max(1)
    }

    /// Rebuilds a presentation with notes attached.
    pub(crate) fn from_parts(
        name: String,
        ring: Arc<PolyRing>,
        ideal: Vec<Polynomial>,
        weights: WeightMatrix,
        tie: MonomialOrder,
        limits: &Limits,
        notes: BTreeMap<String, String>,
    ) -> Result<Presentation> {
        let mut p = Self::with_limits(name, ring, ideal, weights, tie, limits)?;
        p.notes = notes;
        Ok(p)
    }
}

/// Checks that every reduced basis element has exactly two support monomials
/// of maximal `M`-weight, and that standard monomials of total degree at most
/// `bound` (default four times the largest leading degree) have pairwise
/// distinct weights.
pub fn verify_gp(p: &Presentation, bound: Option<u32>, limits: &Limits) -> Result<GPReport> {
    let w = &p.weights;
    let mut generators = Vec::with_capacity(p.gb.len());
    let mut witness = None;
    for (index, g) in p.gb.iter().enumerate() {
        let weighted: Vec<(Vec<u64>, &Monomial)> = g.support().map(|m| (w.weight(m.exponents()), m)).collect();
        let max = weighted.iter().map(|(v, _)| v.clone()).max().unwrap();
        let mut tops: Vec<Monomial> = weighted.iter().filter(|(v, _)| *v == max).map(|(_, m)| (*m).clone()).collect();
        tops.sort_by(|a, b| p.order.cmp(b, a));
        if tops.len() != 2 && witness.is_none() {
            witness = Some(Witness::MaxWeightCount { index, count: tops.len(), monomials: tops.clone() });
        }
        generators.push(GeneratorCheck { index, max_weight: max, max_weight_terms: tops });
    }
    let condition_a = witness.is_none();

    let max_lead = p.leading.iter().map(Monomial::degree).max().unwrap_or(0);
    let bound = bound.unwrap_or_else(|| p.default_bound());
    if bound < max_lead {
        return Err(Error::Invalid(format!("bound {bound} is below the largest leading degree {max_lead}")));
    }
    let n = p.ring.nvars();
    if count_up_to_degree(n, bound) > limits.max_monomials as u128 {
        return Err(Error::Ceiling(format!(
            "{} monomials of degree <= {bound} in {n} variables exceed the limit {}",
            count_up_to_degree(n, bound),
            limits.max_monomials
        )));
    }
    let mut classes: HashMap<Vec<u64>, Vec<Monomial>> = HashMap::new();
    let mut checked = 0usize;
    for m in monomials_up_to_degree(n, bound) {
        if p.is_standard(&m) {
            checked += 1;
            classes.entry(w.weight(m.exponents())).or_default().push(m);
        }
    }
    let collision = classes
        .into_iter()
        .filter(|(_, ms)| ms.len() > 1)
        .map(|(wt, mut ms)| {
            ms.sort();
            (ms[0].clone(), ms[1].clone(), wt)
        })
        .min();
    let condition_b = collision.is_none();
    if witness.is_none() {
        if let Some((a, b, weight)) = collision {
            witness = Some(Witness::WeightCollision { a, b, weight });
        }
    }
    Ok(GPReport {
        tie: p.tie.clone(),
        generators,
        condition_a,
        bound,
        footprint_checked: checked,
        condition_b,
        passed: condition_a && condition_b,
        witness,
    })
}

/// Largest weight in the support of the normal form. Requires a verified
/// presentation.
pub fn rho(f: &Polynomial, p: &Presentation) -> Result<OrderValue> {
    p.require_verified()?;
    rho_unchecked(f, p)
}

pub(crate) fn rho_unchecked(f: &Polynomial, p: &Presentation) -> Result<OrderValue> {
    let nf = p.normal_form(f)?;
    Ok(support_value(&nf, &p.weights))
}

pub(crate) fn support_value(nf: &Polynomial, w: &WeightMatrix) -> OrderValue {
    nf.support().map(|m| w.weight(m.exponents())).max().map_or(OrderValue::NegInfinity, OrderValue::Finite)
}

/// Which standard monomials to list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardQuery {
    /// The `l` smallest under `>_{M,tau}`.
    First(usize),
    /// All of total degree at most `a`.
    DegreeAtMost(u32),
}

/// Standard monomials in increasing order under `>_{M,tau}` (weights under
/// lex first, then the tie order).
pub fn standard_monomials(p: &Presentation, query: StandardQuery, limits: &Limits) -> Result<Vec<Monomial>> {
    let n = p.ring.nvars();
    match query {
        StandardQuery::First(l) => {
            if l > limits.max_monomials {
                return Err(Error::Ceiling(format!("{l} monomials requested")));
            }
            let mut out = Vec::with_capacity(l);
            let mut heap = BinaryHeap::new();
            let mut seen = HashSet::new();
            let one = Monomial::one(n);
            if p.is_standard(&one) {
                heap.push(Reverse((p.order.key(one.exponents()), one.clone())));
                seen.insert(one);
            }
            while out.len() < l {
                let Some(Reverse((_, m))) = heap.pop() else { break };
                for i in 0..n {
                    let next = m.mul(&Monomial::var(n, i, 1));
                    if p.is_standard(&next) && seen.insert(next.clone()) {
                        heap.push(Reverse((p.order.key(next.exponents()), next)));
                    }
                }
                out.push(m);
            }
            Ok(out)
        }
        StandardQuery::DegreeAtMost(a) => {
            if count_up_to_degree(n, a) > limits.max_monomials as u128 {
                return Err(Error::Ceiling(format!("degree {a} in {n} variables")));
            }
            let mut out: Vec<Monomial> =
                monomials_up_to_degree(n, a).into_iter().filter(|m| p.is_standard(m)).collect();
            out.sort_by(|x, y| p.order.cmp(x, y));
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests;
