use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    rho_unchecked, semigroup_membership, standard_monomials, OrderValue, Presentation, SemigroupData, StandardQuery,
};
use crate::error::Result;
use crate::gf::FieldElement;
use crate::limits::Limits;
use crate::mpoly::monomial::monomials_up_to_degree;
use crate::mpoly::{Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: usize,
    pub axiom: u8,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub trials: usize,
    pub seed: u64,
    /// Finite values whose semigroup membership was certified.
    pub values_certified: usize,
    pub violations: Vec<Violation>,
}

struct Sampler<'a> {
    p: &'a Presentation,
    pool: Vec<Monomial>,
    standard: Vec<Monomial>,
    rng: ChaCha8Rng,
}

impl Sampler<'_> {
    fn coeff(&mut self) -> FieldElement {
        let f = self.p.ring().field();
        f.element(self.rng.gen_range(1..f.size())).unwrap()
    }

    /// Up to four random terms, occasionally zero, drawn from low-degree
    /// monomials that need not be standard.
    fn poly(&mut self) -> Polynomial {
        let ring = self.p.ring().clone();
        let n = if self.rng.gen_ratio(1, 20) { 0 } else { self.rng.gen_range(1..=4) };
        let mut terms = Vec::with_capacity(n);
        for _ in 0..n {
            let m = self.pool.choose(&mut self.rng).unwrap().clone();
            terms.push((m, self.coeff()));
        }
        Polynomial::from_terms(&ring, terms).unwrap()
    }

    /// An element with the same value as `f`: a multiple of the standard
    /// monomial carrying `rho(f)`, plus standard terms of smaller weight.
    fn same_value(&mut self, nf: &Polynomial) -> Polynomial {
        let w = self.p.weights();
        let lead = nf.support().max_by_key(|m| w.weight(m.exponents())).unwrap().clone();
        let top = w.weight(lead.exponents());
        let lower: Vec<Monomial> = self.standard.iter().filter(|m| w.weight(m.exponents()) < top).cloned().collect();
        let mut terms = vec![(lead, self.coeff())];
        for _ in 0..self.rng.gen_range(0..=3) {
            if let Some(m) = lower.choose(&mut self.rng) {
                terms.push((m.clone(), self.coeff()));
            }
        }
        Polynomial::from_terms(self.p.ring(), terms).unwrap()
    }
}

/// Samples `trials` seeded random pairs and checks the order-function axioms
/// for `rho`: zero exactly at zero, scaling invariance, the ultrametric
/// inequality, the one-dimensional quotient property (for a constructed
/// partner of equal value, some `c` lowers `rho(f - c g)`), multiplicativity,
/// and membership of every value in the semigroup of `M`.
pub fn axiom_probe(p: &Presentation, trials: usize, seed: u64, limits: &Limits) -> Result<ProbeReport> {
    p.require_verified()?;
    let n = p.ring().nvars();
    let max_lead = p.leading_monomials().iter().map(Monomial::degree).max().unwrap_or(1);
    let pool = monomials_up_to_degree(n, max_lead + 1);
    let standard = standard_monomials(p, StandardQuery::First(60), limits)?;
    let semigroup = SemigroupData::from_matrix(p.weights());
    let field = p.ring().field().clone();
    let mut s = Sampler { p, pool, standard, rng: ChaCha8Rng::seed_from_u64(seed) };
    let mut violations = Vec::new();
    let mut certified = 0usize;
    let mut bad = |trial: usize, axiom: u8, detail: String| violations.push(Violation { trial, axiom, detail });

    for trial in 0..trials {
        let f = s.poly();
        let g = s.poly();
        let nf = p.normal_form(&f)?;
        let rf = rho_unchecked(&f, p)?;
        let rg = rho_unchecked(&g, p)?;

        if (rf == OrderValue::NegInfinity) != nf.is_zero() {
            bad(trial, 1, format!("rho(f) = {rf} but normal form zero is {}", nf.is_zero()));
        }
        let c = s.coeff();
        let rcf = rho_unchecked(&f.scale(c), p)?;
        if rcf != rf {
            bad(trial, 2, format!("rho(cf) = {rcf}, rho(f) = {rf}"));
        }
        let rsum = rho_unchecked(&(&f + &g), p)?;
        if rsum > rf.clone().max(rg.clone()) {
            bad(trial, 3, format!("rho(f+g) = {rsum} exceeds max({rf}, {rg})"));
        }
        let rprod = rho_unchecked(&(&f * &g), p)?;
        if rprod != rf.add(&rg) {
            bad(trial, 5, format!("rho(fg) = {rprod}, rho(f) + rho(g) = {}", rf.add(&rg)));
        }
        if rf.is_finite() {
            let partner = s.same_value(&nf);
            let rp = rho_unchecked(&partner, p)?;
            if rp != rf {
                bad(trial, 4, format!("constructed partner has value {rp}, expected {rf}"));
            } else {
                let lowered = field
                    .elements()
                    .skip(1)
                    .any(|c| rho_unchecked(&(&f - &partner.scale(c)), p).map(|v| v < rf).unwrap_or(false));
                if !lowered {
                    bad(trial, 4, format!("no c lowers rho(f - c g) below {rf}"));
                }
            }
        }
        if rf == rg && rf.is_finite() {
            let lowered = field
                .elements()
                .skip(1)
                .any(|c| rho_unchecked(&(&f - &g.scale(c)), p).map(|v| v < rf).unwrap_or(false));
            if !lowered {
                bad(trial, 4, format!("sampled pair of value {rf} admits no lowering constant"));
            }
        }
        for v in [&rf, &rg, &rprod] {
            if let OrderValue::Finite(x) = v {
                match semigroup_membership(x, &semigroup) {
                    Some(m) if semigroup.combine(&m.coefficients) == *x => certified += 1,
                    _ => bad(trial, 0, format!("value {x:?} not certified in the semigroup")),
                }
            }
        }
    }
    Ok(ProbeReport { trials, seed, values_certified: certified, violations })
}
