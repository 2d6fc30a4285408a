use std::sync::Arc;

use super::Presentation;
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::limits::Limits;
use crate::matrix::integer_rank;
use crate::mpoly::{
    buchberger_reduced_with, eliminate_with, Monomial, MonomialOrder, PolyRing, Polynomial, WeightMatrix,
};

/// Rows of `m` forming a basis of its rational row space, greedily from the top.
fn independent_rows(m: &WeightMatrix) -> Vec<Vec<u64>> {
    let mut chosen: Vec<Vec<u64>> = Vec::new();
    for row in m.rows() {
        let mut trial: Vec<Vec<i64>> = chosen.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        trial.push(row.iter().map(|&x| x as i64).collect());
        if integer_rank(&trial) == trial.len() {
            chosen.push(row.clone());
        }
    }
    chosen
}

/// The toric ideal of the columns of `weights`, as its reduced grevlex basis.
pub fn toric_ideal(weights: &WeightMatrix, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    toric_ideal_with(weights, ring, &MonomialOrder::Grevlex, &Limits::default())
}

/// The toric ideal `<X^a - X^b : M a = M b>`, computed by eliminating
/// parameters from `X_j - t^(M e_j)`, returned as the reduced basis under
/// `order`. Only a basis of the row space is used since the ideal depends on
/// the kernel of `M` alone.
pub fn toric_ideal_with(
    weights: &WeightMatrix,
    ring: &Arc<PolyRing>,
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<Vec<Polynomial>> {
    let s = ring.nvars();
    if weights.ncols() != s {
        return Err(Error::Dimension("weight matrix columns must match ring variables".into()));
    }
    order.validate(s)?;
    let rows = independent_rows(weights);
    let r = rows.len();
    let mut names: Vec<String> = (1..=r).map(|i| format!("_t{i}")).collect();
    names.extend(ring.vars().iter().cloned());
    let big = PolyRing::new(ring.field().clone(), names);
    let f = ring.field();
    let gens: Vec<Polynomial> = (0..s)
        .map(|j| {
            let mut param = vec![0u32; r + s];
            for (i, row) in rows.iter().enumerate() {
                param[i] = row[j] as u32;
            }
            let x = Monomial::var(r + s, r + j, 1);
            Polynomial::from_terms(&big, [(x, f.one()), (Monomial::new(param), f.neg(f.one()))]).unwrap()
        })
        .collect();
    let keep: Vec<usize> = (r..r + s).collect();
    let e = eliminate_with(&gens, &keep, order, limits)?;
    e.basis.iter().map(|g| Polynomial::from_terms(ring, g.terms().map(|(m, c)| (m.clone(), *c)))).collect()
}

/// How to pick the deformation weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaChoice {
    /// Search positive integer combinations of the rows of `M`.
    Auto,
    Given(Vec<u64>),
}

/// One basis element of the family `X_i -> t^(-w_i) X_i` after clearing
/// denominators: each term carries the power of `t` multiplying it.
#[derive(Clone, Debug)]
pub struct DeformedGenerator {
    pub original: Polynomial,
    pub t_powers: Vec<(Monomial, FieldElement, u64)>,
    pub limit: Polynomial,
}

#[derive(Clone, Debug)]
pub struct Deformation {
    pub omega: Option<Vec<u64>>,
    /// Row coefficients when `omega` came from the automatic search.
    pub row_coefficients: Option<Vec<u64>>,
    pub attempts: u64,
    pub generators: Vec<DeformedGenerator>,
    /// Reduced basis of the special fibre under the presentation's order.
    pub limit_basis: Vec<Polynomial>,
    /// Reduced basis of the toric ideal under the presentation's order.
    pub toric_basis: Vec<Polynomial>,
    pub supports_match: bool,
    /// Diagonal scaling taking the special fibre to the toric ideal.
    pub rescaling: Option<Vec<FieldElement>>,
    pub toric_match: bool,
    pub note: Option<String>,
}

const MAX_ROW_COEFFICIENT: u64 = 50;
const MAX_OMEGA_ATTEMPTS: u64 = 2_000_000;
const MAX_RESCALINGS: u64 = 4_000_000;

fn dot(w: &[u64], m: &Monomial) -> u64 {
    w.iter().zip(m.exponents()).map(|(&a, &e)| a * e as u64).sum()
}

/// `omega` separates when, in every basis element, the terms of maximal
/// `M`-weight all share the maximal `omega`-weight and every other term is
/// strictly below it.
fn separates(p: &Presentation, omega: &[u64]) -> bool {
    let w = p.weights();
    p.groebner_basis().iter().all(|g| {
        let mw: Vec<(Vec<u64>, u64)> = g.support().map(|m| (w.weight(m.exponents()), dot(omega, m))).collect();
        let top = mw.iter().map(|x| x.0.clone()).max().unwrap();
        let top_omega: Vec<u64> = mw.iter().filter(|x| x.0 == top).map(|x| x.1).collect();
        let t = top_omega[0];
        top_omega.iter().all(|&x| x == t) && mw.iter().filter(|x| x.0 != top).all(|x| x.1 < t)
    })
}

/// Advances `c` to the next vector of `[1, level]^r`, last coordinate fastest.
fn next_vector(c: &mut [u64], level: u64) -> bool {
    for i in (0..c.len()).rev() {
        if c[i] < level {
            c[i] += 1;
            for x in &mut c[i + 1..] {
                *x = 1;
            }
            return true;
        }
    }
    false
}

/// Row coefficients and the resulting weight.
type OmegaHit = (Vec<u64>, Vec<u64>);

/// Increasing max coefficient, lexicographic within a level.
fn search_omega(p: &Presentation) -> (Option<OmegaHit>, u64) {
    let w = p.weights();
    let r = w.nrows();
    let mut attempts = 0u64;
    for level in 1..=MAX_ROW_COEFFICIENT {
        let mut c = vec![1u64; r];
        loop {
            if c.contains(&level) {
                attempts += 1;
                let omega = w.row_combination(&c);
                if separates(p, &omega) {
                    return (Some((c, omega)), attempts);
                }
                if attempts >= MAX_OMEGA_ATTEMPTS {
                    return (None, attempts);
                }
            }
            if !next_vector(&mut c, level) {
                break;
            }
        }
    }
    (None, attempts)
}

/// Deforms a verified presentation along `X_i -> t^(-w_i) X_i` and compares
/// the special fibre with the toric ideal of `M`, allowing a diagonal
/// rescaling of the variables.
pub fn deform_to_toric(p: &Presentation, choice: &OmegaChoice, limits: &Limits) -> Result<Deformation> {
    p.require_verified()?;
    let (omega, row_coefficients, attempts) = match choice {
        OmegaChoice::Given(w) => {
            if w.len() != p.ring().nvars() {
                return Err(Error::Dimension("omega needs one entry per variable".into()));
            }
            let ok = separates(p, w);
            (ok.then(|| w.clone()), None, 1)
        }
        OmegaChoice::Auto => match search_omega(p) {
            (Some((c, w)), n) => (Some(w), Some(c), n),
            (None, n) => (None, None, n),
        },
    };
    let toric_basis = toric_ideal_with(p.weights(), p.ring(), p.order(), limits)?;
    let Some(omega) = omega else {
        return Ok(Deformation {
            omega: None,
            row_coefficients: None,
            attempts,
            generators: Vec::new(),
            limit_basis: Vec::new(),
            toric_basis,
            supports_match: false,
            rescaling: None,
            toric_match: false,
            note: Some(match choice {
                OmegaChoice::Auto => format!(
                    "no separating row combination with coefficients in [1, {MAX_ROW_COEFFICIENT}] after {attempts} attempts"
                ),
                OmegaChoice::Given(_) => "the given weight does not separate the basis".into(),
            }),
        });
    };
    let ring = p.ring();
    let mut generators = Vec::new();
    for g in p.groebner_basis() {
        let top = g.support().map(|m| dot(&omega, m)).max().unwrap();
        let t_powers: Vec<(Monomial, FieldElement, u64)> =
            g.terms().rev().map(|(m, c)| (m.clone(), *c, top - dot(&omega, m))).collect();
        let limit = Polynomial::from_terms(ring, t_powers.iter().filter(|t| t.2 == 0).map(|t| (t.0.clone(), t.1)))?;
        generators.push(DeformedGenerator { original: g.clone(), t_powers, limit });
    }
    let limits_polys: Vec<Polynomial> = generators.iter().map(|g| g.limit.clone()).collect();
    let limit_basis =
        if limits_polys.is_empty() { Vec::new() } else { buchberger_reduced_with(&limits_polys, p.order(), limits)? };
    let supports_match = limit_basis.len() == toric_basis.len()
        && limit_basis.iter().zip(&toric_basis).all(|(a, b)| a.support().eq(b.support()));
    let rescaling = if supports_match { find_rescaling(&limit_basis, &toric_basis, p.order())? } else { None };
    let toric_match = rescaling.is_some();
    Ok(Deformation {
        omega: Some(omega),
        row_coefficients,
        attempts,
        generators,
        limit_basis,
        toric_basis,
        supports_match,
        rescaling,
        toric_match,
        note: None,
    })
}

/// Searches `lambda = g^e` (g primitive) with `e` in lexicographic order,
/// starting from the identity, such that substituting `X_i -> lambda_i X_i`
/// in each element of `from` and making it monic gives `to`.
fn find_rescaling(from: &[Polynomial], to: &[Polynomial], order: &MonomialOrder) -> Result<Option<Vec<FieldElement>>> {
    let Some(first) = from.first().or(to.first()) else {
        return Ok(Some(Vec::new()));
    };
    let ring = first.ring().clone();
    let f = ring.field().clone();
    let s = ring.nvars();
    let n = (f.size() - 1) as u64;
    // equations: sum_i (b_i - a_i) e_i = log(t_b / l_b) mod n
    let mut eqs: Vec<(Vec<i64>, u64)> = Vec::new();
    for (l, t) in from.iter().zip(to) {
        let (a, la) = l.leading_term(order).unwrap();
        let (_, ta) = t.leading_term(order).unwrap();
        for (b, lb) in l.terms() {
            if *b == a {
                continue;
            }
            let tb = t.coeff(b);
            // lambda^(b-a) * lb / la = tb / ta
            let rhs = f.div(f.mul(tb, la), f.mul(ta, *lb))?;
            let log = discrete_log(&f, rhs);
            let diff: Vec<i64> = b.exponents().iter().zip(a.exponents()).map(|(&x, &y)| x as i64 - y as i64).collect();
            eqs.push((diff, log));
        }
    }
    let search_size = n.checked_pow(s as u32).unwrap_or(u64::MAX);
    if search_size > MAX_RESCALINGS {
        return Err(Error::Ceiling(format!("rescaling search over {search_size} candidates")));
    }
    let mut e = vec![0u64; s];
    loop {
        let ok = eqs.iter().all(|(d, rhs)| {
            let v: i64 = d.iter().zip(&e).map(|(&x, &y)| x * y as i64).sum();
            v.rem_euclid(n as i64) as u64 == *rhs % n
        });
        if ok {
            let g = f.primitive();
            return Ok(Some(e.iter().map(|&k| f.pow(g, k as i64).unwrap()).collect()));
        }
        let mut i = s;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            e[i] += 1;
            if e[i] < n {
                break;
            }
            e[i] = 0;
        }
    }
}

fn discrete_log(f: &crate::gf::Field, x: FieldElement) -> u64 {
    let g = f.primitive();
    let mut acc = f.one();
    let mut k = 0u64;
    while acc != x {
        acc = f.mul(acc, g);
        k += 1;
    }
    k
}
