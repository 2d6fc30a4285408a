//! Division, Buchberger's algorithm and elimination.
//!
//! Internally each polynomial is a vector of terms sorted by decreasing order
//! key. Keys are linear in the exponent vector for every supported order, so
//! multiplying by a monomial just shifts keys and reduction is a merge.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use super::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::limits::Limits;

#[derive(Clone, Debug)]
struct Term {
    key: Box<[i64]>,
    mono: Monomial,
    c: u32,
}

#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<Term>,
}

impl GPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> GPoly {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| Term { key: order.key(m.exponents()).into(), mono: m.clone(), c: c.value() })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        GPoly { terms }
    }

    fn to_poly(&self, ring: &Arc<PolyRing>) -> Polynomial {
        let f = ring.field();
        Polynomial::from_terms(ring, self.terms.iter().map(|t| (t.mono.clone(), f.element(t.c).unwrap())))
            .expect("internal terms are well formed")
    }

    fn lt(&self) -> &Term {
        &self.terms[0]
    }

    fn make_monic(&mut self, f: &Field) {
        if let Some(t) = self.terms.first() {
            if t.c != 1 {
                let inv = f.inv_raw(t.c);
                for t in &mut self.terms {
                    t.c = f.mul_raw(t.c, inv);
                }
            }
        }
    }
}

fn add_keys(a: &[i64], b: &[i64]) -> Box<[i64]> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_keys(a: &[i64], b: &[i64]) -> Box<[i64]> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `h + c * X^m * g`, where `mkey` is the order key of `m`.
fn axpy(f: &Field, h: &[Term], c: u32, m: &Monomial, mkey: &[i64], g: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(h.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut shifted: Option<Term> = None;
    loop {
        if shifted.is_none() && j < g.len() {
            let t = &g[j];
            shifted = Some(Term { key: add_keys(&t.key, mkey), mono: t.mono.mul(m), c: f.mul_raw(t.c, c) });
            j += 1;
        }
        match (i < h.len(), shifted.take()) {
            (false, None) => break,
            (true, None) => {
                out.push(h[i].clone());
                i += 1;
            }
            (false, Some(s)) => {
                if s.c != 0 {
                    out.push(s);
                }
            }
            (true, Some(s)) => match h[i].key.cmp(&s.key) {
                Ordering::Greater => {
                    out.push(h[i].clone());
                    i += 1;
                    shifted = Some(s);
                }
                Ordering::Less => {
                    if s.c != 0 {
                        out.push(s);
                    }
                }
                Ordering::Equal => {
                    let v = f.add_raw(h[i].c, s.c);
                    if v != 0 {
                        out.push(Term { key: s.key, mono: s.mono, c: v });
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

struct Engine<'a> {
    field: &'a Field,
    order: &'a MonomialOrder,
}

impl Engine<'_> {
    /// Full reduction of `h` by `basis` (monic elements); the first basis
    /// element whose leading monomial divides the current term is used.
    fn reduce(&self, h: GPoly, basis: &[GPoly]) -> GPoly {
        let f = self.field;
        let mut rest = h.terms;
        let mut idx = 0;
        let mut rem: Vec<Term> = Vec::new();
        while idx < rest.len() {
            let t = &rest[idx];
            match basis.iter().find(|g| g.lt().mono.divides(&t.mono)) {
                Some(g) => {
                    let g_lt = g.lt();
                    let q = t.mono.div(&g_lt.mono);
                    let qkey = sub_keys(&t.key, &g_lt.key);
                    let c = f.neg_raw(f.mul_raw(t.c, f.inv_raw(g_lt.c)));
                    // leading terms cancel, so both are skipped
                    rest = axpy(f, &rest[idx + 1..], c, &q, &qkey, &g.terms[1..]);
                    idx = 0;
                }
                None => {
                    rem.push(t.clone());
                    idx += 1;
                }
            }
        }
        GPoly { terms: rem }
    }

    fn spoly(&self, a: &GPoly, b: &GPoly) -> GPoly {
        let f = self.field;
        let (la, lb) = (a.lt(), b.lt());
        let l = la.mono.lcm(&lb.mono);
        let ma = l.div(&la.mono);
        let mb = l.div(&lb.mono);
        let kma = self.order.key(ma.exponents());
        let kmb = self.order.key(mb.exponents());
        let first = axpy(f, &[], f.inv_raw(la.c), &ma, &kma, &a.terms[1..]);
        let terms = axpy(f, &first, f.neg_raw(f.inv_raw(lb.c)), &mb, &kmb, &b.terms[1..]);
        GPoly { terms }
    }

    fn pair_entry(&self, basis: &[GPoly], i: usize, j: usize) -> Reverse<(u32, Vec<i64>, usize, usize)> {
        let l = basis[i].lt().mono.lcm(&basis[j].lt().mono);
        Reverse((l.degree(), self.order.key(l.exponents()), i, j))
    }

    fn buchberger(&self, input: Vec<GPoly>, pair_limit: usize) -> Result<Vec<GPoly>> {
        let mut basis: Vec<GPoly> = Vec::new();
        let mut heap = BinaryHeap::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        for mut g in input {
            g = self.reduce(g, &basis);
            if g.terms.is_empty() {
                continue;
            }
            g.make_monic(self.field);
            basis.push(g);
            let n = basis.len() - 1;
            for i in 0..n {
                heap.push(self.pair_entry(&basis, i, n));
                pending.insert((i, n));
            }
        }
        let mut processed = 0usize;
        while let Some(Reverse((_, _, i, j))) = heap.pop() {
            pending.remove(&(i, j));
            let (li, lj) = (&basis[i].lt().mono, &basis[j].lt().mono);
            if li.is_coprime(lj) {
                continue;
            }
            let l = li.lcm(lj);
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lt().mono.divides(&l)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            processed += 1;
            if processed > pair_limit {
                return Err(Error::Ceiling(format!("Buchberger pair limit {pair_limit} reached")));
            }
            let s = self.spoly(&basis[i], &basis[j]);
            let mut h = self.reduce(s, &basis);
            if h.terms.is_empty() {
                continue;
            }
            h.make_monic(self.field);
            basis.push(h);
            let n = basis.len() - 1;
            for k in 0..n {
                heap.push(self.pair_entry(&basis, k, n));
                pending.insert((k, n));
            }
        }
        Ok(self.reduced(basis))
    }

    /// Minimalizes and interreduces a Groebner basis, sorted ascending by
    /// leading monomial.
    fn reduced(&self, basis: Vec<GPoly>) -> Vec<GPoly> {
        let mut keep: Vec<GPoly> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let lm = &g.lt().mono;
            let redundant = basis
                .iter()
                .enumerate()
                .any(|(k, h)| k != i && h.lt().mono.divides(lm) && (h.lt().mono != *lm || k < i));
            if !redundant {
                keep.push(g.clone());
            }
        }
        let mut out = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let lead = keep[i].terms[0].clone();
            let tail = GPoly { terms: keep[i].terms[1..].to_vec() };
            let others: Vec<GPoly> = keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
            let mut r = self.reduce(tail, &others);
            r.terms.insert(0, lead);
            r.make_monic(self.field);
            out.push(r);
        }
        out.sort_by(|a, b| a.lt().key.cmp(&b.lt().key));
        out
    }
}

fn check_ring(polys: &[Polynomial]) -> Result<Arc<PolyRing>> {
    let ring = polys.first().ok_or_else(|| Error::Invalid("empty polynomial list".into()))?.ring().clone();
    if polys.iter().any(|p| **p.ring() != *ring) {
        return Err(Error::RingMismatch);
    }
    Ok(ring)
}

/// Remainder of `f` on division by `basis` under `order`; no term of the
/// result is divisible by a leading monomial of `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    if basis.iter().any(|g| **g.ring() != **f.ring()) {
        return Err(Error::RingMismatch);
    }
    order.validate(f.ring().nvars())?;
    let ring = f.ring();
    let engine = Engine { field: ring.field(), order };
    let mut gs: Vec<GPoly> = basis.iter().filter(|g| !g.is_zero()).map(|g| GPoly::from_poly(g, order)).collect();
    for g in &mut gs {
        g.make_monic(ring.field());
    }
    Ok(engine.reduce(GPoly::from_poly(f, order), &gs).to_poly(ring))
}

/// The S-polynomial of two nonzero polynomials, normalized by leading coefficients.
pub fn spoly(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    let ring = check_ring(&[a.clone(), b.clone()])?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::Invalid("S-polynomial of zero".into()));
    }
    let engine = Engine { field: ring.field(), order };
    Ok(engine.spoly(&GPoly::from_poly(a, order), &GPoly::from_poly(b, order)).to_poly(&ring))
}

/// Reduced Groebner basis under `order` with the default pair limit.
pub fn buchberger_reduced(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    buchberger_reduced_with(gens, order, &Limits::default())
}

/// Reduced Groebner basis: monic elements sorted ascending by leading
/// monomial, none having a term divisible by another's leading monomial.
/// The zero ideal gives an empty basis.
pub fn buchberger_reduced_with(gens: &[Polynomial], order: &MonomialOrder, limits: &Limits) -> Result<Vec<Polynomial>> {
    let ring = check_ring(gens)?;
    order.validate(ring.nvars())?;
    let engine = Engine { field: ring.field(), order };
    let input: Vec<GPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| GPoly::from_poly(g, order)).collect();
    let basis = engine.buchberger(input, limits.gb_pair_limit)?;
    Ok(basis.iter().map(|g| g.to_poly(&ring)).collect())
}

/// True when every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    if basis.is_empty() {
        return Ok(true);
    }
    let ring = check_ring(basis)?;
    let engine = Engine { field: ring.field(), order };
    let gs: Vec<GPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut x = GPoly::from_poly(g, order);
            x.make_monic(ring.field());
            x
        })
        .collect();
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            if !engine.reduce(engine.spoly(&gs[i], &gs[j]), &gs).terms.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of eliminating variables: the subring and the reduced basis of
/// the elimination ideal in it.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub ring: Arc<PolyRing>,
    pub basis: Vec<Polynomial>,
}

/// Generators of `I ∩ F[keep]`, as the reduced Groebner basis under `hint`
/// (an order on the kept variables in their ring order).
pub fn eliminate(gens: &[Polynomial], keep: &[usize], hint: &MonomialOrder) -> Result<Elimination> {
    eliminate_with(gens, keep, hint, &Limits::default())
}

pub fn eliminate_with(
    gens: &[Polynomial],
    keep: &[usize],
    hint: &MonomialOrder,
    limits: &Limits,
) -> Result<Elimination> {
    let ring = check_ring(gens)?;
    let n = ring.nvars();
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.iter().any(|&k| k >= n) {
        return Err(Error::Dimension("kept variable out of range".into()));
    }
    hint.validate(keep.len())?;
    let eliminated: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    let order = super::elimination_order(n, &eliminated, hint);
    let gb = buchberger_reduced_with(gens, &order, limits)?;
    let sub = PolyRing::new(ring.field().clone(), keep.iter().map(|&k| ring.vars()[k].clone()));
    let basis = gb
        .iter()
        .filter(|g| g.support().all(|m| eliminated.iter().all(|&e| m.exponents()[e] == 0)))
        .map(|g| {
            Polynomial::from_terms(
                &sub,
                g.terms().map(|(m, c)| (Monomial::new(keep.iter().map(|&k| m.exponents()[k]).collect()), *c)),
            )
            .unwrap()
        })
        .collect();
    Ok(Elimination { ring: sub, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    fn ring(p: u32, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(build_field(p, 1).unwrap(), vars.iter().copied())
    }

    #[test]
    fn single_division_step() {
        let r = ring(7, &["x", "y"]);
        let f = Polynomial::from_int_terms(&r, &[(vec![3, 0], 1)]).unwrap();
        let g = Polynomial::from_int_terms(&r, &[(vec![3, 0], 1), (vec![0, 2], -1)]).unwrap();
        let nf = normal_form(&f, std::slice::from_ref(&g), &MonomialOrder::Lex).unwrap();
        assert_eq!(nf, Polynomial::from_int_terms(&r, &[(vec![0, 2], 1)]).unwrap());
        assert!(normal_form(&g, std::slice::from_ref(&g), &MonomialOrder::Grevlex).unwrap().is_zero());
    }

    #[test]
    fn principal_monomial_ideal() {
        let r = ring(2, &["x"]);
        let x = Polynomial::var(&r, 0);
        assert_eq!(buchberger_reduced(std::slice::from_ref(&x), &MonomialOrder::Lex).unwrap(), vec![x]);
    }

    #[test]
    fn twisted_cubic_parametrization() {
        // x - t^2, y - t^3 with t eliminated gives x^3 - y^2
        let r = ring(5, &["t", "x", "y"]);
        let a = Polynomial::from_int_terms(&r, &[(vec![0, 1, 0], 1), (vec![2, 0, 0], -1)]).unwrap();
        let b = Polynomial::from_int_terms(&r, &[(vec![0, 0, 1], 1), (vec![3, 0, 0], -1)]).unwrap();
        let e = eliminate(&[a, b], &[1, 2], &MonomialOrder::Lex).unwrap();
        let expect = Polynomial::from_int_terms(&e.ring, &[(vec![3, 0], 1), (vec![0, 2], -1)]).unwrap();
        assert_eq!(e.basis, vec![expect]);
    }

    #[test]
    fn reduced_basis_of_a_small_ideal() {
        // <x^2 + y, x y - 1> under lex: x + y^2, y^3 + 1 (over GF(7))
        let r = ring(7, &["x", "y"]);
        let a = Polynomial::from_int_terms(&r, &[(vec![2, 0], 1), (vec![0, 1], 1)]).unwrap();
        let b = Polynomial::from_int_terms(&r, &[(vec![1, 1], 1), (vec![0, 0], -1)]).unwrap();
        let gb = buchberger_reduced(&[a.clone(), b.clone()], &MonomialOrder::Lex).unwrap();
        let g1 = Polynomial::from_int_terms(&r, &[(vec![0, 3], 1), (vec![0, 0], 1)]).unwrap();
        let g2 = Polynomial::from_int_terms(&r, &[(vec![1, 0], 1), (vec![0, 2], 1)]).unwrap();
        assert_eq!(gb, vec![g1, g2]);
        assert!(is_groebner_basis(&gb, &MonomialOrder::Lex).unwrap());
        let again = buchberger_reduced(&[b, a], &MonomialOrder::Lex).unwrap();
        assert_eq!(gb, again);
    }

    #[test]
    fn zero_ideal_and_pair_limit() {
        let r = ring(3, &["x", "y"]);
        assert!(buchberger_reduced(&[Polynomial::zero(&r)], &MonomialOrder::Lex).unwrap().is_empty());
        let a = Polynomial::from_int_terms(&r, &[(vec![2, 1], 1), (vec![0, 3], 1), (vec![1, 0], 1)]).unwrap();
        let b = Polynomial::from_int_terms(&r, &[(vec![1, 2], 1), (vec![3, 0], 2), (vec![0, 1], 1)]).unwrap();
        let limits = Limits { gb_pair_limit: 0, ..Limits::default() };
        assert!(matches!(buchberger_reduced_with(&[a, b], &MonomialOrder::Grevlex, &limits), Err(Error::Ceiling(_))));
    }
}
