use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// A polynomial ring `F[X_1, ..., X_s]` with named variables.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Arc<Field>,
    vars: Vec<String>,
}

impl PolyRing {
    pub fn new<S: Into<String>>(field: Arc<Field>, vars: impl IntoIterator<Item = S>) -> Arc<PolyRing> {
        Arc::new(PolyRing { field, vars: vars.into_iter().map(Into::into).collect() })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Sparse polynomial; terms are kept in a map keyed by exponent vector so no
/// zero coefficient is ever stored.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: FieldElement) -> Polynomial {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Polynomial {
        Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), ring.field.one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: FieldElement) -> Polynomial {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length does not match ring");
        assert!(ring.field.owns(c), "coefficient from a different field");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Result<Polynomial> {
        let mut out = Polynomial::zero(ring);
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::Dimension(format!(
                    "monomial of length {} in a ring with {} variables",
                    m.nvars(),
                    ring.nvars()
                )));
            }
            if !ring.field.owns(c) {
                return Err(Error::MixedFields);
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    /// Polynomial with integer coefficients mapped into the ring's field.
    pub fn from_int_terms(ring: &Arc<PolyRing>, terms: &[(Vec<u32>, i64)]) -> Result<Polynomial> {
        Self::from_terms(ring, terms.iter().map(|(e, c)| (Monomial::new(e.clone()), ring.field.from_int(*c))))
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let f = &self.ring.field;
        match self.terms.get_mut(&m) {
            Some(x) => {
                let s = f.add(*x, c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.ring.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).copied().unwrap_or_else(|| self.ring.field.zero())
    }

    /// Terms sorted in decreasing order under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, FieldElement)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), *c)).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Monomial, FieldElement)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)).map(|(m, c)| (m.clone(), *c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(order).map(|t| t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        let f = &self.ring.field;
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), f.mul(*x, c))).collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(self.ring.field.inv(c).unwrap()),
            None => self.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: FieldElement) -> Polynomial {
        let f = &self.ring.field;
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), f.mul(*x, c))).collect(),
        }
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let f = &self.ring.field;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), f.neg(*c));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let f = &self.ring.field;
        let mut out = Polynomial::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), f.mul(*x, *y));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Evaluates at a point with one coordinate per variable.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        let f = &self.ring.field;
        if point.len() != self.ring.nvars() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates for {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        if point.iter().any(|&x| !f.owns(x)) {
            return Err(Error::MixedFields);
        }
        let raw: Vec<u32> = point.iter().map(|x| x.value()).collect();
        Ok(f.element(self.evaluate_raw(&raw)).unwrap())
    }

    pub(crate) fn evaluate_raw(&self, point: &[u32]) -> u32 {
        let f = &self.ring.field;
        let mut acc = 0u32;
        for (m, c) in &self.terms {
            let mut t = c.value();
            for (&x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = f.mul_raw(t, f.pow_raw(x, e as i64).unwrap());
                    if t == 0 {
                        break;
                    }
                }
            }
            acc = f.add_raw(acc, t);
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]` (all in one target ring).
    pub fn compose(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Dimension("one image per variable required".into()));
        }
        if images.iter().any(|g| g.ring != *target) || target.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, *c);
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitutes `value` for variable `i`.
    pub fn substitute(&self, i: usize, value: &Polynomial) -> Result<Polynomial> {
        let images: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|j| if j == i { value.clone() } else { Polynomial::var(&self.ring, j) })
            .collect();
        self.compose(&self.ring, &images)
    }

    /// Human-readable form, terms listed in decreasing lex order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = &self.ring.field;
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let cs = f.render(*c);
                if m.is_one() {
                    cs
                } else if c.value() == 1 {
                    m.render(&self.ring.vars)
                } else {
                    format!("({cs})*{}", m.render(&self.ring.vars))
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Rendering under a given order, leading term first.
    pub fn render_sorted(&self, order: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = &self.ring.field;
        self.sorted_terms(order)
            .iter()
            .map(|(m, c)| {
                let cs = f.render(*c);
                if m.is_one() {
                    cs
                } else if c.value() == 1 {
                    m.render(&self.ring.vars)
                } else {
                    format!("({cs})*{}", m.render(&self.ring.vars))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field.neg(self.ring.field.one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    #[test]
    fn evaluation_examples() {
        let f = build_field(13, 1).unwrap();
        let r = PolyRing::new(f.clone(), ["x", "y"]);
        let p = Polynomial::from_int_terms(&r, &[(vec![3, 0], 1), (vec![0, 2], -1)]).unwrap();
        assert!(p.evaluate(&[f.from_int(4), f.from_int(8)]).unwrap().is_zero());
        assert_eq!(Polynomial::one(&r).evaluate(&[f.from_int(5), f.from_int(2)]).unwrap(), f.one());
        assert!(p.evaluate(&[f.one()]).is_err());
    }

    #[test]
    fn arithmetic_identities() {
        let f = build_field(3, 2).unwrap();
        let r = PolyRing::new(f.clone(), ["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let s = &x + &y;
        let d = &x - &y;
        assert_eq!(&s * &d, &x.pow(2) - &y.pow(2));
        assert!((&s - &s).is_zero());
        let sub = s.substitute(1, &x).unwrap();
        assert_eq!(sub, x.scale(f.from_int(2)));
    }

    #[test]
    fn mismatched_rings_rejected() {
        let f = build_field(2, 1).unwrap();
        let a = PolyRing::new(f.clone(), ["x"]);
        let b = PolyRing::new(f, ["y"]);
        assert!(matches!(Polynomial::var(&a, 0).try_add(&Polynomial::var(&b, 0)), Err(Error::RingMismatch)));
    }
}
