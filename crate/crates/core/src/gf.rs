//! Exact arithmetic in small finite fields `GF(p^m)`.
//!
//! Elements are stored by their integer code `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! where `c_i` is the coefficient of `a^i` in the power basis of a root `a`
//! of the field modulus. Multiplication goes through exp/log tables built
//! from [`Field::primitive`]; addition is digit-wise mod `p`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default ceiling on the cardinality of constructed fields.
pub const DEFAULT_FIELD_CEILING: u64 = 1 << 16;

/// Serializable description of a field: characteristic, degree and modulus.
///
/// `modulus` lists the coefficients of the monic modulus from the constant
/// term upwards, so `x^2 + x + 1` is `[1, 1, 1]`. For prime fields the
/// modulus is the placeholder `x`, i.e. `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn cardinality(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }
}

/// Fingerprint of a field, carried by every element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldId(u64);

/// An element of some [`Field`].
///
/// Ordering compares the integer code, which is the lexicographic order on
/// coefficient vectors read from the highest power of the root down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: FieldId,
    value: u32,
}

impl FieldElement {
    /// Integer code of the element inside its field.
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field_id(self) -> FieldId {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

/// Arithmetic operation selector for [`Field::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// A finite field with precomputed exp/log tables.
pub struct Field {
    spec: FieldSpec,
    id: FieldId,
    q: u32,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.spec.p, self.spec.m, self.spec.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^e` with `p` prime, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut e = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo `b` over GF(p); coefficient lists low degree first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let factor = (top * lead_inv) % p;
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (factor * bc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn digits(code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    let mut c = code;
    for _ in 0..m {
        out.push(c % p);
        c /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// True when the monic polynomial `f` (low degree first) has no monic factor
/// of degree between 1 and `deg f / 2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for lower in 0..count {
            let mut g = digits(lower as u32, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Slow multiplication modulo the modulus, used only while building tables.
fn slow_mul(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let m = modulus.len() - 1;
    let da = digits(a, p, m as u32);
    let db = digits(b, p, m as u32);
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let r = if m == 1 { prod } else { poly_rem(&prod, modulus, p) };
    let mut r = r;
    r.resize(m, 0);
    undigits(&r, p)
}

fn slow_pow(a: u32, mut e: u64, p: u32, modulus: &[u32]) -> u32 {
    let mut result = 1u32;
    let mut base = a;
    while e > 0 {
        if e & 1 == 1 {
            result = slow_mul(result, base, p, modulus);
        }
        base = slow_mul(base, base, p, modulus);
        e >>= 1;
    }
    result
}

fn fingerprint(spec: &FieldSpec) -> FieldId {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    feed(spec.p as u64);
    feed(spec.m as u64);
    for &c in &spec.modulus {
        feed(c as u64);
    }
    FieldId(h)
}

/// Builds `GF(p^m)` with the lexicographically least monic irreducible modulus.
pub fn build_field(p: u32, m: u32) -> Result<Arc<Field>> {
    Field::new(p, m, DEFAULT_FIELD_CEILING)
}

impl Field {
    pub fn new(p: u32, m: u32, ceiling: u64) -> Result<Arc<Field>> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= ceiling);
        let Some(q) = q else {
            return Err(Error::FieldCeiling { p: p as u64, m, ceiling });
        };
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|lower| {
                    let mut f = digits(lower as u32, p, m);
                    f.push(1);
                    f
                })
                .find(|f| is_irreducible(f, p))
                .ok_or_else(|| Error::Internal("no irreducible modulus found".into()))?
        };
        Ok(Arc::new(Self::from_parts(FieldSpec { p, m, modulus })))
    }

    /// Rebuilds a field from a serialized spec, checking irreducibility.
    pub fn from_spec(spec: &FieldSpec) -> Result<Arc<Field>> {
        if !is_prime(spec.p as u64) {
            return Err(Error::NotPrime(spec.p as u64));
        }
        if spec.m == 0 || spec.modulus.len() != spec.m as usize + 1 {
            return Err(Error::InvalidField("modulus degree does not match m".into()));
        }
        if spec.cardinality() > DEFAULT_FIELD_CEILING {
            return Err(Error::FieldCeiling { p: spec.p as u64, m: spec.m, ceiling: DEFAULT_FIELD_CEILING });
        }
        if spec.modulus.iter().any(|&c| c >= spec.p) || *spec.modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic with entries below p".into()));
        }
        if spec.m == 1 {
            if spec.modulus != [0, 1] {
                return Err(Error::InvalidField("prime field modulus must be [0, 1]".into()));
            }
        } else if !is_irreducible(&spec.modulus, spec.p) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }
        Ok(Arc::new(Self::from_parts(spec.clone())))
    }

    fn from_parts(spec: FieldSpec) -> Field {
        let p = spec.p;
        let q = spec.cardinality() as u32;
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let primitive = (1..q)
            .find(|&g| factors.iter().all(|&l| slow_pow(g, order / l, p, &spec.modulus) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order as usize {
            exp[i] = x;
            exp[i + order as usize] = x;
            log[x as usize] = i as u32;
            x = slow_mul(x, primitive, p, &spec.modulus);
        }
        let id = fingerprint(&spec);
        Field { spec, id, q, primitive, exp, log }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn id(&self) -> FieldId {
        self.id
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.m
    }

    /// Number of elements `q = p^m`.
    pub fn size(&self) -> u32 {
        self.q
    }

    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement { field: self.id, value }
    }

    #[inline]
    fn check(&self, a: FieldElement) {
        assert_eq!(a.field, self.id, "field element used with a different field");
    }

    pub fn owns(&self, a: FieldElement) -> bool {
        a.field == self.id
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// Element with the given integer code.
    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code >= self.q {
            return Err(Error::Invalid(format!("code {code} out of range for field of size {}", self.q)));
        }
        Ok(self.wrap(code))
    }

    /// All elements in increasing code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |v| self.wrap(v))
    }

    /// Image of an integer under `Z -> GF(p) -> GF(p^m)`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.wrap(n.rem_euclid(self.spec.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.spec.m as usize || coeffs.iter().any(|&c| c >= self.spec.p) {
            return Err(Error::Invalid(format!("bad coefficient vector {coeffs:?}")));
        }
        Ok(self.wrap(undigits(coeffs, self.spec.p)))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        self.check(a);
        digits(a.value, self.spec.p, self.spec.m)
    }

    /// The root `a` of the modulus (for prime fields this is 0).
    pub fn generator_root(&self) -> FieldElement {
        if self.spec.m == 1 {
            self.zero()
        } else {
            self.wrap(self.spec.p)
        }
    }

    /// Least element (by code) of multiplicative order `q - 1`.
    pub fn primitive(&self) -> FieldElement {
        self.wrap(self.primitive)
    }

    // Raw arithmetic on codes; callers guarantee the codes belong to this field.

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p;
        if p == 2 {
            return a ^ b;
        }
        if self.spec.m == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b, mut scale, mut out) = (a, b, 1u32, 0u32);
        while a > 0 || b > 0 {
            let d = (a % p + b % p) % p;
            out += d * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        let p = self.spec.p;
        if p == 2 {
            return a;
        }
        if self.spec.m == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let (mut a, mut scale, mut out) = (a, 1u32, 0u32);
        while a > 0 {
            let d = (p - a % p) % p;
            out += d * scale;
            scale *= p;
            a /= p;
        }
        out
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    /// Inverse of a nonzero code.
    #[inline]
    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let order = self.q - 1;
        self.exp[((order - self.log[a as usize]) % order) as usize]
    }

    pub(crate) fn pow_raw(&self, a: u32, e: i64) -> Option<u32> {
        if a == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Less => None,
                std::cmp::Ordering::Equal => Some(1),
                std::cmp::Ordering::Greater => Some(0),
            };
        }
        let order = (self.q - 1) as i64;
        let l = (self.log[a as usize] as i64 * e.rem_euclid(order)).rem_euclid(order);
        Some(self.exp[l as usize])
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        self.wrap(self.add_raw(a.value, b.value))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        self.wrap(self.sub_raw(a.value, b.value))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        self.wrap(self.neg_raw(a.value))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        self.wrap(self.mul_raw(a.value, b.value))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a);
        if a.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.wrap(self.inv_raw(a.value)))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let inv = self.inv(b)?;
        Ok(self.mul(a, inv))
    }

    /// `a^e` for any integer exponent; negative exponents go through the inverse.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        self.check(a);
        self.pow_raw(a.value, e).map(|v| self.wrap(v)).ok_or(Error::DivisionByZero)
    }

    /// Checked binary/unary arithmetic that reports mixed fields as an error.
    /// Unary operations ignore `b`.
    pub fn arith(&self, op: ArithOp, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let unary = matches!(op, ArithOp::Neg | ArithOp::Inv);
        if a.field != self.id || (!unary && b.field != self.id) {
            return Err(Error::MixedFields);
        }
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Sub => Ok(self.sub(a, b)),
            ArithOp::Mul => Ok(self.mul(a, b)),
            ArithOp::Div => self.div(a, b),
            ArithOp::Neg => Ok(self.neg(a)),
            ArithOp::Inv => self.inv(a),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u32> {
        self.check(a);
        if a.value == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        let l = self.log[a.value as usize];
        Ok(n / gcd(n, l))
    }

    /// Human-readable form, using `a` for the root of the modulus.
    pub fn render(&self, x: FieldElement) -> String {
        self.check(x);
        if self.spec.m == 1 {
            return x.value.to_string();
        }
        let cs = self.coeffs(x);
        let mut parts = Vec::new();
        for (i, &c) in cs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least element of multiplicative order `q - 1`.
pub fn primitive_element(field: &Field) -> FieldElement {
    field.primitive()
}

/// Constants for the Hermitian coordinate changes over `GF(q^2)`.
#[derive(Clone, Debug)]
pub struct HermitianConstants {
    pub field: Arc<Field>,
    pub q: u32,
    /// Least element with `delta^(q+1) = -1`.
    pub delta: FieldElement,
    /// Least element with `gamma^q + gamma = -1`.
    pub gamma: FieldElement,
}

/// Builds `GF(q^2)` and scans it for the Hermitian constants.
pub fn hermitian_constants(q: u32) -> Result<HermitianConstants> {
    let (p, e) = prime_power(q as u64).ok_or(Error::NotPrime(q as u64))?;
    let field = build_field(p, 2 * e)?;
    let minus_one = field.neg(field.one());
    let delta = field
        .elements()
        .find(|&x| field.pow(x, q as i64 + 1).ok() == Some(minus_one))
        .ok_or_else(|| Error::Internal("no delta with delta^(q+1) = -1".into()))?;
    let gamma = field
        .elements()
        .find(|&x| field.add(field.pow(x, q as i64).unwrap(), x) == minus_one)
        .ok_or_else(|| Error::Internal("no gamma with gamma^q + gamma = -1".into()))?;
    Ok(HermitianConstants { field, q, delta, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn all_small_fields() -> Vec<Arc<Field>> {
        [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (13, 1)]
            .iter()
            .map(|&(p, m)| build_field(p, m).unwrap())
            .collect()
    }

    #[test]
    fn moduli_are_lex_least() {
        assert_eq!(build_field(2, 1).unwrap().spec().modulus, vec![0, 1]);
        assert_eq!(build_field(2, 2).unwrap().spec().modulus, vec![1, 1, 1]);
        assert_eq!(build_field(3, 2).unwrap().spec().modulus, vec![1, 0, 1]);
    }

    #[test]
    fn gf3_squared_modulus_matches_brute_force_scan() {
        // Oracle: a monic quadratic is irreducible iff it has no root in GF(3).
        let mut irreducible = Vec::new();
        for b1 in 0..3u32 {
            for b0 in 0..3u32 {
                let has_root = (0..3u32).any(|x| (x * x + b1 * x + b0) % 3 == 0);
                if !has_root {
                    irreducible.push((b1, b0));
                }
            }
        }
        irreducible.sort();
        assert_eq!(irreducible[0], (0, 1));
    }

    #[test]
    fn gf4_products() {
        let f = build_field(2, 2).unwrap();
        let w = f.generator_root();
        let w1 = f.add(w, f.one());
        assert_eq!(f.mul(w, w), w1);
        assert_eq!(f.inv(w).unwrap(), w1);
        assert_eq!(f.mul(w, w1), f.one());
    }

    #[test]
    fn characteristic_two_doubles_vanish() {
        let f = build_field(2, 3).unwrap();
        for a in f.elements() {
            assert!(f.add(a, a).is_zero());
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(build_field(2, 1).unwrap().primitive().value(), 1);
        let f4 = build_field(2, 2).unwrap();
        assert_eq!(f4.primitive(), f4.generator_root());
        let f9 = build_field(3, 2).unwrap();
        // Oracle: scan nonzero elements and compute orders by direct powering.
        let brute = f9
            .elements()
            .skip(1)
            .find(|&x| {
                let mut y = x;
                let mut k = 1;
                while y != f9.one() {
                    y = f9.mul(y, x);
                    k += 1;
                }
                k == 8
            })
            .unwrap();
        assert_eq!(f9.primitive(), brute);
    }

    #[test]
    fn fermat_little_theorem_exhaustive() {
        for f in all_small_fields() {
            let q = f.size() as i64;
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, q - 1).unwrap(), f.one());
            }
        }
        for (p, m) in [(5, 2), (2, 4), (3, 2)] {
            assert!(build_field(p, m).unwrap().size() <= 25);
        }
    }

    #[test]
    fn field_axioms_random_probe() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in all_small_fields() {
            let q = f.size();
            for _ in 0..1000 {
                let a = f.element(rng.gen_range(0..q)).unwrap();
                let b = f.element(rng.gen_range(0..q)).unwrap();
                let c = f.element(rng.gen_range(0..q)).unwrap();
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn pow_accepts_negative_exponents() {
        let f = build_field(3, 2).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.pow(a, -1).unwrap(), f.inv(a).unwrap());
            assert_eq!(f.mul(f.pow(a, -5).unwrap(), f.pow(a, 5).unwrap()), f.one());
        }
        assert!(matches!(f.pow(f.zero(), -1), Err(Error::DivisionByZero)));
        assert_eq!(f.pow(f.zero(), 0).unwrap(), f.one());
    }

    #[test]
    fn errors_are_reported() {
        assert!(matches!(build_field(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(build_field(2, 17), Err(Error::FieldCeiling { .. })));
        let f = build_field(2, 2).unwrap();
        assert!(matches!(f.div(f.one(), f.zero()), Err(Error::DivisionByZero)));
        let g = build_field(3, 1).unwrap();
        assert!(matches!(f.arith(ArithOp::Add, f.one(), g.one()), Err(Error::MixedFields)));
    }

    #[test]
    fn hermitian_constants_satisfy_their_equations() {
        let h = hermitian_constants(2).unwrap();
        assert_eq!(h.delta, h.field.one());
        assert_eq!(h.gamma, h.field.generator_root());
        for q in [2u32, 3, 4, 5] {
            let h = hermitian_constants(q).unwrap();
            let f = &h.field;
            let minus_one = f.neg(f.one());
            assert_eq!(f.pow(h.delta, q as i64 + 1).unwrap(), minus_one);
            assert_eq!(f.add(f.pow(h.gamma, q as i64).unwrap(), h.gamma), minus_one);
            // Both are the least solutions.
            for x in f.elements().take_while(|&x| x < h.delta) {
                assert_ne!(f.pow(x, q as i64 + 1).unwrap(), minus_one);
            }
        }
        let h3 = hermitian_constants(3).unwrap();
        let f = &h3.field;
        assert_eq!(f.pow(h3.delta, 4).unwrap(), f.neg(f.one()));
    }

    #[test]
    fn spec_round_trip() {
        let f = build_field(5, 2).unwrap();
        let json = serde_json::to_string(f.spec()).unwrap();
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        let g = Field::from_spec(&back).unwrap();
        assert_eq!(*f, *g);
        let bad = FieldSpec { p: 2, m: 2, modulus: vec![1, 0, 1] };
        assert!(Field::from_spec(&bad).is_err());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
