use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial `X^alpha`.
///
/// The derived ordering is lexicographic with the first variable largest,
/// which is also the canonical term order of [`Polynomial`](super::Polynomial).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, power: u32) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    /// Renders the monomial with the given variable names, `1` for the unit.
    pub fn render(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// All monomials in `nvars` variables of total degree at most `max_degree`,
/// in increasing degree and then lexicographic order.
pub fn monomials_up_to_degree(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut cur = vec![0u32; nvars];
        fill(&mut cur, 0, d, &mut out);
    }
    out
}

fn fill(cur: &mut Vec<u32>, idx: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if idx + 1 >= cur.len() {
        if let Some(last) = cur.len().checked_sub(1) {
            cur[last] = remaining;
            out.push(Monomial(cur.clone()));
            cur[last] = 0;
        } else if remaining == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    for e in (0..=remaining).rev() {
        cur[idx] = e;
        fill(cur, idx + 1, remaining - e, out);
    }
    cur[idx] = 0;
}

/// Number of monomials in `nvars` variables of total degree at most `d`.
pub fn count_up_to_degree(nvars: usize, d: u32) -> u128 {
    binomial(d as u128 + nvars as u128, nvars as u128)
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_up_to_degree(3, 2).len(), 10);
        assert_eq!(count_up_to_degree(3, 2), 10);
        assert_eq!(monomials_up_to_degree(10, 3).len() as u128, count_up_to_degree(10, 3));
        assert_eq!(monomials_up_to_degree(1, 4).len(), 5);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(vec![1, 2, 0]);
        let b = Monomial::new(vec![0, 1, 3]);
        assert_eq!(a.lcm(&b), Monomial::new(vec![1, 2, 3]));
        assert!(b.divides(&a.lcm(&b)));
        assert!(!a.is_coprime(&b));
        assert_eq!(a.mul(&b).div(&b), a);
    }
}
