use std::sync::Arc;

use super::PointSet;
use crate::error::{Error, Result};
use crate::gf::{build_field, prime_power, Field, FieldElement};
use crate::limits::Limits;
use crate::mpoly::{eliminate_with, Monomial, MonomialOrder, PolyRing, Polynomial, WeightMatrix};
use crate::orderdomain::Presentation;

/// Minors, diagonal terms and the Pluecker ideal of `G(k, n)`.
#[derive(Clone, Debug)]
pub struct GrassmannianData {
    pub k: usize,
    pub n: usize,
    /// Column subsets (1-based) in lexicographic order; subset `l` belongs to `X_(l+1)`.
    pub subsets: Vec<Vec<usize>>,
    /// Ring of the generic matrix entries `t_ij`, listed row-wise.
    pub t_ring: Arc<PolyRing>,
    pub minors: Vec<Polynomial>,
    pub diagonal_terms: Vec<Monomial>,
    /// `binom(n, k) x kn`; row `l` marks the diagonal of minor `l`.
    pub b_matrix: Vec<Vec<u64>>,
    pub plucker_ring: Arc<PolyRing>,
    /// Reduced grevlex basis of the Pluecker ideal.
    pub plucker_ideal: Vec<Polynomial>,
}

/// `k`-subsets of `1..=n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..=n {
            cur.push(c);
            go(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, inversions % 2 == 0)
        })
        .collect()
}

pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (q as u128).pow(n - i) - 1;
        den *= (q as u128).pow(i + 1) - 1;
    }
    (num / den) as u64
}

fn check_shape(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::Invalid(format!("need 1 <= k < n, got k = {k}, n = {n}")));
    }
    Ok(())
}

pub fn grassmannian_data(k: usize, n: usize, field: &Arc<Field>, limits: &Limits) -> Result<GrassmannianData> {
    check_shape(k, n)?;
    let subs = subsets(n, k);
    let big_n = subs.len();
    let kn = k * n;
    let mut names: Vec<String> = (1..=k).flat_map(|i| (1..=n).map(move |j| format!("t{i}{j}"))).collect();
    let t_ring = PolyRing::new(field.clone(), names.clone());
    let perms = permutations(k);
    let t_index = |i: usize, j: usize| i * n + (j - 1);
    let minor_terms = |s: &[usize]| -> Vec<(Monomial, FieldElement)> {
        perms
            .iter()
            .map(|(p, even)| {
                let mut e = vec![0u32; kn];
                for (row, &col) in p.iter().enumerate() {
                    e[t_index(row, s[col])] += 1;
                }
                (Monomial::new(e), if *even { field.one() } else { field.neg(field.one()) })
            })
            .collect()
    };
    let minors: Vec<Polynomial> =
        subs.iter().map(|s| Polynomial::from_terms(&t_ring, minor_terms(s))).collect::<Result<_>>()?;
    let diagonal_terms: Vec<Monomial> = subs
        .iter()
        .map(|s| {
            let mut e = vec![0u32; kn];
            for (row, &col) in s.iter().enumerate() {
                e[t_index(row, col)] = 1;
            }
            Monomial::new(e)
        })
        .collect();
    let b_matrix: Vec<Vec<u64>> =
        diagonal_terms.iter().map(|m| m.exponents().iter().map(|&e| e as u64).collect()).collect();

    let xnames: Vec<String> = (1..=big_n).map(|l| format!("X{l}")).collect();
    names.extend(xnames.iter().cloned());
    let big = PolyRing::new(field.clone(), names);
    let total = kn + big_n;
    let gens: Vec<Polynomial> = minors
        .iter()
        .enumerate()
        .map(|(l, m)| {
            let mut terms = vec![(Monomial::var(total, kn + l, 1), field.one())];
            for (mono, c) in m.terms() {
                let mut e = mono.exponents().to_vec();
                e.resize(total, 0);
                terms.push((Monomial::new(e), field.neg(*c)));
            }
            Polynomial::from_terms(&big, terms)
        })
        .collect::<Result<_>>()?;
    let keep: Vec<usize> = (kn..total).collect();
    let e = eliminate_with(&gens, &keep, &MonomialOrder::Grevlex, limits)?;
    let plucker_ring = PolyRing::new(field.clone(), xnames);
    let plucker_ideal = e
        .basis
        .iter()
        .map(|g| Polynomial::from_terms(&plucker_ring, g.terms().map(|(m, c)| (m.clone(), *c))))
        .collect::<Result<_>>()?;
    Ok(GrassmannianData { k, n, subsets: subs, t_ring, minors, diagonal_terms, b_matrix, plucker_ring, plucker_ideal })
}

/// The affine cone over `G(k, n)` over `GF(q)` with weights `B_(k,n)^T` and
/// grevlex tie-break.
pub fn grassmann_presentation(k: usize, n: usize, q: u32, limits: &Limits) -> Result<(Presentation, GrassmannianData)> {
    let field = field_of_size(q)?;
    let data = grassmannian_data(k, n, &field, limits)?;
    let big_n = data.subsets.len();
    let rows: Vec<Vec<u64>> = (0..k * n).map(|c| (0..big_n).map(|l| data.b_matrix[l][c]).collect()).collect();
    let weights = WeightMatrix::new(rows)?;
    let mut p = Presentation::with_limits(
        format!("grass:{k}:{n}:{q}"),
        data.plucker_ring.clone(),
        data.plucker_ideal.clone(),
        weights,
        MonomialOrder::Grevlex,
        limits,
    )?;
    p.add_note("variables", "X_l is the minor on the l-th column subset in lexicographic order");
    Ok((p.verified(None, limits)?, data))
}

pub(crate) fn field_of_size(q: u32) -> Result<Arc<Field>> {
    let (p, e) = prime_power(q as u64).ok_or(Error::NotPrime(q as u64))?;
    build_field(p, e)
}

fn det(field: &Field, mut a: Vec<Vec<FieldElement>>) -> FieldElement {
    let k = a.len();
    let mut d = field.one();
    for col in 0..k {
        let Some(piv) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return field.zero();
        };
        if piv != col {
            a.swap(piv, col);
            d = field.neg(d);
        }
        let inv = field.inv(a[col][col]).unwrap();
        d = field.mul(d, a[col][col]);
        for r in col + 1..k {
            let factor = field.mul(a[r][col], inv);
            if factor.is_zero() {
                continue;
            }
            let pivot = a[col].clone();
            for (x, &y) in a[r][col..].iter_mut().zip(&pivot[col..]) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
    }
    d
}

/// One normalized Pluecker vector per `k`-dimensional subspace of `GF(q)^n`,
/// from reduced row-echelon bases; the first nonzero coordinate is 1.
pub fn grassmann_points(k: usize, n: usize, q: u32, limits: &Limits) -> Result<PointSet> {
    check_shape(k, n)?;
    let field = field_of_size(q)?;
    let expected = gaussian_binomial(n as u32, k as u32, q as u64);
    if expected > limits.max_points {
        return Err(Error::Ceiling(format!("{expected} subspaces exceed the point limit")));
    }
    let subs = subsets(n, k);
    let mut points: Vec<Vec<FieldElement>> = Vec::with_capacity(expected as usize);
    for pivots in &subs {
        // free positions: row i, columns after pivot i that are not pivots
        let free: Vec<(usize, usize)> =
            (0..k).flat_map(|i| ((pivots[i] + 1)..=n).filter(|c| !pivots.contains(c)).map(move |c| (i, c))).collect();
        let mut assign = vec![0u32; free.len()];
        loop {
            let mut m = vec![vec![field.zero(); n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                m[i][p - 1] = field.one();
            }
            for (&(i, c), &v) in free.iter().zip(&assign) {
                m[i][c - 1] = field.element(v).unwrap();
            }
            let mut pl: Vec<FieldElement> = subs
                .iter()
                .map(|s| det(&field, m.iter().map(|row| s.iter().map(|&c| row[c - 1]).collect()).collect()))
                .collect();
            let lead = *pl.iter().find(|x| !x.is_zero()).expect("a basis has a nonzero minor");
            let inv = field.inv(lead)?;
            for x in &mut pl {
                *x = field.mul(*x, inv);
            }
            points.push(pl);
            let mut i = 0;
            while i < assign.len() {
                assign[i] += 1;
                if assign[i] < field.size() {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
            if i == assign.len() {
                break;
            }
        }
    }
    points.sort();
    Ok(PointSet { field, dim: subs.len(), points })
}
