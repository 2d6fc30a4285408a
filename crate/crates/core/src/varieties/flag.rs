use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::grassmann::field_of_size;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::integer_rank;
use crate::mpoly::{Monomial, MonomialOrder, PolyRing, Polynomial, WeightMatrix};
use crate::orderdomain::Presentation;

/// Pluecker labels of `G(1, n) x G(n-1, n)` with the partial order
/// `pi >= pi'` iff `|pi| <= |pi'|` and `pi_s >= pi'_s` for `s <= |pi|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeH {
    pub n: usize,
    /// `(1), .., (n)` then `(1^), .., (n^)` where `j^` omits `j`.
    pub labels: Vec<Vec<usize>>,
    pub names: Vec<String>,
    /// `join[a][b]` is the least upper bound, when it exists.
    pub join: Vec<Vec<Option<usize>>>,
    pub meet: Vec<Vec<Option<usize>>>,
}

impl LatticeH {
    pub fn new(n: usize) -> LatticeH {
        let mut labels: Vec<Vec<usize>> = (1..=n).map(|j| vec![j]).collect();
        labels.extend((1..=n).map(|j| (1..=n).filter(|&i| i != j).collect()));
        let mut names: Vec<String> = (1..=n).map(|j| format!("p{j}")).collect();
        names.extend((1..=n).map(|j| format!("p{j}h")));
        let mut h = LatticeH { n, labels, names, join: Vec::new(), meet: Vec::new() };
        let size = h.labels.len();
        let bound = |upper: bool, a: usize, b: usize, h: &LatticeH| -> Option<usize> {
            let cands: Vec<usize> = (0..size)
                .filter(|&c| if upper { h.geq(c, a) && h.geq(c, b) } else { h.geq(a, c) && h.geq(b, c) })
                .collect();
            cands.iter().copied().find(|&c| cands.iter().all(|&d| if upper { h.geq(d, c) } else { h.geq(c, d) }))
        };
        let join = (0..size).map(|a| (0..size).map(|b| bound(true, a, b, &h)).collect()).collect();
        let meet = (0..size).map(|a| (0..size).map(|b| bound(false, a, b, &h)).collect()).collect();
        h.join = join;
        h.meet = meet;
        h
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn geq(&self, a: usize, b: usize) -> bool {
        let (x, y) = (&self.labels[a], &self.labels[b]);
        x.len() <= y.len() && x.iter().zip(y).all(|(i, j)| i >= j)
    }

    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.geq(a, b) && !self.geq(b, a))
            .collect()
    }

    pub fn index_of(&self, label: &[usize]) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Result of the flag construction.
#[derive(Clone, Debug)]
pub struct FlagData {
    pub lattice: LatticeH,
    pub relation: Polynomial,
    pub presentation: Option<Presentation>,
    /// Candidate rows examined by the weight search.
    pub rows_examined: usize,
    pub failure: Option<String>,
}

/// Nonnegative vectors of length `len` with entry sum `norm`, in
/// decreasing lexicographic order.
fn compositions(len: usize, norm: u64) -> Vec<Vec<u64>> {
    fn go(i: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in (0..=left).rev() {
            cur[i] = v;
            go(i + 1, left - v, cur, out);
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        go(0, norm, &mut vec![0; len], &mut out);
    }
    out
}

/// The flag variety `F(1, n-1; n)`: one relation
/// `sum_j (-1)^(j+1) p(j) p(j^)` from expanding a determinant along the row
/// of the line, plus a searched weight matrix. Rows orthogonal to
/// `e(1) + e(1^) - e(2) - e(2^)` are added greedily by increasing entry sum
/// (entries at most `2n`) until the rank is `2n - 1`; the first row must put
/// `p(1) p(1^)` strictly above every `p(j) p(j^)` with `j >= 3`.
pub fn flag_presentation(n: usize, q: u32, limits: &Limits) -> Result<FlagData> {
    if n < 3 {
        return Err(Error::Invalid("flag varieties F(1, n-1; n) need n >= 3".into()));
    }
    let field = field_of_size(q)?;
    let lattice = LatticeH::new(n);
    let s = 2 * n;
    let ring: Arc<PolyRing> = PolyRing::new(field.clone(), lattice.names.clone());
    let relation = Polynomial::from_terms(
        &ring,
        (0..n).map(|j| {
            let m = Monomial::var(s, j, 1).mul(&Monomial::var(s, n + j, 1));
            let c = if j % 2 == 0 { field.one() } else { field.neg(field.one()) };
            (m, c)
        }),
    )?;
    let v: Vec<i64> = (0..s)
        .map(|i| match i {
            0 => 1,
            1 => -1,
            _ if i == n => 1,
            _ if i == n + 1 => -1,
            _ => 0,
        })
        .collect();
    let pair_weight = |row: &[u64], j: usize| row[j] + row[n + j];
    let target = s - 1;
    let max_entry = 2 * n as u64;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut examined = 0usize;
    'outer: for norm in 1..=(max_entry * s as u64) {
        for cand in compositions(s, norm) {
            if cand.iter().any(|&x| x > max_entry) {
                continue;
            }
            examined += 1;
            let dot: i64 = cand.iter().zip(&v).map(|(&a, &b)| a as i64 * b).sum();
            if dot != 0 {
                continue;
            }
            if rows.is_empty() && !(2..n).all(|j| pair_weight(&cand, 0) > pair_weight(&cand, j)) {
                continue;
            }
            let mut trial: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
            trial.push(cand.iter().map(|&x| x as i64).collect());
            if integer_rank(&trial) == trial.len() {
                rows.push(cand);
                if rows.len() == target {
                    break 'outer;
                }
            }
        }
    }
    if rows.len() < target {
        return Ok(FlagData {
            lattice,
            relation,
            presentation: None,
            rows_examined: examined,
            failure: Some(format!("weight search reached rank {} of {target} with entries <= {max_entry}", rows.len())),
        });
    }
    let mut p = Presentation::with_limits(
        format!("flag:{n}:{q}"),
        ring,
        vec![relation.clone()],
        WeightMatrix::new(rows)?,
        MonomialOrder::Lex,
        limits,
    )?;
    let report = p.verify(None, limits)?.clone();
    let failure = (!report.passed).then(|| {
        format!(
            "searched weights fail verification: {}",
            report.witness.as_ref().map(|w| w.describe()).unwrap_or_default()
        )
    });
    Ok(FlagData { lattice, relation, presentation: failure.is_none().then_some(p), rows_examined: examined, failure })
}
