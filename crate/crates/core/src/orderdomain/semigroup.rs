use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mpoly::WeightMatrix;

/// The semigroup generated by the columns of a weight matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupData {
    generators: Vec<Vec<u64>>,
}

/// A nonnegative combination of generators summing to a queried vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub coefficients: Vec<u64>,
}

impl SemigroupData {
    pub fn new(generators: Vec<Vec<u64>>) -> Result<SemigroupData> {
        let r = generators.first().map_or(0, Vec::len);
        if generators.iter().any(|g| g.len() != r) {
            return Err(Error::Dimension("semigroup generators have different lengths".into()));
        }
        Ok(SemigroupData { generators })
    }

    pub fn from_matrix(m: &WeightMatrix) -> SemigroupData {
        SemigroupData { generators: (0..m.ncols()).map(|j| m.column(j)).collect() }
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.first().map_or(0, Vec::len)
    }

    /// Entries are unsigned, so the only possible unit is a zero generator.
    pub fn is_inverse_free(&self) -> bool {
        self.generators.iter().all(|g| g.iter().any(|&x| x > 0))
    }

    /// Sums `coefficients * generators`.
    pub fn combine(&self, coefficients: &[u64]) -> Vec<u64> {
        let mut v = vec![0u64; self.rank()];
        for (g, &c) in self.generators.iter().zip(coefficients) {
            for (x, &y) in v.iter_mut().zip(g) {
                *x += c * y;
            }
        }
        v
    }

    /// Elements of a one-dimensional semigroup missing from `0..=bound`.
    pub fn gaps(&self, bound: u64) -> Result<Vec<u64>> {
        if self.rank() != 1 {
            return Err(Error::Dimension("gaps are defined for one-dimensional semigroups".into()));
        }
        Ok((0..=bound).filter(|&v| semigroup_membership(&[v], self).is_none()).collect())
    }
}

/// Searches for a certificate that `v` lies in the semigroup. Each
/// generator's coefficient is bounded by `v` divided by its smallest nonzero
/// coordinate ratio, so the search is finite and `None` certifies absence.
pub fn semigroup_membership(v: &[u64], s: &SemigroupData) -> Option<Membership> {
    if v.len() != s.rank() && !s.generators.is_empty() {
        return None;
    }
    let mut coeffs = vec![0u64; s.generators.len()];
    let mut rest = v.to_vec();
    if search(&s.generators, 0, &mut rest, &mut coeffs) {
        debug_assert_eq!(s.combine(&coeffs), v);
        Some(Membership { coefficients: coeffs })
    } else {
        None
    }
}

fn search(gens: &[Vec<u64>], j: usize, rest: &mut [u64], coeffs: &mut [u64]) -> bool {
    if rest.iter().all(|&x| x == 0) {
        return true;
    }
    if j == gens.len() {
        return false;
    }
    let g = &gens[j];
    let max = g.iter().zip(rest.iter()).filter(|(&a, _)| a > 0).map(|(&a, &b)| b / a).min();
    let Some(max) = max else {
        // zero generator contributes nothing
        return search(gens, j + 1, rest, coeffs);
    };
    for c in (0..=max).rev() {
        for (x, &a) in rest.iter_mut().zip(g) {
            *x -= c * a;
        }
        coeffs[j] = c;
        let ok = search(gens, j + 1, rest, coeffs);
        for (x, &a) in rest.iter_mut().zip(g) {
            *x += c * a;
        }
        if ok {
            return true;
        }
    }
    coeffs[j] = 0;
    false
}
