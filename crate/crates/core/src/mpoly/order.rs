use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};
use crate::matrix::integer_rank;

/// An `r x s` matrix with nonnegative integer entries.
///
/// Rows need not be linearly independent; the tie-break order of a weight
/// order takes care of totality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u64>>", into = "Vec<Vec<u64>>")]
pub struct WeightMatrix {
    rows: Vec<Vec<u64>>,
    ncols: usize,
}

impl TryFrom<Vec<Vec<u64>>> for WeightMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u64>>) -> Result<Self> {
        WeightMatrix::new(rows)
    }
}

impl From<WeightMatrix> for Vec<Vec<u64>> {
    fn from(m: WeightMatrix) -> Self {
        m.rows
    }
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<WeightMatrix> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("weight matrix rows have different lengths".into()));
        }
        Ok(WeightMatrix { rows, ncols })
    }

    /// Weight matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<u64>]) -> Result<WeightMatrix> {
        let nrows = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|c| c.len() != nrows) {
            return Err(Error::Dimension("weight matrix columns have different lengths".into()));
        }
        let rows = (0..nrows).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        WeightMatrix::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn transpose(&self) -> WeightMatrix {
        let rows = (0..self.ncols).map(|j| self.column(j)).collect();
        WeightMatrix::new(rows).unwrap()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<i64>> = self.rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        integer_rank(&rows)
    }

    /// The M-weight `M alpha` of an exponent vector.
    pub fn weight(&self, exp: &[u32]) -> Vec<u64> {
        self.rows.iter().map(|r| dot(r, exp)).collect()
    }

    /// `sum_i coeffs[i] * row_i`.
    pub fn row_combination(&self, coeffs: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.ncols];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    /// The matrix with zero columns inserted so that column `j` lands at `positions[j]`.
    pub fn embed_columns(&self, positions: &[usize], total: usize) -> WeightMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![0; total];
                for (j, &pos) in positions.iter().enumerate() {
                    out[pos] = r[j];
                }
                out
            })
            .collect();
        WeightMatrix::new(rows).unwrap()
    }
}

#[inline]
pub(crate) fn dot(row: &[u64], exp: &[u32]) -> u64 {
    row.iter().zip(exp).map(|(&w, &e)| w * e as u64).sum()
}

/// Monomial orders: lex, graded reverse lex, and weight orders `>_{M,tau}`.
///
/// Variables are ranked in their declared sequence, the first being largest.
/// A weight order compares `M alpha` lexicographically and breaks ties with
/// `tie`, which may itself be any monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    Weight { matrix: WeightMatrix, tie: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn weight(matrix: WeightMatrix, tie: MonomialOrder) -> MonomialOrder {
        MonomialOrder::Weight { matrix, tie: Box::new(tie) }
    }

    /// Checks that every weight matrix has one column per variable.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::Lex | MonomialOrder::Grevlex => Ok(()),
            MonomialOrder::Weight { matrix, tie } => {
                if matrix.ncols() != nvars {
                    return Err(Error::Dimension(format!(
                        "weight matrix has {} columns for {} variables",
                        matrix.ncols(),
                        nvars
                    )));
                }
                tie.validate(nvars)
            }
        }
    }

    /// Compares two exponent vectors of equal length.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exp(a.exponents(), b.exponents())
    }

    pub(crate) fn cmp_exp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Weight { matrix, tie } => {
                for row in matrix.rows() {
                    let o = dot(row, a).cmp(&dot(row, b));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                tie.cmp_exp(a, b)
            }
        }
    }

    /// An order-embedding key: `a > b` iff `key(a) > key(b)` lexicographically.
    pub fn key(&self, exp: &[u32]) -> Vec<i64> {
        let mut out = Vec::new();
        self.push_key(exp, &mut out);
        out
    }

    fn push_key(&self, exp: &[u32], out: &mut Vec<i64>) {
        match self {
            MonomialOrder::Lex => out.extend(exp.iter().map(|&e| e as i64)),
            MonomialOrder::Grevlex => {
                out.push(exp.iter().map(|&e| e as i64).sum());
                out.extend(exp.iter().rev().map(|&e| -(e as i64)));
            }
            MonomialOrder::Weight { matrix, tie } => {
                out.extend(matrix.rows().iter().map(|r| dot(r, exp) as i64));
                tie.push_key(exp, out);
            }
        }
    }

    /// Re-expresses an order on a subset of variables as an order on a larger
    /// ring in which variable `j` of the subset sits at `positions[j]`; the
    /// restriction to monomials in those variables is unchanged.
    pub fn embed(&self, positions: &[usize], total: usize) -> MonomialOrder {
        match self {
            MonomialOrder::Lex => MonomialOrder::Lex,
            MonomialOrder::Grevlex => MonomialOrder::Grevlex,
            MonomialOrder::Weight { matrix, tie } => MonomialOrder::Weight {
                matrix: matrix.embed_columns(positions, total),
                tie: Box::new(tie.embed(positions, total)),
            },
        }
    }

    /// Name used in tables and reports.
    pub fn describe(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Weight { matrix, tie } => {
                format!("weight{:?} then {}", matrix.rows(), tie.describe())
            }
        }
    }
}

/// Checked comparison, rejecting mismatched dimensions.
pub fn compare(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension("monomials have different lengths".into()));
    }
    order.validate(a.nvars())?;
    Ok(order.cmp(a, b))
}

/// Block order eliminating the variables in `eliminated`: any monomial
/// involving them is larger than every monomial in the remaining variables,
/// on which the order restricts to `hint` (given on the kept variables in
/// their ring order).
pub fn elimination_order(nvars: usize, eliminated: &[usize], hint: &MonomialOrder) -> MonomialOrder {
    let kept: Vec<usize> = (0..nvars).filter(|i| !eliminated.contains(i)).collect();
    let indicator: Vec<u64> = (0..nvars).map(|i| eliminated.contains(&i) as u64).collect();
    MonomialOrder::Weight {
        matrix: WeightMatrix::new(vec![indicator]).unwrap(),
        tie: Box::new(hint.embed(&kept, nvars)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::monomial::monomials_up_to_degree;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn herm_surface_order() -> MonomialOrder {
        MonomialOrder::weight(WeightMatrix::new(vec![vec![1, 1, 1], vec![3, 0, 2]]).unwrap(), MonomialOrder::Lex)
    }

    #[test]
    fn weight_order_examples() {
        let o = herm_surface_order();
        assert_eq!(compare(&o, &m(&[1, 0, 0]), &m(&[0, 1, 0])).unwrap(), Ordering::Greater);
        assert_eq!(compare(&o, &m(&[1, 0, 0]), &m(&[0, 0, 1])).unwrap(), Ordering::Greater);
        assert_eq!(compare(&o, &m(&[0, 0, 1]), &m(&[0, 1, 0])).unwrap(), Ordering::Greater);
        assert_eq!(compare(&o, &m(&[2, 1, 1]), &m(&[2, 1, 1])).unwrap(), Ordering::Equal);
        assert!(compare(&o, &m(&[1, 0]), &m(&[0, 1])).is_err());
    }

    #[test]
    fn grevlex_breaks_degree_ties_on_last_variable() {
        // x8 x6 > x9 x5 in grevlex on x1..x10.
        let mut a = vec![0; 10];
        a[7] = 1;
        a[5] = 1;
        let mut b = vec![0; 10];
        b[8] = 1;
        b[4] = 1;
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&a), &m(&b)), Ordering::Greater);
    }

    fn orders_for(nvars: usize) -> Vec<MonomialOrder> {
        let rows = vec![(0..nvars as u64).map(|i| i % 3).collect::<Vec<_>>(), vec![1; nvars]];
        vec![
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::weight(WeightMatrix::new(rows.clone()).unwrap(), MonomialOrder::Lex),
            MonomialOrder::weight(WeightMatrix::new(rows).unwrap(), MonomialOrder::Grevlex),
            elimination_order(nvars, &[0], &MonomialOrder::Grevlex),
        ]
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        for nvars in 1..=4 {
            let deg = if nvars <= 2 { 6 } else { 3 };
            let mons = monomials_up_to_degree(nvars, deg);
            let shifts = monomials_up_to_degree(nvars, 1);
            for o in orders_for(nvars) {
                for a in &mons {
                    for b in &mons {
                        let ab = o.cmp(a, b);
                        assert_eq!(ab, o.cmp(b, a).reverse());
                        assert_eq!(ab == Ordering::Equal, a == b);
                        let ka = o.key(a.exponents());
                        let kb = o.key(b.exponents());
                        assert_eq!(ka.cmp(&kb), ab);
                        for c in &shifts {
                            assert_eq!(o.cmp(&a.mul(c), &b.mul(c)), ab);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unit_is_least_on_bounded_sets() {
        for nvars in 1..=3 {
            let mons = monomials_up_to_degree(nvars, 4);
            for o in orders_for(nvars) {
                let mut sorted = mons.clone();
                sorted.sort_by(|a, b| o.cmp(a, b));
                assert!(sorted[0].is_one());
                for w in sorted.windows(2) {
                    assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn order_json_round_trip() {
        let o = herm_surface_order();
        let s = serde_json::to_string(&o).unwrap();
        assert_eq!(s, r#"{"kind":"weight","matrix":[[1,1,1],[3,0,2]],"tie":{"kind":"lex"}}"#);
        let back: MonomialOrder = serde_json::from_str(&s).unwrap();
        assert_eq!(back, o);
        assert!(serde_json::from_str::<MonomialOrder>(
            r#"{"kind":"weight","matrix":[[1],[1,2]],"tie":{"kind":"lex"}}"#
        )
        .is_err());
    }
}
