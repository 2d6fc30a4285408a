//! Dense matrices over a [`Field`], plus exact integer rank for weight matrices.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// Dense row-major matrix with entries in a finite field.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row_raw(r))?;
        }
        Ok(())
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Matrix {
    pub fn zeros(field: Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(field: Arc<Field>, rows: &[Vec<FieldElement>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension("ragged matrix rows".into()));
            }
            for &x in row {
                if !field.owns(x) {
                    return Err(Error::MixedFields);
                }
                data.push(x.value());
            }
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    pub(crate) fn from_raw(field: Arc<Field>, rows: usize, cols: usize, data: Vec<u32>) -> Matrix {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.element(self.data[r * self.cols + c]).unwrap()
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldElement) {
        assert!(self.field.owns(x));
        self.data[r * self.cols + c] = x.value();
    }

    pub(crate) fn row_raw(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row(&self, r: usize) -> Vec<FieldElement> {
        self.row_raw(r).iter().map(|&v| self.field.element(v).unwrap()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    /// Column permutation: column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.rows, perm.len());
        for r in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                out.data[r * perm.len() + j] = self.data[r * self.cols + src];
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::Dimension("matrix product shapes".into()));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add_raw(out.data[idx], f.mul_raw(a, other.data[k * other.cols + j]));
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.data[r * m.cols + col] != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv_raw(m.data[row * m.cols + col]);
            for c in 0..m.cols {
                let idx = row * m.cols + c;
                m.data[idx] = f.mul_raw(m.data[idx], inv);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.data[r * m.cols + col];
                if factor == 0 {
                    continue;
                }
                let neg = f.neg_raw(factor);
                for c in 0..m.cols {
                    let v = m.data[row * m.cols + c];
                    if v != 0 {
                        let idx = r * m.cols + c;
                        m.data[idx] = f.add_raw(m.data[idx], f.mul_raw(neg, v));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The nonzero rows of the reduced row-echelon form.
    pub fn row_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let k = pivots.len();
        Matrix::from_raw(self.field.clone(), k, self.cols, r.data[..k * self.cols].to_vec())
    }

    /// Basis of the right kernel `{x : self * x = 0}`, as rows of the result.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.data[i * self.cols + fc] = 1;
            for (pr, &pc) in pivots.iter().enumerate() {
                out.data[i * self.cols + pc] = f.neg_raw(r.data[pr * self.cols + fc]);
            }
        }
        out
    }
}

/// Rank over `Q` of an integer matrix, by fraction-free elimination.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        for r in 0..m.len() {
            if r == rank || m[r][col] == 0 {
                continue;
            }
            let a = m[rank][col];
            let b = m[r][col];
            let pivot = m[rank].clone();
            for (x, &y) in m[r].iter_mut().zip(&pivot) {
                *x = *x * a - y * b;
            }
            let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                for x in m[r].iter_mut() {
                    *x /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
