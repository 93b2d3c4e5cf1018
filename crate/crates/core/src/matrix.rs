//! Exact dense matrices over a [`Field`].
//!
//! Elimination is plain Gauss-Jordan: with exact field arithmetic there are
//! no pivoting tolerances, so rank, null spaces and solutions are exact by
//! construction. Sizes here are desk scale (n <= 8 or so); nothing is tuned.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixError {
    /// Input was expected square but is not.
    MalformedMatrix { rows: usize, cols: usize },
    DimensionMismatch,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::MalformedMatrix { rows, cols } => {
                write!(f, "expected a square matrix, got {}x{}", rows, cols)
            }
            MatrixError::DimensionMismatch => write!(f, "matrix dimensions do not match"),
        }
    }
}

/// Dense row-major matrix carrying its field context.
#[derive(Clone, Debug)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> PartialEq for Matrix<K> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<K: Field> Matrix<K> {
    pub fn from_fn(field: K, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: K, rows: Vec<Vec<K::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Matrix { field, rows: nrows, cols: ncols, data }
    }

    pub fn zeros(field: K, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Matrix { field: field.clone(), rows, cols, data: vec![z; rows * cols] }
    }

    pub fn identity(field: K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &K::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.add(self.at(r, c), other.at(r, c))
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.sub(self.at(r, c), other.at(r, c))
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let k = &self.field;
        Self::from_fn(k.clone(), self.rows, other.cols, |r, c| {
            let mut acc = k.zero();
            for i in 0..self.cols {
                acc = k.add(&acc, &k.mul(self.at(r, i), other.at(i, c)));
            }
            acc
        })
    }

    pub fn apply(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len());
        let k = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = k.zero();
                for c in 0..self.cols {
                    acc = k.add(&acc, &k.mul(self.at(r, c), &v[c]));
                }
                acc
            })
            .collect()
    }

    /// `self^exp` for square matrices; `exp = 0` gives the identity.
    pub fn pow(&self, exp: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.field.clone(), self.rows);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let k = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(prow) = (lead..m.rows).find(|&r| !k.is_zero(m.at(r, col))) else {
                continue;
            };
            m.swap_rows(prow, lead);
            let inv = k.inv(m.at(lead, col)).expect("nonzero pivot");
            for c in col..m.cols {
                let v = k.mul(m.at(lead, c), &inv);
                m.set(lead, c, v);
            }
            for r in 0..m.rows {
                if r != lead && !k.is_zero(m.at(r, col)) {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = k.sub(m.at(r, c), &k.mul(&factor, m.at(lead, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the column space: the pivot columns of the original matrix.
    pub fn column_space_basis(&self) -> Vec<Vec<K::Elem>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.col(c)).collect()
    }

    /// Basis of the null space `{x : Ax = 0}`.
    pub fn null_space_basis(&self) -> Vec<Vec<K::Elem>> {
        let k = &self.field;
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(i);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![k.zero(); self.cols];
            v[free] = k.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(r.at(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = rhs` for each column of `rhs`; `None` if inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let k = &self.field;
        // Eliminate on [A | rhs].
        let aug = Self::from_fn(k.clone(), self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                rhs.at(r, c - self.cols).clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None; // a pivot escaped into the rhs block: inconsistent
        }
        let mut sol = Self::zeros(k.clone(), self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                sol.set(pc, j, red.at(i, self.cols + j).clone());
            }
        }
        Some(sol)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let id = Self::identity(self.field.clone(), self.rows);
        let inv = self.solve(&id)?;
        if self.mul(&inv) == id {
            Some(inv)
        } else {
            None // singular: solve() returned a least-constrained solution
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: K, dim: usize, cols: &[Vec<K::Elem>]) -> Self {
        assert!(cols.iter().all(|c| c.len() == dim));
        Self::from_fn(field, dim, cols.len(), |r, c| cols[c][r].clone())
    }

    /// Do the columns of `self` and `other` span the same subspace?
    pub fn same_column_span(&self, other: &Self) -> bool {
        assert_eq!(self.rows, other.rows);
        let r1 = self.rank();
        let r2 = other.rank();
        if r1 != r2 {
            return false;
        }
        let joint = Self::from_fn(self.field.clone(), self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        });
        joint.rank() == r1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat_int, Rationals};

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<Rationals> {
        Matrix::from_rows(
            Rationals,
            rows.into_iter().map(|r| r.into_iter().map(rat_int).collect()).collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let a = qm(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.null_space_basis();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.apply(v).iter().all(|x| Rationals.is_zero(x)));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = qm(vec![vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(Rationals, 2));
        let singular = qm(vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn solve_inconsistent() {
        let a = qm(vec![vec![1, 0], vec![1, 0]]);
        let rhs = qm(vec![vec![1], vec![2]]);
        assert!(a.solve(&rhs).is_none());
    }

    #[test]
    fn column_span_comparison() {
        let a = qm(vec![vec![1, 0], vec![0, 1], vec![0, 0]]);
        let b = qm(vec![vec![1, 1], vec![1, -1], vec![0, 0]]);
        assert!(a.same_column_span(&b));
        let c = qm(vec![vec![1], vec![0], vec![1]]);
        assert!(!a.same_column_span(&c));
    }

    #[test]
    fn prime_field_elimination() {
        use crate::field::PrimeField;
        let f5 = PrimeField::new(5).unwrap();
        let a = Matrix::from_rows(f5, vec![vec![2u64, 3], vec![1, 4]]);
        assert_eq!(a.rank(), 1); // second row = 3 * first mod 5
    }
}
