//! Exact integer matrix algebra: Smith and Hermite normal forms, kernels,
//! cokernels, lattice membership and quotients.
//!
//! Everything here works over arbitrary-precision integers. Smith normal
//! form pivots can grow far beyond any fixed-width bound even for small
//! inputs, so fixed-width arithmetic would be a correctness bug.

mod lattice;
mod normal_form;

pub use lattice::{
    cokernel_shape, kernel_basis, quotient_shape, solve_in_lattice, AbelianGroupShape,
};
pub use normal_form::{hermite_normal_form_rows, smith_normal_form, SmithDecomposition};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Errors raised by the integer linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("sub-lattice generator {index} lies outside the ambient lattice")]
    GeneratorOutsideAmbient { index: usize },
}

/// Dense integer matrix with arbitrary-precision entries, row-major storage.
///
/// Empty shapes (`0 x 0`, `0 x n`, `n x 0`) are legal and denote zero maps;
/// they show up naturally as the surgery presentation of the 3-sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows. All rows must share a length; an empty
    /// row list yields the `0 x 0` matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows: all rows must have length {c}"
        );
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine integers, mostly for tests and
    /// small literal matrices.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors, each of length
    /// `ambient_dim`. An empty column list yields an `ambient_dim x 0` matrix.
    pub fn from_cols(ambient_dim: usize, cols: Vec<Vec<BigInt>>) -> Self {
        for (j, col) in cols.iter().enumerate() {
            assert!(
                col.len() == ambient_dim,
                "column {j} has length {}, expected {ambient_dim}",
                col.len()
            );
        }
        let mut m = IntMatrix::zeros(ambient_dim, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert!(
            self.cols == other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. This is a
    /// separate code path from the Smith normal form, which makes it usable
    /// as a cross-check on the decomposition.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                // pivot search within the column
                match (k + 1..n).find(|&i| !at(&m, i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j);
                    // Bareiss: division is exact
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = at(&m, k, k);
        }
        sign * at(&m, n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.determinant().abs().is_one()
    }

    /// Inverse of a unimodular matrix, as an integer matrix.
    /// Returns `None` when `self` is not square or |det| != 1.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if !self.is_unimodular() {
            return None;
        }
        let n = self.rows;
        let snf = smith_normal_form(self);
        let mut inv = IntMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            let c = lattice::solve_with_decomposition(&snf, self.cols, &e)
                .expect("unimodular matrix spans the full lattice");
            for i in 0..n {
                inv.set(i, j, c[i].clone());
            }
        }
        inv
    }

    /// Elementary row operations, shared by the normal-form routines.
    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        assert!(target != source);
        for j in 0..self.cols {
            let add = self.get(source, j) * factor;
            let cur = self.get(target, j).clone();
            self.set(target, j, cur + add);
        }
    }

    /// col[target] += factor * col[source]
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        assert!(target != source);
        for i in 0..self.rows {
            let add = self.get(i, source) * factor;
            let cur = self.get(i, target).clone();
            self.set(i, target, cur + add);
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
