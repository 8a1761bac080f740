//! Dense row-major matrices over a [`Scalar`] field.
//!
//! Shape errors at this level are programming errors and panic; the
//! category layer checks shapes first and reports [`crate::CatError`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row-major entries.
    ///
    /// # Panics
    /// If `data.len() != rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data has wrong length");
        Matrix { rows, cols, data }
    }

    /// Convenience constructor from real entries, mostly for tests and fixtures.
    pub fn from_real_rows<const C: usize>(rows: &[[f64; C]]) -> Self {
        Self::from_fn(rows.len(), C, |i, j| S::from_real(rows[i][j]))
    }

    pub fn column_vector(entries: &[S]) -> Self {
        Self::from_row_major(entries.len(), 1, entries.to_vec())
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Option<S> {
        (i < self.rows && j < self.cols).then(|| self.data[i * self.cols + j])
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn column_matrix(&self, j: usize) -> Self {
        Self::column_vector(&self.column(j))
    }

    /// Columns `start..end` as a new matrix.
    pub fn columns(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.cols);
        Self::from_fn(self.rows, end - start, |i, j| self[(i, start + j)])
    }

    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols);
        Self::from_fn(rows, cols, |i, j| self[(row0 + i, col0 + j)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn map(&self, f: impl Fn(S) -> S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn scale(&self, z: S) -> Self {
        self.map(|x| z * x)
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == S::zero() {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    /// Kronecker product: `(a ⊗ b)[i*p + k, j*q + l] = a[i, j] * b[k, l]`
    /// where `b` is `p × q`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (p, q) = rhs.shape();
        Self::from_fn(self.rows * p, self.cols * q, |r, c| {
            self[(r / p, c / q)] * rhs[(r % p, c % q)]
        })
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                rhs[(i, j - self.cols)]
            }
        })
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x.norm_sqr()).sum::<f64>())
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self[(i, i)];
        }
        t
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// `‖self − rhs‖_F`.
    pub fn distance(&self, rhs: &Self) -> f64 {
        assert_eq!(self.shape(), rhs.shape(), "distance shape mismatch");
        libm::sqrt(
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| (a - b).norm_sqr())
                .sum::<f64>(),
        )
    }

    /// `‖self − rhs‖_F / max(1, ‖self‖_F, ‖rhs‖_F)`.
    pub fn relative_distance(&self, rhs: &Self) -> f64 {
        let scale = 1f64.max(self.frobenius_norm()).max(rhs.frobenius_norm());
        self.distance(rhs) / scale
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.matmul(rhs)
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.shape(), rhs.shape(), "add shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.shape(), rhs.shape(), "sub shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.map(|x| -x)
    }
}
