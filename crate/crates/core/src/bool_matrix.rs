//! Boolean matrices: the payload of relations between finite sets.
//!
//! Entry `(i, j)` is `true` when element `j` of the domain is related to
//! element `i` of the codomain, matching the column convention of [`crate::Matrix`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BoolMatrix {
            rows,
            cols,
            data: vec![false; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn total(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| true)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        BoolMatrix { rows, cols, data }
    }

    /// `0`/`1` rows, convenient for fixtures.
    pub fn from_rows<const C: usize>(rows: &[[u8; C]]) -> Self {
        Self::from_fn(rows.len(), C, |i, j| rows[i][j] != 0)
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<bool>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data has wrong length");
        BoolMatrix { rows, cols, data }
    }

    /// Column `j` is the set bits of `columns[j]`, least significant bit = row 0.
    pub fn from_column_masks(rows: usize, columns: &[u64]) -> Self {
        assert!(rows <= 64);
        Self::from_fn(rows, columns.len(), |i, j| columns[j] >> i & 1 == 1)
    }

    pub fn column_mask(&self, j: usize) -> u64 {
        assert!(self.rows <= 64);
        (0..self.rows).fold(0, |m, i| if self.get(i, j) { m | 1 << i } else { m })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        self.data[i * self.cols + j] = value;
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|&&b| b).count()
    }

    /// Boolean product `self ∘ rhs` (an OR of ANDs).
    pub fn compose(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.cols, rhs.rows, "relation composition shape mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).any(|k| self.get(i, k) && rhs.get(k, j))
        })
    }

    /// Converse relation.
    pub fn transpose(&self) -> BoolMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn union(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        BoolMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Product relation, same index convention as [`crate::Matrix::kron`].
    pub fn kron(&self, rhs: &BoolMatrix) -> BoolMatrix {
        let (p, q) = (rhs.rows, rhs.cols);
        Self::from_fn(self.rows * p, self.cols * q, |r, c| {
            self.get(r / p, c / q) && rhs.get(r % p, c % q)
        })
    }

    pub fn hstack(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                rhs.get(i, j - self.cols)
            }
        })
    }

    pub fn vstack(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        BoolMatrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        f.write_str("]")
    }
}
