//! Minimal dense symmetric-matrix container used by the counting machinery.
//!
//! The matrices that show up here are small (one row per shell), so a flat
//! `Vec` with full storage is simpler and faster than anything sparse.

use crate::scalar::Scalar;

/// Dense symmetric matrix. Construction enforces symmetry; `get` is
/// unchecked beyond debug assertions.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    /// Builds the matrix from a function of (row, col); only the upper
    /// triangle including the diagonal is sampled, the rest is mirrored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        SymMatrix { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        debug_assert!(i < self.n && j < self.n);
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> T {
        let mut best = T::zero();
        for i in 0..self.n {
            let mut row = T::zero();
            for j in 0..self.n {
                row = row + self.get(i, j).abs();
            }
            if row > best {
                best = row;
            }
        }
        best
    }

    /// `self - other`, entrywise. Panics if shapes differ.
    pub fn sub(&self, other: &SymMatrix<T>) -> SymMatrix<T> {
        assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1))
    }
}
