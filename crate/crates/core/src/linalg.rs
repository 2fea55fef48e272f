//! Symmetric eigenvalue counting: Householder tridiagonalization, Sturm
//! pivot counts, and bisection for the extreme eigenvalues. Counting works
//! through factorization signs only, no eigenvectors are ever formed.
#![allow(clippy::needless_range_loop)]

use crate::matrix::SymMatrix;
use crate::scalar::{cst, eps, Scalar};

/// Symmetric tridiagonal matrix: `diag` has length n, `off` length n-1.
#[derive(Debug, Clone)]
pub(crate) struct SymTridiag<T> {
    pub diag: Vec<T>,
    pub off: Vec<T>,
}

impl<T: Scalar> SymTridiag<T> {
    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Gershgorin interval certainly containing the spectrum.
    pub fn spectrum_bounds(&self) -> (T, T) {
        let n = self.n();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let mut radius = T::zero();
            if i > 0 {
                radius = radius + self.off[i - 1].abs();
            }
            if i + 1 < n {
                radius = radius + self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - radius);
            hi = hi.max(self.diag[i] + radius);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `sigma`, by the signs of the
    /// LDLᵀ pivots of `T - sigma I`.
    pub fn count_below(&self, sigma: T) -> usize {
        let n = self.n();
        if n == 0 {
            return 0;
        }
        let max_off2 = self
            .off
            .iter()
            .fold(T::one(), |m, &e| m.max(e * e));
        let pivmin = T::min_positive_value() * max_off2;

        let mut count = 0;
        let mut d = self.diag[0] - sigma;
        if d.abs() < pivmin {
            d = -pivmin;
        }
        if d < T::zero() {
            count += 1;
        }
        for i in 1..n {
            d = (self.diag[i] - sigma) - self.off[i - 1] * self.off[i - 1] / d;
            if d.abs() < pivmin {
                d = -pivmin;
            }
            if d < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// Smallest and largest eigenvalue by Sturm bisection.
    pub fn extreme_eigenvalues(&self) -> (T, T) {
        let n = self.n();
        assert!(n > 0, "empty matrix has no eigenvalues");
        let (glo, ghi) = self.spectrum_bounds();
        let scale = T::one().max(glo.abs()).max(ghi.abs());
        let tol = cst::<T>(8.0) * eps::<T>() * scale;

        let bisect = |target: usize| -> T {
            // smallest sigma with count_below(sigma) >= target
            let mut lo = glo - tol;
            let mut hi = ghi + tol;
            while hi - lo > tol {
                let mid = cst::<T>(0.5) * (lo + hi);
                if self.count_below(mid) >= target {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            cst::<T>(0.5) * (lo + hi)
        };

        (bisect(1), bisect(n))
    }

    /// Largest absolute eigenvalue.
    pub fn operator_norm(&self) -> T {
        if self.n() == 0 {
            return T::zero();
        }
        let (lo, hi) = self.extreme_eigenvalues();
        lo.abs().max(hi.abs())
    }
}

/// Householder reduction of a dense symmetric matrix to tridiagonal form.
/// Columns are scaled before the reflector is formed, so graded matrices
/// (entries spanning hundreds of orders of magnitude) reduce without the
/// squared norms under- or overflowing.
pub(crate) fn tridiagonalize<T: Scalar>(m: &SymMatrix<T>) -> SymTridiag<T> {
    let n = m.n();
    let mut a: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect();
    let mut off = vec![T::zero(); n.saturating_sub(1)];

    for k in 0..n.saturating_sub(2) {
        let scale = (k + 1..n).fold(T::zero(), |s, i| s.max(a[i][k].abs()));
        if scale == T::zero() {
            off[k] = T::zero();
            continue;
        }
        // scaled column: entries in [-1, 1], norm in [1, sqrt(n)]
        let mut v = vec![T::zero(); n];
        for i in k + 1..n {
            v[i] = a[i][k] / scale;
        }
        let norm = (k + 1..n)
            .fold(T::zero(), |s, i| s + v[i] * v[i])
            .sqrt();
        let alpha = if v[k + 1] > T::zero() { -norm } else { norm };
        off[k] = scale * alpha;
        v[k + 1] = v[k + 1] - alpha;
        // |v[k+1]| >= norm >= 1, so the reflector norm can not degenerate
        let vnorm2: T = (k + 1..n).fold(T::zero(), |s, i| s + v[i] * v[i]);
        for i in k + 1..n {
            a[i][k] = T::zero();
            a[k][i] = T::zero();
        }
        a[k + 1][k] = off[k];
        a[k][k + 1] = off[k];
        let beta = cst::<T>(2.0) / vnorm2;
        // w = beta * A v on the trailing block
        let mut w = vec![T::zero(); n];
        for i in k + 1..n {
            let mut s = T::zero();
            for j in k + 1..n {
                s = s + a[i][j] * v[j];
            }
            w[i] = beta * s;
        }
        let kappa: T = (k + 1..n).fold(T::zero(), |s, i| s + v[i] * w[i]);
        let half_beta_kappa = cst::<T>(0.5) * beta * kappa;
        for i in k + 1..n {
            w[i] = w[i] - half_beta_kappa * v[i];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = a[i][j] - v[i] * w[j] - w[i] * v[j];
            }
        }
    }

    let diag = (0..n).map(|i| a[i][i]).collect();
    if n >= 2 {
        off[n - 2] = a[n - 1][n - 2];
    }
    SymTridiag { diag, off }
}
