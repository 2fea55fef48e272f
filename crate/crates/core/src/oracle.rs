//! Two independent bound-state counters used to validate the matrix
//! formula and to serve the borderline channel `l = -1/2`.
//!
//! The oscillation counter propagates the zero-energy solution across the
//! shells in closed form (the free equation between shells is solvable
//! exactly) and counts its zeros; by Sturm oscillation theory that zero
//! count is the number of negative eigenvalues. The finite-difference
//! counter discretizes the half line and counts negative pivots.

use crate::error::{Error, Result};
use crate::model::ShellConfig;
use crate::linalg::SymTridiag;
use crate::scalar::{cst, Scalar};

/// Coefficients of the zero-energy solution on one inter-shell interval.
/// For `l > -1/2` the solution is `a r^(l+1) + b r^(-l)`; in the borderline
/// channel it is `sqrt(r) (a + b ln r)`.
#[derive(Debug, Clone, Copy)]
pub struct Segment<T> {
    pub lo: T,
    /// `infinity` on the last interval.
    pub hi: T,
    pub a: T,
    pub b: T,
}

/// The zero-energy solution of a shell family, one coefficient pair per
/// interval, regular at the origin.
#[derive(Debug, Clone)]
pub struct PiecewiseSolution<T> {
    pub l: T,
    pub segments: Vec<Segment<T>>,
}

fn is_borderline<T: Scalar>(l: T) -> bool {
    l == cst::<T>(-0.5)
}

fn basis_value<T: Scalar>(l: T, a: T, b: T, r: T) -> T {
    if is_borderline(l) {
        r.sqrt() * (a + b * r.ln())
    } else {
        a * r.powf(l + T::one()) + b * r.powf(-l)
    }
}

fn basis_deriv<T: Scalar>(l: T, a: T, b: T, r: T) -> T {
    if is_borderline(l) {
        (a + b * r.ln()) / (cst::<T>(2.0) * r.sqrt()) + b / r.sqrt()
    } else {
        a * (l + T::one()) * r.powf(l) - b * l * r.powf(-l - T::one())
    }
}

impl<T: Scalar> PiecewiseSolution<T> {
    /// Solution value at `r > 0`.
    pub fn value(&self, r: T) -> T {
        let seg = self
            .segments
            .iter()
            .find(|s| r <= s.hi)
            .or_else(|| self.segments.last())
            .expect("solution has at least one segment");
        basis_value(self.l, seg.a, seg.b, r)
    }

    /// One-sided value computed from a specific segment's coefficients.
    pub fn segment_value(&self, idx: usize, r: T) -> T {
        let seg = &self.segments[idx];
        basis_value(self.l, seg.a, seg.b, r)
    }

    /// One-sided derivative computed from a specific segment's coefficients.
    pub fn segment_deriv(&self, idx: usize, r: T) -> T {
        let seg = &self.segments[idx];
        basis_deriv(self.l, seg.a, seg.b, r)
    }
}

fn validate_channel<T: Scalar>(l: T) -> Result<()> {
    if !(l.is_finite() && l >= cst::<T>(-0.5)) {
        return Err(Error::domain(format!(
            "channel coefficient must be >= -1/2, got {l}"
        )));
    }
    Ok(())
}

/// Builds the zero-energy solution with `u ~ r^(l+1)` near the origin,
/// propagated across every shell through continuity and the derivative
/// jump `u'(r_k+) - u'(r_k-) = alpha_k u(r_k)`.
pub fn oscillation_solution<T: Scalar>(
    config: &ShellConfig<T>,
    l: T,
) -> Result<PiecewiseSolution<T>> {
    validate_channel(l)?;
    let mut segments = Vec::with_capacity(config.len() + 1);
    let mut a = T::one();
    let mut b = T::zero();
    let mut lo = T::zero();
    let rescale_cap = cst::<T>(1e100);

    for shell in config.shells() {
        let r = shell.radius;
        segments.push(Segment { lo, hi: r, a, b });
        let value = basis_value(l, a, b, r);
        let slope_out = basis_deriv(l, a, b, r) + shell.strength * value;
        if is_borderline(l) {
            b = (slope_out - value / (cst::<T>(2.0) * r)) * r.sqrt();
            a = value / r.sqrt() - b * r.ln();
        } else {
            let two_l_plus_1 = cst::<T>(2.0) * l + T::one();
            a = (r * slope_out + l * value) / (two_l_plus_1 * r.powf(l + T::one()));
            b = (value - a * r.powf(l + T::one())) * r.powf(l);
        }
        // keep coefficients in range for widely spread radii; scaling by a
        // positive factor changes neither zeros nor signs
        let mag = a.abs().max(b.abs());
        if mag > rescale_cap {
            a = a / mag;
            b = b / mag;
        }
        lo = r;
    }
    segments.push(Segment {
        lo,
        hi: T::infinity(),
        a,
        b,
    });
    Ok(PiecewiseSolution { l, segments })
}

/// Oscillation count plus threshold diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OscillationReport {
    /// Zeros of the zero-energy solution on `(0, inf)` = bound states.
    pub count: usize,
    /// A zero landed on a shell radius (within relative 1e-12).
    pub boundary_zero: bool,
    /// When a boundary zero makes the count strength-sensitive: counts
    /// after scaling every strength by `1 - 1e-9` resp. `1 + 1e-9`.
    pub perturbed: Option<(usize, usize)>,
}

/// Exact zero count of the principal zero-energy solution.
pub fn oscillation_count<T: Scalar>(config: &ShellConfig<T>, l: T) -> Result<usize> {
    oscillation_report(config, l).map(|r| r.count)
}

/// Zero count with boundary-zero flags and strength-perturbation probes.
pub fn oscillation_report<T: Scalar>(config: &ShellConfig<T>, l: T) -> Result<OscillationReport> {
    let (count, boundary_zero) = count_zeros(config, l)?;
    if !boundary_zero {
        return Ok(OscillationReport {
            count,
            boundary_zero,
            perturbed: None,
        });
    }
    let scale_lo = T::one() - cst::<T>(1e-9);
    let scale_hi = T::one() + cst::<T>(1e-9);
    let rescaled = |factor: T| -> Result<usize> {
        let pairs: Vec<(T, T)> = config
            .shells()
            .iter()
            .map(|s| (s.radius, s.strength * factor))
            .collect();
        let perturbed = ShellConfig::normalize(&pairs)?;
        Ok(count_zeros(&perturbed, l)?.0)
    };
    let lo = rescaled(scale_lo)?;
    let hi = rescaled(scale_hi)?;
    Ok(OscillationReport {
        count,
        boundary_zero,
        perturbed: if lo != hi {
            Some((lo.min(hi), lo.max(hi)))
        } else {
            None
        },
    })
}

fn term_scale<T: Scalar>(l: T, a: T, b: T, r: T) -> T {
    if is_borderline(l) {
        (a.abs() + b.abs() * r.ln().abs().max(T::one())) * r.sqrt()
    } else {
        a.abs() * r.powf(l + T::one()) + b.abs() * r.powf(-l)
    }
}

fn count_zeros<T: Scalar>(config: &ShellConfig<T>, l: T) -> Result<(usize, bool)> {
    let solution = oscillation_solution(config, l)?;
    let shells = config.shells();
    let n = shells.len();
    let zero_tol = cst::<T>(1e-12);

    let mut count = 0usize;
    let mut boundary_zero = false;
    let mut last_shell_flagged = false;
    // the principal solution is positive near the origin
    let mut prev_negative = false;
    for (k, shell) in shells.iter().enumerate() {
        let seg = &solution.segments[k];
        let r = shell.radius;
        let value = basis_value(l, seg.a, seg.b, r);
        let scale = term_scale(l, seg.a, seg.b, r);
        last_shell_flagged = false;
        if value.abs() <= zero_tol * scale {
            // a zero sitting on the shell: counted once; the solution
            // crosses with nonzero slope, so the tracked sign flips
            boundary_zero = true;
            last_shell_flagged = true;
            count += 1;
            prev_negative = !prev_negative;
        } else {
            let negative = value < T::zero();
            if negative != prev_negative {
                // the interval basis has at most one root, so a sign change
                // pins exactly one interior zero
                count += 1;
            }
            prev_negative = negative;
        }
    }

    // final interval: compare the sign at the last shell with the sign at
    // infinity; a flagged zero there already accounts for the only root
    if n > 0 && !last_shell_flagged {
        let last = &solution.segments[n];
        let asym_negative = if is_borderline(l) {
            if last.b != T::zero() {
                last.b < T::zero()
            } else {
                last.a < T::zero()
            }
        } else if last.a != T::zero() {
            last.a < T::zero()
        } else {
            last.b < T::zero()
        };
        if asym_negative != prev_negative {
            count += 1;
        }
    }
    Ok((count, boundary_zero))
}

/// Negative-eigenvalue count of the finite-difference discretization on
/// `(0, length]` with Dirichlet conditions at both cut ends; each shell
/// contributes `strength / mesh` on its nearest grid point. For
/// `l < 1/2` the origin condition is the regular-solution ratio, which
/// vanishes at the first grid point and reduces to the same stencil.
pub fn fd_count<T: Scalar>(config: &ShellConfig<T>, l: T, length: T, mesh: T) -> Result<usize> {
    validate_channel(l)?;
    if !(mesh > T::zero() && length > mesh) {
        return Err(Error::domain(format!(
            "need 0 < mesh < length, got mesh {mesh}, length {length}"
        )));
    }
    if let Some(last) = config.shells().last() {
        if last.radius >= length {
            return Err(Error::domain(format!(
                "domain cut {length} must exceed the outermost shell radius {}",
                last.radius
            )));
        }
    }
    let m = (length / mesh).round().to_usize().ok_or_else(|| {
        Error::domain("grid does not fit in memory".to_string())
    })?;
    if m < 3 {
        return Err(Error::domain("mesh too coarse for the domain".to_string()));
    }
    let points = m - 1;
    let h2 = mesh * mesh;
    let coupling = l * (l + T::one());
    let mut diag: Vec<T> = (1..=points)
        .map(|i| {
            let r = mesh * cst::<T>(i as f64);
            cst::<T>(2.0) / h2 + coupling / (r * r)
        })
        .collect();
    let off = vec![-(h2.recip()); points - 1];

    let mut grid_index = Vec::with_capacity(config.len());
    for (k, shell) in config.shells().iter().enumerate() {
        let idx = (shell.radius / mesh)
            .round()
            .to_usize()
            .ok_or_else(|| Error::domain("shell position overflows the grid".to_string()))?;
        if idx == 0 || idx > points {
            return Err(Error::MeshTooCoarse { first: k, second: k });
        }
        if let Some(&(prev_k, prev_idx)) = grid_index.last() {
            if prev_idx == idx {
                return Err(Error::MeshTooCoarse {
                    first: prev_k,
                    second: k,
                });
            }
        }
        grid_index.push((k, idx));
        diag[idx - 1] = diag[idx - 1] + shell.strength / mesh;
    }

    let t = SymTridiag { diag, off };
    Ok(t.count_below(T::zero()))
}
