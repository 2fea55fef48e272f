//! Channel fundamental solutions and the zero-or-negative-energy Green
//! kernel of the free radial operator `-u'' + l(l+1) u / r²`.
//!
//! `phi_l` is the solution regular at the origin, normalized so that its
//! zero-energy value is exactly `r^(l+1)`; `psi_l` decays at infinity and is
//! pinned by the Wronskian `phi ψ' - phi' ψ = -1`. For negative energy both
//! are assembled in log form from scaled modified Bessel functions, so the
//! kernel product recombines exponents analytically instead of overflowing.

mod bessel;
mod gamma;

pub(crate) use bessel::bessel_ik;
pub(crate) use gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::scalar::{cst, Scalar};

fn check_domain<T: Scalar>(l: T, lambda: T, r: T) -> Result<()> {
    if !(l.is_finite() && l >= cst::<T>(-0.5)) {
        return Err(Error::domain(format!("channel coefficient must be >= -1/2, got {l}")));
    }
    if !(lambda.is_finite() && lambda <= T::zero()) {
        return Err(Error::domain(format!(
            "spectral parameter must be <= 0, got {lambda}"
        )));
    }
    if !(r.is_finite() && r > T::zero()) {
        return Err(Error::domain(format!("radius must be > 0, got {r}")));
    }
    Ok(())
}

#[inline]
fn order<T: Scalar>(l: T) -> T {
    l + cst::<T>(0.5)
}

/// log of the normalization `Γ(ν+1) (2/κ)^ν` relating the regular solution
/// to `sqrt(r) I_ν(κ r)`
#[inline]
fn ln_norm<T: Scalar>(nu: T, kappa: T) -> T {
    ln_gamma(nu + T::one()) + nu * (cst::<T>(2.0).ln() - kappa.ln())
}

/// Regular-at-zero solution; equals `r^(l+1)` at zero energy.
pub fn phi_l<T: Scalar>(l: T, lambda: T, r: T) -> Result<T> {
    check_domain(l, lambda, r)?;
    if lambda == T::zero() {
        return Ok(r.powf(l + T::one()));
    }
    let kappa = (-lambda).sqrt();
    let nu = order(l);
    let ik = bessel_ik(nu, kappa * r)?;
    Ok((ln_norm(nu, kappa) + cst::<T>(0.5) * r.ln() + ik.ln_i).exp())
}

/// Radial derivative of `phi_l`.
pub fn phi_l_deriv<T: Scalar>(l: T, lambda: T, r: T) -> Result<T> {
    check_domain(l, lambda, r)?;
    if lambda == T::zero() {
        return Ok((l + T::one()) * r.powf(l));
    }
    let kappa = (-lambda).sqrt();
    let nu = order(l);
    let ik = bessel_ik(nu, kappa * r)?;
    let phi = (ln_norm(nu, kappa) + cst::<T>(0.5) * r.ln() + ik.ln_i).exp();
    Ok(phi * ((l + T::one()) / r + kappa * ik.i_ratio))
}

/// Decaying-at-infinity solution; equals `r^(-l) / (2l+1)` at zero energy
/// for `l > -1/2` and `sqrt(r) |ln r|` in the borderline channel `l = -1/2`.
pub fn psi_l<T: Scalar>(l: T, lambda: T, r: T) -> Result<T> {
    check_domain(l, lambda, r)?;
    if lambda == T::zero() {
        return Ok(psi_zero_energy(l, r));
    }
    let kappa = (-lambda).sqrt();
    let nu = order(l);
    let ik = bessel_ik(nu, kappa * r)?;
    Ok((-ln_norm(nu, kappa) + cst::<T>(0.5) * r.ln() + ik.ln_k).exp())
}

/// Radial derivative of `psi_l`. At zero energy in the borderline channel
/// the value at the kink `r = 1` is the symmetric choice (zero slope term).
pub fn psi_l_deriv<T: Scalar>(l: T, lambda: T, r: T) -> Result<T> {
    check_domain(l, lambda, r)?;
    let half = cst::<T>(0.5);
    if lambda == T::zero() {
        if l == cst::<T>(-0.5) {
            let lr = r.ln();
            let s = if lr > T::zero() {
                T::one()
            } else if lr < T::zero() {
                -T::one()
            } else {
                T::zero()
            };
            return Ok(lr.abs() / (cst::<T>(2.0) * r.sqrt()) + s / r.sqrt());
        }
        return Ok(-l * r.powf(-l - T::one()) / (cst::<T>(2.0) * l + T::one()));
    }
    let kappa = (-lambda).sqrt();
    let nu = order(l);
    let ik = bessel_ik(nu, kappa * r)?;
    let psi = (-ln_norm(nu, kappa) + half * r.ln() + ik.ln_k).exp();
    Ok(psi * ((l + T::one()) / r - kappa * ik.k_ratio))
}

fn psi_zero_energy<T: Scalar>(l: T, r: T) -> T {
    if l == cst::<T>(-0.5) {
        r.sqrt() * r.ln().abs()
    } else {
        r.powf(-l) / (cst::<T>(2.0) * l + T::one())
    }
}

/// Green kernel `K_l(r, s; λ) = phi_l(λ, min) ψ_l(λ, max)`.
pub fn green_kernel<T: Scalar>(l: T, lambda: T, r: T, s: T) -> Result<T> {
    check_domain(l, lambda, r)?;
    check_domain(l, lambda, s)?;
    let (lo, hi) = if r <= s { (r, s) } else { (s, r) };
    if lambda == T::zero() {
        if l == cst::<T>(-0.5) {
            return Ok((lo * hi).sqrt() * hi.ln().abs());
        }
        return Ok(lo.powf(l + T::one()) * hi.powf(-l) / (cst::<T>(2.0) * l + T::one()));
    }
    // the normalization of phi and psi cancels in the product, leaving
    // sqrt(lo*hi) I_ν(κ lo) K_ν(κ hi) assembled in log form
    let kappa = (-lambda).sqrt();
    let nu = order(l);
    let lo_ik = bessel_ik(nu, kappa * lo)?;
    let hi_ik = bessel_ik(nu, kappa * hi)?;
    Ok((cst::<T>(0.5) * (lo.ln() + hi.ln()) + lo_ik.ln_i + hi_ik.ln_k).exp())
}
