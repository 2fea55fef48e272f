//! Core domain types: shell configurations, tail models, angular channels,
//! atomic measures, inertia reports and criterion verdicts.

use crate::error::{Error, Result};
use crate::scalar::{cst, Scalar};

/// A single spherical interaction shell: radius and coupling strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shell<T> {
    pub radius: T,
    pub strength: T,
}

/// Finite family of concentric shells with strictly increasing radii.
///
/// Zero-strength entries are dropped at construction and duplicate radii are
/// rejected, so every stored shell carries a genuine interaction.
#[derive(Debug, Clone, PartialEq)]
pub struct ShellConfig<T> {
    shells: Vec<Shell<T>>,
}

impl<T: Scalar> ShellConfig<T> {
    /// Normalizes raw `(radius, strength)` pairs: sorts by radius, drops
    /// zero-strength entries, rejects non-positive radii and duplicates.
    pub fn normalize(raw: &[(T, T)]) -> Result<Self> {
        let mut shells = Vec::with_capacity(raw.len());
        for &(radius, strength) in raw {
            if !(radius.is_finite() && radius > T::zero()) {
                return Err(Error::NonPositiveRadius {
                    radius: radius.to_f64().unwrap_or(f64::NAN),
                });
            }
            if !strength.is_finite() {
                return Err(Error::NonFiniteStrength {
                    strength: strength.to_f64().unwrap_or(f64::NAN),
                });
            }
            if strength != T::zero() {
                shells.push(Shell { radius, strength });
            }
        }
        shells.sort_by(|a, b| a.radius.partial_cmp(&b.radius).expect("finite radii"));
        for pair in shells.windows(2) {
            if pair[0].radius == pair[1].radius {
                return Err(Error::DuplicateRadius {
                    radius: pair[0].radius.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(ShellConfig { shells })
    }

    /// The free operator: no shells at all.
    pub fn empty() -> Self {
        ShellConfig { shells: Vec::new() }
    }

    pub fn shells(&self) -> &[Shell<T>] {
        &self.shells
    }

    pub fn len(&self) -> usize {
        self.shells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shells.is_empty()
    }

    pub fn radii(&self) -> impl Iterator<Item = T> + '_ {
        self.shells.iter().map(|s| s.radius)
    }

    pub fn strengths(&self) -> impl Iterator<Item = T> + '_ {
        self.shells.iter().map(|s| s.strength)
    }

    /// Number of strictly negative strengths.
    pub fn negative_count(&self) -> usize {
        self.shells.iter().filter(|s| s.strength < T::zero()).count()
    }

    /// Number of strictly positive strengths.
    pub fn positive_count(&self) -> usize {
        self.shells.iter().filter(|s| s.strength > T::zero()).count()
    }

    /// True when every strength is negative (the purely attractive case).
    pub fn all_attractive(&self) -> bool {
        self.shells.iter().all(|s| s.strength < T::zero())
    }

    /// The sub-configuration of attractive shells, keeping radii.
    pub fn attractive_part(&self) -> ShellConfig<T> {
        ShellConfig {
            shells: self
                .shells
                .iter()
                .copied()
                .filter(|s| s.strength < T::zero())
                .collect(),
        }
    }

    /// Attractive part as a non-negative measure: atoms `(r_k, |strength|)`
    /// over the shells with negative strength.
    pub fn attractive_measure(&self) -> AtomicMeasure<T> {
        AtomicMeasure {
            atoms: self
                .shells
                .iter()
                .filter(|s| s.strength < T::zero())
                .map(|s| (s.radius, -s.strength))
                .collect(),
        }
    }
}

/// Indices (0-based) and magnitudes of the negative entries of a strength
/// sequence.
pub fn negative_part<T: Scalar>(strengths: &[T]) -> (Vec<usize>, Vec<T>) {
    let mut indices = Vec::new();
    let mut magnitudes = Vec::new();
    for (k, &a) in strengths.iter().enumerate() {
        if a < T::zero() {
            indices.push(k);
            magnitudes.push(-a);
        }
    }
    (indices, magnitudes)
}

/// How the remainder term of a declared asymptotic strength law decays.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Remainder<T> {
    /// No remainder: the law is exact.
    Zero,
    /// Bounded by a constant times `1/k`.
    InverseK,
    /// Bounded by a constant times `k^(-eps)` for the given `eps > 0`.
    PowerK(T),
}

/// Declared strength law for the harmonic-spacing family `d_k = 1/k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HarmonicLaw<T> {
    /// `alpha_k = -a (2k + 1) + remainder`.
    Linear { a: T, remainder: Remainder<T> },
    /// `alpha_k = coeff * k^exponent` exactly.
    Power { coeff: T, exponent: T },
}

/// User assertions about limits of a sampled tail. `None` means
/// "not asserted"; the corresponding criteria then report `Inconclusive`
/// with the numeric trend as evidence.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TailAsserts {
    /// Sum of squared spacings diverges.
    pub sum_d_squared_diverges: Option<bool>,
    /// The weighted strength series of the limit-circle test converges.
    pub limit_circle_sum_finite: Option<bool>,
    /// Windowed sums of negative strengths stay bounded (Brinck).
    pub brinck_sup_finite: Option<bool>,
    /// All strengths are eventually non-positive.
    pub alpha_tail_nonpositive: Option<bool>,
    /// Windowed strength sums tend to infinity for every window width.
    pub windowed_strength_diverges: Option<bool>,
    /// Windowed absolute-strength sums vanish at infinity.
    pub windowed_abs_strength_vanishes: Option<bool>,
    /// Spacings tend to zero.
    pub d_tends_to_zero: Option<bool>,
}

/// Sampled tail: explicit spacings and strengths up to a finite horizon,
/// plus optional limit assertions.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledTail<T> {
    pub spacings: Vec<T>,
    pub strengths: Vec<T>,
    pub asserts: TailAsserts,
}

/// Periodic tail: spacing and strength blocks repeated forever.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicTail<T> {
    pub spacing_block: Vec<T>,
    pub strength_block: Vec<T>,
}

/// Declared behavior of an infinite shell family, which makes the
/// asymptotic criteria evaluable in finite time.
#[derive(Debug, Clone, PartialEq)]
pub enum TailModel<T> {
    /// No tail: the configuration is the whole family.
    Finite,
    /// Blocks of spacings and strengths repeated forever.
    Periodic(PeriodicTail<T>),
    /// Harmonic spacings `d_k = 1/k` with a declared strength law.
    Harmonic(HarmonicLaw<T>),
    /// Explicit samples up to a horizon plus limit assertions.
    Sampled(SampledTail<T>),
}

impl<T: Scalar> TailModel<T> {
    /// Validates the structural invariants of the tail model.
    pub fn validate(&self) -> Result<()> {
        match self {
            TailModel::Finite | TailModel::Harmonic(_) => Ok(()),
            TailModel::Periodic(p) => {
                if p.spacing_block.is_empty() {
                    return Err(Error::InvalidTail("periodic spacing block is empty".into()));
                }
                if p.spacing_block.len() != p.strength_block.len() {
                    return Err(Error::InvalidTail(
                        "periodic spacing and strength blocks differ in length".into(),
                    ));
                }
                if p.spacing_block.iter().any(|&d| !(d > T::zero())) {
                    return Err(Error::InvalidTail(
                        "periodic spacings must be positive".into(),
                    ));
                }
                Ok(())
            }
            TailModel::Sampled(s) => {
                if s.spacings.is_empty() {
                    return Err(Error::InvalidTail("sampled horizon must be at least 1".into()));
                }
                if s.spacings.len() != s.strengths.len() {
                    return Err(Error::InvalidTail(
                        "sampled spacings and strengths differ in length".into(),
                    ));
                }
                if s.spacings.iter().any(|&d| !(d > T::zero())) {
                    return Err(Error::InvalidTail("sampled spacings must be positive".into()));
                }
                Ok(())
            }
        }
    }
}

/// Angular channel: either a raw coefficient `l >= -1/2` or an angular
/// number in an ambient dimension, resolved to the effective coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelSpec<T> {
    Raw(T),
    Angular { n: u32, ell: u32 },
}

impl<T: Scalar> ChannelSpec<T> {
    /// The effective channel coefficient `l` with `l(l+1)` equal to the
    /// centrifugal coupling of the channel.
    pub fn effective_l(&self) -> Result<T> {
        match *self {
            ChannelSpec::Raw(l) => {
                if !(l.is_finite() && l >= cst::<T>(-0.5)) {
                    Err(Error::domain(format!(
                        "channel coefficient must be >= -1/2, got {l}"
                    )))
                } else {
                    Ok(l)
                }
            }
            ChannelSpec::Angular { n, ell } => effective_l(n, ell),
        }
    }
}

/// Effective channel coefficient for angular number `ell` in dimension `n`:
/// the unique `l >= -1/2` with `l(l+1) = (n-1)(n-3)/4 + ell(ell+n-2)`.
pub fn effective_l<T: Scalar>(n: u32, ell: u32) -> Result<T> {
    if n < 2 {
        return Err(Error::domain(format!("dimension must be >= 2, got {n}")));
    }
    let nf: T = cst(n as f64);
    let lf: T = cst(ell as f64);
    let quarter = cst::<T>(0.25);
    let two = cst::<T>(2.0);
    let coupling = (nf - T::one()) * (nf - cst(3.0)) * quarter + lf * (lf + nf - two);
    // discriminant 1/4 + l(l+1) is a perfect square of ell + (n-2)/2, so the
    // n = 3 channel resolves to ell exactly
    Ok(-cst::<T>(0.5) + (quarter + coupling).sqrt())
}

/// Finite non-negative atomic measure on the positive half line.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicMeasure<T> {
    atoms: Vec<(T, T)>,
}

impl<T: Scalar> AtomicMeasure<T> {
    /// Builds a measure from `(position, weight)` atoms. Positions must be
    /// strictly increasing and positive, weights non-negative.
    pub fn new(atoms: Vec<(T, T)>) -> Result<Self> {
        for &(r, w) in &atoms {
            if !(r.is_finite() && r > T::zero()) {
                return Err(Error::NonPositiveRadius {
                    radius: r.to_f64().unwrap_or(f64::NAN),
                });
            }
            if !(w.is_finite() && w >= T::zero()) {
                return Err(Error::domain(format!("atom weight must be >= 0, got {w}")));
            }
        }
        for pair in atoms.windows(2) {
            if !(pair[0].0 < pair[1].0) {
                return Err(Error::domain(
                    "atom positions must be strictly increasing".to_string(),
                ));
            }
        }
        Ok(AtomicMeasure { atoms })
    }

    pub fn empty() -> Self {
        AtomicMeasure { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[(T, T)] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }
}

/// Signature counts of a symmetric matrix at a given zero-threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct InertiaReport {
    pub kappa_minus: usize,
    pub kappa_zero: usize,
    pub kappa_plus: usize,
    /// Eigenvalues within `[-tolerance, tolerance]` count as zero.
    pub tolerance: f64,
}

impl InertiaReport {
    pub fn dimension(&self) -> usize {
        self.kappa_minus + self.kappa_zero + self.kappa_plus
    }
}

/// Outcome of a single spectral criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum VerdictStatus {
    Holds,
    Fails,
    Inconclusive,
}

/// Three-valued criterion result with the identifier of the criterion that
/// produced it and a human-readable evidence string.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Verdict {
    pub status: VerdictStatus,
    pub criterion_id: String,
    pub evidence: String,
}

impl Verdict {
    pub fn holds(id: &str, evidence: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::Holds,
            criterion_id: id.to_string(),
            evidence: evidence.into(),
        }
    }

    pub fn fails(id: &str, evidence: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::Fails,
            criterion_id: id.to_string(),
            evidence: evidence.into(),
        }
    }

    pub fn inconclusive(id: &str, evidence: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::Inconclusive,
            criterion_id: id.to_string(),
            evidence: evidence.into(),
        }
    }

    pub fn is_holds(&self) -> bool {
        self.status == VerdictStatus::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == VerdictStatus::Fails
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_sorts_by_radius() {
        let cfg = ShellConfig::normalize(&[(2.0, -1.0), (1.0, 3.0)]).unwrap();
        let radii: Vec<f64> = cfg.radii().collect();
        assert_eq!(radii, vec![1.0, 2.0]);
        assert_eq!(cfg.shells()[0].strength, 3.0);
    }

    #[test]
    fn normalize_drops_zero_strength() {
        let cfg = ShellConfig::normalize(&[(1.0, 0.0), (2.0, -1.0)]).unwrap();
        assert_eq!(cfg.len(), 1);
        assert_eq!(cfg.shells()[0].radius, 2.0);
    }

    #[test]
    fn normalize_rejects_duplicates() {
        let err = ShellConfig::normalize(&[(1.0, 1.0), (1.0, 2.0)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateRadius { .. }));
    }

    #[test]
    fn normalize_rejects_nonpositive_radius() {
        assert!(matches!(
            ShellConfig::normalize(&[(0.0, 1.0)]),
            Err(Error::NonPositiveRadius { .. })
        ));
        assert!(matches!(
            ShellConfig::normalize(&[(-1.0, 1.0)]),
            Err(Error::NonPositiveRadius { .. })
        ));
    }

    #[test]
    fn normalize_is_idempotent() {
        let raw = [(3.0, -2.0), (1.0, 0.5), (2.0, 0.0)];
        let once = ShellConfig::normalize(&raw).unwrap();
        let pairs: Vec<(f64, f64)> = once.shells().iter().map(|s| (s.radius, s.strength)).collect();
        let twice = ShellConfig::normalize(&pairs).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn negative_part_picks_indices_and_magnitudes() {
        let (idx, mag) = negative_part(&[-2.0, 3.0, -1.0]);
        assert_eq!(idx, vec![0, 2]);
        assert_eq!(mag, vec![2.0, 1.0]);

        let (idx, mag) = negative_part::<f64>(&[1.0, 2.0]);
        assert!(idx.is_empty() && mag.is_empty());

        let (idx, mag) = negative_part(&[-0.5]);
        assert_eq!(idx, vec![0]);
        assert_eq!(mag, vec![0.5]);
    }

    #[test]
    fn effective_l_dimension_three_is_exact() {
        for ell in 0..200u32 {
            let l: f64 = effective_l(3, ell).unwrap();
            assert_eq!(l, ell as f64, "ell = {ell}");
        }
    }

    #[test]
    fn effective_l_planar_s_wave_is_minus_half() {
        let l: f64 = effective_l(2, 0).unwrap();
        assert_eq!(l, -0.5);
    }

    #[test]
    fn effective_l_planar_p_wave_is_half() {
        let l: f64 = effective_l(2, 1).unwrap();
        assert!((l - 0.5).abs() < 1e-15);
    }

    #[test]
    fn effective_l_monotone() {
        // strictly increasing in ell for fixed n
        for n in 2..8u32 {
            let mut prev: f64 = effective_l(n, 0).unwrap();
            for ell in 1..30 {
                let cur = effective_l(n, ell).unwrap();
                assert!(cur > prev);
                prev = cur;
            }
        }
        // strictly increasing in n for fixed ell >= 1
        for ell in 1..20u32 {
            let mut prev: f64 = effective_l(2, ell).unwrap();
            for n in 3..10 {
                let cur = effective_l(n, ell).unwrap();
                assert!(cur > prev);
                prev = cur;
            }
        }
    }

    #[test]
    fn channel_spec_raw_validates() {
        assert!(ChannelSpec::Raw(-0.5_f64).effective_l().is_ok());
        assert!(ChannelSpec::Raw(-0.6_f64).effective_l().is_err());
        assert!(ChannelSpec::Raw(f64::NAN).effective_l().is_err());
    }

    #[test]
    fn measure_rejects_unsorted_positions() {
        assert!(AtomicMeasure::new(vec![(2.0, 1.0), (1.0, 1.0)]).is_err());
        assert!(AtomicMeasure::new(vec![(1.0, -0.1)]).is_err());
        assert!(AtomicMeasure::new(vec![(1.0, 0.0), (2.0, 3.0)]).is_ok());
    }

    #[test]
    fn tail_validation() {
        let bad = TailModel::Periodic(PeriodicTail {
            spacing_block: vec![1.0, -1.0],
            strength_block: vec![0.0, 0.0],
        });
        assert!(bad.validate().is_err());

        let good: TailModel<f64> = TailModel::Periodic(PeriodicTail {
            spacing_block: vec![1.0],
            strength_block: vec![-1.0],
        });
        assert!(good.validate().is_ok());
    }
}
