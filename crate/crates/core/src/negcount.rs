//! Exact bound-state counting for finite shell families, plus the bounds
//! and positivity certificates that accompany the counting formula.
//!
//! The count of a channel with coefficient `l > -1/2` is
//! `kappa_plus(M) - kappa_plus(alpha)`, where `M` is the shell matrix with
//! diagonal `(2l+1)/alpha_k + r_k` and off-diagonal `r_j^(l+1) r_k^(-l)`
//! (`j < k`). The borderline channel `l = -1/2` is outside the matrix
//! theory and is delegated to the oscillation oracle.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::linalg::{tridiagonalize, SymTridiag};
use crate::matrix::SymMatrix;
use crate::model::{AtomicMeasure, ChannelSpec, InertiaReport, ShellConfig, Verdict};
use crate::oracle;
use crate::scalar::{cst, eps, Scalar};
use crate::special::green_kernel;

pub const ID_MAX_COUNT: &str = "max-count-necessity";
pub const ID_POSITIVITY: &str = "positivity-necessity";
pub const ID_GERSHGORIN: &str = "gershgorin-disk-separation";
pub const ID_TWO_STATE: &str = "two-state-window";
pub const ID_NORM_CERT: &str = "matrix-norm-certificate";
pub const ID_ROW_POSITIVITY: &str = "gershgorin-row-positivity";
pub const ID_KK_SUFFICIENT: &str = "kac-krein-sufficient";
pub const ID_KK_NECESSARY: &str = "kac-krein-necessary";
pub const ID_SIGN_BOUND: &str = "negative-strength-count-bound";

fn require_matrix_channel<T: Scalar>(l: T) -> Result<()> {
    if !(l.is_finite() && l > cst::<T>(-0.5)) {
        return Err(Error::domain(format!(
            "the shell-matrix route requires l > -1/2, got {l}; use the oscillation oracle for the borderline channel"
        )));
    }
    Ok(())
}

fn require_all_attractive<T: Scalar>(config: &ShellConfig<T>) -> Result<()> {
    if let Some(index) = config
        .shells()
        .iter()
        .position(|s| s.strength > T::zero())
    {
        return Err(Error::MixedSigns { index });
    }
    Ok(())
}

/// Matrix of Green-kernel values over the shell radii at energy `lambda <= 0`.
#[derive(Debug, Clone)]
pub struct WeylMatrix<T> {
    pub entries: SymMatrix<T>,
    pub l: T,
    pub lambda: T,
}

/// The counting matrix `(2l+1)(Lambda^{-1} + M(0))` of a shell family.
#[derive(Debug, Clone)]
pub struct KappaMatrix<T> {
    pub entries: SymMatrix<T>,
    pub l: T,
}

/// Green-kernel matrix `(K_l(r_j, r_k; lambda))` of the shell radii.
pub fn weyl_matrix<T: Scalar>(config: &ShellConfig<T>, l: T, lambda: T) -> Result<WeylMatrix<T>> {
    require_matrix_channel(l)?;
    if config.is_empty() {
        return Err(Error::domain("the kernel matrix needs at least one shell"));
    }
    let radii: Vec<T> = config.radii().collect();
    let n = radii.len();
    let mut vals = vec![T::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let v = green_kernel(l, lambda, radii[i], radii[j])?;
            vals[i * n + j] = v;
        }
    }
    let entries = SymMatrix::from_fn(n, |i, j| vals[i * n + j]);
    Ok(WeylMatrix { entries, l, lambda })
}

/// Builds the counting matrix; requires every strength nonzero (guaranteed
/// by configuration normalization).
pub fn kappa_matrix<T: Scalar>(config: &ShellConfig<T>, l: T) -> Result<KappaMatrix<T>> {
    require_matrix_channel(l)?;
    if config.strengths().any(|a| a == T::zero()) {
        return Err(Error::ZeroStrength);
    }
    let shells = config.shells();
    let two_l_plus_1 = cst::<T>(2.0) * l + T::one();
    let entries = SymMatrix::from_fn(config.len(), |i, j| {
        if i == j {
            two_l_plus_1 / shells[i].strength + shells[i].radius
        } else {
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            shells[lo].radius.powf(l + T::one()) * shells[hi].radius.powf(-l)
        }
    });
    Ok(KappaMatrix { entries, l })
}

/// Signature of a symmetric matrix: eigenvalues below `-tol` count negative,
/// above `tol` positive, the rest zero.
pub fn inertia<T: Scalar>(m: &SymMatrix<T>, tol: T) -> InertiaReport {
    let n = m.n();
    if n == 0 {
        return InertiaReport {
            kappa_minus: 0,
            kappa_zero: 0,
            kappa_plus: 0,
            tolerance: tol.to_f64().unwrap_or(f64::NAN),
        };
    }
    let t = tridiagonalize(m);
    inertia_of_tridiag(&t, tol)
}

pub(crate) fn inertia_of_tridiag<T: Scalar>(t: &SymTridiag<T>, tol: T) -> InertiaReport {
    let n = t.n();
    let kappa_minus = t.count_below(-tol);
    let below_plus = t.count_below(tol);
    InertiaReport {
        kappa_minus,
        kappa_zero: below_plus - kappa_minus,
        kappa_plus: n - below_plus,
        tolerance: tol.to_f64().unwrap_or(f64::NAN),
    }
}

/// Default zero-threshold: dimension times machine epsilon times the
/// infinity norm.
pub fn default_inertia_tol<T: Scalar>(m: &SymMatrix<T>) -> T {
    let scale = m.norm_inf();
    let floor = eps::<T>();
    (cst::<T>(m.n() as f64) * eps::<T>() * scale).max(floor)
}

/// Bound-state count of a channel, with degeneracy information when the
/// counting matrix has an eigenvalue at numerical zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOutcome {
    /// Count with zero eigenvalues treated as exact zeros.
    pub count: usize,
    /// Present when the counting matrix is numerically singular: the counts
    /// that would result if the zero modes tipped negative resp. positive.
    pub degenerate: Option<(usize, usize)>,
}

/// Number of negative eigenvalues of the channel operator, by the signature
/// formula for `l > -1/2` and by zero-energy oscillation counting in the
/// borderline channel.
pub fn count_bound_states<T: Scalar>(
    config: &ShellConfig<T>,
    channel: &ChannelSpec<T>,
) -> Result<CountOutcome> {
    count_bound_states_with_tol(config, channel, None)
}

/// Same as [`count_bound_states`] with an explicit zero-threshold for the
/// signature computation.
pub fn count_bound_states_with_tol<T: Scalar>(
    config: &ShellConfig<T>,
    channel: &ChannelSpec<T>,
    tol: Option<T>,
) -> Result<CountOutcome> {
    let l = channel.effective_l()?;
    if config.is_empty() {
        return Ok(CountOutcome {
            count: 0,
            degenerate: None,
        });
    }
    if l == cst::<T>(-0.5) {
        let report = oracle::oscillation_report(config, l)?;
        return Ok(CountOutcome {
            count: report.count,
            degenerate: report.perturbed,
        });
    }
    let m = kappa_matrix(config, l)?;
    let tol = tol.unwrap_or_else(|| default_inertia_tol(&m.entries));
    let sig = inertia(&m.entries, tol);
    let kappa_plus_alpha = config.positive_count();
    let count = sig
        .kappa_plus
        .checked_sub(kappa_plus_alpha)
        .ok_or_else(|| {
            Error::domain("signature inconsistency: positive signature fell below the repulsive shell count")
        })?;
    debug_assert!(
        count <= config.negative_count(),
        "count {count} exceeds the attractive shell count"
    );
    let degenerate = if sig.kappa_zero > 0 {
        Some((count, count + sig.kappa_zero))
    } else {
        None
    };
    Ok(CountOutcome { count, degenerate })
}

/// Trace bound on the bound-state count of the attractive-part measure:
/// `sum w_k r_k / (2l+1)` for `l > -1/2` and `sum w_k r_k |ln r_k|` in the
/// borderline channel. The true count is strictly below this value.
pub fn bargmann_bound<T: Scalar>(measure: &AtomicMeasure<T>, l: T) -> Result<T> {
    if !(l.is_finite() && l >= cst::<T>(-0.5)) {
        return Err(Error::domain(format!("channel coefficient must be >= -1/2, got {l}")));
    }
    let half = cst::<T>(-0.5);
    let mut total = T::zero();
    for &(r, w) in measure.atoms() {
        if l == half {
            total = total + w * r * r.ln().abs();
        } else {
            total = total + w * r;
        }
    }
    if l == half {
        Ok(total)
    } else {
        Ok(total / (cst::<T>(2.0) * l + T::one()))
    }
}

/// Trace of the kernel operator of the measure at energy `lambda <= 0`;
/// equals the trace bound at zero energy and shrinks as `lambda` drops.
pub fn birman_schwinger_trace<T: Scalar>(
    measure: &AtomicMeasure<T>,
    l: T,
    lambda: T,
) -> Result<T> {
    let mut total = T::zero();
    for &(r, w) in measure.atoms() {
        total = total + w * green_kernel(l, lambda, r, r)?;
    }
    Ok(total)
}

/// Verdicts on whether the extreme counts (all shells bound, or none) are
/// still possible for the family.
#[derive(Debug, Clone)]
pub struct NecessaryConditions {
    /// `Fails` means the maximal count `kappa = N` is excluded.
    pub max_count_possible: Verdict,
    /// `Fails` means positivity (`kappa = 0`) is excluded.
    pub positivity_possible: Verdict,
}

pub fn necessary_conditions<T: Scalar>(config: &ShellConfig<T>, l: T) -> Result<NecessaryConditions> {
    require_matrix_channel(l)?;
    let threshold = cst::<T>(2.0) * l + T::one();
    let all_attractive = config.all_attractive();

    let max_count_possible = if config.is_empty() {
        Verdict::holds(ID_MAX_COUNT, "empty family: the maximal count is zero and attained")
    } else if !all_attractive {
        Verdict::fails(
            ID_MAX_COUNT,
            "a repulsive shell forces a positive matrix direction, so the maximal count is excluded",
        )
    } else if let Some(k) = config
        .shells()
        .iter()
        .position(|s| -s.strength * s.radius <= threshold)
    {
        Verdict::fails(
            ID_MAX_COUNT,
            format!(
                "shell {} has |strength| * radius <= 2l+1, so the maximal count is excluded",
                k + 1
            ),
        )
    } else {
        Verdict::holds(
            ID_MAX_COUNT,
            "all shells are attractive with |strength| * radius > 2l+1; the maximal count is not excluded",
        )
    };

    let positivity_possible = if config.is_empty() {
        Verdict::holds(ID_POSITIVITY, "empty family is positive")
    } else if !all_attractive {
        Verdict::holds(
            ID_POSITIVITY,
            "mixed signs: the necessity argument needs an all-attractive family, so positivity is not excluded here",
        )
    } else if let Some(k) = config
        .shells()
        .iter()
        .position(|s| -s.strength * s.radius > threshold)
    {
        Verdict::fails(
            ID_POSITIVITY,
            format!(
                "attractive shell {} has |strength| * radius > 2l+1, so at least one bound state exists",
                k + 1
            ),
        )
    } else {
        Verdict::holds(
            ID_POSITIVITY,
            "all |strength| * radius products stay within 2l+1; positivity is not excluded",
        )
    };

    Ok(NecessaryConditions {
        max_count_possible,
        positivity_possible,
    })
}

/// Result of the disk-separation test: when the verdict holds, the count is
/// exactly the size of the positive index set.
#[derive(Debug, Clone)]
pub struct GershgorinOutcome {
    pub verdict: Verdict,
    pub implied_count: Option<usize>,
}

/// Disk-separation test with scaling weights `b`: for an all-attractive
/// family, decides the exact count when the weighted disks of the positive
/// and non-positive index sets separate. Indices in `omega_plus` are
/// 0-based. A failing verdict means the hypotheses are not met and decides
/// nothing.
pub fn gershgorin_classify<T: Scalar>(
    config: &ShellConfig<T>,
    l: T,
    weights: &[T],
    omega_plus: &[usize],
) -> Result<GershgorinOutcome> {
    require_matrix_channel(l)?;
    require_all_attractive(config)?;
    let n = config.len();
    if weights.len() != n {
        return Err(Error::domain(format!(
            "expected {n} weights, got {}",
            weights.len()
        )));
    }
    if weights.iter().any(|&b| !(b > T::zero())) {
        return Err(Error::domain("weights must be strictly positive"));
    }
    if omega_plus.iter().any(|&k| k >= n) {
        return Err(Error::domain("positive index set references a missing shell"));
    }
    let shells = config.shells();
    let threshold = cst::<T>(2.0) * l + T::one();
    let mut in_plus = vec![false; n];
    for &k in omega_plus {
        in_plus[k] = true;
    }

    let mut failing: Vec<usize> = Vec::new();
    for k in 0..n {
        let rk = shells[k].radius;
        let mut spread = T::zero();
        for j in 0..n {
            if j == k {
                continue;
            }
            let ratio = weights[j] / weights[k];
            let geom = if j < k {
                (shells[j].radius / rk).powf(l + T::one())
            } else {
                (rk / shells[j].radius).powf(l)
            };
            spread = spread + ratio * geom;
        }
        let lhs = threshold / (-shells[k].strength);
        let ok = if in_plus[k] {
            lhs < rk * (T::one() - spread)
        } else {
            lhs >= rk * (T::one() + spread)
        };
        if !ok {
            failing.push(k + 1);
        }
    }

    if failing.is_empty() {
        let count = omega_plus.len();
        Ok(GershgorinOutcome {
            verdict: Verdict::holds(
                ID_GERSHGORIN,
                format!("weighted disks separate; the count is exactly {count}"),
            ),
            implied_count: Some(count),
        })
    } else {
        Ok(GershgorinOutcome {
            verdict: Verdict::fails(
                ID_GERSHGORIN,
                format!("disk inequalities fail at shells {failing:?}; the test decides nothing"),
            ),
            implied_count: None,
        })
    }
}

/// Window test certifying exactly two bound states for an all-attractive
/// family of at least three shells: two deeply attractive inner shells and
/// uniformly shallow outer ones, with gaps controlled by `epsilon`.
pub fn epsilon_two_state_check<T: Scalar>(
    config: &ShellConfig<T>,
    l: T,
    epsilon: T,
) -> Result<Verdict> {
    require_matrix_channel(l)?;
    require_all_attractive(config)?;
    if !(epsilon > T::zero() && epsilon < T::one()) {
        return Err(Error::domain(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    let n = config.len();
    if n < 3 {
        return Ok(Verdict::fails(
            ID_TWO_STATE,
            format!("needs at least three shells, got {n}"),
        ));
    }
    let shells = config.shells();
    let nf: T = cst(n as f64);
    let threshold = cst::<T>(2.0) * l + T::one();
    let r = |k: usize| shells[k - 1].radius; // 1-based like the inequalities
    let strength = |k: usize| -shells[k - 1].strength;

    let fail = |what: String| Ok(Verdict::fails(ID_TWO_STATE, what));

    if !((r(1) / r(2)).powf(l + T::one()) < epsilon * epsilon * (T::one() - epsilon) / cst(2.0)) {
        return fail("inner radius gap r1/r2 too wide for the window".into());
    }
    if !((r(1) / r(3)).powf(l + T::one()) < epsilon.powi(3) / (cst::<T>(6.0) * nf)) {
        return fail("radius gap r1/r3 too wide for the window".into());
    }
    if !((r(2) / r(3)).powf(l + T::one()) < epsilon * epsilon / (cst::<T>(6.0) * nf)) {
        return fail("radius gap r2/r3 too wide for the window".into());
    }
    // consecutive-gap condition on the outer shells; the last shell has no
    // successor, so the range stops one short
    for k in 3..n {
        if !((r(k) / r(k + 1)).powf(l) <= epsilon / (cst::<T>(3.0) * nf)) {
            return fail(format!("outer radius gap r{k}/r{} too wide for the window", k + 1));
        }
    }
    for k in 1..=2usize {
        if !(threshold / strength(k) < r(k) * (T::one() - epsilon)) {
            return fail(format!("inner shell {k} is not deep enough"));
        }
    }
    for k in 3..=n {
        if !(threshold / strength(k) >= r(k) * (T::one() + epsilon)) {
            return fail(format!("outer shell {k} is not shallow enough"));
        }
    }
    Ok(Verdict::holds(
        ID_TWO_STATE,
        "window hypotheses hold: exactly two bound states",
    ))
}

/// Norm certificate and trace bound of an all-attractive family.
#[derive(Debug, Clone)]
pub struct MatrixBargmannReport<T> {
    /// Holds exactly when the operator norm stays within `2l+1`, which is
    /// equivalent to the absence of bound states.
    pub norm_check: Verdict,
    pub operator_norm: T,
    /// Trace bound `sum |alpha_k| r_k / (2l+1)`; the count is strictly below it.
    pub bound: T,
    /// Row-sum positivity test; sufficient only.
    pub row_positivity: Verdict,
    /// 1-based rows where the row-sum test fails.
    pub failing_rows: Vec<usize>,
}

/// Builds the symmetrized strength-weighted kernel matrix of an
/// all-attractive family and evaluates the norm certificate, the trace
/// bound and the row-sum positivity test.
pub fn matrix_bargmann<T: Scalar>(config: &ShellConfig<T>, l: T) -> Result<MatrixBargmannReport<T>> {
    require_matrix_channel(l)?;
    require_all_attractive(config)?;
    let n = config.len();
    let shells = config.shells();
    let threshold = cst::<T>(2.0) * l + T::one();

    let m = SymMatrix::from_fn(n, |i, j| {
        let wi = -shells[i].strength;
        let wj = -shells[j].strength;
        if i == j {
            shells[i].radius * wi
        } else {
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            shells[lo].radius.powf(l + T::one()) * shells[hi].radius.powf(-l) * (wi * wj).sqrt()
        }
    });
    let operator_norm = if n == 0 {
        T::zero()
    } else {
        tridiagonalize(&m).operator_norm()
    };

    let slack = cst::<T>(32.0) * eps::<T>() * threshold.max(operator_norm);
    let norm_check = if operator_norm <= threshold + slack {
        Verdict::holds(
            ID_NORM_CERT,
            format!("operator norm {operator_norm} stays within 2l+1 = {threshold}: no bound states"),
        )
    } else {
        Verdict::fails(
            ID_NORM_CERT,
            format!("operator norm {operator_norm} exceeds 2l+1 = {threshold}: at least one bound state"),
        )
    };

    let bound = bargmann_bound(&config.attractive_measure(), l)?;

    let mut failing_rows = Vec::new();
    for k in 0..n {
        let rk = shells[k].radius;
        let mut sum = T::zero();
        for j in 0..k {
            sum = sum + shells[j].radius.powf(l + T::one()) / rk.powf(l);
        }
        for j in k..n {
            sum = sum + rk * (rk / shells[j].radius).powf(l);
        }
        let lhs = (-shells[k].strength).recip();
        if !(lhs >= sum / threshold) {
            failing_rows.push(k + 1);
        }
    }
    let row_positivity = if failing_rows.is_empty() {
        Verdict::holds(
            ID_ROW_POSITIVITY,
            "all row-sum inequalities hold: no bound states",
        )
    } else {
        Verdict::fails(
            ID_ROW_POSITIVITY,
            format!("row-sum inequalities fail at shells {failing_rows:?}; the test decides nothing"),
        )
    };

    Ok(MatrixBargmannReport {
        norm_check,
        operator_norm,
        bound,
        row_positivity,
        failing_rows,
    })
}

/// Outcome of the string-criterion positivity test for the s-wave channel.
#[derive(Debug, Clone)]
pub struct KacKreinReport<T> {
    /// Holds when `S <= 1/4`: no bound states.
    pub sufficient: Verdict,
    /// Fails when `S > 1`: positivity is excluded.
    pub necessary: Verdict,
    /// `S = sup_r r * mu((r, inf))`, attained at an atom from the left.
    pub sup_value: T,
}

/// Evaluates `S = sup_r r mu((r, inf))` for an atomic measure and the
/// associated positivity verdicts (s-wave semantics).
pub fn kac_krein_check<T: Scalar>(measure: &AtomicMeasure<T>) -> KacKreinReport<T> {
    let atoms = measure.atoms();
    let mut sup_value = T::zero();
    let mut tail = T::zero();
    for &(r, w) in atoms.iter().rev() {
        tail = tail + w;
        let candidate = r * tail;
        if candidate > sup_value {
            sup_value = candidate;
        }
    }
    let quarter = cst::<T>(0.25);
    let (sufficient, necessary) = if sup_value <= quarter {
        (
            Verdict::holds(
                ID_KK_SUFFICIENT,
                format!("S = {sup_value} <= 1/4: no bound states"),
            ),
            Verdict::holds(ID_KK_NECESSARY, "the necessary bound S <= 1 holds"),
        )
    } else if sup_value <= T::one() {
        (
            Verdict::inconclusive(
                ID_KK_SUFFICIENT,
                format!("S = {sup_value} lies between 1/4 and 1; the test decides nothing"),
            ),
            Verdict::inconclusive(
                ID_KK_NECESSARY,
                format!("S = {sup_value} lies between 1/4 and 1; the test decides nothing"),
            ),
        )
    } else {
        (
            Verdict::fails(
                ID_KK_SUFFICIENT,
                format!("S = {sup_value} > 1: the sufficient bound fails"),
            ),
            Verdict::fails(
                ID_KK_NECESSARY,
                format!("S = {sup_value} > 1: positivity is excluded, at least one bound state"),
            ),
        )
    };
    KacKreinReport {
        sufficient,
        necessary,
        sup_value,
    }
}
