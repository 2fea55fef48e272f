//! Spectral analysis of Schrödinger operators with concentric δ-shell
//! interactions: exact bound-state counting per angular channel and in the
//! full space, trace and norm bounds, positivity certificates, and the
//! sequence criteria deciding self-adjointness, semiboundedness and
//! spectral type of infinite shell families.
//!
//! All numerics are generic over the scalar type through [`Scalar`]
//! (`f32` or `f64`); the `*64` aliases at the crate root fix `f64`, which
//! is what the command-line front end uses.

// validation and hypothesis gates use negated comparisons deliberately:
// `!(x > 0)` must reject NaN, which `x <= 0` would let through
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod jacobi;
mod linalg;
pub mod matrix;
pub mod model;
pub mod multidim;
pub mod negcount;
pub mod oracle;
mod scalar;
pub mod special;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use model::{
    effective_l, negative_part, AtomicMeasure, ChannelSpec, HarmonicLaw, InertiaReport,
    PeriodicTail, Remainder, SampledTail, Shell, ShellConfig, TailAsserts, TailModel, Verdict,
    VerdictStatus,
};

pub use jacobi::{
    build_jacobi, check_continuous_spectrum, check_discrete, check_self_adjoint,
    check_semibounded, JacobiMatrix,
};

pub use negcount::{
    bargmann_bound, birman_schwinger_trace, count_bound_states, count_bound_states_with_tol,
    default_inertia_tol, epsilon_two_state_check, gershgorin_classify, inertia, kac_krein_check,
    kappa_matrix, matrix_bargmann, necessary_conditions, weyl_matrix, CountOutcome,
    GershgorinOutcome, KacKreinReport, KappaMatrix, MatrixBargmannReport, NecessaryConditions,
    WeylMatrix,
};

pub use multidim::{
    aggregate_bounds, channel_multiplicity, multidim_verdicts, total_bound_states,
    total_bound_states_capped, AggregateBounds, ChannelEntry, ChannelLedger, EssentialSpectrum,
    MultidimReport,
};

pub use oracle::{
    fd_count, oscillation_count, oscillation_report, oscillation_solution, OscillationReport,
    PiecewiseSolution,
};

pub use special::{green_kernel, phi_l, phi_l_deriv, psi_l, psi_l_deriv};

/// Concrete `f64` aliases for the generic core types.
pub type ShellConfig64 = ShellConfig<f64>;
pub type TailModel64 = TailModel<f64>;
pub type ChannelSpec64 = ChannelSpec<f64>;
pub type AtomicMeasure64 = AtomicMeasure<f64>;
pub type Shell64 = Shell<f64>;
pub type HarmonicLaw64 = HarmonicLaw<f64>;
pub type SampledTail64 = SampledTail<f64>;
pub type PeriodicTail64 = PeriodicTail<f64>;
pub type JacobiMatrix64 = JacobiMatrix<f64>;
pub type WeylMatrix64 = WeylMatrix<f64>;
pub type KappaMatrix64 = KappaMatrix<f64>;
