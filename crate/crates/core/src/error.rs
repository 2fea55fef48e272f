use thiserror::Error;

/// Errors shared across the crate. Numeric payloads are reported in `f64`
/// regardless of the working scalar type; they are diagnostics, not data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("two shells share the radius {radius}")]
    DuplicateRadius { radius: f64 },

    #[error("shell radius {radius} is not a positive finite number")]
    NonPositiveRadius { radius: f64 },

    #[error("shell strength {strength} is not finite")]
    NonFiniteStrength { strength: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("requested a {requested}x{requested} truncation but only {available} spacings are available")]
    InsufficientShells { requested: usize, available: usize },

    #[error("prerequisite not met: {0}")]
    PrerequisiteNotMet(String),

    #[error("shell strength is zero after normalization")]
    ZeroStrength,

    #[error("all strengths must be negative for this certificate, found a positive one at index {index}")]
    MixedSigns { index: usize },

    #[error("mesh too coarse: shells {first} and {second} collide on the grid")]
    MeshTooCoarse { first: usize, second: usize },

    #[error("aggregate bounds are only available in dimensions 2 and 3, got {n}")]
    UnsupportedDimension { n: u32 },

    #[error("invalid tail model: {0}")]
    InvalidTail(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
