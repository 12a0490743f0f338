//! Crate-wide error type. Payloads are `f64` so the error stays non-generic.

/// Errors surfaced by constructors, quadrature guards and the optimizer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("grid size {n} must be a power of two and at least 4")]
    InvalidGridSize { n: usize },

    #[error("grid sizes differ: {left} vs {right}")]
    GridSizeMismatch { left: usize, right: usize },

    #[error("quadrature failed to stabilize by grid size {max_n}")]
    QuadratureNotConverged { max_n: usize },

    #[error("Blaschke zero has modulus {modulus}; zeros must lie strictly inside the unit disc")]
    ZeroOutsideDisc { modulus: f64 },

    #[error("rotation factor must be finite and nonzero")]
    InvalidRotation,

    #[error("evaluation point has modulus {modulus}, outside the closed unit disc")]
    PointOutsideDisc { modulus: f64 },

    #[error("target origin value {value} must lie strictly between 0 and 1")]
    InvalidOriginTarget { value: f64 },

    #[error("degree must be at least 1, got {degree}")]
    InvalidDegree { degree: usize },

    #[error("resampling budget of {attempts} attempts exhausted")]
    SamplingBudget { attempts: usize },

    #[error("inner factor takes value {got} at the origin, expected {want}")]
    OriginMismatch { got: f64, want: f64 },

    #[error("{context} must not be identically zero")]
    ZeroFunction { context: &'static str },

    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
