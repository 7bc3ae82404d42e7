//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A matrix handed to a Hermitian-only routine was not Hermitian
    /// (or contained non-finite entries).
    #[error("matrix is not Hermitian (max deviation {max_deviation:.3e})")]
    NotHermitian { max_deviation: f64 },

    /// The cyclic Jacobi sweep (or another iterative solver) failed to
    /// reach its convergence target within the iteration cap.
    #[error("did not converge within {sweeps} sweeps (residual {off_norm:.3e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    /// An operand had the wrong dimension for the requested operation.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A state vector was not normalized to unit length.
    #[error("state vector is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    /// A density matrix did not have unit trace.
    #[error("density matrix must have unit trace (got {trace})")]
    InvalidTrace { trace: f64 },

    /// A density matrix had a negative eigenvalue beyond tolerance.
    #[error("density matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// A temperature was zero, negative, or non-finite.
    #[error("temperature must be positive and finite (got {0})")]
    InvalidTemperature(f64),

    /// A scan range, step count, or similar argument was unusable.
    #[error("invalid range: {0}")]
    InvalidRange(String),

    /// A bracketing root search was started on an interval whose endpoint
    /// values do not straddle zero.
    #[error(
        "no sign change over [{low}, {high}]: curvature {curvature_low:.3e} .. {curvature_high:.3e}"
    )]
    NoSignChange {
        low: f64,
        high: f64,
        curvature_low: f64,
        curvature_high: f64,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
