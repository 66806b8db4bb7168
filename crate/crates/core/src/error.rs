//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by matrix decompositions, operation handling and
/// fidelity evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation that requires a square matrix received a rectangular one.
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    /// Hermitian eigensolver input deviates too far from `H = H^dagger`.
    #[error("matrix is not Hermitian: relative deviation {deviation:.3e}")]
    NotHermitian { deviation: f64 },

    /// The Jacobi sweep cap was exhausted before the off-diagonal mass
    /// dropped below the convergence threshold.
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// Matrix dimensions are inconsistent (mixed sizes, wrong entry count).
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Vector or guess dimension does not match the operation dimension.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },

    /// Outcome or basis index outside the valid range.
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    /// Conditioning on an outcome whose probability is numerically zero.
    #[error("outcome probability {probability:.3e} is below the zero threshold")]
    ZeroProbabilityOutcome { probability: f64 },

    /// The Kraus set does not resolve the identity within tolerance.
    #[error("operation violates completeness: residual {residual:.3e} exceeds {tol:.3e}")]
    InvalidOperation { residual: f64, tol: f64 },

    /// A state vector failed the unit-norm check.
    #[error("state is not normalized: |norm^2 - 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    /// Scalar argument outside its mathematical domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Schmidt coefficients violate normalization or positivity.
    #[error("invalid Schmidt spectrum: {0}")]
    InvalidSpectrum(String),

    /// A matrix entry parsed or constructed as NaN/Inf.
    #[error("non-finite matrix entry")]
    NonFinite,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
