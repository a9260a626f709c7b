//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix entries must be finite (found NaN or Inf)")]
    NonFinite,

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian: max |M - M†| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not symmetric: max |M - Mᵀ| = {deviation:e}")]
    NotSymmetric { deviation: f64 },

    #[error("matrix is not unitary: max |U†U - I| = {deviation:e}")]
    NotUnitary { deviation: f64 },

    #[error("null state: coefficient matrix has zero norm")]
    NullState,

    #[error("local dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("vector is not normalized: sum = {sum} (expected 1)")]
    NotNormalized { sum: f64 },

    #[error("Schmidt coefficients must be nonnegative, got {0}")]
    NegativeCoefficient(f64),

    #[error("degeneracy pattern inconsistent with N = {n}: m0 + sum of multiplicities = {total}")]
    InconsistentPattern { n: usize, total: usize },

    #[error("mixing parameter must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),

    #[error("Renyi order alpha = 1 is the Shannon limit; use entropy_entanglement")]
    RenyiOrderOne,

    #[error("Renyi order must be positive, got {0}")]
    RenyiOrderNonPositive(f64),

    #[error("density matrix is not positive semidefinite: min eigenvalue = {0:e}")]
    NotPositiveSemidefinite(f64),

    #[error("density matrix trace = {0}, expected 1")]
    BadTrace(f64),

    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),

    #[error("invalid state file: {0}")]
    InvalidStateFile(String),
}
