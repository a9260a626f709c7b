//! Numerical tolerances used across the crate.
//!
//! All spectra handled here are bounded: Schmidt vectors live on the unit
//! simplex and Gram eigenvalues scale with Σλ = 1, so relative thresholds
//! anchored at these magnitudes are stable.

/// Constructor check for Hermitian matrices, ‖M − M†‖_max.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Constructor check for real symmetric matrices, max |M_ij − M_ji|.
pub const SYMMETRIC_TOL: f64 = 1e-12;

/// Relative rank threshold: singular values below `RANK_REL_TOL · σ_max`
/// are counted as zero.
pub const RANK_REL_TOL: f64 = 1e-8;

/// Absolute floor for σ_max below which a matrix is declared zero (rank 0).
pub const RANK_ZERO_FLOOR: f64 = 1e-12;

/// Unitarity check, ‖U†U − I‖_max.
pub const UNITARY_TOL: f64 = 1e-10;

/// Normalization check for state vectors and Schmidt vectors.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Schmidt coefficients below this absolute value count as vanishing (m₀).
/// Well above eigensolver error, far below physically distinguishable gaps.
pub const ZERO_TOL: f64 = 1e-9;

/// Two Schmidt coefficients closer than this are grouped as degenerate.
pub const GROUP_TOL: f64 = 1e-9;

/// Density matrices may have eigenvalues down to this (negative) value and
/// still count as positive semidefinite.
pub const PSD_TOL: f64 = -1e-10;

/// Absolute threshold on characteristic-polynomial coefficients when counting
/// the multiplicity of the zero root. Coefficients are elementary symmetric
/// polynomials of λ ∈ [0, 1], so an absolute cut is safe.
pub const CHARPOLY_ZERO_TOL: f64 = 1e-10;

/// Slack absorbed by majorization and Schur-concavity inequality checks.
pub const MAJORIZATION_SLACK: f64 = 1e-12;

/// Slack for the trace non-increase checks in the bistochastic experiment.
pub const TRACE_MONOTONE_SLACK: f64 = 1e-9;
