//! Schmidt decomposition of bipartite pure states.
//!
//! For |ψ⟩ = Σ C_mn |m⟩⊗|n⟩ the squared singular values of C are the
//! Schmidt coefficients λ_k — the complete local-unitary invariant of the
//! state. They are kept in ascending order throughout.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::PureState;
use crate::tol;

/// Schmidt coefficients λ₁ ≤ … ≤ λ_N with Σ λ_k = 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchmidtVector {
    lambda: Vec<f64>,
}

impl SchmidtVector {
    /// Sorts the values ascending and validates normalization. Tiny negative
    /// values from eigensolver noise (≥ −1e−10) are clamped to zero.
    pub fn new(mut lambda: Vec<f64>) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::DimensionTooSmall(0));
        }
        for x in lambda.iter_mut() {
            if !x.is_finite() {
                return Err(Error::NonFinite);
            }
            if *x < 0.0 {
                if *x < -1e-10 {
                    return Err(Error::NegativeCoefficient(*x));
                }
                *x = 0.0;
            }
        }
        let sum: f64 = lambda.iter().sum();
        if (sum - 1.0).abs() > tol::NORMALIZATION_TOL {
            return Err(Error::NotNormalized { sum });
        }
        lambda.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(Self { lambda })
    }

    /// Normalizes an arbitrary nonnegative vector to unit sum first.
    pub fn from_unnormalized(lambda: Vec<f64>) -> Result<Self> {
        let sum: f64 = lambda.iter().sum();
        if sum <= 0.0 {
            return Err(Error::NullState);
        }
        Self::new(lambda.into_iter().map(|x| x / sum).collect())
    }

    /// The uniform vector (1/N, …, 1/N).
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// Coefficients in ascending order.
    pub fn values(&self) -> &[f64] {
        &self.lambda
    }

    /// Coefficients sorted descending, as majorization wants them.
    pub fn descending(&self) -> Vec<f64> {
        let mut v = self.lambda.clone();
        v.reverse();
        v
    }
}

/// C = W·diag(√λ)·Vᵀ with W, V unitary: the full decomposition of a state.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    pub lambda: SchmidtVector,
    pub w: ComplexMatrix,
    pub v: ComplexMatrix,
}

impl SchmidtDecomposition {
    /// Rebuild the coefficient matrix; tests hold this against the source
    /// state to 1e−10.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.lambda.len();
        let mut scaled = ComplexMatrix::zeros(n, n);
        for k in 0..n {
            let s = self.lambda.values()[k].max(0.0).sqrt();
            for i in 0..n {
                scaled[(i, k)] = self.w[(i, k)] * s;
            }
        }
        scaled.mul(&self.v.transpose())
    }
}

/// Schmidt decomposition via the SVD of the coefficient matrix.
///
/// With C = U·diag(σ)·V_svd† and |ψ⟩ = Σ √λ_k (W|k⟩)⊗(V|k⟩), the factors
/// are W = U and V = conj(V_svd), and λ_k = σ_k². Columns are reordered so
/// λ ascends. W and V are unique only up to diagonal phases (and mixing
/// within degenerate blocks), so only the reconstruction identity is
/// contractual, never individual entries.
pub fn schmidt_decompose(state: &PureState) -> SchmidtDecomposition {
    let n = state.n();
    let svd = state.coeffs().svd();
    // σ descending → λ = σ² ascending by reversing
    let perm: Vec<usize> = (0..n).rev().collect();
    let lambda: Vec<f64> = perm.iter().map(|&k| svd.sigma[k] * svd.sigma[k]).collect();
    let lambda = SchmidtVector::new(lambda).expect("unit-norm state yields normalized λ");
    SchmidtDecomposition {
        lambda,
        w: svd.u.permute_columns(&perm),
        v: svd.v.conj().permute_columns(&perm),
    }
}

/// A state is separable exactly when a single Schmidt coefficient is 1.
pub fn is_separable(lambda: &SchmidtVector, tolerance: f64) -> bool {
    *lambda.values().last().expect("nonempty") >= 1.0 - tolerance
}

/// Maximally entangled states have all coefficients equal to 1/N.
pub fn is_maximally_entangled(lambda: &SchmidtVector, tolerance: f64) -> bool {
    let n = lambda.len() as f64;
    lambda
        .values()
        .iter()
        .all(|&x| (x - 1.0 / n).abs() < tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{C64, ONE, ZERO};
    use crate::states;

    #[test]
    fn diagonal_state_has_trivial_schmidt_vector() {
        let c = ComplexMatrix::new(2, 2, vec![ONE, ZERO, ZERO, ZERO]).unwrap();
        let state = states::from_coeffs(c).unwrap();
        let d = schmidt_decompose(&state);
        assert!((d.lambda.values()[0] - 0.0).abs() < 1e-14);
        assert!((d.lambda.values()[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn maximally_entangled_is_uniform() {
        let state = states::maximally_entangled(3).unwrap();
        let d = schmidt_decompose(&state);
        for &x in d.lambda.values() {
            assert!((x - 1.0 / 3.0).abs() < 1e-13);
        }
        assert!(is_maximally_entangled(&d.lambda, 1e-9));
        assert!(!is_separable(&d.lambda, 1e-9));
    }

    #[test]
    fn lambda_matches_independent_eigendecomposition() {
        // oracle: eigh of C†C, an algorithmically distinct route from the SVD
        for seed in 0..6 {
            let state = states::random_pure(4, seed).unwrap();
            let d = schmidt_decompose(&state);
            let c = state.coeffs();
            let gram = crate::linalg::HermitianMatrix::new(c.adjoint().mul(c)).unwrap();
            let w = gram.eigenvalues();
            for (a, b) in d.lambda.values().iter().zip(w) {
                assert!((a - b).abs() < 1e-10, "λ from SVD vs eigh(C†C)");
            }
            assert!(d.reconstruct().max_diff(c) < 1e-10, "W diag(√λ) Vᵀ = C");
            assert!(d.w.unitarity_deviation() < 1e-10);
            assert!(d.v.unitarity_deviation() < 1e-10);
        }
    }

    #[test]
    fn separable_threshold_rule() {
        let sep = SchmidtVector::new(vec![1e-12, 1.0 - 1e-12]).unwrap();
        assert!(is_separable(&sep, 1e-9));
        let half = SchmidtVector::new(vec![0.5, 0.5]).unwrap();
        assert!(!is_separable(&half, 1e-9));
        assert!(is_separable(
            &SchmidtVector::new(vec![0.0, 1.0]).unwrap(),
            1e-9
        ));
    }

    #[test]
    fn maxent_threshold_rule() {
        let close = SchmidtVector::new(vec![0.333, 0.333, 0.334]).unwrap();
        assert!(is_maximally_entangled(&close, 1e-2));
        assert!(!is_maximally_entangled(&close, 1e-4));
        assert!(!is_maximally_entangled(
            &SchmidtVector::new(vec![0.0, 1.0]).unwrap(),
            1e-9
        ));
    }

    #[test]
    fn product_state_is_separable() {
        // C = u vᵀ for unit vectors u, v
        let u = [C64::new(0.6, 0.0), C64::new(0.0, 0.8)];
        let v = [
            C64::new(1.0 / 2.0_f64.sqrt(), 0.0),
            C64::new(0.0, 1.0 / 2.0_f64.sqrt()),
        ];
        let c = ComplexMatrix::from_fn(2, 2, |i, j| u[i] * v[j]);
        let state = states::from_coeffs(c).unwrap();
        let d = schmidt_decompose(&state);
        assert!(is_separable(&d.lambda, 1e-9));
    }

    #[test]
    fn permutations_yield_identical_vector() {
        let a = SchmidtVector::new(vec![0.5, 0.2, 0.3]).unwrap();
        let b = SchmidtVector::new(vec![0.2, 0.3, 0.5]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(matches!(
            SchmidtVector::new(vec![0.5, 0.6]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            SchmidtVector::new(vec![-0.2, 1.2]),
            Err(Error::NegativeCoefficient(_))
        ));
    }
}
