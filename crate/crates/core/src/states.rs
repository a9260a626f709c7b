//! Bipartite pure states, density matrices, Haar sampling, and the JSON
//! wire format.
//!
//! The index convention is |ψ⟩ = Σ_{m,n} C_mn |m⟩⊗|n⟩ with m the row of C,
//! so a local pair (U, V) acts as C ↦ U·C·Vᵀ and the reduced state of the
//! first factor is ρ_A = C·C†.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, HermitianMatrix, C64};
use crate::schmidt::SchmidtVector;
use crate::tol;

/// A normalized pure state of an N×N bipartite system, stored as its
/// coefficient matrix with Σ |C_mn|² = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n: usize,
    coeffs: ComplexMatrix,
}

impl PureState {
    /// Local dimension N.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &ComplexMatrix {
        &self.coeffs
    }

    /// The state as a vector of length N², index m·N + n ↔ |m⟩⊗|n⟩.
    pub fn state_vector(&self) -> Vec<C64> {
        self.coeffs.data().to_vec()
    }
}

/// Normalize a nonzero square coefficient matrix into a state.
pub fn from_coeffs(c: ComplexMatrix) -> Result<PureState> {
    if !c.is_square() {
        return Err(Error::NotSquare {
            rows: c.rows(),
            cols: c.cols(),
        });
    }
    if c.rows() < 2 {
        return Err(Error::DimensionTooSmall(c.rows()));
    }
    let norm = c.frobenius_norm();
    if norm < 1e-300 {
        return Err(Error::NullState);
    }
    // already-normalized data is kept bit-stable so files round-trip exactly
    let coeffs = if (norm - 1.0).abs() <= tol::NORMALIZATION_TOL {
        c
    } else {
        c.scale(Complex::new(1.0 / norm, 0.0))
    };
    Ok(PureState {
        n: coeffs.rows(),
        coeffs,
    })
}

/// |ψ*⟩ = (Σ_k |kk⟩)/√N, the center of the Schmidt simplex: C = I/√N.
pub fn maximally_entangled(n: usize) -> Result<PureState> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let c = ComplexMatrix::identity(n).scale(Complex::new(1.0 / (n as f64).sqrt(), 0.0));
    from_coeffs(c)
}

/// Assemble a state from its Schmidt data: C = W·diag(√λ)·Vᵀ.
pub fn from_schmidt(
    lambda: &SchmidtVector,
    w: &ComplexMatrix,
    v: &ComplexMatrix,
) -> Result<PureState> {
    let n = lambda.len();
    for factor in [w, v] {
        if factor.rows() != n || factor.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: factor.rows(),
            });
        }
        let deviation = factor.unitarity_deviation();
        if deviation >= tol::UNITARY_TOL {
            return Err(Error::NotUnitary { deviation });
        }
    }
    let mut scaled = ComplexMatrix::zeros(n, n);
    for k in 0..n {
        let s = lambda.values()[k].sqrt();
        for i in 0..n {
            scaled[(i, k)] = w[(i, k)] * s;
        }
    }
    from_coeffs(scaled.mul(&v.transpose()))
}

/// Schmidt-form representative of a spectrum: C = diag(√λ).
pub fn schmidt_diagonal(lambda: &SchmidtVector) -> Result<PureState> {
    let id = ComplexMatrix::identity(lambda.len());
    from_schmidt(lambda, &id, &id)
}

/// A state drawn from the unitarily invariant measure: a normalized complex
/// Gaussian (Ginibre) coefficient matrix. Deterministic per seed.
pub fn random_pure(n: usize, seed: u64) -> Result<PureState> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_pure_with(n, &mut rng))
}

pub(crate) fn random_pure_with(n: usize, rng: &mut impl Rng) -> PureState {
    let c = ginibre(n, rng);
    from_coeffs(c).expect("Gaussian matrix is nonzero")
}

/// A Haar-distributed pair (U, V), via QR of independent Ginibre matrices
/// with the R diagonal fixed positive. Deterministic per seed.
pub fn random_local_unitary(n: usize, seed: u64) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((haar_unitary(n, &mut rng), haar_unitary(n, &mut rng)))
}

pub(crate) fn ginibre(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let root_half = 0.5f64.sqrt();
    ComplexMatrix::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex::new(re * root_half, im * root_half)
    })
}

/// Haar unitary from one Ginibre draw. Modified Gram-Schmidt with a second
/// orthogonalization pass; normalizing against the positive column norms is
/// exactly the R-diagonal phase fix, so the result is Haar-distributed.
pub(crate) fn haar_unitary(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = ginibre(n, rng);
    let mut cols: Vec<Vec<C64>> = (0..n).map(|j| g.column(j)).collect();
    for j in 0..n {
        for _pass in 0..2 {
            for i in 0..j {
                let overlap: C64 = cols[i]
                    .iter()
                    .zip(cols[j].iter())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let (head, tail) = cols.split_at_mut(j);
                for (cj, ci) in tail[0].iter_mut().zip(head[i].iter()) {
                    *cj -= overlap * ci;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm > 1e-200, "Ginibre matrix numerically singular");
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// The local action (U, V): C ↦ U·C·Vᵀ. Norm is preserved.
pub fn apply_local(state: &PureState, u: &ComplexMatrix, v: &ComplexMatrix) -> Result<PureState> {
    let n = state.n();
    for factor in [u, v] {
        if factor.rows() != n || factor.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: factor.rows(),
            });
        }
        let deviation = factor.unitarity_deviation();
        if deviation >= tol::UNITARY_TOL {
            return Err(Error::NotUnitary { deviation });
        }
    }
    let c = u.mul(state.coeffs()).mul(&v.transpose());
    from_coeffs(c)
}

/// Density matrix on the N²-dimensional product space: unit trace, positive
/// semidefinite within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n: usize,
    mat: HermitianMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, trace 1, and PSD (eigenvalues ≥ −1e−10).
    pub fn new(n: usize, mat: ComplexMatrix) -> Result<Self> {
        if mat.rows() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: mat.rows(),
            });
        }
        let mat = HermitianMatrix::new(mat)?;
        let trace = mat.matrix().trace().re;
        if (trace - 1.0).abs() > tol::NORMALIZATION_TOL {
            return Err(Error::BadTrace(trace));
        }
        let min_eig = mat
            .eigenvalues()
            .first()
            .copied()
            .expect("nonempty spectrum");
        if min_eig < tol::PSD_TOL {
            return Err(Error::NotPositiveSemidefinite(min_eig));
        }
        Ok(Self { n, mat })
    }

    /// Local dimension N (the matrix itself is N²×N²).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.mat.matrix()
    }

    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.mat
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.mat.eigenvalues()
    }

    /// Tr ρ², which is 1 exactly for pure states.
    pub fn purity(&self) -> f64 {
        self.matrix().trace_product(self.matrix()).re
    }
}

/// ρ = |ψ⟩⟨ψ| as a density matrix on the product space.
pub fn to_density(state: &PureState) -> DensityMatrix {
    let psi = state.state_vector();
    let d = psi.len();
    let mat = ComplexMatrix::from_fn(d, d, |i, j| psi[i] * psi[j].conj());
    DensityMatrix::new(state.n(), mat).expect("outer product of a unit vector")
}

/// Reduced state of the first factor, ρ_A = C·C†. Its spectrum is the
/// Schmidt vector.
pub fn partial_trace_b(state: &PureState) -> HermitianMatrix {
    let c = state.coeffs();
    HermitianMatrix::new(c.mul(&c.adjoint())).expect("CC† is Hermitian")
}

/// Generalized Werner state ρ = (1−α)/N²·I + α|ψ⟩⟨ψ|.
///
/// The 1/N² prefactor (rather than 1/N) makes Tr ρ = 1 on the N²-dimensional
/// product space; orbit dimensions are unaffected since the tangent vectors
/// only pick up the overall factor α.
pub fn werner_state(state: &PureState, alpha: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let d = state.n() * state.n();
    let psi = state.state_vector();
    let uniform = (1.0 - alpha) / d as f64;
    let mat = ComplexMatrix::from_fn(d, d, |i, j| {
        let pure = psi[i] * psi[j].conj() * alpha;
        if i == j {
            pure + Complex::new(uniform, 0.0)
        } else {
            pure
        }
    });
    DensityMatrix::new(state.n(), mat)
}

// ---------------------------------------------------------------------------
// JSON wire format
// ---------------------------------------------------------------------------

/// State file: `{"n": N, "coeffs": [[[re,im], ...N], ...N rows]}`.
#[derive(Serialize, Deserialize)]
struct PureStateWire {
    n: usize,
    coeffs: Vec<Vec<[f64; 2]>>,
}

/// Density file: `{"n": N, "mat": [[[re,im], ...N²], ...N² rows]}`.
#[derive(Serialize, Deserialize)]
struct DensityWire {
    n: usize,
    mat: Vec<Vec<[f64; 2]>>,
}

fn matrix_to_wire(m: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| [m[(i, j)].re, m[(i, j)].im])
                .collect()
        })
        .collect()
}

fn wire_to_matrix(rows: &[Vec<[f64; 2]>], expected: usize) -> Result<ComplexMatrix> {
    if rows.len() != expected || rows.iter().any(|r| r.len() != expected) {
        return Err(Error::InvalidStateFile(format!(
            "expected a {expected}x{expected} matrix"
        )));
    }
    let mut data = Vec::with_capacity(expected * expected);
    for row in rows {
        for &[re, im] in row {
            data.push(Complex::new(re, im));
        }
    }
    ComplexMatrix::new(expected, expected, data)
}

impl PureState {
    pub fn to_json(&self) -> String {
        let wire = PureStateWire {
            n: self.n,
            coeffs: matrix_to_wire(&self.coeffs),
        };
        serde_json::to_string_pretty(&wire).expect("serialization is infallible")
    }

    /// Parse and validate: the matrix must be N×N, finite, and normalized
    /// (within 1e−12; exact inputs such as generated files stay bit-stable).
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: PureStateWire =
            serde_json::from_str(text).map_err(|e| Error::InvalidStateFile(e.to_string()))?;
        if wire.n < 2 {
            return Err(Error::DimensionTooSmall(wire.n));
        }
        let c = wire_to_matrix(&wire.coeffs, wire.n)?;
        let norm = c.frobenius_norm();
        if (norm - 1.0).abs() > 1e-6 {
            return Err(Error::NotNormalized { sum: norm * norm });
        }
        from_coeffs(c)
    }
}

impl DensityMatrix {
    pub fn to_json(&self) -> String {
        let wire = DensityWire {
            n: self.n,
            mat: matrix_to_wire(self.matrix()),
        };
        serde_json::to_string_pretty(&wire).expect("serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: DensityWire =
            serde_json::from_str(text).map_err(|e| Error::InvalidStateFile(e.to_string()))?;
        if wire.n < 2 {
            return Err(Error::DimensionTooSmall(wire.n));
        }
        let mat = wire_to_matrix(&wire.mat, wire.n * wire.n)?;
        Self::new(wire.n, mat)
    }
}
