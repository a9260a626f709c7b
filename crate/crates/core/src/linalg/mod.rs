//! Dense complex linear algebra: matrices, Hermitian eigendecomposition,
//! singular value decomposition, and numerical rank.
//!
//! Everything here operates on small dense matrices (target sizes are a few
//! hundred at most; the Gram matrices downstream are 2(N²−1) ≤ 70 for
//! N ≤ 6). Cyclic Jacobi iterations give eigenvalues and singular values
//! to near machine precision at these sizes, with no external dependencies.

mod eigh;
mod svd;

pub use svd::Svd;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::tol;

pub type C64 = Complex<f64>;

pub const ZERO: C64 = Complex::new(0.0, 0.0);
pub const ONE: C64 = Complex::new(1.0, 0.0);
pub const I: C64 = Complex::new(0.0, 1.0);

/// Dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    /// Build from row-major data, rejecting non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Build entrywise from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose M†.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let row = k * other.cols;
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[row + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Commutator [A, B] = AB − BA.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Anticommutator {A, B} = AB + BA.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    /// Kronecker product A ⊗ B. Row index packs as i_A·rows_B + i_B, so for
    /// square factors of size N the product basis index is m·N + n ↔ |m⟩⊗|n⟩.
    pub fn kron(&self, other: &Self) -> Self {
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (other.rows, other.cols);
        Self::from_fn(ra * rb, ca * cb, |i, j| {
            self[(i / rb, j / cb)] * other[(i % rb, j % cb)]
        })
    }

    pub fn trace(&self) -> C64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Tr(AB) without forming the product.
    pub fn trace_product(&self, other: &Self) -> C64 {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut t = ZERO;
        for i in 0..self.rows {
            for k in 0..self.cols {
                t += self[(i, k)] * other[(k, i)];
            }
        }
        t
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry magnitude, ‖M‖_max.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise difference to another matrix.
    pub fn max_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// ‖U†U − I‖_max.
    pub fn unitarity_deviation(&self) -> f64 {
        self.adjoint()
            .mul(self)
            .max_diff(&Self::identity(self.cols))
    }

    pub fn is_unitary(&self, tolerance: f64) -> bool {
        self.is_square() && self.unitarity_deviation() < tolerance
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Reorder columns by the given index permutation.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, perm[j])])
    }

    /// Singular value decomposition M = U·diag(σ)·V† with σ descending and
    /// both factors fully unitary.
    pub fn svd(&self) -> Svd {
        svd::svd_jacobi(self)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Square complex matrix verified Hermitian on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    mat: ComplexMatrix,
}

impl HermitianMatrix {
    /// Checks ‖M − M†‖_max < 1e−10 and symmetrizes the stored copy, so the
    /// diagonal is exactly real and downstream iterations start clean.
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::NotSquare {
                rows: mat.rows(),
                cols: mat.cols(),
            });
        }
        let deviation = mat.max_diff(&mat.adjoint());
        if deviation >= tol::HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let sym = mat.add(&mat.adjoint()).scale(Complex::new(0.5, 0.0));
        Ok(Self { mat: sym })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// Eigendecomposition M·V = V·diag(w), eigenvalues ascending, V unitary.
    pub fn eigh(&self) -> (Vec<f64>, ComplexMatrix) {
        eigh::eigh_complex(&self.mat)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigh().0
    }
}

/// Real symmetric matrix, dense row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSymmetricMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl RealSymmetricMatrix {
    /// Checks |M_ij − M_ji| < 1e−12 and finiteness, then symmetrizes.
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: data.len(),
            });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut deviation: f64 = 0.0;
        for i in 0..dim {
            for j in (i + 1)..dim {
                deviation = deviation.max((data[i * dim + j] - data[j * dim + i]).abs());
            }
        }
        if deviation >= tol::SYMMETRIC_TOL {
            return Err(Error::NotSymmetric { deviation });
        }
        let mut sym = data;
        for i in 0..dim {
            for j in (i + 1)..dim {
                let avg = 0.5 * (sym[i * dim + j] + sym[j * dim + i]);
                sym[i * dim + j] = avg;
                sym[j * dim + i] = avg;
            }
        }
        Ok(Self { dim, data: sym })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self::new(dim, data)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Eigenvalues in ascending order (cyclic Jacobi).
    pub fn eigenvalues(&self) -> Vec<f64> {
        eigh::eigvals_real(self)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    /// Matrix product, used for trace powers. Result is not symmetric in
    /// general so it returns the raw data.
    pub(crate) fn mul_raw(&self, other: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other[k * n + j];
                }
            }
        }
        out
    }
}

/// Number of singular values of `m` at or above `rel_tol · σ_max`.
///
/// For a symmetric matrix the singular values are the absolute eigenvalues.
/// Returns 0 when σ_max < 1e−12 (the zero matrix), so the relative threshold
/// never divides through noise.
pub fn numerical_rank(m: &RealSymmetricMatrix, rel_tol: f64) -> Result<usize> {
    if rel_tol <= 0.0 {
        return Err(Error::BadTolerance(rel_tol));
    }
    let sigma: Vec<f64> = m.eigenvalues().iter().map(|w| w.abs()).collect();
    let sigma_max = sigma.iter().cloned().fold(0.0, f64::max);
    if sigma_max < tol::RANK_ZERO_FLOOR {
        return Ok(0);
    }
    let cut = rel_tol * sigma_max;
    Ok(sigma.iter().filter(|&&s| s >= cut).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        Complex::new(re, im)
    }

    pub(crate) fn random_complex(n: usize, seed: u64) -> ComplexMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ComplexMatrix::from_fn(n, n, |_, _| {
            c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        })
    }

    pub(crate) fn random_hermitian(n: usize, seed: u64) -> HermitianMatrix {
        let a = random_complex(n, seed);
        let h = a.add(&a.adjoint()).scale(c(2.0, 0.0));
        HermitianMatrix::new(h).unwrap()
    }

    #[test]
    fn constructor_rejects_nan() {
        let err = ComplexMatrix::new(1, 1, vec![c(f64::NAN, 0.0)]);
        assert!(matches!(err, Err(Error::NonFinite)));
    }

    #[test]
    fn constructor_rejects_bad_length() {
        assert!(ComplexMatrix::new(2, 2, vec![ZERO; 3]).is_err());
    }

    #[test]
    fn hermitian_rejects_asymmetric() {
        let m = ComplexMatrix::new(2, 2, vec![ONE, c(1.0, 0.0), c(0.5, 0.0), ONE]).unwrap();
        assert!(matches!(
            HermitianMatrix::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn kron_matches_hand_case() {
        let a = ComplexMatrix::new(2, 2, vec![ONE, c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]).unwrap();
        let id = ComplexMatrix::identity(2);
        let k = a.kron(&id);
        assert_eq!(k[(0, 0)], ONE);
        assert_eq!(k[(0, 2)], c(2.0, 0.0));
        assert_eq!(k[(1, 3)], c(2.0, 0.0));
        assert_eq!(k[(2, 0)], c(3.0, 0.0));
        assert_eq!(k[(3, 3)], c(4.0, 0.0));
    }

    #[test]
    fn trace_product_agrees_with_full_product() {
        let a = random_complex(5, 1);
        let b = random_complex(5, 2);
        let direct = a.mul(&b).trace();
        let fast = a.trace_product(&b);
        assert!((direct - fast).norm() < 1e-12);
    }

    #[test]
    fn eigh_identity() {
        let (w, _) = HermitianMatrix::new(ComplexMatrix::identity(3))
            .unwrap()
            .eigh();
        for x in w {
            assert!((x - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn eigh_diagonal_sorted_ascending() {
        let m = ComplexMatrix::new(2, 2, vec![c(2.0, 0.0), ZERO, ZERO, c(-1.0, 0.0)]).unwrap();
        let (w, v) = HermitianMatrix::new(m).unwrap().eigh();
        assert!((w[0] + 1.0).abs() < 1e-14);
        assert!((w[1] - 2.0).abs() < 1e-14);
        // permutation eigenvectors
        assert!((v[(1, 0)].norm() - 1.0).abs() < 1e-12);
        assert!((v[(0, 1)].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigh_accuracy_at_gram_sizes() {
        // 70 is the largest Gram dimension in routine use (N = 6);
        // reconstruction must stay well inside the 1e-12 relative target
        let n = 70;
        let h = random_hermitian(n, 70);
        let (w, v) = h.eigh();
        let diag = ComplexMatrix::from_fn(n, n, |i, j| if i == j { c(w[i], 0.0) } else { ZERO });
        let rec = v.mul(&diag).mul(&v.adjoint());
        let rel = rec.max_diff(h.matrix()) / h.matrix().max_abs();
        assert!(rel < 1e-12, "relative reconstruction {rel:e}");
        assert!(v.unitarity_deviation() < 1e-12);
    }

    #[test]
    fn eigh_reconstructs_random_hermitian() {
        for seed in 0..8 {
            let n = 2 + (seed as usize % 7);
            let h = random_hermitian(n, seed);
            let (w, v) = h.eigh();
            assert!(w.windows(2).all(|p| p[0] <= p[1]), "ascending order");
            let diag =
                ComplexMatrix::from_fn(n, n, |i, j| if i == j { c(w[i], 0.0) } else { ZERO });
            let rec = v.mul(&diag).mul(&v.adjoint());
            assert!(rec.max_diff(h.matrix()) < 1e-10, "V w V† = M");
            assert!(v.unitarity_deviation() < 1e-10, "V unitary");
        }
    }

    #[test]
    fn svd_diagonal_descending() {
        let m = ComplexMatrix::new(2, 2, vec![c(3.0, 0.0), ZERO, ZERO, c(4.0, 0.0)]).unwrap();
        let s = m.svd();
        assert!((s.sigma[0] - 4.0).abs() < 1e-14);
        assert!((s.sigma[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn svd_zero_matrix() {
        let s = ComplexMatrix::zeros(4, 4).svd();
        assert!(s.sigma.iter().all(|&x| x == 0.0));
        assert!(s.u.unitarity_deviation() < 1e-12);
        assert!(s.v.unitarity_deviation() < 1e-12);
    }

    #[test]
    fn svd_reconstructs_and_is_consistent_with_eigh() {
        for seed in 10..16 {
            let n = 2 + (seed as usize % 5);
            let m = random_complex(n, seed);
            let s = m.svd();
            assert!(s.reconstruct().max_diff(&m) < 1e-10);
            assert!(s.u.unitarity_deviation() < 1e-10);
            assert!(s.v.unitarity_deviation() < 1e-10);
            // σ² against an independent eigendecomposition of M†M
            let gram = HermitianMatrix::new(m.adjoint().mul(&m)).unwrap();
            let mut w = gram.eigenvalues();
            w.reverse();
            for (sv, ev) in s.sigma.iter().zip(w) {
                assert!((sv * sv - ev.max(0.0)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn svd_rank_deficient() {
        // rank-1 outer product needs basis completion in U and V
        let u = [c(0.6, 0.0), c(0.8, 0.0), ZERO];
        let m = ComplexMatrix::from_fn(3, 3, |i, j| u[i] * u[j]);
        let s = m.svd();
        assert!((s.sigma[0] - 1.0).abs() < 1e-12);
        assert!(s.sigma[1].abs() < 1e-12);
        assert!(s.u.unitarity_deviation() < 1e-10);
        assert!(s.v.unitarity_deviation() < 1e-10);
        assert!(s.reconstruct().max_diff(&m) < 1e-10);
    }

    #[test]
    fn svd_rectangular() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let m = ComplexMatrix::from_fn(3, 5, |_, _| {
            c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        });
        let s = m.svd();
        assert_eq!(s.sigma.len(), 3);
        assert_eq!(s.u.rows(), 3);
        assert_eq!(s.v.rows(), 5);
        assert!(s.reconstruct().max_diff(&m) < 1e-10);
        assert!(s.u.unitarity_deviation() < 1e-10);
        assert!(s.v.unitarity_deviation() < 1e-10);
    }

    #[test]
    fn rank_identity_and_zero() {
        let id = RealSymmetricMatrix::from_fn(5, |i, j| if i == j { 1.0 } else { 0.0 }).unwrap();
        assert_eq!(numerical_rank(&id, 1e-8).unwrap(), 5);
        assert_eq!(
            numerical_rank(&RealSymmetricMatrix::zeros(4), 1e-8).unwrap(),
            0
        );
    }

    #[test]
    fn rank_threshold_rule() {
        let d = [1.0, 1e-4, 1e-12];
        let m = RealSymmetricMatrix::from_fn(3, |i, j| if i == j { d[i] } else { 0.0 }).unwrap();
        assert_eq!(numerical_rank(&m, 1e-8).unwrap(), 2);
    }

    #[test]
    fn rank_rejects_bad_tolerance() {
        let m = RealSymmetricMatrix::zeros(2);
        assert!(numerical_rank(&m, 0.0).is_err());
    }

    #[test]
    fn rank_invariant_under_orthogonal_conjugation() {
        // rotate a rank-2 diagonal by a random real orthogonal matrix
        let d = [2.0, 0.5, 0.0, 0.0];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = ComplexMatrix::from_fn(4, 4, |_, _| c(rng.random::<f64>() - 0.5, 0.0));
        let q = crate::linalg::svd::svd_jacobi(&g).u; // real orthogonal
        let m = ComplexMatrix::from_fn(4, 4, |i, j| if i == j { c(d[i], 0.0) } else { ZERO });
        let rotated = q.mul(&m).mul(&q.adjoint());
        let sym = RealSymmetricMatrix::from_fn(4, |i, j| rotated[(i, j)].re).unwrap();
        assert_eq!(numerical_rank(&sym, 1e-8).unwrap(), 2);
    }
}
