//! One-sided (Hestenes) Jacobi SVD for complex matrices.
//!
//! Right rotations orthogonalize column pairs until all inner products
//! vanish relative to the column norms; the column norms are then the
//! singular values. This route never forms M†M, so it stays independent
//! of the Hermitian eigensolver it is cross-checked against.

use num_complex::Complex;

use super::{ComplexMatrix, C64, ZERO};

const MAX_SWEEPS: usize = 60;
const ORTHO_TOL: f64 = 1e-15;

/// Result of [`ComplexMatrix::svd`]: M = U·diag(σ)·V†.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Left factor, rows(M) × rows(M), unitary.
    pub u: ComplexMatrix,
    /// Singular values, descending, length min(rows, cols).
    pub sigma: Vec<f64>,
    /// Right factor, cols(M) × cols(M), unitary.
    pub v: ComplexMatrix,
}

impl Svd {
    /// U·Σ·V† with Σ the rectangular diagonal; used by tests.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let m = self.u.rows();
        let n = self.v.rows();
        let mut scaled = ComplexMatrix::zeros(m, n);
        for (k, &s) in self.sigma.iter().enumerate() {
            for i in 0..m {
                scaled[(i, k)] = self.u[(i, k)] * s;
            }
        }
        scaled.mul(&self.v.adjoint())
    }
}

pub(crate) fn svd_jacobi(m: &ComplexMatrix) -> Svd {
    if m.rows() < m.cols() {
        // work tall: svd(M†) = V Σ U†
        let s = svd_jacobi(&m.adjoint());
        return Svd {
            u: s.v,
            sigma: s.sigma,
            v: s.u,
        };
    }

    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(cols);

    for _sweep in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let mut app = 0.0f64;
                let mut aqq = 0.0f64;
                let mut apq = ZERO;
                for i in 0..rows {
                    let x = a[(i, p)];
                    let y = a[(i, q)];
                    app += x.norm_sqr();
                    aqq += y.norm_sqr();
                    apq += x.conj() * y;
                }
                let abs_apq = apq.norm();
                if abs_apq <= ORTHO_TOL * (app * aqq).sqrt() {
                    continue;
                }
                rotated = true;

                // rotation diagonalizing the 2x2 Gram [[app, apq], [conj, aqq]]
                let phase = apq / abs_apq;
                let tau = (aqq - app) / (2.0 * abs_apq);
                let t = super::eigh::jacobi_tangent(tau);
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let jc = Complex::new(c, 0.0);
                let jpq = -phase * s;
                let jqp = phase.conj() * s;

                for i in 0..rows {
                    let x = a[(i, p)];
                    let y = a[(i, q)];
                    a[(i, p)] = x * jc + y * jqp;
                    a[(i, q)] = x * jpq + y * jc;
                }
                for i in 0..cols {
                    let x = v[(i, p)];
                    let y = v[(i, q)];
                    v[(i, p)] = x * jc + y * jqp;
                    v[(i, q)] = x * jpq + y * jc;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    // column norms are the singular values; sort descending
    let mut norms: Vec<f64> = (0..cols)
        .map(|j| (0..rows).map(|i| a[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());
    let a = a.permute_columns(&order);
    let v = v.permute_columns(&order);
    norms.sort_by(|x, y| y.partial_cmp(x).unwrap());

    // normalize nonzero columns into U; complete the rest to a unitary basis
    let norm_floor = 1e-300 + 1e-200 * norms.first().copied().unwrap_or(0.0);
    let mut u_cols: Vec<Vec<C64>> = Vec::with_capacity(rows);
    for (j, &nj) in norms.iter().enumerate() {
        if nj > norm_floor {
            u_cols.push((0..rows).map(|i| a[(i, j)] / nj).collect());
        }
    }
    complete_basis(&mut u_cols, rows);

    let u = ComplexMatrix::from_fn(rows, rows, |i, j| u_cols[j][i]);
    Svd { u, sigma: norms, v }
}

/// Extend a set of orthonormal columns to a full orthonormal basis of C^n by
/// Gram-Schmidt against canonical basis vectors, always taking the candidate
/// with the largest residual. Deterministic.
fn complete_basis(cols: &mut Vec<Vec<C64>>, n: usize) {
    while cols.len() < n {
        let mut best: Option<(f64, Vec<C64>)> = None;
        for k in 0..n {
            let mut cand = vec![ZERO; n];
            cand[k] = Complex::new(1.0, 0.0);
            for existing in cols.iter() {
                let overlap: C64 = existing
                    .iter()
                    .zip(cand.iter())
                    .map(|(e, c)| e.conj() * c)
                    .sum();
                for (ci, ei) in cand.iter_mut().zip(existing.iter()) {
                    *ci -= overlap * ei;
                }
            }
            let norm = cand.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if best.as_ref().is_none_or(|(bn, _)| norm > *bn) {
                best = Some((norm, cand));
            }
        }
        let (norm, mut vec) = best.expect("n > 0");
        // a second orthogonalization pass keeps the basis orthonormal to
        // machine precision even when the residual was small
        for existing in cols.iter() {
            let overlap: C64 = existing
                .iter()
                .zip(vec.iter())
                .map(|(e, c)| e.conj() * c)
                .sum();
            for (ci, ei) in vec.iter_mut().zip(existing.iter()) {
                *ci -= overlap * ei;
            }
        }
        let norm2 = vec.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let scale = if norm2 > 0.0 { norm2 } else { norm.max(1.0) };
        for z in vec.iter_mut() {
            *z /= scale;
        }
        cols.push(vec);
    }
}
