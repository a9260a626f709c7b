//! Cyclic Jacobi eigensolvers for Hermitian (complex) and symmetric (real)
//! matrices.
//!
//! Each sweep annihilates every off-diagonal pair once with a unitary
//! plane rotation; convergence is quadratic and a handful of sweeps reach
//! machine precision for the matrix sizes used here.

use num_complex::Complex;

use super::{ComplexMatrix, RealSymmetricMatrix, ZERO};

const MAX_SWEEPS: usize = 100;

/// tan θ for the rotation zeroing an off-diagonal element, given
/// τ = (a_qq − a_pp) / (2·a_pq). Smaller-magnitude root of
/// t² − 2τt − 1 = 0, for stability.
pub(crate) fn jacobi_tangent(tau: f64) -> f64 {
    if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    }
}

/// Eigendecomposition of a Hermitian matrix: M·V = V·diag(w), w ascending.
///
/// The caller guarantees Hermiticity; the work copy is symmetrized so the
/// diagonal is exactly real throughout the iteration.
pub(crate) fn eigh_complex(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let n = m.rows();
    let mut a = m.add(&m.adjoint()).scale(Complex::new(0.5, 0.0));
    let mut v = ComplexMatrix::identity(n);

    if n > 1 {
        let scale = a.frobenius_norm().max(1.0);
        let threshold = 1e-15 * scale;

        for _sweep in 0..MAX_SWEEPS {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    off += a[(p, q)].norm_sqr();
                }
            }
            if off.sqrt() <= threshold {
                break;
            }

            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    let abs_apq = apq.norm();
                    if abs_apq == 0.0 {
                        continue;
                    }
                    let app = a[(p, p)].re;
                    let aqq = a[(q, q)].re;
                    let phase = apq / abs_apq;
                    let tau = (aqq - app) / (2.0 * abs_apq);
                    let t = jacobi_tangent(tau);
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;

                    // J acts on the (p, q) plane:
                    //   J_pp = c          J_pq = -s·phase
                    //   J_qp = s·conj(phase)   J_qq = c
                    // A ← J† A J, V ← V J.
                    let jc = Complex::new(c, 0.0);
                    let jpq = -phase * s;
                    let jqp = phase.conj() * s;

                    // columns: A ← A·J
                    for i in 0..n {
                        let aip = a[(i, p)];
                        let aiq = a[(i, q)];
                        a[(i, p)] = aip * jc + aiq * jqp;
                        a[(i, q)] = aip * jpq + aiq * jc;
                    }
                    // rows: A ← J†·A (J† has entries c, conj(jqp), conj(jpq), c)
                    for j in 0..n {
                        let apj = a[(p, j)];
                        let aqj = a[(q, j)];
                        a[(p, j)] = apj * jc + aqj * jqp.conj();
                        a[(q, j)] = apj * jpq.conj() + aqj * jc;
                    }
                    // keep the diagonal exactly real against rounding drift
                    a[(p, p)] = Complex::new(a[(p, p)].re, 0.0);
                    a[(q, q)] = Complex::new(a[(q, q)].re, 0.0);
                    a[(p, q)] = ZERO;
                    a[(q, p)] = ZERO;

                    for i in 0..n {
                        let vip = v[(i, p)];
                        let viq = v[(i, q)];
                        v[(i, p)] = vip * jc + viq * jqp;
                        v[(i, q)] = vip * jpq + viq * jc;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let w: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    (w, v.permute_columns(&order))
}

/// Eigenvalues of a real symmetric matrix, ascending. Same cyclic Jacobi,
/// real arithmetic, eigenvectors not accumulated.
pub(crate) fn eigvals_real(m: &RealSymmetricMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut a = m.data().to_vec();
    let at = |a: &[f64], i: usize, j: usize| a[i * n + j];

    if n > 1 {
        let scale = m.frobenius_norm().max(1.0);
        let threshold = 1e-15 * scale;

        for _sweep in 0..MAX_SWEEPS {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    let x = at(&a, p, q);
                    off += x * x;
                }
            }
            if off.sqrt() <= threshold {
                break;
            }

            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = at(&a, p, q);
                    if apq == 0.0 {
                        continue;
                    }
                    let tau = (at(&a, q, q) - at(&a, p, p)) / (2.0 * apq);
                    let t = jacobi_tangent(tau);
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;

                    for i in 0..n {
                        let aip = at(&a, i, p);
                        let aiq = at(&a, i, q);
                        a[i * n + p] = c * aip + s * aiq;
                        a[i * n + q] = -s * aip + c * aiq;
                    }
                    for j in 0..n {
                        let apj = at(&a, p, j);
                        let aqj = at(&a, q, j);
                        a[p * n + j] = c * apj + s * aqj;
                        a[q * n + j] = -s * apj + c * aqj;
                    }
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                }
            }
        }
    }

    let mut w: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    w.sort_by(|x, y| x.partial_cmp(y).unwrap());
    w
}

/// Convenience used by tests and the SVD: diag(w) as a complex matrix.
#[allow(dead_code)]
pub(crate) fn diag(w: &[f64]) -> ComplexMatrix {
    ComplexMatrix::from_fn(w.len(), w.len(), |i, j| {
        if i == j {
            Complex::new(w[i], 0.0)
        } else {
            ZERO
        }
    })
}
