//! Bloch decomposition, the structure-constant block route to the Gram
//! matrix, and the closed-form pure-state blocks.
//!
//! In the symmetrized generator basis, with the state brought to Schmidt
//! form C = diag(√λ), the pure-state Gram matrix is block diagonal:
//! the off-diagonal coupling B vanishes, the difference-side diagonal
//! block D⁽¹⁾ vanishes identically, the remaining diagonal blocks A⁽²⁾ and
//! D⁽²⁾ are diagonal with entries proportional to (√λ_m ± √λ_n)², and the
//! (N−1)×(N−1) block A⁽¹⁾ over the diagonal generators carries everything
//! else. Counting the zeros of these blocks reproduces the closed-form
//! orbit dimension.

use num_complex::Complex;

use crate::linalg::{ComplexMatrix, RealSymmetricMatrix};
use crate::orbit;
use crate::schmidt::{schmidt_decompose, SchmidtVector};
use crate::states::{schmidt_diagonal, to_density, DensityMatrix, PureState};
use crate::sun::{offset_pair, GeneratorSet, StructureConstants};

use super::{gram_matrix, tangent_set, Basis, GramMatrix};

/// Coordinates of a Hermitian ρ in the generator product basis:
/// ρ = I/N² + i·a_k(e_k⊗I) + i·b_l(I⊗e_l) + T_mn(e_m⊗e_n).
#[derive(Debug, Clone)]
pub struct BlochDecomposition {
    n: usize,
    dim: usize,
    a: Vec<f64>,
    b: Vec<f64>,
    /// Correlation tensor, row-major (N²−1)×(N²−1).
    t: Vec<f64>,
}

impl BlochDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn t(&self, m: usize, n: usize) -> f64 {
        self.t[m * self.dim + n]
    }

    /// Rebuild ρ from the coordinates; the round trip is contractual.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let gens = GeneratorSet::new(self.n).expect("n >= 2");
        let id = ComplexMatrix::identity(self.n);
        let d2 = self.n * self.n;
        let mut rho = ComplexMatrix::identity(d2).scale(Complex::new(1.0 / d2 as f64, 0.0));
        let i_unit = Complex::new(0.0, 1.0);
        for (k, e) in gens.generators().iter().enumerate() {
            if self.a[k] != 0.0 {
                rho = rho.add(&e.kron(&id).scale(i_unit * self.a[k]));
            }
            if self.b[k] != 0.0 {
                rho = rho.add(&id.kron(e).scale(i_unit * self.b[k]));
            }
        }
        for (m, em) in gens.generators().iter().enumerate() {
            for (n, en) in gens.generators().iter().enumerate() {
                let t = self.t(m, n);
                if t != 0.0 {
                    rho = rho.add(&em.kron(en).scale(Complex::new(t, 0.0)));
                }
            }
        }
        rho
    }
}

/// Extract Bloch coordinates by trace inner products against the basis:
/// a_j = i·Tr(ρ(e_j⊗I))/(2N), b likewise, T_mn = Tr(ρ(e_m⊗e_n))/4.
/// The normalizations are forced by Tr(e_j e_k) = −2δ_jk.
pub fn bloch_decompose(rho: &DensityMatrix) -> BlochDecomposition {
    let n = rho.n();
    let gens = GeneratorSet::new(n).expect("n >= 2");
    let id = ComplexMatrix::identity(n);
    let dim = gens.len();
    let m = rho.matrix();

    let mut a = Vec::with_capacity(dim);
    let mut b = Vec::with_capacity(dim);
    for e in gens.generators() {
        let ta = m.trace_product(&e.kron(&id));
        let tb = m.trace_product(&id.kron(e));
        debug_assert!(ta.re.abs() < 1e-10, "Tr(ρ(e⊗I)) is imaginary");
        a.push(-ta.im / (2.0 * n as f64));
        b.push(-tb.im / (2.0 * n as f64));
    }
    let mut t = vec![0.0; dim * dim];
    for (mi, em) in gens.generators().iter().enumerate() {
        for (ni, en) in gens.generators().iter().enumerate() {
            let tt = m.trace_product(&em.kron(en));
            debug_assert!(tt.im.abs() < 1e-10, "Tr(ρ(e⊗e)) is real");
            t[mi * dim + ni] = 0.25 * tt.re;
        }
    }
    BlochDecomposition { n, dim, a, b, t }
}

/// Structure-constant route to the Gram matrix, G = [[A, B], [Bᵀ, D]]:
///
/// ```text
/// A_mn = c_mjk c_nlk (N a_j a_l + 2 T_jr T_lr) / 2
/// B_mn = c_mjk c_nlr T_kl T_jr
/// D_mn = c_mjk c_nlk (N b_j b_l + 2 T_rj T_rl) / 2
/// ```
///
/// (summation over repeated indices). Expressed in the one-sided lifted
/// basis; agrees entrywise with the commutator route.
pub fn gram_blocks_mixed(bloch: &BlochDecomposition, constants: &StructureConstants) -> GramMatrix {
    assert_eq!(
        bloch.n,
        constants.n(),
        "decomposition and constants must share N"
    );
    let d = constants.dim();
    let nf = bloch.n as f64;

    // per first index m: u_m[k] = c_mjk a_j, W_m[k][r] = c_mjk T_jr,
    // v_m[k] = c_mjk b_j, X_m[k][r] = c_mjk T_rj, and the B-route kernel
    // Z_m[k][j] = T_kl · (c_mlr T_jr)
    let mut u = vec![vec![0.0; d]; d];
    let mut v = vec![vec![0.0; d]; d];
    let mut w = vec![vec![0.0; d * d]; d];
    let mut x = vec![vec![0.0; d * d]; d];
    let mut y = vec![vec![0.0; d * d]; d];
    for m in 0..d {
        for j in 0..d {
            for &(k, c) in constants.row(m, j) {
                u[m][k] += c * bloch.a[j];
                v[m][k] += c * bloch.b[j];
                for r in 0..d {
                    w[m][k * d + r] += c * bloch.t(j, r);
                    x[m][k * d + r] += c * bloch.t(r, j);
                }
            }
        }
        // here the row index of c is the second contraction index:
        // y_m[l][j] = Σ_r c_mlr T_jr
        for l in 0..d {
            for &(r, c) in constants.row(m, l) {
                for j in 0..d {
                    y[m][l * d + j] += c * bloch.t(j, r);
                }
            }
        }
    }
    let mut z = vec![vec![0.0; d * d]; d];
    for m in 0..d {
        for k in 0..d {
            for l in 0..d {
                let tkl = bloch.t(k, l);
                if tkl == 0.0 {
                    continue;
                }
                for j in 0..d {
                    z[m][k * d + j] += tkl * y[m][l * d + j];
                }
            }
        }
    }

    let size = 2 * d;
    let mut data = vec![0.0; size * size];
    for m in 0..d {
        for n in 0..d {
            let mut a_mn = nf * dot(&u[m], &u[n]);
            a_mn += 2.0 * dot(&w[m], &w[n]);
            a_mn *= 0.5;
            let mut d_mn = nf * dot(&v[m], &v[n]);
            d_mn += 2.0 * dot(&x[m], &x[n]);
            d_mn *= 0.5;
            let mut b_mn = 0.0;
            for j in 0..d {
                for &(k, c) in constants.row(m, j) {
                    b_mn += c * z[n][k * d + j];
                }
            }
            data[m * size + n] = a_mn;
            data[(d + m) * size + (d + n)] = d_mn;
            data[m * size + (d + n)] = b_mn;
            data[(d + n) * size + m] = b_mn;
        }
    }
    // symmetrize away rounding asymmetry in A and D before validation
    for i in 0..size {
        for j in (i + 1)..size {
            let avg = 0.5 * (data[i * size + j] + data[j * size + i]);
            data[i * size + j] = avg;
            data[j * size + i] = avg;
        }
    }
    GramMatrix {
        basis: Basis::Lifted,
        mat: RealSymmetricMatrix::new(size, data).expect("symmetrized"),
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Closed-form pure-state Gram blocks for a Schmidt vector, in the
/// symmetrized basis with the state in Schmidt form.
#[derive(Debug, Clone)]
pub struct AnalyticGramBlocks {
    n: usize,
    a1: RealSymmetricMatrix,
    a2: Vec<f64>,
    d2: Vec<f64>,
}

impl AnalyticGramBlocks {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The (N−1)×(N−1) block over the diagonal generators.
    pub fn a1(&self) -> &RealSymmetricMatrix {
        &self.a1
    }

    /// Diagonal of the (N²−N)×(N²−N) sum-side off-diagonal block.
    pub fn a2(&self) -> &[f64] {
        &self.a2
    }

    /// Diagonal of the difference-side off-diagonal block.
    pub fn d2(&self) -> &[f64] {
        &self.d2
    }

    /// The difference-side diagonal-generator block is identically zero:
    /// diagonal generators act with equal phase on both factors of |kk⟩,
    /// so the difference combinations annihilate every Schmidt-form state.
    pub fn d1_dim(&self) -> usize {
        self.n - 1
    }

    /// The full analytic spectrum: eig(A⁽¹⁾) ∪ A⁽²⁾ ∪ D⁽²⁾ ∪ {0 × (N−1)},
    /// ascending. Must match the numerical Gram spectrum elementwise.
    pub fn spectrum(&self) -> Vec<f64> {
        let mut all = self.a1.eigenvalues();
        all.extend_from_slice(&self.a2);
        all.extend_from_slice(&self.d2);
        all.extend(std::iter::repeat_n(0.0, self.d1_dim()));
        all.sort_by(|a, b| a.partial_cmp(b).unwrap());
        all
    }
}

/// Evaluate the closed-form blocks at a Schmidt vector (ascending order).
///
/// The off-diagonal blocks are diagonal with entries
/// (√λ_m ± √λ_n)²·(Σλ)/4 over packed pairs: sums then differences on the
/// A side, the reverse on the D side. The 1/4 weight is fixed by the 1/4
/// in the Gram inner product together with the 1/2 in the symmetrized
/// generators; the A⁽¹⁾ entries absorb the same factors into the
/// 2/(k(k+1)) normalization of the diagonal generators.
pub fn analytic_blocks(lambda: &SchmidtVector) -> AnalyticGramBlocks {
    let n = lambda.len();
    let lam = lambda.values();
    let total: f64 = lam.iter().sum();

    // prefix sums and the recurring S_j = Σ_{k≤j} λ_k − j·λ_{j+1} (1-based)
    let mut prefix = vec![0.0; n + 1];
    for (i, &x) in lam.iter().enumerate() {
        prefix[i + 1] = prefix[i] + x;
    }
    let s = |j: usize| prefix[j] - j as f64 * lam[j];

    let a1 = RealSymmetricMatrix::from_fn(n - 1, |i, j| {
        let (p, q) = (i.min(j) + 1, i.max(j) + 1); // 1-based, p <= q
        if p == q {
            let num = (prefix[p] + (p * p) as f64 * lam[p]) * total - s(p) * s(p);
            num / (p * (p + 1)) as f64
        } else {
            let num = s(p) * total - s(p) * s(q);
            num / ((p * (p + 1) * q * (q + 1)) as f64).sqrt()
        }
    })
    .expect("symmetric by construction");

    let pairs = n * (n - 1) / 2;
    let mut plus = Vec::with_capacity(pairs);
    let mut minus = Vec::with_capacity(pairs);
    for k in 1..=pairs {
        let (m, nn) = offset_pair(k, n);
        let (sm, sn) = (lam[m - 1].sqrt(), lam[nn - 1].sqrt());
        plus.push(0.25 * (sm + sn) * (sm + sn) * total);
        minus.push(0.25 * (sm - sn) * (sm - sn) * total);
    }
    let mut a2 = plus.clone();
    a2.extend_from_slice(&minus);
    let mut d2 = minus;
    d2.extend_from_slice(&plus);

    AnalyticGramBlocks { n, a1, a2, d2 }
}

/// Comparison of the numerical Gram matrix against the analytic block
/// structure, for the Schmidt-form representative of a state.
#[derive(Debug, Clone)]
pub struct BlockReport {
    pub n: usize,
    /// Largest magnitude in the A–D coupling block (must vanish).
    pub b_max: f64,
    /// Largest magnitude in the difference-side diagonal-generator block.
    pub d1_max: f64,
    /// Largest elementwise gap between sorted numerical and analytic spectra.
    pub spectrum_gap: f64,
    /// Numerical Gram rank.
    pub rank: usize,
    /// Closed-form orbit dimension of the state's degeneracy pattern.
    pub analytic_dim: usize,
    /// Numerical spectrum, ascending.
    pub spectrum: Vec<f64>,
}

impl BlockReport {
    pub fn passes(&self, tolerance: f64) -> bool {
        self.b_max < tolerance
            && self.d1_max < tolerance
            && self.spectrum_gap < tolerance
            && self.rank == self.analytic_dim
    }
}

/// Build the Gram matrix numerically in the symmetrized basis from the
/// Schmidt-form representative C = diag(√λ) of `state`, and hold it against
/// the analytic blocks. Deviations are reported, not thrown: only the rank
/// is invariant under basis changes, so the comparison is meaningful
/// precisely in this canonical frame.
pub fn verify_block_structure(state: &PureState) -> BlockReport {
    let lambda = schmidt_decompose(state).lambda;
    let canonical = schmidt_diagonal(&lambda).expect("λ is a valid Schmidt vector");
    let rho = to_density(&canonical);
    let g = gram_matrix(&tangent_set(&rho, Basis::Symmetrized));

    let n = state.n();
    let d = n * n - 1;
    let mat = g.matrix();

    let mut b_max = 0.0f64;
    for m in 0..d {
        for nn in d..2 * d {
            b_max = b_max.max(mat.get(m, nn).abs());
        }
    }
    let mut d1_max = 0.0f64;
    for m in 0..(n - 1) {
        for nn in 0..(n - 1) {
            d1_max = d1_max.max(mat.get(d + m, d + nn).abs());
        }
    }

    let spectrum = g.spectrum();
    let analytic = analytic_blocks(&lambda).spectrum();
    let spectrum_gap = spectrum
        .iter()
        .zip(&analytic)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    let pattern = orbit::degeneracy_pattern_default(&lambda);
    let analytic_dim = orbit::orbit_dimension(&pattern, n).expect("pattern from λ of size n");

    BlockReport {
        n,
        b_max,
        d1_max,
        spectrum_gap,
        rank: g.rank(),
        analytic_dim,
        spectrum,
    }
}
