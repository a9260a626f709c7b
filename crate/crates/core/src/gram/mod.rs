//! Tangent spaces of local orbits and their Gram matrices.
//!
//! The tangent space to the orbit {(U⊗V)ρ(U⊗V)†} at ρ is spanned by the
//! 2(N²−1) Hermitian commutator directions ρ_k derived from the su(N)
//! generators acting on either factor. The number of linearly independent
//! ρ_k — the orbit dimension — equals the rank of the Gram matrix
//!
//! ```text
//! G_mn = (1/4) Tr(ρ_m ρ_n).
//! ```
//!
//! G is computed along four algebraically independent routes that must
//! agree entrywise: the commutator definition above, a product expansion
//! in the lifted generators, a pure-state expectation-value form, and a
//! structure-constant block form driven by the Bloch components of ρ.
//! Four routes to the same matrix is the strongest available defense
//! against index-convention mistakes.

mod blocks;
mod charpoly;

pub use blocks::{
    analytic_blocks, bloch_decompose, gram_blocks_mixed, verify_block_structure,
    AnalyticGramBlocks, BlochDecomposition, BlockReport,
};
pub use charpoly::{
    char_poly_from_lambda, zero_root_multiplicity, zero_root_multiplicity_default, CharPoly,
};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{self, ComplexMatrix, RealSymmetricMatrix, C64};
use crate::states::{werner_state, DensityMatrix, PureState};
use crate::sun::GeneratorSet;
use crate::tol;

/// Which lift of the su(N) basis spans the tangent directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// l_k = i·e_k⊗I and i·I⊗e_k (one-sided).
    Lifted,
    /// L_k = i(e_k⊗I ± I⊗e_k)/2 (sums then differences). Block-diagonalizes
    /// the pure-state Gram matrix; the rank is basis independent.
    Symmetrized,
}

/// The tangent vectors ρ_k = −i[l_k, ρ]: Hermitian, traceless, 2(N²−1) of
/// them.
#[derive(Debug, Clone)]
pub struct TangentSet {
    n: usize,
    basis: Basis,
    vectors: Vec<ComplexMatrix>,
}

impl TangentSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn vectors(&self) -> &[ComplexMatrix] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Gram matrix of a tangent set; real symmetric, positive semidefinite,
/// size 2(N²−1). Its rank is the orbit dimension.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    basis: Basis,
    mat: RealSymmetricMatrix,
}

impl GramMatrix {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &RealSymmetricMatrix {
        &self.mat
    }

    /// Eigenvalues ascending.
    pub fn spectrum(&self) -> Vec<f64> {
        self.mat.eigenvalues()
    }

    /// Numerical rank at the standard relative tolerance 1e−8.
    pub fn rank(&self) -> usize {
        linalg::numerical_rank(&self.mat, tol::RANK_REL_TOL).expect("positive tolerance")
    }

    /// Numerical rank at a caller-supplied relative tolerance.
    pub fn rank_at(&self, rel_tol: f64) -> Result<usize> {
        linalg::numerical_rank(&self.mat, rel_tol)
    }
}

/// The generator lift for a basis choice.
fn lift(gens: &GeneratorSet, basis: Basis) -> Vec<ComplexMatrix> {
    match basis {
        Basis::Lifted => gens.lifted(),
        Basis::Symmetrized => gens.symmetrized(),
    }
}

/// Tangent vectors ρ_k = −i[l_k, ρ] at ρ. The −i makes each ρ_k Hermitian
/// (the l_k are Hermitian, so the bare commutator is anti-Hermitian).
pub fn tangent_set(rho: &DensityMatrix, basis: Basis) -> TangentSet {
    let gens = GeneratorSet::new(rho.n()).expect("density matrix has n >= 2");
    let minus_i = Complex::new(0.0, -1.0);
    let vectors = lift(&gens, basis)
        .iter()
        .map(|l| l.commutator(rho.matrix()).scale(minus_i))
        .collect();
    TangentSet {
        n: rho.n(),
        basis,
        vectors,
    }
}

/// G_mn = (1/4)·Tr(ρ_m ρ_n), the defining route.
pub fn gram_matrix(tangents: &TangentSet) -> GramMatrix {
    let d = tangents.len();
    let mut data = vec![0.0; d * d];
    for m in 0..d {
        for n in m..d {
            let t = tangents.vectors[m].trace_product(&tangents.vectors[n]);
            debug_assert!(t.im.abs() < 1e-10, "Hermitian trace product is real");
            let val = 0.25 * t.re;
            data[m * d + n] = val;
            data[n * d + m] = val;
        }
    }
    GramMatrix {
        basis: tangents.basis,
        mat: RealSymmetricMatrix::new(d, data).expect("symmetric by construction"),
    }
}

/// Product-expansion route:
/// G_mn = (1/4)·Tr(ρ²{l_m l_n + l_n l_m}) − (1/2)·Tr(l_m ρ l_n ρ).
///
/// Expanding the commutators of the defining route gives exactly this; the
/// sign places the anticommutator term positive so that G stays positive
/// semidefinite for Hermitian ρ_k.
pub fn gram_matrix_product_form(rho: &DensityMatrix, basis: Basis) -> GramMatrix {
    let gens = GeneratorSet::new(rho.n()).expect("density matrix has n >= 2");
    let lifted = lift(&gens, basis);
    let d = lifted.len();
    let rho_sq = rho.matrix().mul(rho.matrix());
    // P_k = ρ²·l_k and Q_k = l_k·ρ
    let p: Vec<ComplexMatrix> = lifted.iter().map(|l| rho_sq.mul(l)).collect();
    let q: Vec<ComplexMatrix> = lifted.iter().map(|l| l.mul(rho.matrix())).collect();

    let mut data = vec![0.0; d * d];
    for m in 0..d {
        for n in m..d {
            let anti = p[m].trace_product(&lifted[n]) + p[n].trace_product(&lifted[m]);
            let cross = q[m].trace_product(&q[n]);
            let val = 0.25 * anti.re - 0.5 * cross.re;
            data[m * d + n] = val;
            data[n * d + m] = val;
        }
    }
    GramMatrix {
        basis,
        mat: RealSymmetricMatrix::new(d, data).expect("symmetric by construction"),
    }
}

/// Pure-state expectation route:
/// G_mn = (1/2)·Re⟨l_m ψ | l_n ψ⟩ − (1/2)·⟨ψ|l_m|ψ⟩⟨ψ|l_n|ψ⟩.
///
/// Follows from the product form with ρ = |ψ⟩⟨ψ| and ρ² = ρ.
pub fn gram_matrix_pure(state: &PureState, basis: Basis) -> GramMatrix {
    let gens = GeneratorSet::new(state.n()).expect("state has n >= 2");
    let lifted = lift(&gens, basis);
    let d = lifted.len();
    let psi = state.state_vector();

    let apply = |l: &ComplexMatrix| -> Vec<C64> {
        let dim = psi.len();
        let mut out = vec![Complex::new(0.0, 0.0); dim];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, p) in psi.iter().enumerate() {
                *o += l[(i, j)] * p;
            }
        }
        out
    };
    let w: Vec<Vec<C64>> = lifted.iter().map(apply).collect();
    let x: Vec<f64> = w
        .iter()
        .map(|wk| {
            let e: C64 = psi.iter().zip(wk).map(|(p, q)| p.conj() * q).sum();
            debug_assert!(e.im.abs() < 1e-10, "Hermitian expectation is real");
            e.re
        })
        .collect();

    let mut data = vec![0.0; d * d];
    for m in 0..d {
        for n in m..d {
            let overlap: C64 = w[m].iter().zip(&w[n]).map(|(a, b)| a.conj() * b).sum();
            let val = 0.5 * overlap.re - 0.5 * x[m] * x[n];
            data[m * d + n] = val;
            data[n * d + m] = val;
        }
    }
    GramMatrix {
        basis,
        mat: RealSymmetricMatrix::new(d, data).expect("symmetric by construction"),
    }
}

/// Orbit dimension as the numerical Gram rank at relative tolerance 1e−8.
pub fn orbit_dimension_numerical(rho: &DensityMatrix) -> usize {
    gram_matrix(&tangent_set(rho, Basis::Lifted)).rank()
}

/// Orbit dimension of the generalized Werner state (1−α)/N²·I + α|ψ⟩⟨ψ|.
///
/// The tangent vectors of the mixture are α times those of the pure state,
/// so for α > 0 the rank — and hence the dimension — is that of |ψ⟩; at
/// α = 0 the state is maximally mixed and the orbit is a point.
pub fn werner_orbit_dimension(state: &PureState, alpha: f64) -> Result<usize> {
    let rho = werner_state(state, alpha)?;
    if alpha == 0.0 {
        return Ok(0);
    }
    Ok(orbit_dimension_numerical(&rho))
}

/// Traces of Gram powers t_k = Tr(G^k) for k = 1…k_max.
pub fn gram_traces(g: &GramMatrix, k_max: usize) -> Vec<f64> {
    let d = g.mat.dim();
    let mut traces = Vec::with_capacity(k_max);
    let mut power = g.mat.data().to_vec();
    for k in 0..k_max {
        if k > 0 {
            power = g.mat.mul_raw(&power);
        }
        traces.push((0..d).map(|i| power[i * d + i]).sum());
    }
    traces
}
