//! Classification of local-unitary orbits of pure states of N×N bipartite
//! quantum systems.
//!
//! A pure state |ψ⟩ = Σ C_mn |m⟩⊗|n⟩ is characterized, up to local unitary
//! transformations U⊗V, by its Schmidt vector Λ — the eigenvalues of C†C.
//! The degeneracy pattern of Λ (the number m₀ of vanishing coefficients and
//! the multiplicities m₁…m_K of the distinct nonzero values) determines the
//! orbit {(U⊗V)|ψ⟩} completely: its dimension is
//!
//! ```text
//! dim O = 2N² − 2m₀² − Σ mₙ² − 1
//! ```
//!
//! and its topology is the Cartesian product of two unitary-group quotients.
//! The same dimension is recovered numerically, without the Schmidt
//! decomposition, as the rank of the Gram matrix of the tangent vectors
//! ρ_k = [l_k, ρ] spanned by the su(N) generators acting on either factor —
//! a route that extends to mixed states such as generalized Werner states.
//!
//! The crate is organized around that double bookkeeping:
//!
//! - [`linalg`]: dense complex matrices, Hermitian eigendecomposition, SVD,
//!   numerical rank with an explicit tolerance policy.
//! - [`states`]: bipartite pure states, density matrices, Haar sampling,
//!   Werner mixtures, JSON serialization.
//! - [`schmidt`]: Schmidt decomposition and the separable / maximally
//!   entangled classifiers.
//! - [`orbit`]: degeneracy patterns, the closed-form orbit dimension, orbit
//!   topology descriptors and the Weyl-chamber stratum table.
//! - [`sun`]: the explicit su(N) generator basis, its packing, structure
//!   constants and the lifted generators on the product space.
//! - [`gram`]: tangent sets, the Gram matrix along four independent routes,
//!   analytic block spectra for pure states, characteristic polynomials,
//!   Werner extension.
//! - [`monotones`]: elementary-symmetric-polynomial monotones, entropies,
//!   majorization, Nielsen convertibility and the bistochastic trace
//!   experiment.

pub mod error;
pub mod gram;
pub mod linalg;
pub mod monotones;
pub mod orbit;
pub mod schmidt;
pub mod states;
pub mod sun;
pub mod tol;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, HermitianMatrix, RealSymmetricMatrix, C64};
pub use schmidt::{SchmidtDecomposition, SchmidtVector};
pub use states::{DensityMatrix, PureState};
