//! Entanglement monotones, entropies, majorization, Nielsen convertibility,
//! and the bistochastic trace experiment.
//!
//! The elementary symmetric polynomials τ_k of the Schmidt coefficients are
//! Schur-concave, invariant under local unitaries, and vanish (k ≥ 2)
//! exactly on separable states; {τ₂, …, τ_N} characterize pure-state
//! entanglement completely.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gram;
use crate::linalg::ComplexMatrix;
use crate::schmidt::{schmidt_decompose, SchmidtVector};
use crate::states::{self, DensityMatrix, PureState};
use crate::tol;

/// The monotone vector (τ₂, …, τ_N); τ₁ = 1 is implicit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonotoneVector {
    tau: Vec<f64>,
}

impl MonotoneVector {
    /// τ_k for k = 2…N.
    pub fn values(&self) -> &[f64] {
        &self.tau
    }

    /// τ_k by order (k ≥ 2).
    pub fn tau_k(&self, k: usize) -> f64 {
        self.tau[k - 2]
    }

    pub fn order_max(&self) -> usize {
        self.tau.len() + 1
    }
}

/// All elementary symmetric polynomials e_0 … e_n of the given values, by
/// incremental multiplication of ∏(x + λ_i). Stable and O(n²); never
/// enumerates subsets.
pub(crate) fn elementary_symmetric(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut poly = vec![0.0; n + 1];
    poly[0] = 1.0;
    for (i, &lam) in values.iter().enumerate() {
        // multiply by (x + lam): degree grows by one each step
        for d in (0..=i + 1).rev() {
            let keep = if d > 0 { poly[d - 1] } else { 0.0 };
            poly[d] = keep + lam * poly[d];
        }
    }
    // coeff of x^d is e_{n-d}
    (0..=n).map(|k| poly[n - k]).collect()
}

/// The monotones τ₂ … τ_N of a Schmidt vector.
pub fn tau(lambda: &SchmidtVector) -> MonotoneVector {
    let e = elementary_symmetric(lambda.values());
    MonotoneVector {
        tau: e[2..].to_vec(),
    }
}

/// Entropy of entanglement E₁ = −Σ λ_k ln λ_k, with 0·ln 0 = 0.
pub fn entropy_entanglement(lambda: &SchmidtVector) -> f64 {
    let e: f64 = lambda
        .values()
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum();
    e + 0.0 // collapse -0.0 from the pure-state edge case
}

/// Renyi entropy E_α = ln(Σ λ_k^α)/(1−α) for α > 0, α ≠ 1.
pub fn renyi_entropy(lambda: &SchmidtVector, alpha: f64) -> Result<f64> {
    if alpha <= 0.0 {
        return Err(Error::RenyiOrderNonPositive(alpha));
    }
    if alpha == 1.0 {
        return Err(Error::RenyiOrderOne);
    }
    let sum: f64 = lambda.values().iter().map(|&x| x.powf(alpha)).sum();
    Ok(sum.ln() / (1.0 - alpha) + 0.0)
}

/// Majorization λ ≺ μ: every partial sum of the descending-sorted λ is
/// bounded by that of μ, within 1e−12 slack.
pub fn majorizes(lambda: &SchmidtVector, mu: &SchmidtVector) -> Result<bool> {
    if lambda.len() != mu.len() {
        return Err(Error::DimensionMismatch {
            expected: lambda.len(),
            got: mu.len(),
        });
    }
    let a = lambda.descending();
    let b = mu.descending();
    let mut sum_a = 0.0;
    let mut sum_b = 0.0;
    for (x, y) in a.iter().zip(b.iter()) {
        sum_a += x;
        sum_b += y;
        if sum_a > sum_b + tol::MAJORIZATION_SLACK {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nielsen's criterion: |ψ⟩ converts to |φ⟩ under LOCC iff λ_ψ ≺ λ_φ.
pub fn nielsen_convertible(psi: &PureState, phi: &PureState) -> Result<bool> {
    if psi.n() != phi.n() {
        return Err(Error::DimensionMismatch {
            expected: psi.n(),
            got: phi.n(),
        });
    }
    let lp = schmidt_decompose(psi).lambda;
    let lf = schmidt_decompose(phi).lambda;
    majorizes(&lp, &lf)
}

/// Apply a random doubly stochastic matrix (a convex mixture of `mixes`
/// permutations) to `mu`. The result is majorized by `mu`, which makes the
/// pair a trustworthy oracle for Schur-concavity and convertibility tests.
pub fn random_majorized(mu: &SchmidtVector, mixes: usize, seed: u64) -> SchmidtVector {
    let n = mu.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights = simplex_point(mixes.max(1), &mut rng);
    let mut out = vec![0.0; n];
    for &w in &weights {
        let perm = random_permutation(n, &mut rng);
        for (i, &p) in perm.iter().enumerate() {
            out[i] += w * mu.values()[p];
        }
    }
    SchmidtVector::new(out).expect("doubly stochastic mix preserves the simplex")
}

fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    // Fisher-Yates
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// Uniform point on the probability simplex via normalized exponentials.
fn simplex_point(k: usize, rng: &mut impl Rng) -> Vec<f64> {
    let draws: Vec<f64> = (0..k).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = draws.iter().sum();
    draws.into_iter().map(|x| x / total).collect()
}

/// Outcome of the bistochastic trace experiment, JSON-serializable.
///
/// For each trial, ρ′ = Σ p_i (U_i⊗V_i) ρ (U_i⊗V_i)† is formed from a
/// random mixture of Haar local unitaries, and each Gram trace
/// t_k = Tr(G^k), k = 1…6, of ρ′ is compared against ρ. `violations_per_k`
/// counts trials with t_k(ρ′) > t_k(ρ) + 1e−9. Whether the non-increase
/// holds beyond the 2×2 case is an open question, so the counts are data,
/// not assertions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub trials: usize,
    pub mix_size: usize,
    pub seed: u64,
    pub violations_per_k: Vec<usize>,
    pub max_violation_magnitude: f64,
    pub baseline_traces: Vec<f64>,
}

pub const EXPERIMENT_TRACE_ORDERS: usize = 6;

/// Run the trace experiment on a density matrix.
pub fn bistochastic_trace_experiment(
    rho: &DensityMatrix,
    trials: usize,
    mix_size: usize,
    seed: u64,
) -> ExperimentReport {
    let baseline = gram::gram_traces(
        &gram::gram_matrix(&gram::tangent_set(rho, gram::Basis::Lifted)),
        EXPERIMENT_TRACE_ORDERS,
    );
    let mut violations = vec![0usize; EXPERIMENT_TRACE_ORDERS];
    let mut max_violation: f64 = 0.0;

    let mut master = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let trial_seed: u64 = master.random();
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let mixed = bistochastic_mix(rho, mix_size, &mut rng);
        let traces = gram::gram_traces(
            &gram::gram_matrix(&gram::tangent_set(&mixed, gram::Basis::Lifted)),
            EXPERIMENT_TRACE_ORDERS,
        );
        for k in 0..EXPERIMENT_TRACE_ORDERS {
            let excess = traces[k] - baseline[k];
            if excess > tol::TRACE_MONOTONE_SLACK {
                violations[k] += 1;
                max_violation = max_violation.max(excess);
            }
        }
    }

    ExperimentReport {
        trials,
        mix_size,
        seed,
        violations_per_k: violations,
        max_violation_magnitude: max_violation,
        baseline_traces: baseline,
    }
}

/// ρ ↦ Σ p_i (U_i⊗V_i) ρ (U_i⊗V_i)† with Haar pairs and a uniform simplex
/// weight vector.
pub fn bistochastic_mix(rho: &DensityMatrix, mix_size: usize, rng: &mut impl Rng) -> DensityMatrix {
    let n = rho.n();
    let d = rho.dim();
    let weights = simplex_point(mix_size.max(1), rng);
    let mut acc = ComplexMatrix::zeros(d, d);
    for &w in &weights {
        let u = states::haar_unitary(n, rng);
        let v = states::haar_unitary(n, rng);
        let big = u.kron(&v);
        let term = big.mul(rho.matrix()).mul(&big.adjoint());
        acc = acc.add(&term.scale(num_complex::Complex::new(w, 0.0)));
    }
    DensityMatrix::new(n, acc).expect("mixture of conjugations preserves trace and positivity")
}
