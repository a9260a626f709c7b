//! Characteristic polynomial of the A⁽¹⁾ block in terms of the elementary
//! symmetric polynomials of the Schmidt coefficients.
//!
//! With τ_k the elementary symmetric polynomials of λ and Σλ = 1,
//!
//! ```text
//! P(λ) = Σ_{k=1}^{N} (−1)^{k+1} k τ_k λ^{N−k} = λ·Q′(λ) − N·Q(λ),
//! ```
//!
//! where Q(λ) = ∏(λ − λ_i). The multiplicity of the zero root of P equals
//! that of Q, i.e. the number m₀ of vanishing Schmidt coefficients — which
//! is how the degeneracy pattern surfaces in the Gram spectrum without any
//! diagonalization.

use serde::{Deserialize, Serialize};

use crate::monotones::elementary_symmetric;
use crate::schmidt::SchmidtVector;
use crate::tol;

/// P(λ) stored by ascending degree; length N (degree N−1, leading
/// coefficient τ₁ = 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharPoly {
    coeffs: Vec<f64>,
}

impl CharPoly {
    /// Coefficient of λ^d.
    pub fn coeff(&self, d: usize) -> f64 {
        self.coeffs[d]
    }

    /// Coefficients by ascending degree.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// P(λ) from a Schmidt vector: coefficient of λ^{N−k} is (−1)^{k+1}·k·τ_k.
pub fn char_poly_from_lambda(lambda: &SchmidtVector) -> CharPoly {
    let n = lambda.len();
    let e = elementary_symmetric(lambda.values());
    let mut coeffs = vec![0.0; n];
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        coeffs[n - k] = sign * k as f64 * e[k];
    }
    CharPoly { coeffs }
}

/// Multiplicity of the root λ = 0: the number of leading low-degree
/// coefficients below `tolerance` in absolute value.
pub fn zero_root_multiplicity(p: &CharPoly, tolerance: f64) -> usize {
    p.coeffs.iter().take_while(|c| c.abs() < tolerance).count()
}

/// Multiplicity at the standard coefficient tolerance 1e−10.
pub fn zero_root_multiplicity_default(p: &CharPoly) -> usize {
    zero_root_multiplicity(p, tol::CHARPOLY_ZERO_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::degeneracy_pattern_default;

    fn sv(values: &[f64]) -> SchmidtVector {
        SchmidtVector::new(values.to_vec()).unwrap()
    }

    /// Oracle: expand Q(λ) = ∏(λ − λ_i) by direct polynomial multiplication
    /// and form λQ′(λ) − N·Q(λ) coefficientwise.
    fn identity_route(values: &[f64]) -> Vec<f64> {
        let n = values.len();
        let mut q = vec![0.0; n + 1];
        q[0] = 1.0; // ascending: start with constant 1
        for (step, &root) in values.iter().enumerate() {
            // multiply by (x − root)
            let mut next = vec![0.0; n + 1];
            for (d, &qd) in q.iter().enumerate().take(step + 1) {
                next[d + 1] += qd;
                next[d] -= root * qd;
            }
            q = next;
        }
        // λQ′ − NQ: coefficient of λ^d is (d − N)·q_d; degree N cancels
        (0..n).map(|d| (d as f64 - n as f64) * q[d]).collect()
    }

    #[test]
    fn hand_case_n2_uniform() {
        // P(λ) = λ − 2τ₂ = λ − 1/2
        let p = char_poly_from_lambda(&sv(&[0.5, 0.5]));
        assert_eq!(p.degree(), 1);
        assert!((p.coeff(1) - 1.0).abs() < 1e-15);
        assert!((p.coeff(0) + 0.5).abs() < 1e-15);
        assert_eq!(zero_root_multiplicity_default(&p), 0);
        // consistency with the A1 block: its sole entry is the root
        let a1 = crate::gram::analytic_blocks(&sv(&[0.5, 0.5]));
        assert!(p.eval(a1.a1().get(0, 0)).abs() < 1e-14);
    }

    #[test]
    fn hand_case_n3_separable() {
        // λ = (0,0,1): P(λ) = λ², zero root of multiplicity 2 = m₀
        let p = char_poly_from_lambda(&sv(&[0.0, 0.0, 1.0]));
        assert!((p.coeff(2) - 1.0).abs() < 1e-15);
        assert!(p.coeff(1).abs() < 1e-15);
        assert!(p.coeff(0).abs() < 1e-15);
        assert_eq!(zero_root_multiplicity_default(&p), 2);
    }

    #[test]
    fn hand_case_n2_separable() {
        let p = char_poly_from_lambda(&sv(&[0.0, 1.0]));
        assert_eq!(zero_root_multiplicity_default(&p), 1);
    }

    #[test]
    fn identity_holds_coefficientwise() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=8usize {
            for _ in 0..20 {
                let raw: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
                let lambda = SchmidtVector::from_unnormalized(raw).unwrap();
                let p = char_poly_from_lambda(&lambda);
                let q_route = identity_route(lambda.values());
                for (a, b) in p.coeffs().iter().zip(&q_route) {
                    assert!((a - b).abs() < 1e-12, "P = λQ′ − NQ");
                }
            }
        }
    }

    #[test]
    fn zero_multiplicity_equals_m0() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for n in 2..=6usize {
            for m0 in 0..n {
                let mut raw: Vec<f64> = vec![0.0; m0];
                raw.extend((0..n - m0).map(|_| rng.random::<f64>() + 0.05));
                let lambda = SchmidtVector::from_unnormalized(raw).unwrap();
                let p = char_poly_from_lambda(&lambda);
                let pattern = degeneracy_pattern_default(&lambda);
                assert_eq!(
                    zero_root_multiplicity_default(&p),
                    pattern.m0(),
                    "n={n} m0={m0}"
                );
            }
        }
    }

    #[test]
    fn eigenvalues_of_a1_are_roots() {
        // the polynomial is ±det(A⁽¹⁾ − λ): every A⁽¹⁾ eigenvalue is a root
        let lambda = sv(&[0.1, 0.25, 0.65]);
        let p = char_poly_from_lambda(&lambda);
        let blocks = crate::gram::analytic_blocks(&lambda);
        for w in blocks.a1().eigenvalues() {
            assert!(p.eval(w).abs() < 1e-12, "P({w}) = 0");
        }
    }
}
