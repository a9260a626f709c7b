//! Acceptance suite: every exit criterion of the build, one test per
//! criterion, each printing a PASS line (run with `--nocapture` to see
//! them; `--test-threads=1` keeps the lines ordered).
//!
//! Criterion 1 (the published-table reproduction through the CLI) lives in
//! the `luorbit-cli` integration tests; everything else is here.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use luorbit_core::gram::{self, Basis};
use luorbit_core::linalg::ComplexMatrix;
use luorbit_core::monotones;
use luorbit_core::orbit::{self, StratumRow};
use luorbit_core::schmidt::{is_separable, schmidt_decompose, SchmidtVector};
use luorbit_core::states::{self, PureState};
use luorbit_core::sun::{GeneratorSet, StructureConstants};

/// A Schmidt vector realizing the stratum (m₀, multiplicities): distinct
/// jittered group values, well separated from zero and from each other.
fn lambda_for_pattern(m0: usize, mults: &[usize], rng: &mut ChaCha8Rng) -> SchmidtVector {
    let mut raw = vec![0.0; m0];
    for (i, &m) in mults.iter().enumerate() {
        let value = (i + 1) as f64 + 0.3 * rng.random::<f64>();
        raw.extend(std::iter::repeat_n(value, m));
    }
    SchmidtVector::from_unnormalized(raw).expect("positive values")
}

/// Random state with the given Schmidt vector and Haar factors.
fn state_for_lambda(lambda: &SchmidtVector, seed: u64) -> PureState {
    let n = lambda.len();
    let (w, v) = states::random_local_unitary(n, seed).unwrap();
    states::from_schmidt(lambda, &w, &v).unwrap()
}

fn strata(n: usize) -> Vec<StratumRow> {
    orbit::weyl_chamber_table(n).unwrap()
}

#[test]
fn c2_analytic_equals_numerical_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0002);
    let mut seed_counter = 10_000u64;
    let mut checked = 0usize;
    let started = Instant::now();
    let mut n6_elapsed = 0.0;

    for n in 2..=6usize {
        let n_started = Instant::now();
        for row in strata(n) {
            let expected = row.d_o;
            for _ in 0..3 {
                let lambda = lambda_for_pattern(row.m0, &row.mults, &mut rng);
                seed_counter += 1;
                let state = state_for_lambda(&lambda, seed_counter);
                let rho = states::to_density(&state);
                let rank = gram::orbit_dimension_numerical(&rho);
                assert_eq!(
                    rank, expected,
                    "N={n} pattern {} (m0={}, mults {:?})",
                    row.pattern, row.m0, row.mults
                );
                checked += 1;
            }
        }
        if n == 6 {
            n6_elapsed = n_started.elapsed().as_secs_f64();
        }
    }

    assert!(
        n6_elapsed < 60.0,
        "N=6 exhaustive sweep took {n6_elapsed:.1}s (budget 60s)"
    );
    println!(
        "ACCEPTANCE 2 (analytic = numerical rank, {checked} states over N=2..6, \
         N=6 in {:.2}s, total {:.2}s): PASS",
        n6_elapsed,
        started.elapsed().as_secs_f64()
    );
}

#[test]
fn c3_special_case_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0003);
    for n in 2..=6usize {
        let (sep_dim, max_dim, _) = orbit::special_case_dims(n).unwrap();
        assert_eq!(sep_dim, 4 * (n - 1));
        assert_eq!(max_dim, n * n - 1);

        // separable: one unit coefficient, Haar-rotated
        let mut raw = vec![0.0; n];
        raw[n - 1] = 1.0;
        let sep_lambda = SchmidtVector::new(raw).unwrap();
        let pattern = orbit::degeneracy_pattern_default(&sep_lambda);
        assert_eq!(orbit::orbit_dimension(&pattern, n).unwrap(), sep_dim);
        let sep_state = state_for_lambda(&sep_lambda, rng.random());
        assert_eq!(
            gram::orbit_dimension_numerical(&states::to_density(&sep_state)),
            sep_dim,
            "separable N={n}"
        );

        // maximally entangled, Haar-rotated
        let max_lambda = SchmidtVector::uniform(n).unwrap();
        let pattern = orbit::degeneracy_pattern_default(&max_lambda);
        assert_eq!(orbit::orbit_dimension(&pattern, n).unwrap(), max_dim);
        let max_state = state_for_lambda(&max_lambda, rng.random());
        assert_eq!(
            gram::orbit_dimension_numerical(&states::to_density(&max_state)),
            max_dim,
            "maximally entangled N={n}"
        );
    }
    println!("ACCEPTANCE 3 (closed forms 4(N-1) and N^2-1, analytic and numerical, N=2..6): PASS");
}

#[test]
fn c4_block_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0004);
    let mut worst_b = 0.0f64;
    let mut worst_d1 = 0.0f64;
    let mut worst_gap = 0.0f64;
    for n in 2..=4usize {
        for trial in 0..100 {
            // uniform point of the simplex
            let raw: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
            let lambda = SchmidtVector::from_unnormalized(raw).unwrap();
            let state = state_for_lambda(&lambda, 40_000 + trial as u64 + 1000 * n as u64);
            let report = gram::verify_block_structure(&state);
            assert!(
                report.b_max < 1e-8,
                "N={n} trial {trial}: |B|_max = {:e}",
                report.b_max
            );
            assert!(
                report.d1_max < 1e-8,
                "N={n} trial {trial}: |D1|_max = {:e}",
                report.d1_max
            );
            assert!(
                report.spectrum_gap < 1e-8,
                "N={n} trial {trial}: spectrum gap = {:e}",
                report.spectrum_gap
            );
            worst_b = worst_b.max(report.b_max);
            worst_d1 = worst_d1.max(report.d1_max);
            worst_gap = worst_gap.max(report.spectrum_gap);
        }
    }
    println!(
        "ACCEPTANCE 4 (block structure, 100 spectra each for N=2,3,4; worst |B| {:.1e}, \
         |D1| {:.1e}, gap {:.1e}): PASS",
        worst_b, worst_d1, worst_gap
    );
}

#[test]
fn c5_characteristic_polynomial_identity() {
    // oracle route: expand Q(λ) = ∏(λ − λ_i) directly, then λQ′ − NQ
    fn identity_route(values: &[f64]) -> Vec<f64> {
        let n = values.len();
        let mut q = vec![0.0; n + 1];
        q[0] = 1.0;
        for (step, &root) in values.iter().enumerate() {
            let mut next = vec![0.0; n + 1];
            for (d, &qd) in q.iter().enumerate().take(step + 1) {
                next[d + 1] += qd;
                next[d] -= root * qd;
            }
            q = next;
        }
        (0..n).map(|d| (d as f64 - n as f64) * q[d]).collect()
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0005);
    let mut count = 0usize;
    'outer: loop {
        for n in 2..=8usize {
            for m0 in 0..n {
                // nonzero part jittered around a common scale so that the
                // smallest legitimate coefficient stays far above the
                // zero-detection threshold even at N = 8
                let mut raw = vec![0.0; m0];
                raw.extend((0..n - m0).map(|_| 0.8 + 0.4 * rng.random::<f64>()));
                let lambda = SchmidtVector::from_unnormalized(raw).unwrap();

                let p = gram::char_poly_from_lambda(&lambda);
                let oracle = identity_route(lambda.values());
                for (a, b) in p.coeffs().iter().zip(&oracle) {
                    assert!(
                        (a - b).abs() < 1e-12,
                        "P = λQ' − NQ coefficientwise, n={n} m0={m0}"
                    );
                }
                assert_eq!(
                    gram::zero_root_multiplicity_default(&p),
                    m0,
                    "zero-root multiplicity, n={n}"
                );
                count += 1;
                if count >= 1000 {
                    break 'outer;
                }
            }
        }
    }
    println!(
        "ACCEPTANCE 5 (char-poly identity + zero-root multiplicity, {count} vectors, N<=8): PASS"
    );
}

#[test]
fn c6_four_path_gram_equivalence() {
    let mut worst = 0.0f64;
    for n in [2usize, 3] {
        let gens = GeneratorSet::new(n).unwrap();
        let constants = StructureConstants::compute(&gens);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0006 + n as u64);

        let entry_gap = |a: &gram::GramMatrix, b: &gram::GramMatrix| -> f64 {
            a.matrix()
                .data()
                .iter()
                .zip(b.matrix().data())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
        };

        for i in 0..50u64 {
            // pure state: all four routes
            let psi = states::random_pure(n, 60_000 + i).unwrap();
            let rho = states::to_density(&psi);
            let g_comm = gram::gram_matrix(&gram::tangent_set(&rho, Basis::Lifted));
            let g_prod = gram::gram_matrix_product_form(&rho, Basis::Lifted);
            let g_pure = gram::gram_matrix_pure(&psi, Basis::Lifted);
            let g_block = gram::gram_blocks_mixed(&gram::bloch_decompose(&rho), &constants);
            for (label, other) in [
                ("product", &g_prod),
                ("pure", &g_pure),
                ("blocks", &g_block),
            ] {
                let gap = entry_gap(&g_comm, other);
                assert!(gap < 1e-8, "pure N={n} path {label}: gap {gap:e}");
                worst = worst.max(gap);
            }

            // Werner state: the three mixed-state routes
            let alpha = 0.05 + 0.95 * rng.random::<f64>();
            let werner = states::werner_state(&psi, alpha).unwrap();
            let g_comm = gram::gram_matrix(&gram::tangent_set(&werner, Basis::Lifted));
            let g_prod = gram::gram_matrix_product_form(&werner, Basis::Lifted);
            let g_block = gram::gram_blocks_mixed(&gram::bloch_decompose(&werner), &constants);
            for (label, other) in [("product", &g_prod), ("blocks", &g_block)] {
                let gap = entry_gap(&g_comm, other);
                assert!(gap < 1e-8, "werner N={n} path {label}: gap {gap:e}");
                worst = worst.max(gap);
            }
        }
    }
    println!("ACCEPTANCE 6 (four-path Gram equivalence, 50 pure + 50 Werner at N=2,3; worst gap {worst:.1e}): PASS");
}

#[test]
fn c7_monotone_properties() {
    // (a) local-unitary invariance of τ: 20 states × 100 Haar pairs
    let mut seed = 70_000u64;
    for i in 0..20u64 {
        let n = 2 + (i as usize) % 3;
        let state = states::random_pure(n, seed + i).unwrap();
        let base = monotones::tau(&schmidt_decompose(&state).lambda);
        for _ in 0..100 {
            seed += 1;
            let (u, v) = states::random_local_unitary(n, seed).unwrap();
            let moved = states::apply_local(&state, &u, &v).unwrap();
            let t = monotones::tau(&schmidt_decompose(&moved).lambda);
            for (a, b) in base.values().iter().zip(t.values()) {
                assert!((a - b).abs() < 1e-10, "τ local-unitary invariance");
            }
        }
    }

    // (b) Schur-concavity on 1000 constructed majorizing pairs
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0007);
    for i in 0..1000u64 {
        let n = 2 + (i as usize) % 5;
        let raw: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 1e-6).collect();
        let mu = SchmidtVector::from_unnormalized(raw).unwrap();
        let lam = monotones::random_majorized(&mu, 2 * n, 80_000 + i);
        assert!(monotones::majorizes(&lam, &mu).unwrap(), "λ = Dμ ⇒ λ ≺ μ");
        let (t_lam, t_mu) = (monotones::tau(&lam), monotones::tau(&mu));
        for k in 2..=n {
            assert!(
                t_lam.tau_k(k) >= t_mu.tau_k(k) - 1e-12,
                "Schur-concavity of τ_{k}"
            );
        }
    }

    // (c) τ ≡ 0 ⇔ separable
    for n in 2..=5usize {
        let mut raw = vec![0.0; n];
        raw[0] = 1.0;
        let sep = SchmidtVector::new(raw).unwrap();
        assert!(monotones::tau(&sep)
            .values()
            .iter()
            .all(|t| t.abs() < 1e-15));
        assert!(is_separable(&sep, 1e-9));
        for i in 0..50u64 {
            let s = states::random_pure(n, 90_000 + i).unwrap();
            let lambda = schmidt_decompose(&s).lambda;
            let t = monotones::tau(&lambda);
            let all_zero = t.values().iter().all(|t| t.abs() < 1e-12);
            assert_eq!(all_zero, is_separable(&lambda, 1e-9), "τ ≡ 0 iff separable");
        }
    }

    // (d) Nielsen agrees with brute-force partial sums on 1000 random pairs
    let mut agreements = 0usize;
    for i in 0..1000u64 {
        let n = 2 + (i as usize) % 4;
        let psi = states::random_pure(n, 100_000 + 2 * i).unwrap();
        let phi = states::random_pure(n, 100_001 + 2 * i).unwrap();
        let verdict = monotones::nielsen_convertible(&psi, &phi).unwrap();

        // independent route: sort descending, compare prefix sums
        let mut a = schmidt_decompose(&psi).lambda.values().to_vec();
        let mut b = schmidt_decompose(&phi).lambda.values().to_vec();
        a.reverse();
        b.reverse();
        let mut brute = true;
        let (mut sa, mut sb) = (0.0, 0.0);
        for j in 0..n {
            sa += a[j];
            sb += b[j];
            if sa > sb + 1e-12 {
                brute = false;
                break;
            }
        }
        assert_eq!(verdict, brute, "Nielsen vs brute-force partial sums");
        agreements += 1;
    }

    println!("ACCEPTANCE 7 (monotones: LU invariance, Schur-concavity x1000, separability, Nielsen x{agreements}): PASS");
}

#[test]
fn c8_werner_extension() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0008);
    let mut checked = 0usize;
    for n in 2..=4usize {
        for row in strata(n) {
            let lambda = lambda_for_pattern(row.m0, &row.mults, &mut rng);
            let state = state_for_lambda(&lambda, 110_000 + checked as u64);
            for alpha in [0.1, 0.5, 1.0] {
                let dim = gram::werner_orbit_dimension(&state, alpha).unwrap();
                assert_eq!(dim, row.d_o, "N={n} pattern {} alpha={alpha}", row.pattern);
            }
            assert_eq!(gram::werner_orbit_dimension(&state, 0.0).unwrap(), 0);
            checked += 1;
        }
    }
    println!("ACCEPTANCE 8 (Werner dimension = pure dimension for alpha in {{0.1,0.5,1.0}}, {checked} patterns, N<=4): PASS");
}

#[test]
fn c9_bistochastic_experiment_soft() {
    // The 2×2 numerical observation: Gram traces do not increase under
    // local bistochastic mixing. Reported and tracked; a violation is a
    // flagged finding, not a build failure, since the general property is
    // an open question.
    let psi = states::random_pure(2, 0x5EED_0009).unwrap();
    let rho = states::werner_state(&psi, 0.7).unwrap();
    let report = monotones::bistochastic_trace_experiment(&rho, 1000, 2, 0xA11CE);
    assert_eq!(report.trials, 1000);
    assert_eq!(report.violations_per_k.len(), 6);
    let total: usize = report.violations_per_k.iter().sum();
    if total == 0 {
        println!("ACCEPTANCE 9 (bistochastic trace experiment, 1000 trials, 0 violations): PASS");
    } else {
        println!(
            "ACCEPTANCE 9 (bistochastic trace experiment): FLAGGED — {total} violations {:?}, max magnitude {:e}",
            report.violations_per_k, report.max_violation_magnitude
        );
    }
}

/// Companion determinism check: the experiment report must be bit-stable
/// for a fixed configuration.
#[test]
fn experiment_report_is_deterministic() {
    let rho = states::to_density(&states::random_pure(2, 3).unwrap());
    let a = monotones::bistochastic_trace_experiment(&rho, 25, 3, 17);
    let b = monotones::bistochastic_trace_experiment(&rho, 25, 3, 17);
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

/// Companion check for criterion 2's mixed-basis claim: ranks agree between
/// the lifted and symmetrized bases on a sample of strata.
#[test]
fn rank_basis_independence_sample() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0010);
    for n in 2..=4usize {
        for row in strata(n) {
            let lambda = lambda_for_pattern(row.m0, &row.mults, &mut rng);
            let state = state_for_lambda(&lambda, 120_000 + row.d_o as u64);
            let rho = states::to_density(&state);
            let r1 = gram::gram_matrix(&gram::tangent_set(&rho, Basis::Lifted)).rank();
            let r2 = gram::gram_matrix(&gram::tangent_set(&rho, Basis::Symmetrized)).rank();
            assert_eq!(r1, r2, "N={n} pattern {}", row.pattern);
            assert_eq!(r1, row.d_o);
        }
    }
}

/// Low-dimensional micro-oracle for the Gram pipeline, independent of the
/// generator machinery: for N=2 the separable state |11⟩ must have exactly
/// the 4 tangent directions |12⟩, |21⟩ reachable by either factor.
#[test]
fn micro_oracle_n2_separable_tangents() {
    let c = ComplexMatrix::new(
        2,
        2,
        vec![
            num_complex::Complex::new(1.0, 0.0),
            num_complex::Complex::new(0.0, 0.0),
            num_complex::Complex::new(0.0, 0.0),
            num_complex::Complex::new(0.0, 0.0),
        ],
    )
    .unwrap();
    let state = states::from_coeffs(c).unwrap();
    let rho = states::to_density(&state);
    assert_eq!(gram::orbit_dimension_numerical(&rho), 4);
}
