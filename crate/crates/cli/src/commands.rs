//! Subcommand implementations.

use std::fs;

use luorbit_core::gram::{self, Basis};
use luorbit_core::monotones;
use luorbit_core::orbit::{self, StratumRow};
use luorbit_core::schmidt::{is_separable, schmidt_decompose};
use luorbit_core::states::{self, DensityMatrix, PureState};

use crate::report::{self, *};
use crate::{CommonOpts, Failure, Format};

fn check_tolerances(opts: &CommonOpts) -> Result<(), Failure> {
    for (name, value) in [
        ("--zero-tol", opts.zero_tol),
        ("--group-tol", opts.group_tol),
        ("--rank-tol", opts.rank_tol),
    ] {
        if value <= 0.0 {
            return Err(Failure::Input(format!(
                "{name} must be positive, got {value}"
            )));
        }
    }
    Ok(())
}

/// Load the state file, or generate one deterministically from --n/--seed.
fn load_state(opts: &CommonOpts) -> Result<PureState, Failure> {
    check_tolerances(opts)?;
    match (&opts.input, opts.n) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
            Ok(PureState::from_json(&text)?)
        }
        (None, Some(n)) => Ok(states::random_pure(n, opts.seed)?),
        (None, None) => Err(Failure::Input(
            "either --in <file> or --n <dim> is required".into(),
        )),
    }
}

pub fn schmidt(opts: &CommonOpts) -> Result<(), Failure> {
    let state = load_state(opts)?;
    let lambda = schmidt_decompose(&state).lambda;
    let pattern = orbit::degeneracy_pattern(&lambda, opts.zero_tol, opts.group_tol);
    let descriptor = orbit::orbit_topology(&pattern, state.n())?;

    let out = SchmidtOut {
        n: state.n(),
        lambda: lambda.values().to_vec(),
        lambda_sum: lambda.values().iter().sum(),
        pattern: PatternOut {
            m0: pattern.m0(),
            groups: pattern.groups().to_vec(),
        },
        class: descriptor.class.to_string(),
    };
    match opts.format {
        Format::Json => println!("{}", report::to_json(&out)),
        Format::Csv => print!(
            "{}",
            scalar_csv(&[
                ("n", out.n.to_string()),
                ("lambda", float_list(&out.lambda)),
                ("lambda_sum", format!("{}", out.lambda_sum)),
                ("m0", out.pattern.m0.to_string()),
                (
                    "multiplicities",
                    out.pattern
                        .groups
                        .iter()
                        .map(|(_, m)| m.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                ),
                ("class", out.class.clone()),
            ])
        ),
        Format::Pretty => {
            println!("N = {}", out.n);
            println!("lambda (ascending): {}", float_list(&out.lambda));
            println!("sum: {}", out.lambda_sum);
            println!(
                "degeneracy pattern: m0 = {}, groups = {}",
                out.pattern.m0,
                out.pattern
                    .groups
                    .iter()
                    .map(|(v, m)| format!("({v:.6} x{m})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("class: {}", out.class);
        }
    }
    Ok(())
}

pub fn orbit(opts: &CommonOpts, alpha: Option<f64>) -> Result<(), Failure> {
    let state = load_state(opts)?;
    let n = state.n();
    let lambda = schmidt_decompose(&state).lambda;
    let pattern = orbit::degeneracy_pattern(&lambda, opts.zero_tol, opts.group_tol);
    let descriptor = orbit::orbit_topology(&pattern, n)?;
    let analytic_dim = descriptor.dimension;

    let rho = states::to_density(&state);
    let g = gram::gram_matrix(&gram::tangent_set(&rho, Basis::Lifted));
    let numerical_dim = g.rank_at(opts.rank_tol)?;
    let block_report = gram::verify_block_structure(&state);

    let werner = match alpha {
        Some(a) => {
            let dim = gram::werner_orbit_dimension(&state, a)?;
            let matches_pure = if a == 0.0 {
                dim == 0
            } else {
                dim == analytic_dim
            };
            Some(WernerOut {
                alpha: a,
                dimension: dim,
                matches_pure,
            })
        }
        None => None,
    };

    let agree = analytic_dim == numerical_dim;
    let out = OrbitOut {
        n,
        lambda: lambda.values().to_vec(),
        class: descriptor.class.to_string(),
        analytic_dim,
        numerical_dim,
        agree,
        base: descriptor.base.label(),
        fiber: descriptor.fiber.label(),
        gram_report: GramReportOut::from(&block_report),
        werner,
    };

    match opts.format {
        Format::Json => println!("{}", report::to_json(&out)),
        Format::Csv => print!(
            "{}",
            scalar_csv(&[
                ("n", out.n.to_string()),
                ("class", out.class.clone()),
                ("analytic_dim", out.analytic_dim.to_string()),
                ("numerical_dim", out.numerical_dim.to_string()),
                ("agree", out.agree.to_string()),
                ("base", out.base.clone()),
                ("fiber", out.fiber.clone()),
                (
                    "B_max",
                    format!("{:e}", out.gram_report.block_deviations.b_max)
                ),
                (
                    "D1_max",
                    format!("{:e}", out.gram_report.block_deviations.d1_max)
                ),
                (
                    "spectrum_gap",
                    format!("{:e}", out.gram_report.block_deviations.spectrum_gap),
                ),
            ])
        ),
        Format::Pretty => {
            println!("N = {}, class = {}", out.n, out.class);
            println!("topology: {} x {}", out.base, out.fiber);
            println!(
                "orbit dimension: analytic {} / numerical {}  [{}]",
                out.analytic_dim,
                out.numerical_dim,
                if out.agree { "agree" } else { "MISMATCH" }
            );
            println!(
                "block check: |B|_max = {:.2e}, |D1|_max = {:.2e}, spectrum gap = {:.2e}",
                out.gram_report.block_deviations.b_max,
                out.gram_report.block_deviations.d1_max,
                out.gram_report.block_deviations.spectrum_gap
            );
            if let Some(w) = &out.werner {
                println!(
                    "werner(alpha={}): dimension {} [{}]",
                    w.alpha,
                    w.dimension,
                    if w.matches_pure {
                        "matches pure state"
                    } else {
                        "MISMATCH"
                    }
                );
            }
        }
    }

    if !agree {
        return Err(Failure::CrossCheck(format!(
            "analytic dimension {analytic_dim} != numerical rank {numerical_dim}"
        )));
    }
    if let Some(w) = &out.werner {
        if !w.matches_pure {
            return Err(Failure::CrossCheck(format!(
                "werner dimension {} does not match pure-state dimension {}",
                w.dimension, analytic_dim
            )));
        }
    }
    Ok(())
}

pub fn table(n: usize, format: Format) -> Result<(), Failure> {
    let rows = orbit::weyl_chamber_table(n)?;

    // golden check for the published cases
    if let Some(golden) = orbit::golden_table(n) {
        let mut mismatches = Vec::new();
        if rows.len() != golden.len() {
            mismatches.push(format!(
                "row count {} != published {}",
                rows.len(),
                golden.len()
            ));
        }
        for g in &golden {
            match rows.iter().find(|r| r.m0 == g.m0 && r.mults == g.mults) {
                None => mismatches.push(format!("missing stratum {}", g.pattern)),
                Some(r) => {
                    if (r.d_s, r.d_o, &r.base, &r.fiber) != (g.d_s, g.d_o, &g.base, &g.fiber) {
                        mismatches.push(format!(
                            "{}: got (D_s={}, D_o={}, {}, {}), published (D_s={}, D_o={}, {}, {})",
                            g.pattern, r.d_s, r.d_o, r.base, r.fiber, g.d_s, g.d_o, g.base, g.fiber
                        ));
                    }
                }
            }
        }
        if !mismatches.is_empty() {
            emit_table(&rows, format);
            return Err(Failure::CrossCheck(format!(
                "table differs from published data: {}",
                mismatches.join("; ")
            )));
        }
    }

    emit_table(&rows, format);
    Ok(())
}

fn emit_table(rows: &[StratumRow], format: Format) {
    match format {
        Format::Json => println!("{}", report::to_json(&rows)),
        Format::Csv => print!("{}", table_csv(rows)),
        Format::Pretty => print!("{}", table_pretty(rows)),
    }
}

pub fn monotones(opts: &CommonOpts) -> Result<(), Failure> {
    let state = load_state(opts)?;
    let lambda = schmidt_decompose(&state).lambda;
    let tau = monotones::tau(&lambda);
    let out = MonotonesOut {
        n: state.n(),
        lambda: lambda.values().to_vec(),
        tau: tau.values().to_vec(),
        entropy: monotones::entropy_entanglement(&lambda),
        renyi_half: monotones::renyi_entropy(&lambda, 0.5)?,
        renyi_two: monotones::renyi_entropy(&lambda, 2.0)?,
        separable: is_separable(&lambda, opts.zero_tol),
    };
    match opts.format {
        Format::Json => println!("{}", report::to_json(&out)),
        Format::Csv => print!(
            "{}",
            scalar_csv(&[
                ("n", out.n.to_string()),
                ("lambda", float_list(&out.lambda)),
                ("tau", float_list(&out.tau)),
                ("entropy", format!("{}", out.entropy)),
                ("renyi_half", format!("{}", out.renyi_half)),
                ("renyi_two", format!("{}", out.renyi_two)),
                ("separable", out.separable.to_string()),
            ])
        ),
        Format::Pretty => {
            println!("N = {}", out.n);
            println!("lambda: {}", float_list(&out.lambda));
            for (k, t) in out.tau.iter().enumerate() {
                println!("tau_{} = {}", k + 2, t);
            }
            println!("entropy of entanglement E1 = {}", out.entropy);
            println!("Renyi E_0.5 = {}", out.renyi_half);
            println!("Renyi E_2   = {}", out.renyi_two);
            println!("separable: {}", out.separable);
        }
    }
    Ok(())
}

pub fn nielsen(psi_path: &str, phi_path: &str, format: Format) -> Result<(), Failure> {
    let read = |path: &str| -> Result<PureState, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
        Ok(PureState::from_json(&text)?)
    };
    let psi = read(psi_path)?;
    let phi = read(phi_path)?;
    let forward = monotones::nielsen_convertible(&psi, &phi)?;
    let backward = monotones::nielsen_convertible(&phi, &psi)?;
    let out = NielsenOut {
        n: psi.n(),
        lambda_psi: schmidt_decompose(&psi).lambda.values().to_vec(),
        lambda_phi: schmidt_decompose(&phi).lambda.values().to_vec(),
        psi_to_phi: forward,
        phi_to_psi: backward,
    };
    match format {
        Format::Json => println!("{}", report::to_json(&out)),
        Format::Csv => print!(
            "{}",
            scalar_csv(&[
                ("n", out.n.to_string()),
                ("psi_to_phi", out.psi_to_phi.to_string()),
                ("phi_to_psi", out.phi_to_psi.to_string()),
            ])
        ),
        Format::Pretty => {
            println!("lambda(psi): {}", float_list(&out.lambda_psi));
            println!("lambda(phi): {}", float_list(&out.lambda_phi));
            println!(
                "psi -> phi convertible: {}",
                if out.psi_to_phi { "yes" } else { "no" }
            );
            println!(
                "phi -> psi convertible: {}",
                if out.phi_to_psi { "yes" } else { "no" }
            );
        }
    }
    Ok(())
}

pub fn experiment(opts: &CommonOpts, trials: usize, mix_size: usize) -> Result<(), Failure> {
    check_tolerances(opts)?;
    let rho: DensityMatrix = match (&opts.input, opts.n) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
            DensityMatrix::from_json(&text)?
        }
        (None, n) => {
            let n = n.unwrap_or(2);
            states::to_density(&states::random_pure(n, opts.seed)?)
        }
    };
    if mix_size == 0 {
        return Err(Failure::Input("--mix-size must be at least 1".into()));
    }
    let report = monotones::bistochastic_trace_experiment(&rho, trials, mix_size, opts.seed);
    match opts.format {
        Format::Json => println!("{}", report::to_json(&report)),
        Format::Csv => print!(
            "{}",
            scalar_csv(&[
                ("trials", report.trials.to_string()),
                ("mix_size", report.mix_size.to_string()),
                ("seed", report.seed.to_string()),
                (
                    "violations_per_k",
                    report
                        .violations_per_k
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                ),
                (
                    "max_violation_magnitude",
                    format!("{:e}", report.max_violation_magnitude),
                ),
                ("baseline_traces", float_list(&report.baseline_traces)),
            ])
        ),
        Format::Pretty => {
            println!(
                "trials = {}, mix size = {}, seed = {}",
                report.trials, report.mix_size, report.seed
            );
            println!("baseline t_k: {}", float_list(&report.baseline_traces));
            println!("violations per k (1..6): {:?}", report.violations_per_k);
            println!(
                "max violation magnitude: {:e}",
                report.max_violation_magnitude
            );
            let total: usize = report.violations_per_k.iter().sum();
            if total == 0 {
                println!("no trace increase observed");
            } else {
                println!("FLAGGED: {total} trace increases observed");
            }
        }
    }
    Ok(())
}
