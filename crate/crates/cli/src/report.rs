//! Output structures and the three rendering modes.
//!
//! JSON output serializes these structs directly (field order is the schema,
//! see FORMATS.md); CSV flattens scalar reports to `key,value` rows; pretty
//! is for terminals.

use serde::Serialize;

use luorbit_core::gram::BlockReport;
use luorbit_core::orbit::StratumRow;

#[derive(Serialize)]
pub struct PatternOut {
    pub m0: usize,
    /// (value, multiplicity) per distinct nonzero coefficient, ascending.
    pub groups: Vec<(f64, usize)>,
}

#[derive(Serialize)]
pub struct SchmidtOut {
    pub n: usize,
    pub lambda: Vec<f64>,
    pub lambda_sum: f64,
    pub pattern: PatternOut,
    pub class: String,
}

#[derive(Serialize)]
pub struct BlockDeviationsOut {
    #[serde(rename = "B_max")]
    pub b_max: f64,
    #[serde(rename = "D1_max")]
    pub d1_max: f64,
    pub spectrum_gap: f64,
}

/// The `gram-report` schema: rank, closed-form dimension, full spectrum,
/// and the block deviations of the canonical-frame comparison.
#[derive(Serialize)]
pub struct GramReportOut {
    pub rank: usize,
    pub analytic_dim: usize,
    pub spectrum: Vec<f64>,
    pub block_deviations: BlockDeviationsOut,
}

impl From<&BlockReport> for GramReportOut {
    fn from(r: &BlockReport) -> Self {
        Self {
            rank: r.rank,
            analytic_dim: r.analytic_dim,
            spectrum: r.spectrum.clone(),
            block_deviations: BlockDeviationsOut {
                b_max: r.b_max,
                d1_max: r.d1_max,
                spectrum_gap: r.spectrum_gap,
            },
        }
    }
}

#[derive(Serialize)]
pub struct WernerOut {
    pub alpha: f64,
    pub dimension: usize,
    pub matches_pure: bool,
}

#[derive(Serialize)]
pub struct OrbitOut {
    pub n: usize,
    pub lambda: Vec<f64>,
    pub class: String,
    pub analytic_dim: usize,
    pub numerical_dim: usize,
    pub agree: bool,
    pub base: String,
    pub fiber: String,
    pub gram_report: GramReportOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub werner: Option<WernerOut>,
}

#[derive(Serialize)]
pub struct MonotonesOut {
    pub n: usize,
    pub lambda: Vec<f64>,
    /// τ_2 … τ_N.
    pub tau: Vec<f64>,
    pub entropy: f64,
    pub renyi_half: f64,
    pub renyi_two: f64,
    pub separable: bool,
}

#[derive(Serialize)]
pub struct NielsenOut {
    pub n: usize,
    pub lambda_psi: Vec<f64>,
    pub lambda_phi: Vec<f64>,
    pub psi_to_phi: bool,
    pub phi_to_psi: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization is infallible")
}

/// `key,value` CSV rows for scalar reports.
pub fn scalar_csv(pairs: &[(&str, String)]) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in pairs {
        out.push_str(&format!("{k},{v}\n"));
    }
    out
}

pub fn float_list(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| format!("{x}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn table_csv(rows: &[StratumRow]) -> String {
    let mut out = String::from("pattern,D_s,D_o,base,fiber,class\n");
    for r in rows {
        out.push_str(&format!(
            "\"{}\",{},{},{},{},{}\n",
            r.pattern, r.d_s, r.d_o, r.base, r.fiber, r.class
        ));
    }
    out
}

pub fn table_pretty(rows: &[StratumRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<22} {:>3} {:>3}  {:<22} {:<20} {}\n",
        "pattern", "D_s", "D_o", "base", "fiber", "class"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<22} {:>3} {:>3}  {:<22} {:<20} {}\n",
            r.pattern, r.d_s, r.d_o, r.base, r.fiber, r.class
        ));
    }
    out
}
