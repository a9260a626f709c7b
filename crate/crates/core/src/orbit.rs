//! Degeneracy patterns, closed-form orbit dimensions, orbit topology, and
//! the Weyl-chamber stratum table.
//!
//! The degeneracy pattern (m₀; m₁…m_K) of a Schmidt vector — the count of
//! vanishing coefficients and the multiplicities of the distinct nonzero
//! values — determines the local orbit completely. Its dimension is
//!
//! ```text
//! dim O = 2N² − 2m₀² − Σ mₙ² − 1
//! ```
//!
//! and the orbit itself is the Cartesian product
//! U(N)/(U(m₀)×U(m₁)×…×U(m_K)) × U(N)/(U(m₀)×U(1)): the first factor runs
//! over density matrices of size N with the fixed spectrum, the second over
//! the purifications of each. The trailing U(1) absorbs the global phase
//! and contributes the −1 in the dimension formula.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schmidt::SchmidtVector;
use crate::tol;

/// Degeneracy structure of a Schmidt vector: m₀ vanishing coefficients and
/// K groups of equal nonzero values, ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegeneracyPattern {
    m0: usize,
    /// (representative value ν_n, multiplicity m_n), ν strictly increasing.
    groups: Vec<(f64, usize)>,
}

impl DegeneracyPattern {
    pub fn m0(&self) -> usize {
        self.m0
    }

    pub fn groups(&self) -> &[(f64, usize)] {
        &self.groups
    }

    /// Multiplicities m₁…m_K in ascending-value order.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.groups.iter().map(|&(_, m)| m).collect()
    }

    /// Total system size N = m₀ + Σ m_n.
    pub fn n(&self) -> usize {
        self.m0 + self.groups.iter().map(|&(_, m)| m).sum::<usize>()
    }

    /// Number of distinct nonzero values.
    pub fn k(&self) -> usize {
        self.groups.len()
    }
}

/// Group Schmidt coefficients into a degeneracy pattern.
///
/// Coefficients below `zero_tol` count toward m₀; the rest are chained
/// transitively: consecutive sorted values closer than `group_tol` join the
/// same group. The representative value is the group mean.
pub fn degeneracy_pattern(
    lambda: &SchmidtVector,
    zero_tol: f64,
    group_tol: f64,
) -> DegeneracyPattern {
    let values = lambda.values(); // ascending
    let m0 = values.iter().filter(|&&x| x < zero_tol).count();
    let mut groups: Vec<(f64, usize)> = Vec::new();
    let mut i = m0;
    while i < values.len() {
        let mut j = i + 1;
        while j < values.len() && values[j] - values[j - 1] < group_tol {
            j += 1;
        }
        let mean = values[i..j].iter().sum::<f64>() / (j - i) as f64;
        groups.push((mean, j - i));
        i = j;
    }
    DegeneracyPattern { m0, groups }
}

/// Pattern with default tolerances (1e−9 for both).
pub fn degeneracy_pattern_default(lambda: &SchmidtVector) -> DegeneracyPattern {
    degeneracy_pattern(lambda, tol::ZERO_TOL, tol::GROUP_TOL)
}

/// Closed-form orbit dimension 2N² − 2m₀² − Σ mₙ² − 1.
pub fn orbit_dimension(pattern: &DegeneracyPattern, n: usize) -> Result<usize> {
    if pattern.n() != n {
        return Err(Error::InconsistentPattern {
            n,
            total: pattern.n(),
        });
    }
    let m0 = pattern.m0();
    let sum_sq: usize = pattern.multiplicities().iter().map(|m| m * m).sum();
    Ok(2 * n * n - 2 * m0 * m0 - sum_sq - 1)
}

/// A quotient U(N) / ∏ U(k_i), recorded by its denominator block sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupQuotient {
    n: usize,
    /// Denominator factors, descending; U(0) factors are dropped.
    denominator: Vec<usize>,
}

impl GroupQuotient {
    pub fn new(n: usize, mut denominator: Vec<usize>) -> Self {
        denominator.retain(|&k| k > 0);
        denominator.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(denominator.iter().sum::<usize>() <= n);
        Self { n, denominator }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn denominator(&self) -> &[usize] {
        &self.denominator
    }

    /// dim U(N)/∏U(k_i) = N² − Σ k_i².
    pub fn dimension(&self) -> usize {
        self.n * self.n - self.denominator.iter().map(|k| k * k).sum::<usize>()
    }

    /// Canonical label, e.g. `U(4)/(U(2)xU(1)^2)` or `U(3)/U(3)`.
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.denominator.len() {
            let k = self.denominator[i];
            let mut count = 1;
            while i + count < self.denominator.len() && self.denominator[i + count] == k {
                count += 1;
            }
            parts.push(if count == 1 {
                format!("U({k})")
            } else {
                format!("U({k})^{count}")
            });
            i += count;
        }
        let denom = parts.join("x");
        if parts.len() > 1 {
            format!("U({})/({})", self.n, denom)
        } else {
            format!("U({})/{}", self.n, denom)
        }
    }
}

impl std::fmt::Display for GroupQuotient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Orbit classes named in the analysis; partially degenerate strata fall
/// under `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitClass {
    Separable,
    MaximallyEntangled,
    Generic,
    Other,
}

impl std::fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OrbitClass::Separable => "separable",
            OrbitClass::MaximallyEntangled => "maximally-entangled",
            OrbitClass::Generic => "generic",
            OrbitClass::Other => "other",
        };
        write!(f, "{s}")
    }
}

/// Dimension, product topology, and class tag of one local orbit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub dimension: usize,
    pub base: GroupQuotient,
    pub fiber: GroupQuotient,
    pub class: OrbitClass,
}

fn classify(pattern: &DegeneracyPattern, n: usize) -> OrbitClass {
    let mults = pattern.multiplicities();
    if pattern.m0() == n - 1 {
        OrbitClass::Separable
    } else if pattern.m0() == 0 && mults.len() == 1 && mults[0] == n {
        OrbitClass::MaximallyEntangled
    } else if pattern.m0() == 0 && mults.iter().all(|&m| m == 1) {
        OrbitClass::Generic
    } else {
        OrbitClass::Other
    }
}

/// Topology descriptor of the orbit of a pattern.
///
/// Base U(N)/(U(m₀)×∏U(m_n)), fiber U(N)/(U(m₀)×U(1)); the two quotient
/// dimensions add up to the closed-form orbit dimension.
pub fn orbit_topology(pattern: &DegeneracyPattern, n: usize) -> Result<OrbitDescriptor> {
    let dimension = orbit_dimension(pattern, n)?;
    let mut base_denom = vec![pattern.m0()];
    base_denom.extend(pattern.multiplicities());
    let base = GroupQuotient::new(n, base_denom);
    let fiber = GroupQuotient::new(n, vec![pattern.m0(), 1]);
    debug_assert_eq!(base.dimension() + fiber.dimension(), dimension);
    Ok(OrbitDescriptor {
        dimension,
        base,
        fiber,
        class: classify(pattern, n),
    })
}

/// The three closed forms: (dim O_sep, dim O_max, dim O_generic) =
/// (4(N−1), N²−1, 2N²−N−1).
pub fn special_case_dims(n: usize) -> Result<(usize, usize, usize)> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    Ok((4 * (n - 1), n * n - 1, 2 * n * n - n - 1))
}

/// One stratum of the Weyl chamber: a pattern family together with its
/// stratum dimension D_s, orbit dimension D_o, topology, and class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StratumRow {
    /// Schema such as `(a,a,b,0)`: letters for distinct nonzero values with
    /// multiplicities in descending order, zeros last. Rigid strata (one
    /// distinct value) print the forced value, e.g. `(1/3,1/3,1/3,0)`.
    pub pattern: String,
    /// m₀ and the nonzero multiplicities (descending) keying the row.
    pub m0: usize,
    pub mults: Vec<usize>,
    /// Stratum dimension within the chamber: K − 1.
    pub d_s: usize,
    /// Orbit dimension from the closed formula.
    pub d_o: usize,
    pub base: String,
    pub fiber: String,
    pub class: String,
}

fn schema(m0: usize, mults: &[usize], n: usize) -> String {
    let mut parts: Vec<String> = Vec::new();
    if mults.len() == 1 {
        // single distinct value is forced to 1/m by normalization
        let m = mults[0];
        let value = if m == 1 {
            "1".to_string()
        } else {
            format!("1/{m}")
        };
        parts.extend(std::iter::repeat_n(value, m));
    } else {
        for (i, &m) in mults.iter().enumerate() {
            let letter = (b'a' + i as u8) as char;
            parts.extend(std::iter::repeat_n(letter.to_string(), m));
        }
    }
    parts.extend(std::iter::repeat_n("0".to_string(), m0));
    debug_assert_eq!(parts.len(), n);
    format!("({})", parts.join(","))
}

fn partitions(total: usize) -> Vec<Vec<usize>> {
    // partitions in descending order, largest part first
    fn rec(total: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(total)).rev() {
            prefix.push(part);
            rec(total - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

/// Enumerate every stratum of the Weyl chamber for local dimension N: all
/// (m₀, partition of N−m₀) families, one row each.
///
/// Rows are ordered by descending stratum dimension, then descending orbit
/// dimension, then ascending m₀, matching the layout of the N ≤ 4 tables.
pub fn weyl_chamber_table(n: usize) -> Result<Vec<StratumRow>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut rows = Vec::new();
    for m0 in 0..n {
        for mults in partitions(n - m0) {
            // any strictly increasing positive values realize the family;
            // the representative values are irrelevant to every output
            let mut groups = Vec::new();
            let mut asc = mults.clone();
            asc.reverse();
            for (i, &m) in asc.iter().enumerate() {
                groups.push((0.1 + i as f64, m));
            }
            let pattern = DegeneracyPattern { m0, groups };
            let descriptor = orbit_topology(&pattern, n)?;
            rows.push(StratumRow {
                pattern: schema(m0, &mults, n),
                m0,
                mults: mults.clone(),
                d_s: mults.len() - 1,
                d_o: descriptor.dimension,
                base: descriptor.base.label(),
                fiber: descriptor.fiber.label(),
                class: descriptor.class.to_string(),
            });
        }
    }
    rows.sort_by(|a, b| {
        b.d_s
            .cmp(&a.d_s)
            .then(b.d_o.cmp(&a.d_o))
            .then(a.m0.cmp(&b.m0))
            .then(b.mults.cmp(&a.mults))
    });
    Ok(rows)
}

/// pattern, m₀, multiplicities, D_s, D_o, base, fiber, class
type GoldenRow = (
    &'static str,
    usize,
    &'static [usize],
    usize,
    usize,
    &'static str,
    &'static str,
    &'static str,
);

/// The published stratum data for N = 2, 3, 4: every (m₀, multiplicities)
/// family with its stratum dimension, orbit dimension, and quotient labels.
/// `weyl_chamber_table` must reproduce these exactly.
pub fn golden_table(n: usize) -> Option<Vec<StratumRow>> {
    let raw: &[GoldenRow] = match n {
        2 => &[
            (
                "(a,b)",
                0,
                &[1, 1],
                1,
                5,
                "U(2)/U(1)^2",
                "U(2)/U(1)",
                "generic",
            ),
            (
                "(1,0)",
                1,
                &[1],
                0,
                4,
                "U(2)/U(1)^2",
                "U(2)/U(1)^2",
                "separable",
            ),
            (
                "(1/2,1/2)",
                0,
                &[2],
                0,
                3,
                "U(2)/U(2)",
                "U(2)/U(1)",
                "maximally-entangled",
            ),
        ],
        3 => &[
            (
                "(a,b,c)",
                0,
                &[1, 1, 1],
                2,
                14,
                "U(3)/U(1)^3",
                "U(3)/U(1)",
                "generic",
            ),
            (
                "(a,b,0)",
                1,
                &[1, 1],
                1,
                13,
                "U(3)/U(1)^3",
                "U(3)/U(1)^2",
                "other",
            ),
            (
                "(a,a,b)",
                0,
                &[2, 1],
                1,
                12,
                "U(3)/(U(2)xU(1))",
                "U(3)/U(1)",
                "other",
            ),
            (
                "(1/2,1/2,0)",
                1,
                &[2],
                0,
                11,
                "U(3)/(U(2)xU(1))",
                "U(3)/U(1)^2",
                "other",
            ),
            (
                "(1/3,1/3,1/3)",
                0,
                &[3],
                0,
                8,
                "U(3)/U(3)",
                "U(3)/U(1)",
                "maximally-entangled",
            ),
            (
                "(1,0,0)",
                2,
                &[1],
                0,
                8,
                "U(3)/(U(2)xU(1))",
                "U(3)/(U(2)xU(1))",
                "separable",
            ),
        ],
        4 => &[
            (
                "(a,b,c,d)",
                0,
                &[1, 1, 1, 1],
                3,
                27,
                "U(4)/U(1)^4",
                "U(4)/U(1)",
                "generic",
            ),
            (
                "(a,b,c,0)",
                1,
                &[1, 1, 1],
                2,
                26,
                "U(4)/U(1)^4",
                "U(4)/U(1)^2",
                "other",
            ),
            (
                "(a,a,b,c)",
                0,
                &[2, 1, 1],
                2,
                25,
                "U(4)/(U(2)xU(1)^2)",
                "U(4)/U(1)",
                "other",
            ),
            (
                "(a,a,b,0)",
                1,
                &[2, 1],
                1,
                24,
                "U(4)/(U(2)xU(1)^2)",
                "U(4)/U(1)^2",
                "other",
            ),
            (
                "(a,a,b,b)",
                0,
                &[2, 2],
                1,
                23,
                "U(4)/U(2)^2",
                "U(4)/U(1)",
                "other",
            ),
            (
                "(a,a,a,b)",
                0,
                &[3, 1],
                1,
                21,
                "U(4)/(U(3)xU(1))",
                "U(4)/U(1)",
                "other",
            ),
            (
                "(a,b,0,0)",
                2,
                &[1, 1],
                1,
                21,
                "U(4)/(U(2)xU(1)^2)",
                "U(4)/(U(2)xU(1))",
                "other",
            ),
            (
                "(1/3,1/3,1/3,0)",
                1,
                &[3],
                0,
                20,
                "U(4)/(U(3)xU(1))",
                "U(4)/U(1)^2",
                "other",
            ),
            (
                "(1/2,1/2,0,0)",
                2,
                &[2],
                0,
                19,
                "U(4)/U(2)^2",
                "U(4)/(U(2)xU(1))",
                "other",
            ),
            (
                "(1/4,1/4,1/4,1/4)",
                0,
                &[4],
                0,
                15,
                "U(4)/U(4)",
                "U(4)/U(1)",
                "maximally-entangled",
            ),
            (
                "(1,0,0,0)",
                3,
                &[1],
                0,
                12,
                "U(4)/(U(3)xU(1))",
                "U(4)/(U(3)xU(1))",
                "separable",
            ),
        ],
        _ => return None,
    };
    Some(
        raw.iter()
            .map(
                |&(pattern, m0, mults, d_s, d_o, base, fiber, class)| StratumRow {
                    pattern: pattern.to_string(),
                    m0,
                    mults: mults.to_vec(),
                    d_s,
                    d_o,
                    base: base.to_string(),
                    fiber: fiber.to_string(),
                    class: class.to_string(),
                },
            )
            .collect(),
    )
}
