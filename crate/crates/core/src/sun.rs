//! The explicit su(N) generator basis, its index packing, structure
//! constants, and the lifted generators acting on the product space.
//!
//! The basis consists of N−1 diagonal generators
//!
//! ```text
//! e_k = -i sqrt(2/(k(k+1))) ( k|k+1⟩⟨k+1| − Σ_{l≤k} |l⟩⟨l| ),  k = 1…N−1,
//! ```
//!
//! followed by the symmetric off-diagonal set e⁽¹⁾_mn = i(|n⟩⟨m| + |m⟩⟨n|)
//! and the antisymmetric set e⁽²⁾_mn = |n⟩⟨m| − |m⟩⟨n| for 1 ≤ m < n ≤ N.
//! All are anti-Hermitian, traceless, and normalized to Tr(e_j e_k) = −2δ_jk.
//!
//! Pair indices pack into a single index via
//! offset(m,n) = (m−1)N − m(m+1)/2 + n, applied identically to both
//! off-diagonal families (the e⁽²⁾ family shifted by N(N−1)/2). Any fixed
//! bijective packing works; ranks and spectra downstream never depend on it.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, I, ONE};

/// The ordered basis of N²−1 anti-Hermitian su(N) generators.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    n: usize,
    gens: Vec<ComplexMatrix>,
}

/// 1-based packed position of the pair (m, n), 1 ≤ m < n ≤ N, within one
/// off-diagonal family.
pub fn pair_offset(m: usize, n: usize, dim: usize) -> usize {
    debug_assert!(1 <= m && m < n && n <= dim);
    (m - 1) * dim + n - m * (m + 1) / 2
}

/// Inverse of [`pair_offset`]: the unique (m, n) with offset(m,n) = k.
pub fn offset_pair(k: usize, dim: usize) -> (usize, usize) {
    let mut m = 1;
    loop {
        let last = pair_offset(m, dim, dim);
        if k <= last {
            let n = k + m * (m + 1) / 2 - (m - 1) * dim;
            return (m, n);
        }
        m += 1;
    }
}

impl GeneratorSet {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        let mut gens = Vec::with_capacity(n * n - 1);

        // diagonal family
        for k in 1..n {
            let scale = (2.0 / (k as f64 * (k + 1) as f64)).sqrt();
            let mut g = ComplexMatrix::zeros(n, n);
            for l in 0..k {
                g[(l, l)] = Complex::new(0.0, scale);
            }
            g[(k, k)] = Complex::new(0.0, -scale * k as f64);
            gens.push(g);
        }
        // symmetric off-diagonal family e⁽¹⁾
        for m in 1..=n {
            for nn in (m + 1)..=n {
                let mut g = ComplexMatrix::zeros(n, n);
                g[(nn - 1, m - 1)] = I;
                g[(m - 1, nn - 1)] = I;
                gens.push(g);
            }
        }
        // antisymmetric off-diagonal family e⁽²⁾
        for m in 1..=n {
            for nn in (m + 1)..=n {
                let mut g = ComplexMatrix::zeros(n, n);
                g[(nn - 1, m - 1)] = ONE;
                g[(m - 1, nn - 1)] = -ONE;
                gens.push(g);
            }
        }
        debug_assert_eq!(gens.len(), n * n - 1);
        Ok(Self { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators, N²−1.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.gens
    }

    pub fn generator(&self, k: usize) -> &ComplexMatrix {
        &self.gens[k]
    }

    /// Lifted generators l_k on the N²-dimensional product space:
    /// l_k = i·e_k⊗I for the first N²−1, then l_k = i·I⊗e_k. Hermitian.
    pub fn lifted(&self) -> Vec<ComplexMatrix> {
        let id = ComplexMatrix::identity(self.n);
        let mut out = Vec::with_capacity(2 * self.gens.len());
        for e in &self.gens {
            out.push(e.kron(&id).scale(I));
        }
        for e in &self.gens {
            out.push(id.kron(e).scale(I));
        }
        out
    }

    /// Symmetrized basis L_k = i(e_k⊗I ± I⊗e_k)/2: sums for the first
    /// N²−1 indices, differences after. A change of basis in the Lie
    /// algebra, so Gram ranks are unchanged; in this basis the pure-state
    /// Gram matrix becomes block diagonal.
    pub fn symmetrized(&self) -> Vec<ComplexMatrix> {
        let id = ComplexMatrix::identity(self.n);
        let half_i = Complex::new(0.0, 0.5);
        let mut out = Vec::with_capacity(2 * self.gens.len());
        for e in &self.gens {
            out.push(e.kron(&id).add(&id.kron(e)).scale(half_i));
        }
        for e in &self.gens {
            out.push(e.kron(&id).sub(&id.kron(e)).scale(half_i));
        }
        out
    }
}

/// Sparse structure constants c_jkl of `[e_j, e_k] = Σ_l c_jkl e_l`.
///
/// With the Tr(e_j e_k) = −2δ normalization, c_jkl = −Tr(`[e_j,e_k]`·e_l)/2.
/// Entries are stored per (j, k) pair for the contractions used by the
/// block form of the Gram matrix.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    n: usize,
    dim: usize,
    /// (j, k) → list of (l, c_jkl), only nonzero entries, j and k unordered
    /// (both orders stored; antisymmetry makes them sign partners).
    table: BTreeMap<(usize, usize), Vec<(usize, f64)>>,
}

impl StructureConstants {
    pub fn compute(gens: &GeneratorSet) -> Self {
        let d = gens.len();
        let mut table = BTreeMap::new();
        for j in 0..d {
            for k in 0..d {
                if j == k {
                    continue;
                }
                let comm = gens.generator(j).commutator(gens.generator(k));
                if comm.max_abs() < 1e-14 {
                    continue;
                }
                let mut entries = Vec::new();
                for l in 0..d {
                    let t = comm.trace_product(gens.generator(l));
                    let c = -0.5 * t.re;
                    debug_assert!(t.im.abs() < 1e-12, "structure constants are real");
                    if c.abs() > 1e-12 {
                        entries.push((l, c));
                    }
                }
                if !entries.is_empty() {
                    table.insert((j, k), entries);
                }
            }
        }
        Self {
            n: gens.n(),
            dim: d,
            table,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Algebra dimension N²−1.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, j: usize, k: usize, l: usize) -> f64 {
        self.table
            .get(&(j, k))
            .and_then(|v| v.iter().find(|(ll, _)| *ll == l))
            .map_or(0.0, |(_, c)| *c)
    }

    /// Nonzero (l, c_jkl) for a fixed (j, k).
    pub fn row(&self, j: usize, k: usize) -> &[(usize, f64)] {
        self.table.get(&(j, k)).map_or(&[], |v| v.as_slice())
    }

    /// All nonzero entries as (j, k, l, c).
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, f64)> + '_ {
        self.table
            .iter()
            .flat_map(|(&(j, k), v)| v.iter().map(move |&(l, c)| (j, k, l, c)))
    }
}
