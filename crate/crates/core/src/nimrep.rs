//! A-D-E graphs and their fused adjacency families.
//!
//! Vertex order: the spine comes first, starting from the end vertex of the
//! longest arm (index 0); D fork vertices and the E tail vertex come last.
//! Exponents are stored in spin labelling, i.e. `m - 1` for a Coxeter
//! exponent `m`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::error::{Error, Result};
use crate::math::{abs, cos, symmetric_eigenvalues, to_real};
use crate::modinv::MassMatrix;
use crate::mtc::{su2_fusion_any_level, FusionRing, ModularData};
use crate::IntMatrix;

/// Dynkin diagram type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeKind {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl AdeKind {
    pub fn parse(name: &str) -> Result<Self> {
        let bad = || Error::UnknownGraph(name.into());
        let trimmed = name.trim();
        let mut chars = trimmed.chars();
        let head = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest = chars.as_str().trim_start_matches('_');
        let n: usize = rest.parse().map_err(|_| bad())?;
        match (head, n) {
            ('A', n) if n >= 1 => Ok(AdeKind::A(n)),
            ('D', n) if n >= 4 => Ok(AdeKind::D(n)),
            ('E', 6) => Ok(AdeKind::E6),
            ('E', 7) => Ok(AdeKind::E7),
            ('E', 8) => Ok(AdeKind::E8),
            _ => Err(bad()),
        }
    }

    pub fn vertices(&self) -> usize {
        match *self {
            AdeKind::A(n) | AdeKind::D(n) => n,
            AdeKind::E6 => 6,
            AdeKind::E7 => 7,
            AdeKind::E8 => 8,
        }
    }

    pub fn coxeter(&self) -> usize {
        match *self {
            AdeKind::A(n) => n + 1,
            AdeKind::D(n) => 2 * n - 2,
            AdeKind::E6 => 12,
            AdeKind::E7 => 18,
            AdeKind::E8 => 30,
        }
    }

    /// SU(2) level `h - 2` at which the graph appears.
    pub fn level(&self) -> usize {
        self.coxeter() - 2
    }

    /// Exponents in spin labelling, sorted.
    pub fn exponents(&self) -> Vec<usize> {
        let mut e = match *self {
            AdeKind::A(n) => (0..n).collect(),
            AdeKind::D(n) => {
                let mut e: Vec<usize> = (0..n - 1).map(|i| 2 * i).collect();
                e.push(n - 2);
                e
            }
            AdeKind::E6 => vec![0, 3, 4, 6, 7, 10],
            AdeKind::E7 => vec![0, 4, 6, 8, 10, 12, 16],
            AdeKind::E8 => vec![0, 6, 10, 12, 16, 18, 22, 28],
        };
        e.sort_unstable();
        e
    }

    /// Every A-D-E type with Coxeter number `k + 2`.
    pub fn at_level(k: usize) -> Vec<AdeKind> {
        let mut out = vec![AdeKind::A(k + 1)];
        if k.is_multiple_of(2) && k >= 4 {
            out.push(AdeKind::D(k / 2 + 2));
        }
        match k {
            10 => out.push(AdeKind::E6),
            16 => out.push(AdeKind::E7),
            28 => out.push(AdeKind::E8),
            _ => {}
        }
        out
    }
}

impl fmt::Display for AdeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeKind::A(n) => write!(f, "A{n}"),
            AdeKind::D(n) => write!(f, "D{n}"),
            AdeKind::E6 => f.write_str("E6"),
            AdeKind::E7 => f.write_str("E7"),
            AdeKind::E8 => f.write_str("E8"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdeGraph {
    pub kind: AdeKind,
    pub adjacency: IntMatrix,
    pub coxeter: usize,
    pub exponents: Vec<usize>,
}

impl AdeGraph {
    pub fn name(&self) -> String {
        format!("{}", self.kind)
    }

    pub fn vertices(&self) -> usize {
        self.adjacency.nrows()
    }

    pub fn level(&self) -> usize {
        self.coxeter - 2
    }

    /// Whether vertex `v` sits at even distance from vertex 0.
    pub fn is_even(&self, v: usize) -> bool {
        self.parity()[v] == 0
    }

    fn parity(&self) -> Vec<u8> {
        let n = self.vertices();
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if self.adjacency[(v, u)] != 0 && color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    stack.push(u);
                }
            }
        }
        color
    }
}

pub fn ade_graph(name: &str) -> Result<AdeGraph> {
    Ok(ade_graph_of(AdeKind::parse(name)?))
}

pub fn ade_graph_of(kind: AdeKind) -> AdeGraph {
    let n = kind.vertices();
    let mut adj = IntMatrix::zeros(n, n);
    let mut link = |a: usize, b: usize| {
        adj[(a, b)] = 1;
        adj[(b, a)] = 1;
    };
    let (spine, extra): (usize, &[(usize, usize)]) = match kind {
        AdeKind::A(n) => (n, &[]),
        AdeKind::D(n) => {
            // spine 0..=n-3, forks n-2 and n-1 hang off n-3
            for v in 0..n - 3 {
                link(v, v + 1);
            }
            link(n - 3, n - 2);
            link(n - 3, n - 1);
            (0, &[])
        }
        AdeKind::E6 => (5, &[(2, 5)]),
        AdeKind::E7 => (6, &[(3, 6)]),
        AdeKind::E8 => (7, &[(4, 7)]),
    };
    for v in 1..spine {
        link(v - 1, v);
    }
    for &(a, b) in extra {
        link(a, b);
    }
    AdeGraph {
        kind,
        adjacency: adj,
        coxeter: kind.coxeter(),
        exponents: kind.exponents(),
    }
}

/// Fused adjacency matrices `G_0 .. G_k` of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NimRepFamily {
    pub graph: AdeGraph,
    pub g: Vec<IntMatrix>,
}

impl NimRepFamily {
    pub fn level(&self) -> usize {
        self.graph.level()
    }
}

/// `G_{j+1} = G_1 G_j - G_{j-1}`, checked to be non-negative and verified
/// against the SU(2)_k fusion rules: `G_a G_b = Σ_c N_{ab}^c G_c`.
pub fn fused_adjacencies(graph: &AdeGraph) -> Result<NimRepFamily> {
    let k = graph.level();
    let v = graph.vertices();
    let g1 = graph.adjacency.clone();
    let mut g = vec![IntMatrix::identity(v, v)];
    if k >= 1 {
        g.push(g1.clone());
    }
    for j in 1..k {
        let next = &g1 * &g[j] - &g[j - 1];
        g.push(next);
    }
    for (index, m) in g.iter().enumerate() {
        if let Some(&value) = m.iter().find(|x| **x < 0) {
            return Err(Error::NegativeNimrep { index, value });
        }
    }
    let ring = su2_fusion_any_level(k);
    check_nimrep_identity(&ring, &g)?;
    Ok(NimRepFamily {
        graph: graph.clone(),
        g,
    })
}

pub(crate) fn check_nimrep_identity(ring: &FusionRing, g: &[IntMatrix]) -> Result<()> {
    let l = ring.rank();
    for a in 0..l {
        for b in a..l {
            let lhs = &g[a] * &g[b];
            let mut rhs = IntMatrix::zeros(lhs.nrows(), lhs.ncols());
            for (c, gc) in g.iter().enumerate() {
                let n = ring.coeff(a, b, c);
                if n != 0 {
                    rhs += gc * n as i64;
                }
            }
            if lhs != rhs {
                return Err(Error::NimrepIdentity { a, b });
            }
        }
    }
    Ok(())
}

/// Spectrum of one `G_ν` matched against `{χ_λ(ν) : λ with multiplicity Z_λλ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub eigenvalue: f64,
    /// Number of eigenvalues of `G_ν` within the matching tolerance.
    pub multiplicity: usize,
    /// Label λ whose character value this eigenvalue was matched to.
    pub matched: Option<usize>,
    /// Gap to the matched (or, if unmatched, the nearest) candidate.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NuSpectrum {
    pub nu: usize,
    pub entries: Vec<SpectrumEntry>,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub graph: String,
    pub per_nu: Vec<NuSpectrum>,
    pub passed: bool,
}

/// Eigenvalue matching tolerance.
pub const SPECTRUM_TOL: f64 = 1e-7;

/// Check that each `G_ν` has the eigenvalues `χ_λ(ν) = S_{ν,λ}/S_{0,λ}` with
/// multiplicity `Z_λλ`.
pub fn spectrum_vs_diagonal(
    family: &NimRepFamily,
    md: &ModularData,
    z: &MassMatrix,
) -> Result<SpectrumReport> {
    let l = md.rank();
    if family.g.len() != l {
        return Err(Error::ShapeMismatch {
            expected: family.g.len(),
            found: l,
        });
    }
    if z.dim() != l {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: z.dim(),
        });
    }
    let v = family.graph.vertices();
    let mut per_nu = Vec::with_capacity(l);
    let mut passed = true;
    for nu in 0..l {
        let mut candidates: Vec<(f64, usize)> = Vec::new();
        for lam in 0..l {
            let value = md.character(lam, nu).re;
            for _ in 0..z.get(lam, lam).max(0) {
                candidates.push((value, lam));
            }
        }
        let eig = symmetric_eigenvalues(&to_real(&family.g[nu]));
        let (entries, ok) = match_spectrum(&eig, &candidates, v);
        passed &= ok;
        per_nu.push(NuSpectrum {
            nu,
            entries,
            matched: ok,
        });
    }
    Ok(SpectrumReport {
        graph: family.graph.name(),
        per_nu,
        passed,
    })
}

pub(crate) fn match_spectrum(eig: &[f64], candidates: &[(f64, usize)], v: usize) -> (Vec<SpectrumEntry>, bool) {
    let mut used = vec![false; candidates.len()];
    let mut ok = candidates.len() == eig.len();
    let mut total_gap = 0.0;
    let mut entries = Vec::with_capacity(eig.len());
    for &e in eig {
        let multiplicity = eig.iter().filter(|x| abs(*x - e) < SPECTRUM_TOL).count();
        let nearest = |only_free: bool| {
            candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| !only_free || !used[*i])
                .map(|(i, c)| (i, abs(c.0 - e)))
                .min_by(|a, b| a.1.total_cmp(&b.1))
        };
        match nearest(true) {
            Some((i, gap)) if gap < SPECTRUM_TOL => {
                used[i] = true;
                total_gap += gap;
                entries.push(SpectrumEntry {
                    eigenvalue: e,
                    multiplicity,
                    matched: Some(candidates[i].1),
                    gap,
                });
            }
            _ => {
                ok = false;
                let gap = nearest(false).map_or(f64::INFINITY, |(_, g)| g);
                entries.push(SpectrumEntry {
                    eigenvalue: e,
                    multiplicity,
                    matched: None,
                    gap,
                });
            }
        }
    }
    if total_gap >= 1e-6 * v as f64 {
        ok = false;
    }
    (entries, ok)
}

/// `2cos(π(m+1)/h)` for each exponent `m`.
pub fn exponent_eigenvalues(graph: &AdeGraph) -> Vec<f64> {
    let h = graph.coxeter as f64;
    let mut out: Vec<f64> = graph
        .exponents
        .iter()
        .map(|&m| 2.0 * cos(PI * (m as f64 + 1.0) / h))
        .collect();
    out.sort_by(f64::total_cmp);
    out
}
