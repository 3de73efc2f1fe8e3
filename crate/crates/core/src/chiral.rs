//! Sector Gram matrices, branching coefficients `Z = b+ᵀ b-`, global
//! indices and sector counts for the SU(2) A-D-E invariants.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::iso::identify_ade;
use crate::math::{abs, sqrt, symmetric_eigenvalues, to_real};
use crate::modinv::{su2_ade_catalog, su2_named_invariant, MassMatrix};
use crate::mtc::{su2_fusion_any_level, su2_modular_data, FusionRing, ModularData};
use crate::nimrep::{match_spectrum, AdeKind};
use crate::IntMatrix;

/// `M_{λμ} = Σ_ν t_ν N_{νλ}^μ`, the matrix of `⟨ιλ, ιμ⟩ = ⟨θλ, μ⟩`.
pub fn gram_matrix(ring: &FusionRing, theta: &[u32]) -> Result<IntMatrix> {
    let l = ring.rank();
    if theta.len() != l {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: theta.len(),
        });
    }
    if theta[0] == 0 {
        return Err(Error::ThetaWithoutIdentity);
    }
    Ok(IntMatrix::from_fn(l, l, |a, b| {
        (0..l)
            .map(|nu| theta[nu] as i64 * ring.coeff(nu, a, b) as i64)
            .sum()
    }))
}

/// Parse a multiplicity vector such as `id+l8+l16` (`id` is label 0, `lN`
/// is label N; repeated terms add up, `2l8` doubles).
pub fn parse_theta(text: &str, labels: usize) -> Result<Vec<u32>> {
    let mut t = vec![0u32; labels];
    for raw in text.split('+') {
        let term = raw.trim();
        let bad = || Error::UnknownLabel(term.to_string());
        let digits = term.chars().take_while(char::is_ascii_digit).count();
        let (mult, rest) = term.split_at(digits);
        let mult: u32 = if mult.is_empty() { 1 } else { mult.parse().map_err(|_| bad())? };
        let index = match rest {
            "id" => 0,
            _ => rest
                .strip_prefix('l')
                .or_else(|| rest.strip_prefix("λ"))
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(bad)?,
        };
        if index >= labels {
            return Err(bad());
        }
        t[index] += mult;
    }
    Ok(t)
}

/// `F` with `F_{a,λ} = ⟨a, ιλ⟩` over irreducible sectors `a`, and the
/// sector fusion graph `G_1` of the generating label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorDecomposition {
    pub f: IntMatrix,
    pub g1: IntMatrix,
    pub nodes: u64,
}

impl SectorDecomposition {
    pub fn sectors(&self) -> usize {
        self.f.nrows()
    }
}

/// Node budget for [`decompose_gram`].
pub const GRAM_BUDGET: u64 = 1_000_000;

/// Find non-negative integer `F` with `Fᵀ F = M`, then `G_1` with
/// `G_1 F = F N_1`.
///
/// Columns are filled in label order; a column first takes values on the
/// sectors already present and then opens new sectors for whatever norm is
/// left, trying the split into unit entries first.
pub fn decompose_gram(m: &IntMatrix, ring: &FusionRing) -> Result<SectorDecomposition> {
    let l = ring.rank();
    if m.nrows() != l || m.ncols() != l {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: m.nrows(),
        });
    }
    if m != &m.transpose() || m.iter().any(|x| *x < 0) {
        return Err(Error::Inconsistent("Gram matrix must be symmetric and non-negative".into()));
    }
    let mut search = GramSearch {
        m,
        l,
        rows: Vec::new(),
        nodes: 0,
        budget: GRAM_BUDGET,
    };
    if !search.column(0) {
        return Err(Error::NoFactorization { budget: GRAM_BUDGET });
    }
    let r = search.rows.len();
    let f = IntMatrix::from_fn(r, l, |a, lam| search.rows[a][lam]);
    let g1 = if l >= 2 {
        sector_adjacency(&f, &ring.fusion_matrix(1))?
    } else {
        IntMatrix::zeros(r, r)
    };
    Ok(SectorDecomposition {
        f,
        g1,
        nodes: search.nodes,
    })
}

/// Minimum-norm solution `G = F N Fᵀ (F Fᵀ)⁺` of `G F = F N`, rounded and
/// required to satisfy the equation exactly with non-negative entries.
///
/// Sectors with identical rows of `F` (the two fork sectors of a D graph)
/// only fix sums of entries of `G`; the minimum-norm solution splits them
/// evenly.
fn sector_adjacency(f: &IntMatrix, n: &IntMatrix) -> Result<IntMatrix> {
    let fr = to_real(f);
    let gram = &fr * fr.transpose();
    let inv = gram.pseudo_inverse(1e-9).map_err(|_| Error::NonIntegralAdjacency)?;
    let g = &fr * to_real(n) * fr.transpose() * inv;
    let mut out = IntMatrix::zeros(g.nrows(), g.ncols());
    for (x, y) in out.iter_mut().zip(g.iter()) {
        let r = crate::math::round(*y);
        if abs(r - y) > 1e-6 || r < 0.0 {
            return Err(Error::NonIntegralAdjacency);
        }
        *x = r as i64;
    }
    if &out * f != f * n {
        return Err(Error::NonIntegralAdjacency);
    }
    Ok(out)
}

struct GramSearch<'a> {
    m: &'a IntMatrix,
    l: usize,
    /// Sector rows, each of length `l` (unfilled columns are zero).
    rows: Vec<Vec<i64>>,
    nodes: u64,
    budget: u64,
}

impl GramSearch<'_> {
    fn column(&mut self, lam: usize) -> bool {
        if lam == self.l {
            return true;
        }
        let targets: Vec<i64> = (0..lam).map(|mu| self.m[(mu, lam)]).collect();
        let norm = self.m[(lam, lam)];
        self.existing(lam, 0, targets, norm)
    }

    /// Assign column `lam` on existing row `r` onwards.
    fn existing(&mut self, lam: usize, r: usize, targets: Vec<i64>, norm: i64) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if r == self.rows.len() {
            if targets.iter().any(|t| *t != 0) {
                return false;
            }
            return self.open_rows(lam, norm);
        }
        // rows after r must still be able to cover each remaining target
        let mut cap = isqrt(norm);
        for (mu, t) in targets.iter().enumerate() {
            let v = self.rows[r][mu];
            if v > 0 {
                cap = cap.min(t / v);
            }
        }
        for x in (0..=cap).rev() {
            let next: Vec<i64> = targets
                .iter()
                .enumerate()
                .map(|(mu, t)| t - x * self.rows[r][mu])
                .collect();
            if !self.coverable(r + 1, &next) {
                continue;
            }
            self.rows[r][lam] = x;
            if self.existing(lam, r + 1, next, norm - x * x) {
                return true;
            }
            self.rows[r][lam] = 0;
            if self.nodes > self.budget {
                return false;
            }
        }
        false
    }

    fn coverable(&self, from: usize, targets: &[i64]) -> bool {
        targets
            .iter()
            .enumerate()
            .all(|(mu, t)| *t == 0 || self.rows[from..].iter().any(|row| row[mu] > 0))
    }

    /// Spread the leftover norm over new sectors, one per part of a
    /// partition of `norm` into squares.
    fn open_rows(&mut self, lam: usize, norm: i64) -> bool {
        for parts in square_partitions(norm) {
            let base = self.rows.len();
            for v in &parts {
                let mut row = vec![0; self.l];
                row[lam] = *v;
                self.rows.push(row);
            }
            if self.column(lam + 1) {
                return true;
            }
            self.rows.truncate(base);
            if self.nodes > self.budget {
                return false;
            }
        }
        false
    }
}

fn isqrt(n: i64) -> i64 {
    let mut r = sqrt(n.max(0) as f64) as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Partitions of `n` into positive squares (as lists of roots), the
/// all-ones partition first, then by decreasing number of parts.
fn square_partitions(n: i64) -> Vec<Vec<i64>> {
    fn rec(n: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=max.min(isqrt(n))).rev() {
            cur.push(v);
            rec(n - v * v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, isqrt(n), &mut Vec::new(), &mut out);
    out.sort_by_key(|p| core::cmp::Reverse(p.len()));
    out
}

/// Ambichiral labels and the branching matrices `b±` (rows τ, columns λ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingData {
    pub kind: AdeKind,
    pub ambi_labels: Vec<String>,
    pub b_plus: IntMatrix,
    pub b_minus: IntMatrix,
}

impl BranchingData {
    pub fn is_type_one(&self) -> bool {
        self.b_plus == self.b_minus
    }

    pub fn level(&self) -> usize {
        self.kind.level()
    }
}

pub fn branching_data(name: &str) -> Result<BranchingData> {
    let kind = AdeKind::parse(name).map_err(|_| Error::UnknownCase(name.into()))?;
    Ok(branching_data_of(kind))
}

pub fn branching_data_of(kind: AdeKind) -> BranchingData {
    let k = kind.level();
    let l = k + 1;
    let from_sets = |sets: &[Vec<usize>]| {
        let mut b = IntMatrix::zeros(sets.len(), l);
        for (t, set) in sets.iter().enumerate() {
            for &j in set {
                b[(t, j)] += 1;
            }
        }
        b
    };
    let set_name = |set: &[usize]| {
        let parts: Vec<String> = set.iter().map(|j| format!("{j}")).collect();
        parts.join("+")
    };
    let type_one = |sets: Vec<Vec<usize>>, names: Vec<String>| {
        let b = from_sets(&sets);
        BranchingData {
            kind,
            ambi_labels: names,
            b_plus: b.clone(),
            b_minus: b,
        }
    };
    match kind {
        AdeKind::A(_) => {
            let sets: Vec<Vec<usize>> = (0..l).map(|j| vec![j]).collect();
            let names = sets.iter().map(|s| set_name(s)).collect();
            type_one(sets, names)
        }
        AdeKind::D(n) if n % 2 == 0 => {
            let mut sets: Vec<Vec<usize>> = (0..k / 2).step_by(2).map(|j| vec![j, k - j]).collect();
            let mut names: Vec<String> = sets.iter().map(|s| set_name(s)).collect();
            sets.push(vec![k / 2]);
            sets.push(vec![k / 2]);
            names.push(format!("{}a", k / 2));
            names.push(format!("{}b", k / 2));
            type_one(sets, names)
        }
        AdeKind::D(_) => {
            let perm: Vec<usize> = (0..l).map(|j| if j % 2 == 0 { j } else { k - j }).collect();
            BranchingData {
                kind,
                ambi_labels: (0..l).map(|j| format!("{j}")).collect(),
                b_plus: IntMatrix::identity(l, l),
                b_minus: IntMatrix::from_fn(l, l, |t, mu| i64::from(mu == perm[t])),
            }
        }
        AdeKind::E6 => {
            let sets = vec![vec![0, 6], vec![3, 7], vec![4, 10]];
            let names = sets.iter().map(|s| set_name(s)).collect();
            type_one(sets, names)
        }
        AdeKind::E8 => {
            let sets = vec![vec![0, 10, 18, 28], vec![6, 12, 16, 22]];
            let names = sets.iter().map(|s| set_name(s)).collect();
            type_one(sets, names)
        }
        AdeKind::E7 => {
            let plus = [
                vec![0, 16],
                vec![2, 14],
                vec![4, 12],
                vec![6, 10],
                vec![8],
                vec![8],
            ];
            let minus = [
                vec![0, 16],
                vec![8],
                vec![4, 12],
                vec![6, 10],
                vec![8],
                vec![2, 14],
            ];
            BranchingData {
                kind,
                ambi_labels: ["id", "α2+", "α4+", "α6+", "δ", "α2-"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
                b_plus: from_sets(&plus),
                b_minus: from_sets(&minus),
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorizationReport {
    /// `b+ᵀ b- = Z`
    pub forward: bool,
    /// `b-ᵀ b+ = Zᵀ`
    pub transposed: bool,
    /// `Σ_τ b+_{τλ} b-_{τ0} = Z_{λ0}`
    pub vacuum_column: bool,
}

impl FactorizationReport {
    pub fn all_passed(&self) -> bool {
        self.forward && self.transposed && self.vacuum_column
    }
}

pub fn verify_factorization(z: &MassMatrix, b: &BranchingData) -> Result<FactorizationReport> {
    let l = z.dim();
    let (bp, bm) = (&b.b_plus, &b.b_minus);
    if bp.ncols() != l || bm.ncols() != l || bp.nrows() != bm.nrows() {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: bp.ncols(),
        });
    }
    let prod = bp.transpose() * bm;
    let zm = z.matrix();
    let vacuum_column = (0..l).all(|lam| {
        (0..bp.nrows()).map(|t| bp[(t, lam)] * bm[(t, 0)]).sum::<i64>() == z.get(lam, 0)
    });
    Ok(FactorizationReport {
        forward: &prod == zm,
        transposed: bm.transpose() * bp == zm.transpose(),
        vacuum_column,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiralIndices {
    pub w: f64,
    pub w_plus: f64,
    pub w0: f64,
}

/// `w₊ = w / Σ_λ d_λ Z_{λ0}` and `w₀ = w₊² / w`.
pub fn chiral_indices(md: &ModularData, z: &MassMatrix) -> Result<ChiralIndices> {
    let l = md.rank();
    if z.dim() != l {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: z.dim(),
        });
    }
    let d = md.dims();
    let column: f64 = (0..l).map(|a| d[a] * z.get(a, 0) as f64).sum();
    let row: f64 = (0..l).map(|a| z.get(0, a) as f64 * d[a]).sum();
    if abs(column - row) > 1e-9 * column.max(1.0) {
        return Err(Error::Inconsistent(format!(
            "vacuum row {row} and column {column} weights differ"
        )));
    }
    let w = md.global_index();
    let w_plus = w / column;
    Ok(ChiralIndices {
        w,
        w_plus,
        w0: w_plus * w_plus / w,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectorCounts {
    /// `Σ Z_{λμ}²`
    pub mm: i64,
    /// `Σ Z_{λλ}`
    pub mn: i64,
    /// `Σ (b±_{τλ})²`
    pub chiral: i64,
    /// Number of ambichiral sectors.
    pub ambi: usize,
}

pub fn sector_counts(z: &MassMatrix, b: &BranchingData) -> Result<SectorCounts> {
    let sq = |m: &IntMatrix| m.iter().map(|x| x * x).sum::<i64>();
    let (plus, minus) = (sq(&b.b_plus), sq(&b.b_minus));
    if plus != minus {
        return Err(Error::Inconsistent(format!(
            "chiral counts differ: {plus} vs {minus}"
        )));
    }
    Ok(SectorCounts {
        mm: z.sum_of_squares(),
        mn: z.trace(),
        chiral: plus,
        ambi: b.b_plus.nrows(),
    })
}

/// Vacuum column of `Z` as a multiplicity vector.
fn vacuum_column(z: &MassMatrix) -> Vec<u32> {
    (0..z.dim()).map(|a| z.get(a, 0).max(0) as u32).collect()
}

/// Decomposition of the chiral Gram matrix `⟨α+_λ, α+_μ⟩ = Σ_ν N_{λμ}^ν Z_{ν0}`;
/// its `G_1` is the fusion graph of `α+_1` on the chiral system.
pub fn chiral_decomposition(ring: &FusionRing, z: &MassMatrix) -> Result<SectorDecomposition> {
    decompose_gram(&gram_matrix(ring, &vacuum_column(z))?, ring)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerronFrobeniusReport {
    /// `d_β` solved from `Σ_β F_{βλ} d_β = d_λ`.
    pub dims: Vec<f64>,
    /// Residual of that linear system.
    pub solve_residual: f64,
    /// `max_β |Σ_λ d_λ F_{βλ} - (w/w₊) d_β|`
    pub residual: f64,
}

/// Check `Σ_λ d_λ ⟨β, α+_λ⟩ = (w/w₊) d_β` over the chiral system.
pub fn chiral_perron_frobenius(md: &ModularData, z: &MassMatrix) -> Result<PerronFrobeniusReport> {
    let ring = su2_ring_for(md)?;
    let dec = chiral_decomposition(&ring, z)?;
    let idx = chiral_indices(md, z)?;
    let f = to_real(&dec.f);
    let d = DMatrix::from_column_slice(md.rank(), 1, md.dims());
    let gram = &f * f.transpose();
    let inv = gram.pseudo_inverse(1e-9).map_err(|_| Error::NonIntegralAdjacency)?;
    let beta = inv * &f * &d;
    let solve_residual = (f.transpose() * &beta - &d).abs().max();
    let lhs = &f * &d;
    let ratio = idx.w / idx.w_plus;
    let residual = (lhs - beta.scale(ratio)).abs().max();
    Ok(PerronFrobeniusReport {
        dims: beta.iter().copied().collect(),
        solve_residual,
        residual,
    })
}

fn su2_ring_for(md: &ModularData) -> Result<FusionRing> {
    match md.family() {
        crate::mtc::Family::Su { rank: 2, level } => Ok(su2_fusion_any_level(level)),
        _ => crate::mtc::verlinde_fusion(md),
    }
}

/// `⟨α+_λ α-_μ, α+_λ α-_μ⟩ = Σ_{ν,ρ} N_{λ̄λ}^ν N_{μμ̄}^ρ Z_{νρ}`.
pub fn alpha_product_norm(ring: &FusionRing, z: &MassMatrix, lambda: usize, mu: usize) -> i64 {
    let l = ring.rank();
    let dual = ring.dual();
    let mut total = 0;
    for nu in 0..l {
        let a = ring.coeff(dual[lambda], lambda, nu) as i64;
        if a == 0 {
            continue;
        }
        for rho in 0..l {
            total += a * ring.coeff(mu, dual[mu], rho) as i64 * z.get(nu, rho);
        }
    }
    total
}

/// One row of the A-D-E table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub kind: AdeKind,
    pub level: usize,
    pub counts: SectorCounts,
    /// Type of the fusion graph of `α±_1` on the chiral system.
    pub gamma: AdeKind,
    /// Number of chiral sectors found by the Gram decomposition.
    pub chiral_sectors: usize,
}

impl TableRow {
    pub fn name(&self) -> String {
        format!("{}", self.kind)
    }
}

/// Every invariant at levels `1..=kmax`, with counts and `Γ±_1` type.
pub fn chiral_table(kmax: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for k in 1..=kmax {
        let catalog = su2_ade_catalog(k)?;
        let ring = su2_fusion_any_level(k);
        for entry in catalog.entries {
            rows.push(table_row(&ring, entry.kind, &entry.z)?);
        }
    }
    Ok(rows)
}

fn table_row(ring: &FusionRing, kind: AdeKind, z: &MassMatrix) -> Result<TableRow> {
    let b = branching_data_of(kind);
    if !verify_factorization(z, &b)?.all_passed() {
        return Err(Error::Inconsistent(format!("{kind}: b+ᵀ b- differs from Z")));
    }
    let counts = sector_counts(z, &b)?;
    let dec = chiral_decomposition(ring, z)?;
    let gamma = identify_ade(&dec.g1).ok_or_else(|| {
        Error::Inconsistent(format!("{kind}: chiral fusion graph is not A-D-E"))
    })?;
    Ok(TableRow {
        kind,
        level: kind.level(),
        counts,
        gamma,
        chiral_sectors: dec.sectors(),
    })
}

/// Table row for one named SU(2) case, built from the closed-form invariant.
pub fn table_row_for(kind: AdeKind) -> Result<TableRow> {
    table_row(&su2_fusion_any_level(kind.level()), kind, &su2_named_invariant(kind))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FullSystemReport {
    pub level: usize,
    pub pairs: usize,
    /// Pairs `(ν, ρ)` whose spectrum did not match.
    pub failures: Vec<(usize, usize)>,
}

impl FullSystemReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For `k ≡ 2 mod 4`: the full system of the D_odd invariant is the
/// A_{k+1} fusion ring with `α+_ν ↦ N_ν` and `α-_ρ ↦ N_{π(ρ)}`. Checks that
/// `Γ_{ν,ρ} = N_ν N_{π(ρ)}` has eigenvalue `χ_λ(ν) χ_μ(ρ)` with
/// multiplicity `Z_{λμ}²`.
pub fn full_system_dodd(k: usize) -> Result<FullSystemReport> {
    if k % 4 != 2 || k < 6 {
        return Err(Error::LevelOutOfRange { level: k, max: crate::mtc::SU2_MAX_LEVEL });
    }
    let kind = AdeKind::D(k / 2 + 2);
    let z = su2_named_invariant(kind);
    let perm = z.as_permutation().expect("D_odd invariant is a permutation");
    let md = su2_modular_data(k)?;
    let ring = su2_fusion_any_level(k);
    let l = k + 1;
    let n: Vec<DMatrix<f64>> = (0..l).map(|a| to_real(&ring.fusion_matrix(a))).collect();
    let mut failures = Vec::new();
    for nu in 0..l {
        for rho in 0..l {
            let gamma = &n[nu] * &n[perm[rho]];
            let sym = (&gamma + gamma.transpose()) * 0.5;
            let eig = symmetric_eigenvalues(&sym);
            let mut candidates = Vec::new();
            for lam in 0..l {
                for mu in 0..l {
                    let m = z.get(lam, mu);
                    let value = md.character(lam, nu).re * md.character(mu, rho).re;
                    for _ in 0..m * m {
                        candidates.push((value, lam));
                    }
                }
            }
            let (_, ok) = match_spectrum(&eig, &candidates, l);
            if !ok || (&gamma - gamma.transpose()).abs().max() > 1e-9 {
                failures.push((nu, rho));
            }
        }
    }
    Ok(FullSystemReport {
        level: k,
        pairs: l * l,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtc::su2_fusion_closed_form;

    #[test]
    fn theta_parsing() {
        assert_eq!(parse_theta("id+l2", 4).unwrap(), vec![1, 0, 1, 0]);
        assert_eq!(parse_theta("id + 2l1", 3).unwrap(), vec![1, 2, 0]);
        assert!(parse_theta("id+l9", 4).is_err());
        assert!(parse_theta("x", 4).is_err());
    }

    #[test]
    fn square_partition_order() {
        assert_eq!(square_partitions(4), vec![vec![1, 1, 1, 1], vec![2]]);
        assert_eq!(square_partitions(0), vec![Vec::<i64>::new()]);
    }

    #[test]
    fn identity_theta() {
        let ring = su2_fusion_closed_form(4).unwrap();
        let m = gram_matrix(&ring, &[1, 0, 0, 0, 0]).unwrap();
        assert_eq!(m, IntMatrix::identity(5, 5));
        let dec = decompose_gram(&m, &ring).unwrap();
        assert_eq!(dec.g1, ring.fusion_matrix(1));
        assert!(matches!(gram_matrix(&ring, &[0; 5]), Err(Error::ThetaWithoutIdentity)));
    }
}
