use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::mass::MassMatrix;
use super::search::{enumerate_invariants, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::math::{abs, max_abs, to_complex};
use crate::mtc::{su2_modular_data, sun_weights, FusionRing, ModularData};
use crate::nimrep::AdeKind;
use crate::{Check, IntMatrix};

/// Residual tolerance for commutation of a candidate invariant.
pub const INVARIANT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantReport {
    pub s_commutes: Check,
    pub t_commutes: Check,
    pub non_negative: bool,
    pub vacuum_normalized: bool,
    /// `Σ_λ d_λ Z_{λ,0} = Σ_λ Z_{0,λ} d_λ`
    pub vacuum_row_identity: Check,
}

impl InvariantReport {
    pub fn all_passed(&self) -> bool {
        self.s_commutes.passed
            && self.t_commutes.passed
            && self.non_negative
            && self.vacuum_normalized
            && self.vacuum_row_identity.passed
    }
}

pub fn verify_invariant(md: &ModularData, z: &MassMatrix) -> Result<InvariantReport> {
    let l = md.rank();
    if z.dim() != l {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: z.dim(),
        });
    }
    let zc = to_complex(z.matrix());
    let s = md.s();
    let t = md.t_matrix();
    let d = md.dims();
    let column: f64 = (0..l).map(|a| d[a] * z.get(a, 0) as f64).sum();
    let row: f64 = (0..l).map(|a| z.get(0, a) as f64 * d[a]).sum();
    Ok(InvariantReport {
        s_commutes: Check::within(max_abs(&(s * &zc - &zc * s)), INVARIANT_TOL),
        t_commutes: Check::within(max_abs(&(&t * &zc - &zc * &t)), INVARIANT_TOL),
        non_negative: z.matrix().iter().all(|x| *x >= 0),
        vacuum_normalized: z.get(0, 0) == 1,
        vacuum_row_identity: Check::within(abs(column - row), 1e-9 * column.max(1.0)),
    })
}

/// The three equivalent conditions for a permutation invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationCriterion {
    /// `Z_{0,λ} = δ_{λ,0}`
    pub vacuum_row: bool,
    /// `Z_{λ,0} = δ_{λ,0}`
    pub vacuum_column: bool,
    /// `π` with `Z_{λ,π(λ)} = 1`, when Z is a permutation matrix, `π(0) = 0`
    /// and `π` preserves the fusion rules.
    pub permutation: Option<Vec<usize>>,
}

impl PermutationCriterion {
    pub fn is_permutation(&self) -> bool {
        self.permutation.is_some()
    }
}

/// Evaluate all three conditions; they must agree.
pub fn permutation_criterion(ring: &FusionRing, z: &MassMatrix) -> Result<PermutationCriterion> {
    let l = ring.rank();
    if z.dim() != l {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: z.dim(),
        });
    }
    let vacuum_row = (0..l).all(|a| z.get(0, a) == i64::from(a == 0));
    let vacuum_column = (0..l).all(|a| z.get(a, 0) == i64::from(a == 0));
    let permutation = z
        .as_permutation()
        .filter(|p| p[0] == 0 && ring.is_automorphism(p));
    if vacuum_row != vacuum_column || vacuum_row != permutation.is_some() {
        return Err(Error::Inconsistent(format!(
            "permutation criterion split: row {vacuum_row}, column {vacuum_column}, automorphism {}",
            permutation.is_some()
        )));
    }
    Ok(PermutationCriterion {
        vacuum_row,
        vacuum_column,
        permutation,
    })
}

/// Closed-form SU(2) invariant of an A-D-E type at level `h - 2`.
pub fn su2_named_invariant(kind: AdeKind) -> MassMatrix {
    let k = kind.level();
    let l = k + 1;
    let mut z = IntMatrix::zeros(l, l);
    let mut block = |set: &[usize]| {
        for &a in set {
            for &b in set {
                z[(a, b)] += 1;
            }
        }
    };
    match kind {
        AdeKind::A(_) => return MassMatrix::identity(l),
        AdeKind::D(n) if n % 2 == 0 => {
            for j in (0..k / 2).step_by(2) {
                block(&[j, k - j]);
            }
            block(&[k / 2]);
            block(&[k / 2]);
        }
        AdeKind::D(_) => {
            let perm: Vec<usize> = (0..l).map(|j| if j % 2 == 0 { j } else { k - j }).collect();
            return MassMatrix::from_permutation(&perm);
        }
        AdeKind::E6 => {
            block(&[0, 6]);
            block(&[3, 7]);
            block(&[4, 10]);
        }
        AdeKind::E7 => {
            block(&[0, 16]);
            block(&[4, 12]);
            block(&[6, 10]);
            block(&[8]);
            for j in [2, 14] {
                z[(j, 8)] += 1;
                z[(8, j)] += 1;
            }
        }
        AdeKind::E8 => {
            block(&[0, 10, 18, 28]);
            block(&[6, 12, 16, 22]);
        }
    }
    MassMatrix::new(z).expect("square")
}

/// Name an SU(2)_k invariant by the exponent multiset of its diagonal.
pub fn name_su2_invariant(k: usize, z: &MassMatrix) -> Result<AdeKind> {
    let diag = z.diagonal();
    let mut multiset = Vec::new();
    for (j, &m) in diag.iter().enumerate() {
        for _ in 0..m.max(0) {
            multiset.push(j);
        }
    }
    AdeKind::at_level(k)
        .into_iter()
        .find(|kind| kind.exponents() == multiset)
        .ok_or(Error::UnmatchedInvariant { diagonal: diag })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub kind: AdeKind,
    pub z: MassMatrix,
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        format!("{}", self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub level: usize,
    /// Sorted by type: A, then D, then E.
    pub entries: Vec<CatalogEntry>,
    pub complete: bool,
}

/// Largest level accepted by [`su2_ade_catalog`].
pub const CATALOG_MAX_LEVEL: usize = 32;

/// Enumerate the SU(2)_k invariants and name each by its A-D-E type.
pub fn su2_ade_catalog(k: usize) -> Result<Catalog> {
    if k == 0 || k > CATALOG_MAX_LEVEL {
        return Err(Error::LevelOutOfRange {
            level: k,
            max: CATALOG_MAX_LEVEL,
        });
    }
    let md = su2_modular_data(k)?;
    let found = enumerate_invariants(&md, DEFAULT_BUDGET)?;
    let mut entries = found
        .invariants
        .into_iter()
        .map(|z| name_su2_invariant(k, &z).map(|kind| CatalogEntry { kind, z }))
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by_key(|e| e.kind);
    Ok(Catalog {
        level: k,
        entries,
        complete: found.complete,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedInvariant {
    pub level: usize,
    pub name: String,
    pub z: MassMatrix,
}

/// The conformal-inclusion invariants of SU(3)_3 (`D(6)`) and SU(3)_5
/// (`E(8)`), over the labels of [`sun_weights`]`(3, k)`.
pub fn su3_named_invariants() -> Vec<NamedInvariant> {
    let d6: &[(&[(usize, usize)], i64)] = &[(&[(0, 0), (3, 0), (3, 3)], 1), (&[(2, 1)], 3)];
    let e8: &[(&[(usize, usize)], i64)] = &[
        (&[(0, 0), (4, 2)], 1),
        (&[(2, 0), (5, 3)], 1),
        (&[(2, 2), (5, 2)], 1),
        (&[(3, 0), (3, 3)], 1),
        (&[(3, 1), (5, 5)], 1),
        (&[(3, 2), (5, 0)], 1),
    ];
    vec![
        NamedInvariant {
            level: 3,
            name: "D(6)".into(),
            z: su3_blocks(3, d6),
        },
        NamedInvariant {
            level: 5,
            name: "E(8)".into(),
            z: su3_blocks(5, e8),
        },
    ]
}

/// `Σ mult |Σ_{λ ∈ block} χ_λ|²`
fn su3_blocks(k: usize, blocks: &[(&[(usize, usize)], i64)]) -> MassMatrix {
    let weights = sun_weights(3, k);
    let index = |(m, n): (usize, usize)| {
        weights
            .iter()
            .position(|w| w[0] == m && w[1] == n)
            .expect("weight within level")
    };
    let l = weights.len();
    let mut z = IntMatrix::zeros(l, l);
    for (set, mult) in blocks {
        for &a in *set {
            for &b in *set {
                z[(index(a), index(b))] += mult;
            }
        }
    }
    MassMatrix::new(z).expect("square")
}
