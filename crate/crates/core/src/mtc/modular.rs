use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::fusion::Label;
use crate::error::{Error, Result};
use crate::math::{abs, arg, cabs, cis, max_abs, modulo, Complex64};
use crate::ComplexMatrix;

/// Where a set of modular data came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// SU(n) at level k (SU(2) included with `rank == 2`).
    Su { rank: usize, level: usize },
    Ising,
    /// Representation category of the cyclic group of the given order
    /// with trivial twists.
    CyclicGroup { order: usize },
    Custom,
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Su { rank, .. } => format!("su{rank}"),
            Family::Ising => "ising".into(),
            Family::CyclicGroup { .. } => "group".into(),
            Family::Custom => "custom".into(),
        }
    }

    pub fn level(&self) -> Option<usize> {
        match self {
            Family::Su { level, .. } => Some(*level),
            Family::CyclicGroup { order } => Some(*order),
            Family::Ising | Family::Custom => None,
        }
    }
}

/// S and T matrices of a braided sector system together with the derived
/// twists, quantum dimensions, global index and central charge.
#[derive(Debug, Clone, PartialEq)]
pub struct ModularData {
    family: Family,
    labels: Vec<Label>,
    s: ComplexMatrix,
    t: Vec<Complex64>,
    twists: Vec<Complex64>,
    dims: Vec<f64>,
    global_index: f64,
    central_charge: f64,
    dual: Vec<usize>,
    degenerate: bool,
}

/// Tolerance under which `S S† = 1` counts as unitary.
pub const UNITARITY_TOL: f64 = 1e-9;

pub(crate) fn unitarity_residual(s: &ComplexMatrix) -> f64 {
    let l = s.nrows();
    let prod = s * s.adjoint();
    max_abs(&(prod - ComplexMatrix::identity(l, l)))
}

/// `c = 4 arg(Σ ω_ν d_ν²)/π`, folded into `[0, 8)`.
pub fn central_charge_from_twists(twists: &[Complex64], dims: &[f64]) -> f64 {
    let z: Complex64 = twists
        .iter()
        .zip(dims)
        .map(|(w, d)| w * (d * d))
        .sum();
    modulo(4.0 * arg(z) / PI, 8.0)
}

impl ModularData {
    /// Assemble from S, twists and central charge; T, the global index and
    /// the degeneracy flag are derived.
    pub(crate) fn assemble(
        family: Family,
        labels: Vec<Label>,
        s: ComplexMatrix,
        twists: Vec<Complex64>,
        dims: Vec<f64>,
        central_charge: f64,
        dual: Vec<usize>,
    ) -> Self {
        let shift = cis(-PI * central_charge / 12.0);
        let t = twists.iter().map(|w| shift * w).collect();
        let global_index = dims.iter().map(|d| d * d).sum();
        let degenerate = unitarity_residual(&s) >= UNITARITY_TOL;
        ModularData {
            family,
            labels,
            s,
            t,
            twists,
            dims,
            global_index,
            central_charge: modulo(central_charge, 8.0),
            dual,
            degenerate,
        }
    }

    /// Rebuild modular data from an exported S-matrix, diagonal of T and
    /// central charge, re-validating every invariant. When `dual` is `None`
    /// the conjugation is recovered from `S_{λ̄,μ} = conj(S_{λ,μ})`.
    pub fn from_s_and_t(
        family: Family,
        labels: Vec<Label>,
        s: ComplexMatrix,
        t: Vec<Complex64>,
        central_charge: f64,
        dual: Option<Vec<usize>>,
    ) -> Result<Self> {
        let l = labels.len();
        if l == 0 {
            return Err(Error::InvalidModularData("no labels".into()));
        }
        if s.nrows() != l || s.ncols() != l {
            return Err(Error::ShapeMismatch {
                expected: l,
                found: s.nrows(),
            });
        }
        if t.len() != l {
            return Err(Error::ShapeMismatch {
                expected: l,
                found: t.len(),
            });
        }
        for (i, lab) in labels.iter().enumerate() {
            if lab.index != i {
                return Err(Error::InvalidModularData(format!(
                    "label {} carries index {}",
                    i, lab.index
                )));
            }
        }
        let sym = max_abs(&(&s - s.transpose()));
        if sym > 1e-9 {
            return Err(Error::InvalidModularData(format!(
                "S is not symmetric (residual {sym:e})"
            )));
        }
        for (i, ti) in t.iter().enumerate() {
            let m = cabs(*ti);
            if abs(m - 1.0) > 1e-9 {
                return Err(Error::NonUnimodularTwist { index: i, modulus: m });
            }
        }
        let s00 = s[(0, 0)];
        if s00.re <= 0.0 || abs(s00.im) > 1e-9 {
            return Err(Error::InvalidModularData("S_00 is not positive".into()));
        }
        let mut dims = Vec::with_capacity(l);
        for i in 0..l {
            let si = s[(i, 0)];
            if abs(si.im) > 1e-9 || si.re < s00.re - 1e-9 {
                return Err(Error::InvalidModularData(format!(
                    "S_{i},0 violates S_λ0 >= S_00 > 0"
                )));
            }
            dims.push(si.re / s00.re);
        }
        let dual = match dual {
            Some(d) => {
                if d.len() != l || d.iter().any(|&x| x >= l) {
                    return Err(Error::InvalidModularData("dual map out of range".into()));
                }
                d
            }
            None => dual_from_s(&s)?,
        };
        let shift = cis(PI * central_charge / 12.0);
        let twists: Vec<Complex64> = t.iter().map(|x| shift * x).collect();
        let c_check = central_charge_from_twists(&twists, &dims);
        let gap = modulo(c_check - central_charge + 4.0, 8.0) - 4.0;
        if abs(gap) > 1e-6 {
            return Err(Error::InvalidModularData(format!(
                "central charge {central_charge} inconsistent with twists (expected {c_check})"
            )));
        }
        let mut md = Self::assemble(family, labels, s, twists, dims, central_charge, dual);
        md.replace_t(t);
        Ok(md)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub(crate) fn replace_t(&mut self, t: Vec<Complex64>) {
        self.t = t;
    }

    pub(crate) fn set_family(&mut self, family: Family) {
        self.family = family;
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label_index(&self, display: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.display == display)
    }

    pub fn s(&self) -> &ComplexMatrix {
        &self.s
    }

    /// Diagonal entries of T.
    pub fn t(&self) -> &[Complex64] {
        &self.t
    }

    pub fn t_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(&self.t))
    }

    pub fn twists(&self) -> &[Complex64] {
        &self.twists
    }

    pub fn dims(&self) -> &[f64] {
        &self.dims
    }

    pub fn global_index(&self) -> f64 {
        self.global_index
    }

    pub fn central_charge(&self) -> f64 {
        self.central_charge
    }

    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `χ_λ(ν) = S_{ν,λ} / S_{0,λ}`.
    pub fn character(&self, lambda: usize, nu: usize) -> Complex64 {
        self.s[(nu, lambda)] / self.s[(0, lambda)]
    }
}

/// Recover the conjugation from `S_{λ̄,μ} = conj(S_{λ,μ})`; rows must match
/// uniquely, except that a self-matching row is preferred.
fn dual_from_s(s: &ComplexMatrix) -> Result<Vec<usize>> {
    let l = s.nrows();
    let mut dual = Vec::with_capacity(l);
    for a in 0..l {
        let matches = |b: usize| (0..l).all(|m| cabs(s[(b, m)] - s[(a, m)].conj()) < 1e-8);
        let found = if matches(a) {
            Some(a)
        } else {
            (0..l).find(|&b| matches(b))
        };
        match found {
            Some(b) => dual.push(b),
            None => {
                return Err(Error::InvalidModularData(format!(
                    "no conjugate row for label {a}"
                )))
            }
        }
    }
    Ok(dual)
}

pub(crate) fn normalized_dims(s: &ComplexMatrix) -> Vec<f64> {
    let s00 = s[(0, 0)].re;
    (0..s.nrows()).map(|i| s[(i, 0)].re / s00).collect()
}
