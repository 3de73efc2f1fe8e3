use alloc::vec;
use alloc::vec::Vec;

use super::commutant::{commutant_basis, CommutantBasis};
use super::mass::MassMatrix;
use crate::error::{Error, Result};
use crate::math::floor;
use crate::mtc::ModularData;
use crate::IntMatrix;

/// Node budget used when none is given.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper bound imposed on each entry `Z_{λμ}` during the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryBound {
    /// `Z_{λμ} <= d_λ d_μ`.
    Dimension,
    /// `Z_{λμ} <= w / (d_λ d_μ)`, from `Σ d_λ Z_{λμ} d_μ = w`.
    GlobalIndex,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Enumeration {
    /// Distinct invariants, sorted lexicographically.
    pub invariants: Vec<MassMatrix>,
    /// False when the node budget ran out before the tree was exhausted.
    pub complete: bool,
    pub nodes: u64,
    pub bound: EntryBound,
    /// Commutant dimension.
    pub commutant_dim: usize,
}

/// All non-negative integer `Z` with `Z_00 = 1` commuting with S and T.
///
/// Starts with [`EntryBound::Dimension`] and falls back to
/// [`EntryBound::GlobalIndex`] if the first bound already empties the root.
pub fn enumerate_invariants(md: &ModularData, budget: u64) -> Result<Enumeration> {
    let basis = commutant_basis(md)?;
    let first = run(md, &basis, EntryBound::Dimension, budget)?;
    if first.root_pruned {
        let second = run(md, &basis, EntryBound::GlobalIndex, budget)?;
        return Ok(second.finish(basis.dim()));
    }
    Ok(first.finish(basis.dim()))
}

/// Enumerate with a fixed entry bound.
pub fn enumerate_invariants_with(
    md: &ModularData,
    bound: EntryBound,
    budget: u64,
) -> Result<Enumeration> {
    let basis = commutant_basis(md)?;
    Ok(run(md, &basis, bound, budget)?.finish(basis.dim()))
}

struct Outcome {
    found: Vec<MassMatrix>,
    complete: bool,
    nodes: u64,
    bound: EntryBound,
    root_pruned: bool,
}

impl Outcome {
    fn finish(mut self, commutant_dim: usize) -> Enumeration {
        self.found.sort();
        self.found.dedup();
        Enumeration {
            invariants: self.found,
            complete: self.complete,
            nodes: self.nodes,
            bound: self.bound,
            commutant_dim,
        }
    }
}

/// `lo <= Σ coeffs[j].1 * c[coeffs[j].0] <= hi`
struct Constraint {
    terms: Vec<(usize, f64)>,
    lo: f64,
    hi: f64,
    /// Tolerance for rounding implied variable bounds.
    eps: f64,
}

struct Search<'a> {
    basis: &'a CommutantBasis,
    bounds: Vec<i64>,
    constraints: Vec<Constraint>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    found: Vec<MassMatrix>,
}

fn run(md: &ModularData, basis: &CommutantBasis, bound: EntryBound, budget: u64) -> Result<Outcome> {
    let l = md.rank();
    let dims = md.dims();
    let w = md.global_index();
    if basis.dim() == 0 || basis.pivots()[0] != 0 {
        return Err(Error::Inconsistent(
            "identity is not in the commutant span".into(),
        ));
    }
    let bounds: Vec<i64> = (0..l * l)
        .map(|p| {
            let dd = dims[p / l] * dims[p % l];
            let b = match bound {
                EntryBound::Dimension => dd,
                EntryBound::GlobalIndex => w / dd,
            };
            floor(b + 1e-6) as i64
        })
        .collect();
    let r = basis.dim();
    let den = basis.denominator() as f64;
    let mut constraints = Vec::new();
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; l * l];
        for &p in basis.pivots() {
            v[p] = true;
        }
        v
    };
    for p in 0..l * l {
        if pivot_set[p] {
            continue;
        }
        let terms: Vec<(usize, f64)> = (0..r)
            .filter(|&i| basis.numerators(i)[p] != 0)
            .map(|i| (i, basis.numerators(i)[p] as f64))
            .collect();
        if terms.is_empty() {
            continue;
        }
        constraints.push(Constraint {
            terms,
            lo: 0.0,
            hi: den * bounds[p] as f64,
            eps: 1e-7,
        });
    }
    // Σ d_λ Z_{λμ} d_μ = w
    let weights: Vec<(usize, f64)> = (0..r)
        .map(|i| {
            let num = basis.numerators(i);
            let s: f64 = (0..l * l)
                .map(|p| num[p] as f64 * dims[p / l] * dims[p % l])
                .sum();
            (i, s / den)
        })
        .filter(|(_, s)| *s != 0.0)
        .collect();
    let tol = 1e-6 * w;
    constraints.push(Constraint {
        terms: weights,
        lo: w - tol,
        hi: w + tol,
        eps: 1e-6,
    });
    let mut lo = vec![0i64; r];
    let mut hi: Vec<i64> = basis.pivots().iter().map(|&p| bounds[p]).collect();
    lo[0] = 1;
    hi[0] = 1;
    let mut search = Search {
        basis,
        bounds,
        constraints,
        budget,
        nodes: 0,
        exhausted: false,
        found: Vec::new(),
    };
    let root_ok = search.propagate(&mut lo, &mut hi);
    if root_ok {
        search.dfs(lo, hi);
    }
    Ok(Outcome {
        found: search.found,
        complete: !search.exhausted,
        nodes: search.nodes,
        bound,
        root_pruned: !root_ok,
    })
}

impl Search<'_> {
    /// Interval bounds propagation to a fixpoint; false on infeasibility.
    fn propagate(&self, lo: &mut [i64], hi: &mut [i64]) -> bool {
        loop {
            let mut changed = false;
            for c in &self.constraints {
                let (mut min, mut max) = (0.0, 0.0);
                for &(j, a) in &c.terms {
                    let (x, y) = (a * lo[j] as f64, a * hi[j] as f64);
                    min += x.min(y);
                    max += x.max(y);
                }
                if min > c.hi + c.eps || max < c.lo - c.eps {
                    return false;
                }
                for &(j, a) in &c.terms {
                    let (x, y) = (a * lo[j] as f64, a * hi[j] as f64);
                    let rest_min = min - x.min(y);
                    let rest_max = max - x.max(y);
                    let (num_lo, num_hi) = (c.lo - rest_max, c.hi - rest_min);
                    let (mut new_lo, mut new_hi) = if a > 0.0 {
                        (num_lo / a, num_hi / a)
                    } else {
                        (num_hi / a, num_lo / a)
                    };
                    new_lo = -floor(-new_lo + c.eps);
                    new_hi = floor(new_hi + c.eps);
                    if new_lo > lo[j] as f64 {
                        lo[j] = new_lo as i64;
                        changed = true;
                    }
                    if new_hi < hi[j] as f64 {
                        hi[j] = new_hi as i64;
                        changed = true;
                    }
                    if lo[j] > hi[j] {
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn dfs(&mut self, lo: Vec<i64>, hi: Vec<i64>) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let pick = (0..lo.len())
            .filter(|&j| lo[j] < hi[j])
            .min_by_key(|&j| (hi[j] - lo[j], j));
        let Some(j) = pick else {
            if let Some(z) = self.leaf(&lo) {
                self.found.push(z);
            }
            return;
        };
        for v in lo[j]..=hi[j] {
            let (mut lo2, mut hi2) = (lo.clone(), hi.clone());
            lo2[j] = v;
            hi2[j] = v;
            if self.propagate(&mut lo2, &mut hi2) {
                self.dfs(lo2, hi2);
            }
            if self.exhausted {
                return;
            }
        }
    }

    /// Exact integrality and bound check at a fully assigned point.
    fn leaf(&self, c: &[i64]) -> Option<MassMatrix> {
        let b = self.basis;
        let l = b.labels();
        let den = b.denominator() as i128;
        let mut z = IntMatrix::zeros(l, l);
        for p in 0..l * l {
            let sum: i128 = c
                .iter()
                .enumerate()
                .map(|(i, &ci)| ci as i128 * b.numerators(i)[p] as i128)
                .sum();
            if sum % den != 0 {
                return None;
            }
            let v = (sum / den) as i64;
            if v < 0 || v > self.bounds[p] {
                return None;
            }
            z[(p / l, p % l)] = v;
        }
        (z[(0, 0)] == 1).then(|| MassMatrix::new(z).expect("square"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtc::{cyclic_group_dual, ising_modular_data, su2_modular_data};

    #[test]
    fn level4_has_two() {
        let e = enumerate_invariants(&su2_modular_data(4).unwrap(), DEFAULT_BUDGET).unwrap();
        assert!(e.complete);
        assert_eq!(e.invariants.len(), 2);
        assert_eq!(e.bound, EntryBound::Dimension);
    }

    #[test]
    fn ising_only_identity() {
        let e = enumerate_invariants(&ising_modular_data(), DEFAULT_BUDGET).unwrap();
        assert_eq!(e.invariants, vec![MassMatrix::identity(3)]);
    }

    #[test]
    fn degenerate_rejected() {
        let md = cyclic_group_dual(3).unwrap();
        assert!(matches!(
            enumerate_invariants(&md, DEFAULT_BUDGET),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn tiny_budget_reports_incomplete() {
        let e = enumerate_invariants(&su2_modular_data(16).unwrap(), 1).unwrap();
        assert!(!e.complete);
    }
}
