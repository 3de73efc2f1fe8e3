use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::abs;
use crate::IntMatrix;

/// A sector label. Index 0 is always the vacuum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub index: usize,
    pub display: String,
}

impl Label {
    pub fn new(index: usize, display: impl Into<String>) -> Self {
        Label {
            index,
            display: display.into(),
        }
    }
}

/// Fusion ring with non-negative integer structure constants `N_{a,b}^c`
/// and a conjugation map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<Label>,
    coeffs: Vec<u32>,
    dual: Vec<usize>,
}

/// Outcome of checking the fusion ring axioms exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FusionAxioms {
    pub unit: bool,
    pub commutative: bool,
    pub duality: bool,
    pub associative: bool,
}

impl FusionAxioms {
    pub fn all(&self) -> bool {
        self.unit && self.commutative && self.duality && self.associative
    }
}

impl FusionRing {
    /// `coeffs` is indexed `[a][b][c]` row-major, i.e. `coeffs[(a*L + b)*L + c]`.
    pub fn new(labels: Vec<Label>, coeffs: Vec<u32>, dual: Vec<usize>) -> Result<Self> {
        let l = labels.len();
        if coeffs.len() != l * l * l {
            return Err(Error::ShapeMismatch {
                expected: l * l * l,
                found: coeffs.len(),
            });
        }
        if dual.len() != l {
            return Err(Error::ShapeMismatch {
                expected: l,
                found: dual.len(),
            });
        }
        let mut seen = vec![false; l];
        for &d in &dual {
            if d >= l || seen[d] {
                return Err(Error::Inconsistent("dual map is not a permutation".into()));
            }
            seen[d] = true;
        }
        Ok(FusionRing {
            labels,
            coeffs,
            dual,
        })
    }

    /// Build from a closure evaluating `N_{a,b}^c`.
    pub fn from_fn(
        labels: Vec<Label>,
        dual: Vec<usize>,
        mut f: impl FnMut(usize, usize, usize) -> u32,
    ) -> Result<Self> {
        let l = labels.len();
        let mut coeffs = Vec::with_capacity(l * l * l);
        for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    coeffs.push(f(a, b, c));
                }
            }
        }
        Self::new(labels, coeffs, dual)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    pub fn label_index(&self, display: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.display == display)
    }

    #[inline]
    pub fn coeff(&self, a: usize, b: usize, c: usize) -> u32 {
        let l = self.rank();
        self.coeffs[(a * l + b) * l + c]
    }

    /// Fusion matrix `(N_a)_{b,c} = N_{a,b}^c`.
    pub fn fusion_matrix(&self, a: usize) -> IntMatrix {
        let l = self.rank();
        IntMatrix::from_fn(l, l, |b, c| self.coeff(a, b, c) as i64)
    }

    pub fn check_axioms(&self) -> FusionAxioms {
        let l = self.rank();
        let mut unit = true;
        let mut commutative = true;
        let mut duality = true;
        for a in 0..l {
            for b in 0..l {
                if self.coeff(0, a, b) != u32::from(a == b) {
                    unit = false;
                }
                if self.coeff(a, b, 0) != u32::from(b == self.dual[a]) {
                    duality = false;
                }
                for c in 0..l {
                    if self.coeff(a, b, c) != self.coeff(b, a, c) {
                        commutative = false;
                    }
                }
            }
        }
        let mut associative = true;
        'outer: for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    for d in 0..l {
                        let lhs: u64 = (0..l)
                            .map(|s| self.coeff(a, b, s) as u64 * self.coeff(s, c, d) as u64)
                            .sum();
                        let rhs: u64 = (0..l)
                            .map(|s| self.coeff(b, c, s) as u64 * self.coeff(a, s, d) as u64)
                            .sum();
                        if lhs != rhs {
                            associative = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        FusionAxioms {
            unit,
            commutative,
            duality,
            associative,
        }
    }

    /// Largest violation of `d_a d_b = Σ_c N_{a,b}^c d_c`.
    pub fn dimension_residual(&self, dims: &[f64]) -> f64 {
        let l = self.rank();
        if dims.len() != l {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for a in 0..l {
            for b in 0..l {
                let rhs: f64 = (0..l).map(|c| self.coeff(a, b, c) as f64 * dims[c]).sum();
                worst = worst.max(abs(dims[a] * dims[b] - rhs));
            }
        }
        worst
    }

    /// Whether the label permutation `perm` preserves every structure constant.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let l = self.rank();
        if perm.len() != l {
            return false;
        }
        (0..l).all(|a| {
            (0..l).all(|b| (0..l).all(|c| self.coeff(perm[a], perm[b], perm[c]) == self.coeff(a, b, c)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FusionRing {
        let labels = vec![Label::new(0, "0"), Label::new(1, "1")];
        FusionRing::from_fn(labels, vec![0, 1], |a, b, c| u32::from((a + b) % 2 == c)).unwrap()
    }

    #[test]
    fn group_ring_axioms() {
        let r = z2();
        assert!(r.check_axioms().all());
        assert!(r.dimension_residual(&[1.0, 1.0]) < 1e-15);
        assert!(r.dimension_residual(&[1.0, 2.0]) > 1.0);
        assert!(r.is_automorphism(&[0, 1]));
    }

    #[test]
    fn rejects_bad_shapes() {
        let labels = vec![Label::new(0, "0")];
        assert!(FusionRing::new(labels.clone(), vec![1, 0], vec![0]).is_err());
        assert!(FusionRing::new(labels, vec![1], vec![1]).is_err());
    }

    #[test]
    fn detects_broken_unit() {
        let labels = vec![Label::new(0, "0"), Label::new(1, "1")];
        let r = FusionRing::from_fn(labels, vec![0, 1], |_, _, c| u32::from(c == 0)).unwrap();
        let ax = r.check_axioms();
        assert!(!ax.unit);
        assert!(!ax.all());
    }
}
