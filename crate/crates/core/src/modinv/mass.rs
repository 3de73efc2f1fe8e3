use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::IntMatrix;

/// Square integer matrix `Z` indexed by labels, a candidate modular invariant.
///
/// Only squareness is enforced on construction; non-negativity, `Z_00 = 1`
/// and commutation are checked by [`verify_invariant`](super::verify_invariant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MassMatrix(IntMatrix);

impl MassMatrix {
    pub fn new(z: IntMatrix) -> Result<Self> {
        if z.nrows() != z.ncols() {
            return Err(Error::ShapeMismatch {
                expected: z.nrows(),
                found: z.ncols(),
            });
        }
        Ok(MassMatrix(z))
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::ShapeMismatch {
                expected: n,
                found: r.len(),
            });
        }
        Ok(MassMatrix(IntMatrix::from_fn(n, n, |a, b| rows[a][b])))
    }

    pub fn identity(l: usize) -> Self {
        MassMatrix(IntMatrix::identity(l, l))
    }

    /// Permutation invariant `Z_{λ,π(λ)} = 1`.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let l = perm.len();
        MassMatrix(IntMatrix::from_fn(l, l, |a, b| i64::from(perm[a] == b)))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.0[(a, b)]
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_inner(self) -> IntMatrix {
        self.0
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim())
            .map(|a| (0..self.dim()).map(|b| self.get(a, b)).collect())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim()).map(|a| self.get(a, a)).collect()
    }

    pub fn trace(&self) -> i64 {
        self.diagonal().iter().sum()
    }

    pub fn sum_of_squares(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// The permutation `π` with `Z_{λ,π(λ)} = 1` if `Z` is a permutation matrix.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let l = self.dim();
        let mut perm = Vec::with_capacity(l);
        let mut hit = alloc::vec![false; l];
        for a in 0..l {
            let mut target = None;
            for b in 0..l {
                match self.get(a, b) {
                    0 => {}
                    1 if target.is_none() => target = Some(b),
                    _ => return None,
                }
            }
            let b = target?;
            if hit[b] {
                return None;
            }
            hit[b] = true;
            perm.push(b);
        }
        Some(perm)
    }

    fn row_major(&self) -> impl Iterator<Item = i64> + '_ {
        let l = self.dim();
        (0..l * l).map(move |p| self.get(p / l, p % l))
    }
}

impl PartialOrd for MassMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the row-major entries (after the dimension).
impl Ord for MassMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.row_major().cmp(other.row_major()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn permutation_detection() {
        let z = MassMatrix::from_permutation(&[0, 2, 1]);
        assert_eq!(z.as_permutation(), Some(vec![0, 2, 1]));
        let y = MassMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(y.as_permutation(), None);
        assert_eq!(y.sum_of_squares(), 4);
        assert_eq!(y.trace(), 2);
    }

    #[test]
    fn ordering_is_row_major() {
        let a = MassMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let b = MassMatrix::from_rows(&[vec![1, 1], vec![0, 0]]).unwrap();
        assert!(a < b);
        assert!(MassMatrix::from_rows(&[vec![1, 0]]).is_err());
    }
}
