use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_integer::Integer;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::math::{abs, cabs, max_abs, rational_approximation, Complex64};
use crate::mtc::ModularData;
use crate::ComplexMatrix;

/// Singular-value threshold for the nullspace and residual threshold for
/// commutation.
pub const COMMUTANT_TOL: f64 = 1e-8;

/// Largest denominator accepted in rational reconstruction.
pub const MAX_DENOMINATOR: i64 = 1_000_000;

/// Real solution space of `SX = XS`, `TX = XT` in reduced echelon form over
/// row-major matrix positions.
///
/// Element `i` is `numerators[i] / denominator`; its entry at `pivots[i]` is
/// 1 and its entries at the other pivots are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantBasis {
    rank: usize,
    denominator: i64,
    pivots: Vec<usize>,
    numerators: Vec<Vec<i64>>,
}

impl CommutantBasis {
    /// Number of labels `L`.
    pub fn labels(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    /// Row-major positions `a*L + b` of the pivots.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Integer numerators of element `i`, row-major, over [`denominator`](Self::denominator).
    pub fn numerators(&self, i: usize) -> &[i64] {
        &self.numerators[i]
    }

    pub fn element(&self, i: usize) -> DMatrix<Rational64> {
        let l = self.rank;
        DMatrix::from_fn(l, l, |a, b| {
            Rational64::new(self.numerators[i][a * l + b], self.denominator)
        })
    }

    pub fn basis(&self) -> Vec<DMatrix<Rational64>> {
        (0..self.dim()).map(|i| self.element(i)).collect()
    }

    pub(crate) fn element_f64(&self, i: usize) -> DMatrix<f64> {
        let l = self.rank;
        let d = self.denominator as f64;
        DMatrix::from_fn(l, l, |a, b| self.numerators[i][a * l + b] as f64 / d)
    }

    /// Whether the integer matrix `z` lies in the rational span.
    pub fn contains(&self, z: &crate::IntMatrix) -> bool {
        let l = self.rank;
        if z.nrows() != l || z.ncols() != l {
            return false;
        }
        (0..l * l).all(|p| {
            let sum: i128 = self
                .pivots
                .iter()
                .zip(&self.numerators)
                .map(|(&piv, num)| z[(piv / l, piv % l)] as i128 * num[p] as i128)
                .sum();
            sum == z[(p / l, p % l)] as i128 * self.denominator as i128
        })
    }
}

/// Compute the commutant of S and T.
///
/// T commutation kills every position `(a, b)` with `T_a != T_b`; S
/// commutation on the remaining positions is solved as a real linear system
/// whose nullspace (by SVD) is brought to reduced echelon form and
/// reconstructed as rationals.
pub fn commutant_basis(md: &ModularData) -> Result<CommutantBasis> {
    if md.is_degenerate() {
        return Err(Error::Degenerate(crate::mtc::unitarity_residual(md.s())));
    }
    let l = md.rank();
    let s = md.s();
    let t = md.t();
    let positions: Vec<usize> = (0..l * l)
        .filter(|p| cabs(t[p / l] - t[p % l]) < COMMUTANT_TOL)
        .collect();
    let n = positions.len();
    // (SX - XS)_{ij} as real and imaginary rows.
    let rows = (2 * l * l).max(n);
    let mut a = DMatrix::<f64>::zeros(rows, n);
    for (col, &p) in positions.iter().enumerate() {
        let (r, c) = (p / l, p % l);
        // X = E_{rc}: (S E)_{i c} = S_{i r}, (E S)_{r j} = S_{c j}
        for i in 0..l {
            let v = s[(i, r)];
            let row = i * l + c;
            a[(2 * row, col)] += v.re;
            a[(2 * row + 1, col)] += v.im;
        }
        for j in 0..l {
            let v = s[(c, j)];
            let row = r * l + j;
            a[(2 * row, col)] -= v.re;
            a[(2 * row + 1, col)] -= v.im;
        }
    }
    let svd = a.svd(false, true);
    let v_t = svd.v_t.as_ref().expect("requested V^T");
    let mut null: Vec<Vec<f64>> = Vec::new();
    for (i, sv) in svd.singular_values.iter().enumerate() {
        if *sv < COMMUTANT_TOL {
            null.push(v_t.row(i).iter().copied().collect());
        }
    }
    let (pivot_cols, rref) = reduced_echelon(null, n);
    let mut denominators = Vec::with_capacity(rref.len() * n);
    let mut fractions: Vec<Vec<(i64, i64)>> = Vec::with_capacity(rref.len());
    for row in &rref {
        let mut out = Vec::with_capacity(n);
        for &x in row {
            if abs(x) < 1e-10 {
                out.push((0, 1));
                continue;
            }
            let (p, q) = rational_approximation(x, MAX_DENOMINATOR, 1e-9)
                .ok_or(Error::RationalReconstruction { value: x })?;
            denominators.push(q);
            out.push((p, q));
        }
        fractions.push(out);
    }
    let denominator = denominators.iter().fold(1i64, |acc, q| acc.lcm(q));
    let numerators: Vec<Vec<i64>> = fractions
        .iter()
        .map(|row| {
            let mut full = vec![0i64; l * l];
            for (col, &(p, q)) in row.iter().enumerate() {
                full[positions[col]] = p * (denominator / q);
            }
            full
        })
        .collect();
    let basis = CommutantBasis {
        rank: l,
        denominator,
        pivots: pivot_cols.iter().map(|&c| positions[c]).collect(),
        numerators,
    };
    let tm = md.t_matrix();
    for i in 0..basis.dim() {
        let x: ComplexMatrix = basis.element_f64(i).map(|v| Complex64::new(v, 0.0));
        let residual = max_abs(&(s * &x - &x * s)).max(max_abs(&(&tm * &x - &x * &tm)));
        if residual >= COMMUTANT_TOL {
            return Err(Error::CommutantResidual { index: i, residual });
        }
    }
    Ok(basis)
}

/// Gauss–Jordan with partial pivoting, scanning columns in order.
fn reduced_echelon(mut m: Vec<Vec<f64>>, cols: usize) -> (Vec<usize>, Vec<Vec<f64>>) {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (best, val) = (r..rows)
            .map(|i| (i, abs(m[i][c])))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty range");
        if val < COMMUTANT_TOL {
            continue;
        }
        m.swap(r, best);
        let p = m[r][c];
        for x in m[r].iter_mut() {
            *x /= p;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r {
                let f = row[c];
                if f != 0.0 {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (pivots, m)
}
