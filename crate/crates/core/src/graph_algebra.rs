//! Gauge-fixed eigenvectors of A-D-E graphs and the structure constants
//! `N_{ab}^c = Σ_m ψ_{a,m} ψ_{b,m} conj(ψ_{c,m}) / ψ_{u,m}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::math::{abs, cabs, cos, max_abs, nearest_integer, to_complex, to_real, Complex64};
use crate::nimrep::{ade_graph, AdeGraph, AdeKind, NimRepFamily};
use crate::ComplexMatrix;

/// Unitary `ψ` diagonalizing `G_1`, with column `m` belonging to exponent
/// `exponents[m]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenGauge {
    pub graph: AdeGraph,
    pub psi: ComplexMatrix,
    pub exponents: Vec<usize>,
    /// Vertex `u` with `ψ_{u,m} > 0` for every column; vertex 0 unless
    /// `ψ_{0,m}` vanishes for some `m`.
    pub unit: usize,
}

const ZERO_TOL: f64 = 1e-9;

/// Eigenvectors of `G_1`, one column per exponent.
///
/// Simple eigenvalues are signed so that the unit vertex entry is positive.
/// In the two-dimensional eigenspace of `D_{2ℓ}` the columns are
/// `(s ± i a)/√2` for even `ℓ` and `(s ± a)/√2` for odd `ℓ`, where `s` is the
/// normalized projection of vertex 0 and `a` the antisymmetric fork vector.
pub fn eigen_gauge(graph: &AdeGraph) -> Result<EigenGauge> {
    let v = graph.vertices();
    let h = graph.coxeter as f64;
    let eig = SymmetricEigen::new(to_real(&graph.adjacency));
    let mut order: Vec<usize> = (0..v).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let exponents = graph.exponents.clone();
    for (col, &m) in order.iter().zip(&exponents) {
        let expected = 2.0 * cos(PI * (m as f64 + 1.0) / h);
        if abs(eig.eigenvalues[*col] - expected) > 1e-9 {
            return Err(Error::Gauge(format!(
                "eigenvalue {} does not match exponent {m}",
                eig.eigenvalues[*col]
            )));
        }
    }
    let columns: Vec<DVector<f64>> = order
        .iter()
        .map(|&c| eig.eigenvectors.column(c).into_owned())
        .collect();
    let mut psi = ComplexMatrix::zeros(v, v);
    let mut m = 0;
    let mut degenerate_at = None;
    while m < v {
        if m + 1 < v && exponents[m] == exponents[m + 1] {
            degenerate_at = Some(m);
            m += 2;
        } else {
            m += 1;
        }
    }
    let in_pair = |c: usize| degenerate_at.is_some_and(|d| c == d || c == d + 1);
    let unit = (0..v)
        .find(|&u| (0..v).all(|c| in_pair(c) || abs(columns[c][u]) > ZERO_TOL))
        .ok_or_else(|| Error::Gauge("every vertex has a vanishing eigenvector entry".into()))?;
    for c in 0..v {
        if in_pair(c) {
            continue;
        }
        let sign = if columns[c][unit] < 0.0 { -1.0 } else { 1.0 };
        for r in 0..v {
            psi[(r, c)] = Complex64::new(sign * columns[c][r], 0.0);
        }
    }
    if let Some(c) = degenerate_at {
        let AdeKind::D(n) = graph.kind else {
            return Err(Error::Gauge(format!("unexpected degenerate exponent in {}", graph.name())));
        };
        let basis = DMatrix::from_columns(&[columns[c].clone(), columns[c + 1].clone()]);
        let projector = &basis * basis.transpose();
        let mut s: DVector<f64> = projector.column(unit).into_owned();
        s /= s.norm();
        let mut a: DVector<f64> = projector.column(n - 2).into_owned();
        a -= &s * s.dot(&a);
        a /= a.norm();
        if a[n - 2] < 0.0 {
            a = -a;
        }
        let conjugate = (n / 2) % 2 == 0;
        for r in 0..v {
            let (re, im) = (s[r] * FRAC_1_SQRT_2, a[r] * FRAC_1_SQRT_2);
            let (plus, minus) = if conjugate {
                (Complex64::new(re, im), Complex64::new(re, -im))
            } else {
                (Complex64::new(re + im, 0.0), Complex64::new(re - im, 0.0))
            };
            psi[(r, c)] = plus;
            psi[(r, c + 1)] = minus;
        }
    }
    for c in 0..v {
        let z = psi[(unit, c)];
        if z.re <= ZERO_TOL || abs(z.im) > ZERO_TOL {
            return Err(Error::Gauge(format!("ψ[{unit}][{c}] = {z} is not positive")));
        }
    }
    Ok(EigenGauge {
        graph: graph.clone(),
        psi,
        exponents,
        unit,
    })
}

impl EigenGauge {
    pub fn unitarity_residual(&self) -> f64 {
        let v = self.psi.nrows();
        max_abs(&(&self.psi * self.psi.adjoint() - ComplexMatrix::identity(v, v)))
    }

    /// Largest off-diagonal entry of `ψ† G_λ ψ` over the family.
    pub fn diagonalization_residual(&self, family: &NimRepFamily) -> f64 {
        let mut worst: f64 = 0.0;
        for g in &family.g {
            let d = self.psi.adjoint() * to_complex(g) * &self.psi;
            for i in 0..d.nrows() {
                for j in 0..d.ncols() {
                    if i != j {
                        worst = worst.max(cabs(d[(i, j)]));
                    }
                }
            }
        }
        worst
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    /// Every structure constant is a non-negative integer.
    Positive,
    /// Some structure constant is below `-NEGATIVE_TOL`.
    Negative,
}

/// Threshold below which a structure constant counts as negative.
pub const NEGATIVE_TOL: f64 = 1e-6;

/// Distance from an integer accepted as integral.
pub const INTEGRAL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct GraphFusion {
    pub graph: String,
    pub vertices: usize,
    pub unit: usize,
    /// Real parts, indexed `[(a*V + b)*V + c]`.
    pub values: Vec<f64>,
    /// Nearest integers to `values`.
    pub rounded: Vec<i64>,
    pub verdict: Positivity,
    /// Most negative value (0 if none).
    pub worst_negative: f64,
}

impl GraphFusion {
    #[inline]
    pub fn value(&self, a: usize, b: usize, c: usize) -> f64 {
        let v = self.vertices;
        self.values[(a * v + b) * v + c]
    }

    #[inline]
    pub fn rounded(&self, a: usize, b: usize, c: usize) -> i64 {
        let v = self.vertices;
        self.rounded[(a * v + b) * v + c]
    }

    /// Exact associativity of the rounded tensor.
    pub fn is_associative(&self) -> bool {
        let v = self.vertices;
        for a in 0..v {
            for b in 0..v {
                for c in 0..v {
                    for d in 0..v {
                        let lhs: i64 = (0..v).map(|s| self.rounded(a, b, s) * self.rounded(s, c, d)).sum();
                        let rhs: i64 = (0..v).map(|s| self.rounded(b, c, s) * self.rounded(a, s, d)).sum();
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether the unit vertex acts as the identity in the rounded tensor.
    pub fn unit_is_identity(&self) -> bool {
        let v = self.vertices;
        (0..v).all(|b| (0..v).all(|c| self.rounded(self.unit, b, c) == i64::from(b == c)))
    }
}

pub fn graph_structure_constants(gauge: &EigenGauge) -> Result<GraphFusion> {
    let psi = &gauge.psi;
    let v = psi.nrows();
    let u = gauge.unit;
    let mut values = Vec::with_capacity(v * v * v);
    let mut rounded = Vec::with_capacity(v * v * v);
    let mut worst_negative: f64 = 0.0;
    for a in 0..v {
        for b in 0..v {
            for c in 0..v {
                let z: Complex64 = (0..v)
                    .map(|m| psi[(a, m)] / psi[(u, m)] * psi[(b, m)] * psi[(c, m)].conj())
                    .sum();
                let (n, res) = nearest_integer(z.re);
                let negative = z.re < -NEGATIVE_TOL;
                if abs(z.im) > INTEGRAL_TOL || (!negative && res > INTEGRAL_TOL) {
                    return Err(Error::AmbiguousStructureConstant { a, b, c, value: z.re });
                }
                worst_negative = worst_negative.min(z.re);
                values.push(z.re);
                rounded.push(n);
            }
        }
    }
    let verdict = if worst_negative < -NEGATIVE_TOL {
        Positivity::Negative
    } else {
        Positivity::Positive
    };
    Ok(GraphFusion {
        graph: gauge.graph.name(),
        vertices: v,
        unit: u,
        values,
        rounded,
        verdict,
        worst_negative: if worst_negative < -NEGATIVE_TOL { worst_negative } else { 0.0 },
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityRow {
    pub graph: String,
    pub verdict: Positivity,
    pub worst_negative: f64,
    pub unit: usize,
    /// Exact associativity of the rounded tensor; checked for positive cases.
    pub associative: Option<bool>,
}

pub fn positivity_report(names: &[&str]) -> Result<Vec<PositivityRow>> {
    names
        .iter()
        .map(|name| {
            let graph = ade_graph(name)?;
            let fusion = graph_structure_constants(&eigen_gauge(&graph)?)?;
            let associative = (fusion.verdict == Positivity::Positive).then(|| fusion.is_associative());
            Ok(PositivityRow {
                graph: graph.name(),
                verdict: fusion.verdict,
                worst_negative: fusion.worst_negative,
                unit: fusion.unit,
                associative,
            })
        })
        .collect()
}
