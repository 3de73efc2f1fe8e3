//! Modular data, fusion rings and modular invariants.
//!
//! The crate is `no_std` (with `alloc`) and covers:
//!
//! * [`mtc`]: S/T matrices for SU(2)_k, SU(n)_k, Ising and abelian group
//!   duals, the Verlinde formula and the modular relation checks.
//! * [`modinv`]: the commutant of {S, T}, an exact search for all
//!   non-negative integer invariants with `Z[0][0] = 1`, and their
//!   classification (permutation criterion, A-D-E names, SU(3) invariants).
//! * [`nimrep`]: A-D-E graphs, their fused adjacency families `G_j` and the
//!   eigenvalue/diagonal matching of mass matrices.
//! * [`graph_algebra`]: gauge-fixed eigenvector matrices and the graph
//!   algebra structure constants.
//! * [`chiral`]: Gram matrices of M-N sectors, branching coefficients
//!   `Z = b+ᵀ b-`, global indices, sector counts and the A-D-E table.
//!
//! File formats and the command-line front end live in the `modinv` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod chiral;
pub mod error;
pub mod graph_algebra;
pub mod iso;
pub mod math;
pub mod modinv;
pub mod mtc;
pub mod nimrep;

pub use error::{Error, Result};
pub use math::Complex64;

/// Matrix of exact integers; used for fusion matrices, mass matrices,
/// nimreps and branching coefficients.
pub type IntMatrix = nalgebra::DMatrix<i64>;

/// Dense complex matrix (S-matrix and friends).
pub type ComplexMatrix = nalgebra::DMatrix<Complex64>;

/// A named boolean check carrying the residual that decided it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub passed: bool,
    pub residual: f64,
}

impl Check {
    pub fn within(residual: f64, tol: f64) -> Self {
        Check {
            passed: residual < tol,
            residual,
        }
    }

    pub fn exact(passed: bool) -> Self {
        Check {
            passed,
            residual: if passed { 0.0 } else { 1.0 },
        }
    }
}
