//! Float helpers routed through `libm` so the crate builds without `std`.

use core::f64::consts::PI;

use nalgebra::DMatrix;

pub type Complex64 = num_complex::Complex<f64>;

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub fn round(x: f64) -> f64 {
    libm::round(x)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::new(cos(theta), sin(theta))
}

/// `e^{2πi x}`.
#[inline]
pub fn phase(x: f64) -> Complex64 {
    cis(2.0 * PI * x)
}

#[inline]
pub fn cabs(z: Complex64) -> f64 {
    libm::hypot(z.re, z.im)
}

#[inline]
pub fn arg(z: Complex64) -> f64 {
    atan2(z.im, z.re)
}

/// Representative of `x mod m` in `[0, m)`; values within `1e-12` of `m`
/// fold to zero.
pub fn modulo(x: f64, m: f64) -> f64 {
    let r = x - m * floor(x / m);
    if abs(r - m) < 1e-12 {
        0.0
    } else {
        r
    }
}

/// Nearest integer together with the rounding residual.
pub fn nearest_integer(x: f64) -> (i64, f64) {
    let r = round(x);
    (r as i64, abs(x - r))
}

/// Largest entrywise modulus of a complex matrix.
pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(cabs(*z)))
}

/// Largest entrywise modulus of a real matrix.
pub fn max_abs_real(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(abs(*x)))
}

/// Continued-fraction reconstruction of `x` as `p/q` with `0 < q <= max_den`,
/// accepted only when `|x - p/q| <= tol`.
pub fn rational_approximation(x: f64, max_den: i64, tol: f64) -> Option<(i64, i64)> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut frac = x;
    for _ in 0..64 {
        let a = floor(frac);
        if abs(a) > 9.0e15 {
            return None;
        }
        let a = a as i64;
        let p2 = a.checked_mul(p1)?.checked_add(p0)?;
        let q2 = a.checked_mul(q1)?.checked_add(q0)?;
        if q2 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if abs(x - p1 as f64 / q1 as f64) <= tol {
            return Some((p1, q1));
        }
        let rem = frac - a as f64;
        if rem < 1e-15 {
            break;
        }
        frac = 1.0 / rem;
    }
    if q1 > 0 && abs(x - p1 as f64 / q1 as f64) <= tol {
        Some((p1, q1))
    } else {
        None
    }
}

/// Convert an integer matrix to `f64`.
pub fn to_real(m: &DMatrix<i64>) -> DMatrix<f64> {
    m.map(|x| x as f64)
}

/// Convert an integer matrix to complex entries.
pub fn to_complex(m: &DMatrix<i64>) -> DMatrix<Complex64> {
    m.map(|x| Complex64::new(x as f64, 0.0))
}

/// Eigenvalues of a real symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> alloc::vec::Vec<f64> {
    let eig = nalgebra::SymmetricEigen::new(m.clone());
    let mut vals: alloc::vec::Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.total_cmp(b));
    vals
}
