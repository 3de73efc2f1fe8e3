use alloc::vec::Vec;

use super::fusion::FusionRing;
use super::modular::{central_charge_from_twists, unitarity_residual, Family, ModularData, UNITARITY_TOL};
use crate::error::{Error, Result};
use crate::math::{abs, cabs, max_abs, nearest_integer, Complex64};
use crate::{Check, ComplexMatrix};

/// Rounding residual accepted when turning Verlinde sums into integers.
pub const FUSION_ROUNDING_TOL: f64 = 1e-6;

/// Modular data from a fusion ring, twists and dimensions.
///
/// `Y_{λ,μ} = Σ_ν (ω_λ ω_μ / ω_ν) N_{λ,μ}^ν d_ν` and `S = Y / |z|` with
/// `z = Σ_ν ω_ν d_ν²`; for a non-degenerate braiding `|z| = √w`.
pub fn modular_data_from_twists(
    ring: &FusionRing,
    twists: &[Complex64],
    dims: &[f64],
) -> Result<ModularData> {
    let l = ring.rank();
    if twists.len() != l {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: twists.len(),
        });
    }
    if dims.len() != l {
        return Err(Error::ShapeMismatch {
            expected: l,
            found: dims.len(),
        });
    }
    for (i, w) in twists.iter().enumerate() {
        let m = cabs(*w);
        if abs(m - 1.0) > 1e-9 {
            return Err(Error::NonUnimodularTwist { index: i, modulus: m });
        }
    }
    if dims.iter().any(|d| *d <= 0.0) {
        return Err(Error::NotADimensionFunction(f64::INFINITY));
    }
    let residual = ring.dimension_residual(dims);
    if residual > 1e-9 {
        return Err(Error::NotADimensionFunction(residual));
    }
    let y = ComplexMatrix::from_fn(l, l, |a, b| {
        (0..l)
            .filter(|&c| ring.coeff(a, b, c) != 0)
            .map(|c| twists[a] * twists[b] / twists[c] * (ring.coeff(a, b, c) as f64 * dims[c]))
            .sum()
    });
    let z: Complex64 = twists.iter().zip(dims).map(|(w, d)| w * (d * d)).sum();
    let norm = Complex64::new(cabs(z), 0.0);
    let s = y.map(|v| v / norm);
    let c = central_charge_from_twists(twists, dims);
    Ok(ModularData::assemble(
        Family::Custom,
        ring.labels().to_vec(),
        s,
        twists.to_vec(),
        dims.to_vec(),
        c,
        ring.dual().to_vec(),
    ))
}

/// Fusion rules from the Verlinde formula
/// `N_{λ,μ}^ν = Σ_ρ S_{ρλ} S_{ρμ} conj(S_{ρν}) / S_{ρ0}`.
pub fn verlinde_fusion(md: &ModularData) -> Result<FusionRing> {
    let residual = unitarity_residual(md.s());
    if residual >= UNITARITY_TOL {
        return Err(Error::Degenerate(residual));
    }
    let l = md.rank();
    let s = md.s();
    // S_{ρλ} / S_{ρ0}, the characters at ρ.
    let ratio = ComplexMatrix::from_fn(l, l, |rho, lam| s[(rho, lam)] / s[(rho, 0)]);
    let mut coeffs = Vec::with_capacity(l * l * l);
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                let v: Complex64 = (0..l)
                    .map(|r| ratio[(r, a)] * s[(r, b)] * s[(r, c)].conj())
                    .sum();
                let (n, res) = nearest_integer(v.re);
                if res > FUSION_ROUNDING_TOL || abs(v.im) > FUSION_ROUNDING_TOL || n < 0 {
                    return Err(Error::NonIntegralFusion { a, b, c, value: v.re });
                }
                coeffs.push(n as u32);
            }
        }
    }
    FusionRing::new(md.labels().to_vec(), coeffs, md.dual().to_vec())
}

/// Residual-carrying checks of the modular relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularCheck {
    pub s_symmetric: Check,
    pub s_unitary: Check,
    /// `(ST)³ = S²`
    pub st_cubed: Check,
    /// `S² = C`, the permutation matrix of the conjugation.
    pub s_squared_conjugation: Check,
    pub s_fourth_identity: Check,
    /// `S_{0,λ} > 0` real and `S_{λ,0} >= S_{0,0}`.
    pub first_row_positive: Check,
}

impl ModularCheck {
    pub fn all_passed(&self) -> bool {
        self.s_symmetric.passed
            && self.s_unitary.passed
            && self.st_cubed.passed
            && self.s_squared_conjugation.passed
            && self.s_fourth_identity.passed
            && self.first_row_positive.passed
    }
}

/// Tolerance used by [`check_modular`].
pub const MODULAR_TOL: f64 = 1e-9;

pub fn check_modular(md: &ModularData) -> ModularCheck {
    let l = md.rank();
    let s = md.s();
    let t = md.t_matrix();
    let id = ComplexMatrix::identity(l, l);
    let s2 = s * s;
    let st = s * &t;
    let st3 = &st * &st * &st;
    let conj = ComplexMatrix::from_fn(l, l, |a, b| {
        if md.dual()[a] == b {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let s00 = s[(0, 0)].re;
    let mut positivity: f64 = 0.0;
    for a in 0..l {
        let z = s[(0, a)];
        positivity = positivity.max(abs(z.im));
        if z.re <= 0.0 {
            positivity = positivity.max(1.0 - z.re);
        }
        if z.re < s00 {
            positivity = positivity.max(s00 - z.re);
        }
    }
    ModularCheck {
        s_symmetric: Check::within(max_abs(&(s - s.transpose())), MODULAR_TOL),
        s_unitary: Check::within(unitarity_residual(s), MODULAR_TOL),
        st_cubed: Check::within(max_abs(&(st3 - &s2)), MODULAR_TOL),
        s_squared_conjugation: Check::within(max_abs(&(&s2 - conj)), MODULAR_TOL),
        s_fourth_identity: Check::within(max_abs(&(&s2 * &s2 - id)), MODULAR_TOL),
        first_row_positive: Check::within(positivity, MODULAR_TOL),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtc::{
        cyclic_group_dual, cyclic_group_ring, ising_fusion_ring, ising_modular_data, ising_twists,
        su2_fusion_closed_form, su2_modular_data, Label,
    };
    use alloc::vec;

    #[test]
    fn su2_level10_checks_pass() {
        let c = check_modular(&su2_modular_data(10).unwrap());
        assert!(c.all_passed(), "{c:?}");
        assert!(c.st_cubed.residual < 1e-10);
        assert!(c.s_unitary.residual < 1e-10);
    }

    #[test]
    fn ising_checks_pass() {
        let c = check_modular(&ising_modular_data());
        assert!(c.all_passed(), "{c:?}");
    }

    #[test]
    fn group_dual_fails_unitarity() {
        let md = cyclic_group_dual(4).unwrap();
        let c = check_modular(&md);
        assert!(!c.s_unitary.passed);
        assert!(!c.all_passed());
        assert!(matches!(verlinde_fusion(&md), Err(Error::Degenerate(_))));
    }

    #[test]
    fn ising_from_twists_matches_closed_form() {
        let ring = ising_fusion_ring();
        let dims = [1.0, 1.0, core::f64::consts::SQRT_2];
        let md = modular_data_from_twists(&ring, &ising_twists(), &dims).unwrap();
        let reference = ising_modular_data();
        assert!(max_abs(&(md.s() - reference.s())) < 1e-12);
        assert!(cabs(md.s()[(2, 2)]) < 1e-12);
        assert!(abs(md.central_charge() - 0.5) < 1e-12);
        assert!(!md.is_degenerate());
    }

    #[test]
    fn trivial_ring_from_twists() {
        let ring = FusionRing::new(vec![Label::new(0, "0")], vec![1], vec![0]).unwrap();
        let md = modular_data_from_twists(&ring, &[Complex64::new(1.0, 0.0)], &[1.0]).unwrap();
        assert!(cabs(md.s()[(0, 0)] - Complex64::new(1.0, 0.0)) < 1e-15);
        assert!(cabs(md.t()[0] - Complex64::new(1.0, 0.0)) < 1e-15);
        assert_eq!(md.global_index(), 1.0);
        assert_eq!(md.central_charge(), 0.0);
    }

    #[test]
    fn group_dual_s_is_rank_one() {
        let ring = cyclic_group_ring(5).unwrap();
        let md = modular_data_from_twists(&ring, &[Complex64::new(1.0, 0.0); 5], &[1.0; 5]).unwrap();
        assert!(md.is_degenerate());
        for a in 0..5 {
            for b in 0..5 {
                assert!(abs(md.s()[(a, b)].re - 0.2) < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_non_dimension_function() {
        let ring = ising_fusion_ring();
        let err = modular_data_from_twists(&ring, &ising_twists(), &[1.0, 1.0, 1.5]).unwrap_err();
        assert!(matches!(err, Error::NotADimensionFunction(_)));
    }

    #[test]
    fn su2_from_twists_reproduces_kac_peterson() {
        for k in 1..=16 {
            let md = su2_modular_data(k).unwrap();
            let ring = su2_fusion_closed_form(k).unwrap();
            let rebuilt = modular_data_from_twists(&ring, md.twists(), md.dims()).unwrap();
            assert!(max_abs(&(rebuilt.s() - md.s())) < 1e-9, "k={k}");
        }
    }

    #[test]
    fn verlinde_ising() {
        let ring = verlinde_fusion(&ising_modular_data()).unwrap();
        assert_eq!(ring, ising_fusion_ring());
    }

    #[test]
    fn verlinde_su2_level4_spin1_row() {
        let ring = verlinde_fusion(&su2_modular_data(4).unwrap()).unwrap();
        let row: Vec<u32> = (0..5).map(|c| ring.coeff(1, 1, c)).collect();
        assert_eq!(row, vec![1, 0, 1, 0, 0]);
    }
}
