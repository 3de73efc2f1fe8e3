use std::f64::consts::PI;

use modinv_core::mtc::*;
use modinv_core::Complex64;

/// Closed-form SU(2)_k fusion coefficient, written out independently.
fn su2_n(k: usize, a: usize, b: usize, c: usize) -> u32 {
    let lo = a.abs_diff(b);
    let hi = (a + b).min(2 * k - a - b);
    u32::from(c >= lo && c <= hi && (a + b + c).is_multiple_of(2))
}

#[test]
fn closed_form_matches_inequalities() {
    for k in 1..=12 {
        let ring = su2_fusion_closed_form(k).unwrap();
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    assert_eq!(ring.coeff(a, b, c), su2_n(k, a, b, c), "k={k} ({a},{b},{c})");
                }
            }
        }
    }
}

#[test]
fn level16_spin8_square_contains_ends() {
    let ring = su2_fusion_closed_form(16).unwrap();
    assert_eq!(ring.coeff(8, 8, 0), 1);
    assert_eq!(ring.coeff(8, 8, 16), 1);
}

#[test]
fn level4_spin_half_square() {
    let ring = su2_fusion_closed_form(4).unwrap();
    let row: Vec<u32> = (0..5).map(|c| ring.coeff(1, 1, c)).collect();
    assert_eq!(row, vec![1, 0, 1, 0, 0]);
}

#[test]
fn verlinde_matches_closed_form_through_level_32() {
    for k in 1..=32 {
        let md = su2_modular_data(k).unwrap();
        assert_eq!(verlinde_fusion(&md).unwrap(), su2_fusion_closed_form(k).unwrap(), "k={k}");
    }
}

#[test]
fn kac_peterson_entries() {
    for k in [1usize, 5, 16, 40] {
        let md = su2_modular_data(k).unwrap();
        let n = (k + 2) as f64;
        for a in 0..=k {
            for b in 0..=k {
                let expected = (2.0 / n).sqrt() * (PI * ((a + 1) * (b + 1)) as f64 / n).sin();
                assert!((md.s()[(a, b)].re - expected).abs() < 1e-13);
                assert!(md.s()[(a, b)].im.abs() < 1e-15);
            }
        }
        assert!(md.s()[(0, 0)].re > 0.0);
        for a in 0..=k {
            assert!(md.s()[(a, 0)].re >= md.s()[(0, 0)].re - 1e-15);
        }
    }
}

#[test]
fn level2_dimension_of_spin_half() {
    let md = su2_modular_data(2).unwrap();
    let expected = (2.0 * PI / 4.0).sin() / (PI / 4.0).sin();
    assert!((md.dims()[1] - expected).abs() < 1e-14);
    assert!((md.dims()[1] - 2f64.sqrt()).abs() < 1e-14);
}

#[test]
fn level16_twist_of_spin8() {
    let md = su2_modular_data(16).unwrap();
    assert!((su2_conformal_weight(16, 8) - 10.0 / 9.0).abs() < 1e-15);
    let c = md.central_charge();
    assert!((c - 3.0 * 16.0 / 18.0).abs() < 1e-12);
    let angle = 2.0 * PI * 10.0 / 9.0 - PI * c / 12.0;
    let expected = Complex64::new(angle.cos(), angle.sin());
    assert!((md.t()[8] - expected).norm() < 1e-12);
}

#[test]
fn simple_current_symmetry() {
    for k in 1..=16 {
        let md = su2_modular_data(k).unwrap();
        let ring = su2_fusion_closed_form(k).unwrap();
        for j in 0..=k {
            assert!((md.dims()[j] - md.dims()[k - j]).abs() < 1e-12);
        }
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    assert_eq!(ring.coeff(a, b, c), ring.coeff(k - a, k - b, c), "k={k}");
                }
            }
        }
    }
}

#[test]
fn built_in_rings_satisfy_axioms() {
    let mut rings = vec![ising_fusion_ring(), verlinde_fusion(&ising_modular_data()).unwrap()];
    for k in [1, 7, 16] {
        rings.push(verlinde_fusion(&su2_modular_data(k).unwrap()).unwrap());
    }
    for k in [1, 3, 5] {
        rings.push(verlinde_fusion(&sun_modular_data(3, k).unwrap()).unwrap());
    }
    rings.push(verlinde_fusion(&sun_modular_data(4, 2).unwrap()).unwrap());
    for n in [1, 4, 7] {
        rings.push(cyclic_group_ring(n).unwrap());
    }
    for ring in &rings {
        let ax = ring.check_axioms();
        assert!(ax.all(), "{:?}: {ax:?}", ring.labels());
    }
    for k in [1, 3, 5] {
        let md = sun_modular_data(3, k).unwrap();
        let ring = verlinde_fusion(&md).unwrap();
        assert!(ring.dimension_residual(md.dims()) < 1e-9);
        assert_eq!(ring.dual(), md.dual());
    }
}

#[test]
fn modular_relations_hold() {
    let mut all: Vec<ModularData> = (1..=32).map(|k| su2_modular_data(k).unwrap()).collect();
    all.push(sun_modular_data(3, 3).unwrap());
    all.push(sun_modular_data(3, 5).unwrap());
    all.push(ising_modular_data());
    for md in &all {
        let c = check_modular(md);
        assert!(c.all_passed(), "{:?}: {c:?}", md.family());
    }
}

/// Number of pairs `k >= m >= n >= 0`.
fn su3_label_count(k: usize) -> usize {
    (0..=k).map(|m| m + 1).sum()
}

#[test]
fn su3_level3_data() {
    let md = sun_modular_data(3, 3).unwrap();
    assert_eq!(md.rank(), su3_label_count(3));
    assert_eq!(md.rank(), 10);
    assert!((md.global_index() - 36.0).abs() < 1e-9);
    let i = md.label_index("(2,1)").unwrap();
    assert_eq!(md.dual()[i], i);
    let a = md.label_index("(3,0)").unwrap();
    let b = md.label_index("(3,3)").unwrap();
    assert_eq!(md.dual()[a], b);
    assert!((md.dims()[a] - 1.0).abs() < 1e-12);
}

#[test]
fn su3_central_charge_and_weights() {
    for k in 1..=6 {
        let md = sun_modular_data(3, k).unwrap();
        assert_eq!(md.rank(), su3_label_count(k));
        let c = 8.0 * k as f64 / (k + 3) as f64;
        assert!((md.central_charge() - c).abs() < 1e-9, "k={k}");
        // h(1,0) = 4/(3(k+3)), from (Λ, Λ+2ρ) = 8/3 for the fundamental.
        let f = md.label_index("(1,0)").unwrap();
        let h = 4.0 / (3.0 * (k + 3) as f64);
        let w = Complex64::new((2.0 * PI * h).cos(), (2.0 * PI * h).sin());
        assert!((md.twists()[f] - w).norm() < 1e-12);
    }
}

#[test]
fn sun_rank_two_is_su2() {
    for k in 1..=20 {
        let a = sun_modular_data(2, k).unwrap();
        let b = su2_modular_data(k).unwrap();
        let gap = (a.s() - b.s()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(gap < 1e-12, "k={k}");
    }
    assert!(matches!(sun_modular_data(5, 1), Err(modinv_core::Error::UnsupportedRank(5))));
}

#[test]
fn ising_values() {
    let md = ising_modular_data();
    assert!((md.global_index() - 4.0).abs() < 1e-14);
    assert!((md.dims()[2] - 2f64.sqrt()).abs() < 1e-14);
    let z = Complex64::new(1.0, 0.0) - 1.0 + Complex64::from_polar(2.0, PI / 8.0);
    let c = 4.0 * z.arg() / PI;
    assert!((c - 0.5).abs() < 1e-14);
    assert!((md.central_charge() - c).abs() < 1e-14);
    let ring = verlinde_fusion(&md).unwrap();
    assert_eq!(ring.coeff(2, 2, 0), 1);
    assert_eq!(ring.coeff(2, 2, 1), 1);
    assert_eq!(ring.coeff(1, 1, 0), 1);
    assert_eq!(ring.coeff(1, 2, 2), 1);
}

#[test]
fn group_dual_is_degenerate_rank_one() {
    for n in 2..=6 {
        let md = cyclic_group_dual(n).unwrap();
        assert!(md.is_degenerate());
        for a in 0..n {
            for b in 0..n {
                assert!((md.s()[(a, b)].re - 1.0 / n as f64).abs() < 1e-12);
            }
        }
        let check = check_modular(&md);
        assert!(!check.s_unitary.passed);
        assert!(check.s_unitary.residual >= UNITARITY_TOL);
    }
    assert!(matches!(cyclic_group_dual(0), Err(modinv_core::Error::EmptyGroup)));
}

#[test]
fn unitarity_flag_agrees_with_check() {
    let cases = vec![
        su2_modular_data(9).unwrap(),
        ising_modular_data(),
        cyclic_group_dual(3).unwrap(),
        sun_modular_data(3, 2).unwrap(),
    ];
    for md in cases {
        let check = check_modular(&md);
        assert_eq!(!md.is_degenerate(), check.s_unitary.residual < 1e-9);
    }
}

#[test]
fn import_revalidates() {
    let md = sun_modular_data(3, 2).unwrap();
    let back = ModularData::from_s_and_t(
        md.family(),
        md.labels().to_vec(),
        md.s().clone(),
        md.t().to_vec(),
        md.central_charge(),
        None,
    )
    .unwrap();
    assert_eq!(back.dual(), md.dual());
    assert!((back.global_index() - md.global_index()).abs() < 1e-12);
    let mut bad = md.s().clone();
    bad[(0, 1)] += Complex64::new(0.1, 0.0);
    assert!(ModularData::from_s_and_t(
        md.family(),
        md.labels().to_vec(),
        bad,
        md.t().to_vec(),
        md.central_charge(),
        None
    )
    .is_err());
    assert!(ModularData::from_s_and_t(
        md.family(),
        md.labels().to_vec(),
        md.s().clone(),
        md.t().to_vec(),
        md.central_charge() + 1.0,
        None
    )
    .is_err());
}
