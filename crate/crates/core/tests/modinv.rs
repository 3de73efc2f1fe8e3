use modinv_core::modinv::*;
use modinv_core::mtc::*;
use modinv_core::nimrep::AdeKind;
use modinv_core::{Error, IntMatrix};

fn names(k: usize) -> Vec<String> {
    su2_ade_catalog(k).unwrap().entries.iter().map(|e| e.name()).collect()
}

#[test]
fn catalog_levels() {
    assert_eq!(names(3), ["A4"]);
    assert_eq!(names(4), ["A5", "D4"]);
    assert_eq!(names(10), ["A11", "D7", "E6"]);
    assert_eq!(names(16), ["A17", "D10", "E7"]);
    assert_eq!(names(28), ["A29", "D16", "E8"]);
}

#[test]
fn catalog_matches_closed_forms() {
    for k in 1..=32 {
        let cat = su2_ade_catalog(k).unwrap();
        assert!(cat.complete);
        let expected = AdeKind::at_level(k);
        let kinds: Vec<AdeKind> = cat.entries.iter().map(|e| e.kind).collect();
        assert_eq!(kinds, expected, "k={k}");
        for e in &cat.entries {
            assert_eq!(e.z, su2_named_invariant(e.kind), "{}", e.kind);
        }
    }
}

#[test]
fn enumerated_invariants_verify_and_respect_bound() {
    for k in 1..=32 {
        let md = su2_modular_data(k).unwrap();
        let ring = su2_fusion_closed_form(k).unwrap();
        let e = enumerate_invariants(&md, DEFAULT_BUDGET).unwrap();
        assert!(e.complete);
        for z in &e.invariants {
            let r = verify_invariant(&md, z).unwrap();
            assert!(r.all_passed(), "k={k}: {r:?}");
            let d = md.dims();
            for a in 0..=k {
                for b in 0..=k {
                    assert!(z.get(a, b) as f64 <= d[a] * d[b] + 1e-6);
                }
            }
            permutation_criterion(&ring, z).unwrap();
        }
    }
}

#[test]
fn global_index_bound_agrees() {
    for k in [2, 4, 8, 10, 16, 22] {
        let md = su2_modular_data(k).unwrap();
        let a = enumerate_invariants_with(&md, EntryBound::Dimension, DEFAULT_BUDGET).unwrap();
        let b = enumerate_invariants_with(&md, EntryBound::GlobalIndex, DEFAULT_BUDGET).unwrap();
        assert!(a.complete && b.complete);
        assert_eq!(a.invariants, b.invariants, "k={k}");
    }
}

#[test]
fn output_is_sorted_and_distinct() {
    let md = sun_modular_data(3, 5).unwrap();
    let e = enumerate_invariants(&md, DEFAULT_BUDGET).unwrap();
    assert!(e.invariants.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn ising_is_trivial() {
    let e = enumerate_invariants(&ising_modular_data(), DEFAULT_BUDGET).unwrap();
    assert_eq!(e.invariants, vec![MassMatrix::identity(3)]);
    assert!(e.complete);
}

#[test]
fn degenerate_data_rejected() {
    let md = cyclic_group_dual(4).unwrap();
    assert!(matches!(commutant_basis(&md), Err(Error::Degenerate(_))));
    assert!(matches!(
        enumerate_invariants(&md, DEFAULT_BUDGET),
        Err(Error::Degenerate(_))
    ));
}

#[test]
fn commutant_basis_elements_commute() {
    for md in [su2_modular_data(16).unwrap(), sun_modular_data(3, 3).unwrap()] {
        let b = commutant_basis(&md).unwrap();
        let l = md.rank();
        assert!(b.contains(&IntMatrix::identity(l, l)));
        let t = md.t_matrix();
        for m in b.basis() {
            let x = modinv_core::ComplexMatrix::from_fn(l, l, |i, j| {
                let r = m[(i, j)];
                modinv_core::Complex64::new(*r.numer() as f64 / *r.denom() as f64, 0.0)
            });
            let s = md.s();
            let rs = (s * &x - &x * s).iter().map(|z| z.norm()).fold(0.0, f64::max);
            let rt = (&t * &x - &x * &t).iter().map(|z| z.norm()).fold(0.0, f64::max);
            assert!(rs < 1e-8 && rt < 1e-8);
        }
        // reduced echelon: pivots strictly increase, pivot entries are 1
        assert!(b.pivots().windows(2).all(|w| w[0] < w[1]));
        for (i, &p) in b.pivots().iter().enumerate() {
            assert_eq!(b.numerators(i)[p], b.denominator());
            for (j, &q) in b.pivots().iter().enumerate() {
                if i != j {
                    assert_eq!(b.numerators(i)[q], 0);
                }
            }
        }
    }
}

#[test]
fn level4_d4_is_in_commutant() {
    let md = su2_modular_data(4).unwrap();
    let b = commutant_basis(&md).unwrap();
    assert!(b.dim() >= 2);
    let d4 = su2_named_invariant(AdeKind::D(4));
    assert!(b.contains(d4.matrix()));
    assert!(verify_invariant(&md, &d4).unwrap().all_passed());
}

#[test]
fn su3_named_invariants_found() {
    let named = su3_named_invariants();
    assert_eq!(named.len(), 2);
    for ni in &named {
        let md = sun_modular_data(3, ni.level).unwrap();
        let r = verify_invariant(&md, &ni.z).unwrap();
        assert!(r.all_passed(), "{}: {r:?}", ni.name);
        let e = enumerate_invariants(&md, DEFAULT_BUDGET).unwrap();
        assert!(e.complete);
        assert!(e.invariants.contains(&ni.z), "{}", ni.name);
        for z in &e.invariants {
            assert!(verify_invariant(&md, z).unwrap().all_passed());
        }
    }
    let d6 = &named[0];
    let w = sun_weights(3, 3);
    let at = |m: usize, n: usize| w.iter().position(|x| x[0] == m && x[1] == n).unwrap();
    assert_eq!(d6.z.get(at(2, 1), at(2, 1)), 3);
    assert_eq!(d6.z.sum_of_squares(), 18);
    assert!(d6.z.matrix().iter().all(|x| [0, 1, 3].contains(x)));
    let e8 = &named[1];
    let w = sun_weights(3, 5);
    let at = |m: usize, n: usize| w.iter().position(|x| x[0] == m && x[1] == n).unwrap();
    assert_eq!(e8.z.get(0, 0), 1);
    assert_eq!(e8.z.get(0, at(4, 2)), 1);
    assert_eq!(e8.z.sum_of_squares(), 24);
    assert!(e8.z.matrix().iter().all(|x| [0, 1].contains(x)));
}

#[test]
fn permutation_criterion_cases() {
    let ring = su2_fusion_closed_form(10).unwrap();
    let d7 = su2_named_invariant(AdeKind::D(7));
    let perm = permutation_criterion(&ring, &d7).unwrap().permutation.unwrap();
    for (j, &p) in perm.iter().enumerate() {
        assert_eq!(p, if j % 2 == 0 { j } else { 10 - j });
    }
    let e7 = su2_named_invariant(AdeKind::E7);
    assert_eq!(e7.get(0, 16), 1);
    assert_eq!(e7.get(16, 0), 1);
    let c = permutation_criterion(&su2_fusion_closed_form(16).unwrap(), &e7).unwrap();
    assert!(!c.vacuum_row && !c.vacuum_column && !c.is_permutation());
    let id = permutation_criterion(&ring, &MassMatrix::identity(11)).unwrap();
    assert_eq!(id.permutation.unwrap(), (0..11).collect::<Vec<_>>());
}

#[test]
fn permutation_criterion_flags_split() {
    // Z_{0,λ} = δ but not a permutation
    let ring = su2_fusion_closed_form(2).unwrap();
    let mut z = IntMatrix::identity(3, 3);
    z[(1, 1)] = 2;
    let z = MassMatrix::new(z).unwrap();
    assert!(matches!(permutation_criterion(&ring, &z), Err(Error::Inconsistent(_))));
}

#[test]
fn trace_identities_under_simple_current() {
    for k in [6usize, 10, 14, 18] {
        let md = su2_modular_data(k).unwrap();
        let ring = su2_fusion_closed_form(k).unwrap();
        let perm: Vec<usize> = (0..=k).map(|j| if j % 2 == 0 { j } else { k - j }).collect();
        assert!(ring.is_automorphism(&perm));
        for z in enumerate_invariants(&md, DEFAULT_BUDGET).unwrap().invariants {
            let moved = IntMatrix::from_fn(k + 1, k + 1, |a, b| z.get(perm[a], perm[b]));
            let moved = MassMatrix::new(moved).unwrap();
            assert_eq!(moved.trace(), z.trace());
            assert_eq!(moved.sum_of_squares(), z.sum_of_squares());
        }
    }
}

#[test]
fn level16_diagonals_differ() {
    let d10 = su2_named_invariant(AdeKind::D(10)).diagonal();
    let e7 = su2_named_invariant(AdeKind::E7).diagonal();
    assert_ne!(d10, e7);
}

#[test]
fn catalog_rejects_out_of_range() {
    assert!(su2_ade_catalog(0).is_err());
    assert!(su2_ade_catalog(33).is_err());
}

#[test]
fn budget_exhaustion_is_reported() {
    let md = su2_modular_data(28).unwrap();
    let e = enumerate_invariants(&md, 2).unwrap();
    assert!(!e.complete);
}
