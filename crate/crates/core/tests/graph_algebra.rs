use modinv_core::graph_algebra::*;
use modinv_core::mtc::su2_fusion_closed_form;
use modinv_core::nimrep::{ade_graph, ade_graph_of, fused_adjacencies, AdeKind};
use modinv_core::Complex64;
use proptest::prelude::*;

fn sample() -> Vec<AdeKind> {
    let mut out: Vec<AdeKind> = (2..=12).map(AdeKind::A).collect();
    out.extend((4..=10).map(AdeKind::D));
    out.extend([AdeKind::E6, AdeKind::E7, AdeKind::E8]);
    out
}

#[test]
fn gauge_diagonalizes_family() {
    for kind in sample() {
        let graph = ade_graph_of(kind);
        let gauge = eigen_gauge(&graph).unwrap();
        let fam = fused_adjacencies(&graph).unwrap();
        assert!(gauge.unitarity_residual() < 1e-10, "{kind}");
        assert!(gauge.diagonalization_residual(&fam) < 1e-8, "{kind}");
        for m in 0..graph.vertices() {
            let z = gauge.psi[(gauge.unit, m)];
            assert!(z.re > 0.0 && z.im.abs() < 1e-12);
        }
    }
}

#[test]
fn a_series_tensor_is_verlinde() {
    for n in 2..=14 {
        let fusion = graph_structure_constants(&eigen_gauge(&ade_graph_of(AdeKind::A(n))).unwrap()).unwrap();
        let ring = su2_fusion_closed_form(n - 1).unwrap();
        assert_eq!(fusion.unit, 0);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(fusion.rounded(a, b, c), ring.coeff(a, b, c) as i64);
                    assert!((fusion.value(a, b, c) - ring.coeff(a, b, c) as f64).abs() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn verdict_by_family() {
    for kind in sample() {
        let fusion = graph_structure_constants(&eigen_gauge(&ade_graph_of(kind)).unwrap()).unwrap();
        let expected = match kind {
            AdeKind::A(_) | AdeKind::E6 | AdeKind::E8 => Positivity::Positive,
            AdeKind::D(n) if n % 2 == 0 => Positivity::Positive,
            _ => Positivity::Negative,
        };
        assert_eq!(fusion.verdict, expected, "{kind}");
        if expected == Positivity::Positive {
            assert!(fusion.is_associative(), "{kind}");
            assert!(fusion.unit_is_identity(), "{kind}");
            assert!(fusion.rounded.iter().all(|x| *x >= 0));
            assert_eq!(fusion.worst_negative, 0.0);
        } else {
            assert!(fusion.worst_negative < -1e-3, "{kind}");
        }
    }
}

#[test]
fn negative_cases_have_minus_one() {
    for name in ["D5", "D7", "E7"] {
        let fusion = graph_structure_constants(&eigen_gauge(&ade_graph(name).unwrap()).unwrap()).unwrap();
        assert!(fusion.rounded.contains(&-1), "{name}");
        assert!((fusion.worst_negative + 1.0).abs() < 1e-8, "{name}");
    }
}

#[test]
fn dodd_unit_is_fork() {
    for n in [5usize, 7, 9] {
        let g = eigen_gauge(&ade_graph_of(AdeKind::D(n))).unwrap();
        assert_eq!(g.unit, n - 2);
    }
    for kind in [AdeKind::D(6), AdeKind::E6, AdeKind::E7, AdeKind::E8, AdeKind::A(7)] {
        assert_eq!(eigen_gauge(&ade_graph_of(kind)).unwrap().unit, 0);
    }
}

#[test]
fn report_rows() {
    let rows = positivity_report(&["A4", "D4", "D5", "E6", "E7", "E8"]).unwrap();
    let assoc: Vec<Option<bool>> = rows.iter().map(|r| r.associative).collect();
    assert_eq!(assoc, [Some(true), Some(true), None, Some(true), None, Some(true)]);
    assert!(positivity_report(&["Q3"]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn column_phases_do_not_change_constants(
        idx in 0usize..6,
        phases in proptest::collection::vec(0.0..std::f64::consts::TAU, 8),
    ) {
        let kind = [AdeKind::A(6), AdeKind::D(5), AdeKind::D(6), AdeKind::E6, AdeKind::E7, AdeKind::E8][idx];
        let gauge = eigen_gauge(&ade_graph_of(kind)).unwrap();
        let base = graph_structure_constants(&gauge).unwrap();
        let mut moved = gauge.clone();
        let v = moved.psi.ncols();
        for (m, &phase) in phases.iter().enumerate().take(v) {
            let p = Complex64::from_polar(1.0, phase);
            for r in 0..v {
                moved.psi[(r, m)] *= p;
            }
        }
        // raw sums, since the rotated unit row is no longer real
        let psi = &moved.psi;
        let u = moved.unit;
        for a in 0..v {
            for b in 0..v {
                for c in 0..v {
                    let z: Complex64 = (0..v)
                        .map(|m| psi[(a, m)] / psi[(u, m)] * psi[(b, m)] * psi[(c, m)].conj())
                        .sum();
                    prop_assert!((z.re - base.value(a, b, c)).abs() < 1e-9);
                    prop_assert!(z.im.abs() < 1e-9);
                }
            }
        }
    }
}
