use std::f64::consts::PI;

use modinv_core::modinv::{su2_ade_catalog, su2_named_invariant};
use modinv_core::mtc::{su2_fusion_closed_form, su2_modular_data};
use modinv_core::nimrep::*;
use modinv_core::IntMatrix;

fn all_graphs(hmax: usize) -> Vec<AdeGraph> {
    let mut kinds = Vec::new();
    for n in 2..hmax {
        kinds.push(AdeKind::A(n));
    }
    for n in 4..=(hmax + 2) / 2 {
        kinds.push(AdeKind::D(n));
    }
    kinds.extend([AdeKind::E6, AdeKind::E7, AdeKind::E8]);
    kinds.into_iter().filter(|k| k.coxeter() <= hmax).map(ade_graph_of).collect()
}

fn eigenvalues(m: &IntMatrix) -> Vec<f64> {
    let f = m.map(|x| x as f64);
    let mut e: Vec<f64> = nalgebra::SymmetricEigen::new(f).eigenvalues.iter().copied().collect();
    e.sort_by(|a, b| b.total_cmp(a));
    e
}

#[test]
fn adjacency_spectrum_is_exponents() {
    for g in all_graphs(30) {
        let h = g.coxeter as f64;
        let mut expected: Vec<f64> =
            g.exponents.iter().map(|&m| 2.0 * (PI * (m as f64 + 1.0) / h).cos()).collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        let found = eigenvalues(&g.adjacency);
        for (a, b) in found.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-9, "{}", g.name());
        }
        let mut oracle = exponent_eigenvalues(&g);
        oracle.sort_by(|a, b| b.total_cmp(a));
        assert_eq!(oracle.len(), expected.len());
    }
}

#[test]
fn adjacency_is_symmetric_tree() {
    for g in all_graphs(30) {
        let a = &g.adjacency;
        let v = g.vertices();
        assert_eq!(a, &a.transpose());
        assert!(a.iter().all(|x| *x == 0 || *x == 1));
        let edges: i64 = a.iter().sum::<i64>() / 2;
        assert_eq!(edges as usize, v - 1, "{}", g.name());
        for i in 0..v {
            for j in 0..v {
                if a[(i, j)] == 1 {
                    assert_ne!(g.is_even(i), g.is_even(j));
                }
            }
        }
    }
}

#[test]
fn fused_family_properties() {
    for g in all_graphs(30) {
        let fam = fused_adjacencies(&g).unwrap();
        assert_eq!(fam.g.len(), fam.level() + 1);
        for (j, gj) in fam.g.iter().enumerate() {
            assert_eq!(gj, &gj.transpose(), "{} G{j}", g.name());
            assert!(gj.iter().all(|x| *x >= 0));
            for gi in &fam.g {
                assert_eq!(gi * gj, gj * gi);
            }
        }
        // G_a G_b = Σ N_ab^c G_c
        let ring = su2_fusion_closed_form(fam.level()).unwrap();
        let l = fam.g.len();
        for a in 0..l {
            for b in 0..l {
                let mut rhs = IntMatrix::zeros(g.vertices(), g.vertices());
                for c in 0..l {
                    rhs += &fam.g[c] * ring.coeff(a, b, c) as i64;
                }
                assert_eq!(&fam.g[a] * &fam.g[b], rhs);
            }
        }
    }
}

#[test]
fn a_series_reproduces_fusion_matrices() {
    for k in 1..=20 {
        let fam = fused_adjacencies(&ade_graph_of(AdeKind::A(k + 1))).unwrap();
        let ring = su2_fusion_closed_form(k).unwrap();
        for j in 0..=k {
            assert_eq!(fam.g[j], ring.fusion_matrix(j), "k={k} j={j}");
        }
    }
    let a5 = ade_graph("A5").unwrap();
    assert_eq!(a5.adjacency, su2_fusion_closed_form(4).unwrap().fusion_matrix(1));
}

#[test]
fn e7_top_matrix_is_identity() {
    let fam = fused_adjacencies(&ade_graph("E7").unwrap()).unwrap();
    let top = &fam.g[16];
    assert_eq!(top, &IntMatrix::identity(7, 7));
    assert_eq!(top * top, IntMatrix::identity(7, 7));
    // permutation fixing every vertex, the fork included
    for r in 0..7 {
        assert_eq!(top.row(r).iter().sum::<i64>(), 1);
    }
}

#[test]
fn d_series_top_matrix_swaps_fork() {
    for n in [5usize, 6, 7, 10] {
        let fam = fused_adjacencies(&ade_graph_of(AdeKind::D(n))).unwrap();
        let top = fam.g.last().unwrap();
        assert_eq!(top * top, IntMatrix::identity(n, n));
        let swaps = n % 2 == 1;
        assert_eq!(top[(n - 2, n - 1)] == 1, swaps, "D{n}");
    }
}

#[test]
fn d5_exponents() {
    assert_eq!(AdeKind::D(5).exponents(), vec![0, 2, 3, 4, 6]);
    assert_eq!(AdeKind::D(4).exponents(), vec![0, 2, 2, 4]);
    assert_eq!(AdeKind::E6.exponents(), vec![0, 3, 4, 6, 7, 10]);
    assert_eq!(AdeKind::E7.exponents(), vec![0, 4, 6, 8, 10, 12, 16]);
    assert_eq!(AdeKind::E8.exponents(), vec![0, 6, 10, 12, 16, 18, 22, 28]);
}

#[test]
fn parse_names() {
    assert_eq!(AdeKind::parse("D_10").unwrap(), AdeKind::D(10));
    assert_eq!(AdeKind::parse("e7").unwrap(), AdeKind::E7);
    assert_eq!(AdeKind::parse("A1").unwrap(), AdeKind::A(1));
    for bad in ["D3", "A0", "E9", "", "X4", "D"] {
        assert!(AdeKind::parse(bad).is_err(), "{bad}");
    }
    for kind in [AdeKind::A(5), AdeKind::D(10), AdeKind::E7] {
        assert_eq!(AdeKind::parse(&kind.to_string()).unwrap(), kind);
    }
}

#[test]
fn spectra_match_diagonals_for_catalog() {
    for k in 1..=28 {
        let md = su2_modular_data(k).unwrap();
        for entry in su2_ade_catalog(k).unwrap().entries {
            let fam = fused_adjacencies(&ade_graph_of(entry.kind)).unwrap();
            let report = spectrum_vs_diagonal(&fam, &md, &entry.z).unwrap();
            assert!(report.passed, "{}", entry.kind);
            assert_eq!(report.per_nu.len(), k + 1);
            for nu in &report.per_nu {
                assert_eq!(nu.entries.len(), fam.graph.vertices());
                assert!(nu.entries.iter().all(|e| e.multiplicity >= 1));
                assert!(nu.entries.iter().all(|e| e.matched.is_some() && e.gap < SPECTRUM_TOL));
            }
        }
    }
}

#[test]
fn mismatched_pair_fails() {
    let md = su2_modular_data(16).unwrap();
    let fam = fused_adjacencies(&ade_graph("E7").unwrap()).unwrap();
    let z = su2_named_invariant(AdeKind::D(10));
    let report = spectrum_vs_diagonal(&fam, &md, &z).unwrap();
    assert!(!report.passed);
}
