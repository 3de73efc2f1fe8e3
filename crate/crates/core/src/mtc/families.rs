//! Built-in families: SU(2)_k, SU(n)_k, Ising and cyclic group duals.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};

use super::fusion::{FusionRing, Label};
use super::modular::{central_charge_from_twists, normalized_dims, Family, ModularData};
use super::verlinde::modular_data_from_twists;
use crate::error::{Error, Result};
use crate::math::{cabs, cis, phase, sin, sqrt, Complex64};
use crate::ComplexMatrix;

/// Largest SU(2) level accepted.
pub const SU2_MAX_LEVEL: usize = 64;

fn check_su2_level(k: usize) -> Result<()> {
    if k == 0 || k > SU2_MAX_LEVEL {
        return Err(Error::LevelOutOfRange {
            level: k,
            max: SU2_MAX_LEVEL,
        });
    }
    Ok(())
}

fn spin_labels(k: usize) -> Vec<Label> {
    (0..=k).map(|j| Label::new(j, format!("{j}"))).collect()
}

/// Conformal weight `h_j = j(j+2)/(4k+8)` of SU(2)_k.
pub fn su2_conformal_weight(k: usize, j: usize) -> f64 {
    (j * (j + 2)) as f64 / (4 * k + 8) as f64
}

/// Kac–Peterson modular data of SU(2)_k, labels `j = 0..=k`.
pub fn su2_modular_data(k: usize) -> Result<ModularData> {
    check_su2_level(k)?;
    let n = (k + 2) as f64;
    let norm = sqrt(2.0 / n);
    let s = ComplexMatrix::from_fn(k + 1, k + 1, |a, b| {
        Complex64::new(norm * sin(PI * ((a + 1) * (b + 1)) as f64 / n), 0.0)
    });
    let twists: Vec<Complex64> = (0..=k).map(|j| phase(su2_conformal_weight(k, j))).collect();
    let dims = normalized_dims(&s);
    let c = central_charge_from_twists(&twists, &dims);
    let mut md = ModularData::assemble(
        Family::Su { rank: 2, level: k },
        spin_labels(k),
        s,
        twists,
        dims,
        c,
        (0..=k).collect(),
    );
    // T from its closed form; agrees with e^{-iπc/12} ω_j.
    let t: Vec<Complex64> = (0..=k)
        .map(|j| {
            let jj = ((j + 1) * (j + 1)) as f64;
            cis(PI * jj / (2.0 * n) - PI / 4.0)
        })
        .collect();
    md.replace_t(t);
    Ok(md)
}

/// SU(2)_k fusion rules from the closed form
/// `|j-j'| <= j'' <= min(j+j', 2k-j-j')`, `j+j'+j''` even.
pub fn su2_fusion_closed_form(k: usize) -> Result<FusionRing> {
    check_su2_level(k)?;
    Ok(su2_fusion_any_level(k))
}

pub(crate) fn su2_fusion_any_level(k: usize) -> FusionRing {
    FusionRing::from_fn(spin_labels(k), (0..=k).collect(), |a, b, c| {
        let lo = a.abs_diff(b);
        let hi = (a + b).min(2 * k - a - b);
        u32::from(lo <= c && c <= hi && (a + b + c) % 2 == 0)
    })
    .expect("closed-form ring is well formed")
}

/// Largest level accepted for SU(n), n = 2, 3, 4.
pub fn sun_max_level(n: usize) -> Option<usize> {
    match n {
        2 => Some(SU2_MAX_LEVEL),
        3 => Some(24),
        4 => Some(12),
        _ => None,
    }
}

/// Integrable weights of SU(n)_k as partitions `(λ_1 >= ... >= λ_{n-1} >= 0)`
/// with `λ_1 <= k`, ordered lexicographically (vacuum first).
///
/// The Dynkin labels of `(λ_1, ..., λ_{n-1})` are `(λ_1-λ_2, ..., λ_{n-2}-λ_{n-1}, λ_{n-1})`;
/// for SU(3) the pair `(m, n)` has Dynkin labels `(m-n, n)`.
pub fn sun_weights(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            rec(parts, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut cur = Vec::new();
    rec(n - 1, k, &mut cur, &mut out);
    // rec enumerates with each part bounded by the previous; sort for a
    // lexicographic order on the tuples.
    out.sort();
    out
}

fn weight_display(w: &[usize]) -> String {
    if w.len() == 1 {
        return format!("{}", w[0]);
    }
    let parts: Vec<String> = w.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(","))
}

/// Orthogonal-basis inner product on the sum-zero hyperplane.
fn inner(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>() - sx * sy / n
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(items: &mut Vec<usize>, k: usize, sign: i32, out: &mut Vec<(Vec<usize>, i32)>) {
        if k == items.len() {
            out.push((items.clone(), sign));
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, if i == k { sign } else { -sign }, out);
            items.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), 0, 1, &mut out);
    out
}

/// Kac–Peterson modular data of SU(n)_k via the Weyl alternating sum.
pub fn sun_modular_data(n: usize, k: usize) -> Result<ModularData> {
    let max = sun_max_level(n).ok_or(Error::UnsupportedRank(n))?;
    if k == 0 || k > max {
        return Err(Error::LevelOutOfRange { level: k, max });
    }
    let weights = sun_weights(n, k);
    let l = weights.len();
    let kn = (k + n) as f64;
    // full n-coordinates of λ + ρ
    let shifted: Vec<Vec<f64>> = weights
        .iter()
        .map(|w| {
            (0..n)
                .map(|i| {
                    let part = if i < n - 1 { w[i] } else { 0 };
                    (part + (n - 1 - i)) as f64
                })
                .collect()
        })
        .collect();
    let perms = permutations(n);
    let mut raw = ComplexMatrix::zeros(l, l);
    for a in 0..l {
        for b in a..l {
            let mut acc = Complex64::new(0.0, 0.0);
            for (p, sign) in &perms {
                let moved: Vec<f64> = p.iter().map(|&i| shifted[a][i]).collect();
                acc += cis(-2.0 * PI * inner(&moved, &shifted[b]) / kn) * (*sign as f64);
            }
            raw[(a, b)] = acc;
            raw[(b, a)] = acc;
        }
    }
    let norm: f64 = sqrt((0..l).map(|b| raw[(0, b)].norm_sqr()).sum());
    let fix = raw[(0, 0)].conj() / cabs(raw[(0, 0)]) / norm;
    let s = raw.map(|z| z * fix);

    let rho: Vec<f64> = (0..n).map(|i| (n - 1 - i) as f64).collect();
    let twists: Vec<Complex64> = weights
        .iter()
        .map(|w| {
            let lam: Vec<f64> = (0..n)
                .map(|i| if i < n - 1 { w[i] as f64 } else { 0.0 })
                .collect();
            let lam2rho: Vec<f64> = lam.iter().zip(&rho).map(|(x, r)| x + 2.0 * r).collect();
            phase(inner(&lam, &lam2rho) / (2.0 * kn))
        })
        .collect();
    let c = (k * (n * n - 1)) as f64 / kn;
    let dual: Vec<usize> = weights
        .iter()
        .map(|w| {
            let full: Vec<usize> = (0..n).map(|i| if i < n - 1 { w[i] } else { 0 }).collect();
            let conj: Vec<usize> = (0..n - 1).map(|i| full[0] - full[n - 1 - i]).collect();
            weights.iter().position(|x| *x == conj).expect("conjugate weight is integrable")
        })
        .collect();
    let labels = weights
        .iter()
        .enumerate()
        .map(|(i, w)| Label::new(i, weight_display(w)))
        .collect();
    let dims = normalized_dims(&s);
    Ok(ModularData::assemble(
        Family::Su { rank: n, level: k },
        labels,
        s,
        twists,
        dims,
        c,
        dual,
    ))
}

fn ising_labels() -> Vec<Label> {
    vec![
        Label::new(0, "id"),
        Label::new(1, "eta"),
        Label::new(2, "sigma"),
    ]
}

/// Ising fusion rules: `η² = id`, `ησ = σ`, `σ² = id + η`.
pub fn ising_fusion_ring() -> FusionRing {
    const TABLE: [[[u32; 3]; 3]; 3] = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[0, 0, 1], [0, 0, 1], [1, 1, 0]],
    ];
    FusionRing::from_fn(ising_labels(), vec![0, 1, 2], |a, b, c| TABLE[a][b][c])
        .expect("Ising table is well formed")
}

/// Twists of the Ising model: `(1, -1, e^{iπ/8})`.
pub fn ising_twists() -> Vec<Complex64> {
    vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        cis(PI / 8.0),
    ]
}

/// Ising modular data from its closed-form S-matrix.
pub fn ising_modular_data() -> ModularData {
    let h = 0.5;
    let r = SQRT_2 / 2.0;
    let s = nalgebra::DMatrix::<f64>::from_row_slice(
        3,
        3,
        &[
            h, h, r, //
            h, h, -r, //
            r, -r, 0.0,
        ],
    )
    .map(|x| Complex64::new(x, 0.0));
    let twists = ising_twists();
    let dims = vec![1.0, 1.0, SQRT_2];
    ModularData::assemble(Family::Ising, ising_labels(), s, twists, dims, 0.5, vec![0, 1, 2])
}

/// Group ring of the character group of `Z_n`.
pub fn cyclic_group_ring(order: usize) -> Result<FusionRing> {
    if order == 0 {
        return Err(Error::EmptyGroup);
    }
    let labels = (0..order).map(|i| Label::new(i, format!("{i}"))).collect();
    let dual = (0..order).map(|i| (order - i) % order).collect();
    FusionRing::from_fn(labels, dual, |a, b, c| u32::from((a + b) % order == c))
}

/// Dual of the cyclic group `Z_n` with trivial twists: a completely
/// degenerate braiding whose S-matrix is the rank-one projection
/// `d_λ d_μ / n`.
pub fn cyclic_group_dual(order: usize) -> Result<ModularData> {
    let ring = cyclic_group_ring(order)?;
    let twists = vec![Complex64::new(1.0, 0.0); order];
    let dims = vec![1.0; order];
    let mut md = modular_data_from_twists(&ring, &twists, &dims)?;
    md.set_family(Family::CyclicGroup { order });
    Ok(md)
}
