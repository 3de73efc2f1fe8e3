//! Isomorphism of small multigraphs given by adjacency matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::nimrep::{ade_graph_of, AdeKind};
use crate::IntMatrix;

/// A vertex map `p` with `a[(i, j)] == b[(p[i], p[j])]`, if one exists.
pub fn isomorphism(a: &IntMatrix, b: &IntMatrix) -> Option<Vec<usize>> {
    let n = a.nrows();
    if a.ncols() != n || b.nrows() != n || b.ncols() != n {
        return None;
    }
    let signature = |m: &IntMatrix, v: usize| {
        let mut row: Vec<i64> = (0..n).map(|u| m[(v, u)]).collect();
        row.sort_unstable();
        (m[(v, v)], row)
    };
    let sa: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| signature(b, v)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &sa, &sb, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &IntMatrix,
    b: &IntMatrix,
    sa: &[(i64, Vec<i64>)],
    sb: &[(i64, Vec<i64>)],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = map.len();
    if v == n {
        return true;
    }
    for t in 0..n {
        if used[t] || sa[v] != sb[t] {
            continue;
        }
        if (0..v).any(|u| a[(v, u)] != b[(t, map[u])] || a[(u, v)] != b[(map[u], t)]) {
            continue;
        }
        map[v] = t;
        used[t] = true;
        if extend(a, b, sa, sb, v + 1, map, used) {
            return true;
        }
        used[t] = false;
    }
    map[v] = usize::MAX;
    false
}

pub fn is_isomorphic(a: &IntMatrix, b: &IntMatrix) -> bool {
    isomorphism(a, b).is_some()
}

/// The A-D-E type whose Dynkin diagram is isomorphic to `adjacency`.
pub fn identify_ade(adjacency: &IntMatrix) -> Option<AdeKind> {
    let n = adjacency.nrows();
    let mut candidates = vec![AdeKind::A(n)];
    if n >= 4 {
        candidates.push(AdeKind::D(n));
    }
    match n {
        6 => candidates.push(AdeKind::E6),
        7 => candidates.push(AdeKind::E7),
        8 => candidates.push(AdeKind::E8),
        _ => {}
    }
    candidates
        .into_iter()
        .find(|k| is_isomorphic(adjacency, &ade_graph_of(*k).adjacency))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_e7() {
        let g = ade_graph_of(AdeKind::E7).adjacency;
        let perm = [6, 2, 5, 0, 1, 3, 4];
        let h = IntMatrix::from_fn(7, 7, |i, j| g[(perm[i], perm[j])]);
        assert_eq!(identify_ade(&h), Some(AdeKind::E7));
        let p = isomorphism(&h, &g).unwrap();
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(h[(i, j)], g[(p[i], p[j])]);
            }
        }
    }

    #[test]
    fn distinguishes_d_and_e() {
        let d6 = ade_graph_of(AdeKind::D(6)).adjacency;
        let e6 = ade_graph_of(AdeKind::E6).adjacency;
        assert!(!is_isomorphic(&d6, &e6));
        assert_eq!(identify_ade(&d6), Some(AdeKind::D(6)));
        assert_eq!(identify_ade(&IntMatrix::zeros(3, 3)), None);
    }
}
