//! Permutation search for small integer matrices: simultaneous row/column
//! isomorphism and orbit-preserving automorphisms.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::matrix::Matrix;

fn signature(m: &Matrix<BigInt>, v: usize) -> (BigInt, Vec<BigInt>, Vec<BigInt>) {
    let n = m.rows();
    let mut row: Vec<BigInt> = (0..n).filter(|&j| j != v).map(|j| m[(v, j)].clone()).collect();
    let mut col: Vec<BigInt> = (0..n).filter(|&j| j != v).map(|j| m[(j, v)].clone()).collect();
    row.sort();
    col.sort();
    (m[(v, v)].clone(), row, col)
}

/// A permutation `p` with `b[i][j] = a[p[i]][p[j]]`, found by backtracking
/// with row/column multiset pruning.
pub fn matrix_isomorphism(a: &Matrix<BigInt>, b: &Matrix<BigInt>) -> Option<Vec<usize>> {
    let n = a.rows();
    if !a.is_square() || !b.is_square() || b.rows() != n {
        return None;
    }
    let sa: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| signature(b, v)).collect();
    let mut ca = sa.clone();
    let mut cb = sb.clone();
    ca.sort();
    cb.sort();
    if ca != cb {
        return None;
    }
    // Assign b-vertices in BFS order so that constraints bite early.
    let order = bfs_order(b);
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| sa[u] == sb[v]).collect())
        .collect();
    let mut p = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a, b, &order, &candidates, 0, &mut p, &mut used, &|_| true) {
        Some(p)
    } else {
        None
    }
}

fn bfs_order(m: &Matrix<BigInt>) -> Vec<usize> {
    let n = m.rows();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in 0..n {
                if !seen[w] && (m[(v, w)] != BigInt::from(0) || m[(w, v)] != BigInt::from(0)) {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &Matrix<BigInt>,
    b: &Matrix<BigInt>,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    p: &mut Vec<usize>,
    used: &mut Vec<bool>,
    accept: &dyn Fn(&[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        return accept(p);
    }
    let v = order[depth];
    for &u in &candidates[v] {
        if used[u] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| {
            let pw = p[w];
            a[(u, pw)] == b[(v, w)] && a[(pw, u)] == b[(w, v)]
        });
        if !consistent {
            continue;
        }
        p[v] = u;
        used[u] = true;
        if search(a, b, order, candidates, depth + 1, p, used, accept) {
            return true;
        }
        used[u] = false;
        p[v] = usize::MAX;
    }
    false
}

/// Whether some automorphism `σ` of `k` has exactly the orbits given by
/// `owner` (vertex → orbit index): `σ` preserves each orbit and acts on it
/// as a single cycle.
pub(crate) fn orbits_from_automorphism(k: &Matrix<BigInt>, owner: &[usize], count: usize) -> bool {
    let n = k.rows();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| owner[u] == owner[v]).collect())
        .collect();
    let order = bfs_order(k);
    let mut p = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let accept = |sigma: &[usize]| {
        let mut size = vec![0usize; count];
        for &o in owner {
            size[o] += 1;
        }
        (0..n).all(|v| {
            let mut len = 1;
            let mut w = sigma[v];
            while w != v {
                w = sigma[w];
                len += 1;
            }
            len == size[owner[v]]
        })
    };
    search(k, k, &order, &candidates, 0, &mut p, &mut used, &accept)
}
