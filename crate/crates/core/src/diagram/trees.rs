//! Tree corpora: every unlabeled tree of a given size, and seeded random
//! trees for property checks.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::Diagram;
use crate::Result;

/// Edge weights `(d_ij, d_ji)` drawn by `random_tree` when lacing is allowed.
pub const LACED_WEIGHTS: [(u32, u32); 4] = [(1, 1), (1, 2), (2, 1), (1, 3)];

/// Every simply-laced tree on `n` vertices, one per isomorphism class.
///
/// Trees on `n` vertices are grown from those on `n - 1` by adding a leaf
/// and deduplicated by a centre-rooted canonical string, so the counts are
/// 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, ...
pub fn free_trees(n: usize) -> Vec<Diagram> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for v in 0..size - 1 {
                let mut t = adj.clone();
                t.push(vec![v]);
                t[v].push(size - 1);
                if seen.insert(canonical(&t)) {
                    next.push(t);
                }
            }
        }
        level = next;
    }
    level.iter().map(|adj| from_adjacency(adj)).collect()
}

fn from_adjacency(adj: &[Vec<usize>]) -> Diagram {
    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(i, ns)| ns.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect();
    Diagram::simply_laced(adj.len(), &edges).expect("grown trees are valid")
}

/// Canonical form of an unlabeled tree: the smaller AHU string over its
/// one or two centres.
fn canonical(adj: &[Vec<usize>]) -> String {
    centres(adj)
        .into_iter()
        .map(|c| ahu(adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(adj, w, v))
        .collect();
    kids.sort_unstable();
    let mut s = String::from("(");
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            for &w in &adj[l] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        leaves = next;
    }
    leaves
}

/// A random tree on `n ≥ 1` vertices: vertex `i` hangs off a uniformly
/// chosen earlier vertex. With `laced`, each edge weight is drawn from
/// `LACED_WEIGHTS`; otherwise every edge is simple.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize, laced: bool) -> Result<Diagram> {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = if laced {
            LACED_WEIGHTS[rng.gen_range(0..LACED_WEIGHTS.len())]
        } else {
            (1, 1)
        };
        edges.push((j, i, a, b));
    }
    Diagram::from_edges(n, &edges)
}
