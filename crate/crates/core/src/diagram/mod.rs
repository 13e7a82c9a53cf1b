//! Weighted diagrams `(Γ, d)` and their structural edits.
//!
//! A diagram is a connected graph whose edges carry a pair of positive
//! integer weights `(d_ij, d_ji)`; the generalized Cartan matrix has
//! `k_ij = -d_ij` off the diagonal. Vertex ids are the indices `0..len()`.

mod catalog;
mod iso;
mod trees;

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::matrix::Matrix;
use crate::{Error, Result};

pub use catalog::{catalog_lookup, catalog_names, extension_name};
pub use iso::matrix_isomorphism;
pub use trees::{free_trees, random_tree, LACED_WEIGHTS};

pub type VertexId = usize;

/// Undirected edge stored with `i < j`; `dij` is the weight seen from `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub i: VertexId,
    pub j: VertexId,
    pub dij: u32,
    pub dji: u32,
}

impl Edge {
    fn normalized(self) -> Edge {
        if self.i <= self.j {
            self
        } else {
            Edge {
                i: self.j,
                j: self.i,
                dij: self.dji,
                dji: self.dij,
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    labels: Vec<String>,
    edges: Vec<Edge>,
    marked: Option<VertexId>,
}

/// Two-colouring with every edge running from `s1` to `s2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicoloredPartition {
    pub s1: Vec<VertexId>,
    pub s2: Vec<VertexId>,
}

impl BicoloredPartition {
    pub fn m(&self) -> usize {
        self.s1.len()
    }

    pub fn k(&self) -> usize {
        self.s2.len()
    }

    /// `s1` followed by `s2`: the bicolored vertex order.
    pub fn order(&self) -> Vec<VertexId> {
        self.s1.iter().chain(&self.s2).copied().collect()
    }
}

impl Diagram {
    /// Validates weights, loops, duplicates and connectivity. Edges with both
    /// weights zero are dropped.
    pub fn new(labels: Vec<String>, edges: Vec<Edge>, marked: Option<VertexId>) -> Result<Self> {
        let d = Self::unchecked(labels, edges, marked)?;
        if !d.is_connected() {
            return Err(Error::InvalidDiagram("underlying graph is disconnected".into()));
        }
        Ok(d)
    }

    /// Same checks as [`Diagram::new`] except connectivity.
    fn unchecked(labels: Vec<String>, edges: Vec<Edge>, marked: Option<VertexId>) -> Result<Self> {
        let n = labels.len();
        let mut out: Vec<Edge> = Vec::with_capacity(edges.len());
        for e in edges {
            if e.i >= n {
                return Err(Error::NoSuchVertex(e.i));
            }
            if e.j >= n {
                return Err(Error::NoSuchVertex(e.j));
            }
            if e.i == e.j {
                return Err(Error::SelfLoop(e.i));
            }
            if (e.dij == 0) != (e.dji == 0) {
                return Err(Error::InvalidDiagram(format!(
                    "weights ({}, {}) on edge ({}, {}): d_ij = 0 must imply d_ji = 0",
                    e.dij, e.dji, e.i, e.j
                )));
            }
            if e.dij == 0 {
                continue;
            }
            let e = e.normalized();
            if out.iter().any(|f| f.i == e.i && f.j == e.j) {
                return Err(Error::DuplicateEdge(e.i, e.j));
            }
            out.push(e);
        }
        out.sort();
        if let Some(m) = marked {
            if m >= n {
                return Err(Error::NoSuchVertex(m));
            }
        }
        Ok(Diagram {
            labels,
            edges: out,
            marked,
        })
    }

    /// Vertices labelled `v1..vn`.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId, u32, u32)]) -> Result<Self> {
        Self::new(
            default_labels(n),
            edges
                .iter()
                .map(|&(i, j, dij, dji)| Edge { i, j, dij, dji })
                .collect(),
            None,
        )
    }

    /// Simply-laced diagram from an edge list.
    pub fn simply_laced(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let e: Vec<_> = edges.iter().map(|&(i, j)| (i, j, 1, 1)).collect();
        Self::from_edges(n, &e)
    }

    /// Diagram of a generalized Cartan matrix.
    pub fn from_cartan(k: &Matrix<BigInt>) -> Result<Self> {
        crate::cartan::check_gcm(k)?;
        let n = k.rows();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !num_traits::Zero::is_zero(&k[(i, j)]) {
                    let w = |x: &BigInt| {
                        u32::try_from(-x).map_err(|_| Error::InvalidDiagram("weight overflow".into()))
                    };
                    edges.push(Edge {
                        i,
                        j,
                        dij: w(&k[(i, j)])?,
                        dji: w(&k[(j, i)])?,
                    });
                }
            }
        }
        Self::new(default_labels(n), edges, None)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn marked(&self) -> Option<VertexId> {
        self.marked
    }

    pub fn with_marked(mut self, v: Option<VertexId>) -> Result<Self> {
        if let Some(m) = v {
            if m >= self.len() {
                return Err(Error::NoSuchVertex(m));
            }
        }
        self.marked = v;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        self.labels = labels;
        self
    }

    /// `(d_ij, d_ji)` if `i` and `j` are adjacent.
    pub fn weight(&self, i: VertexId, j: VertexId) -> Option<(u32, u32)> {
        self.edges.iter().find_map(|e| {
            if e.i == i && e.j == j {
                Some((e.dij, e.dji))
            } else if e.i == j && e.j == i {
                Some((e.dji, e.dij))
            } else {
                None
            }
        })
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.i == v {
                Some(e.j)
            } else if e.j == v {
                Some(e.i)
            } else {
                None
            }
        })
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).count()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.iter().all(|e| e.dij == 1 && e.dji == 1)
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.len()
    }

    fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        self.component_of(0).len() == self.len()
    }

    fn component_of(&self, start: VertexId) -> Vec<VertexId> {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            out.push(v);
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Generalized Cartan matrix `K`: 2 on the diagonal, `-d_ij` off it.
    pub fn cartan_matrix(&self) -> Matrix<BigInt> {
        let n = self.len();
        let mut k = Matrix::from_fn(n, n, |i, j| BigInt::from(if i == j { 2 } else { 0 }));
        for e in &self.edges {
            k[(e.i, e.j)] = -BigInt::from(e.dij);
            k[(e.j, e.i)] = -BigInt::from(e.dji);
        }
        k
    }

    /// BFS two-colouring from vertex 0, which lands in `s1`.
    pub fn bicolor(&self) -> Result<BicoloredPartition> {
        let n = self.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return Err(Error::NotBipartite(w.min(v))),
                        Some(_) => {}
                    }
                }
            }
        }
        let s1 = (0..n).filter(|&v| color[v] == Some(false)).collect();
        let s2 = (0..n).filter(|&v| color[v] == Some(true)).collect();
        Ok(BicoloredPartition { s1, s2 })
    }

    /// New diagram with edge `(i, j)`. Passing `len()` for either endpoint
    /// appends a fresh vertex.
    pub fn add_edge(&self, i: VertexId, j: VertexId, dij: u32, dji: u32) -> Result<Self> {
        let n = self.len();
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        if i > n || j > n || (i == n && j == n) {
            return Err(Error::NoSuchVertex(i.max(j)));
        }
        if dij == 0 || dji == 0 {
            return Err(Error::InvalidDiagram("edge weights must be at least 1".into()));
        }
        if self.weight(i, j).is_some() {
            return Err(Error::DuplicateEdge(i.min(j), i.max(j)));
        }
        let mut labels = self.labels.clone();
        if i == n || j == n {
            labels.push(fresh_label(&labels));
        }
        let mut edges = self.edges.clone();
        edges.push(Edge { i, j, dij, dji });
        Self::new(labels, edges, self.marked)
    }

    /// Append a leaf at `v` joined by a simple edge.
    pub fn add_leaf(&self, v: VertexId) -> Result<Self> {
        self.add_edge(v, self.len(), 1, 1)
    }

    /// Induced subdiagram on `keep` (ascending), possibly disconnected.
    fn induced(&self, keep: &[VertexId]) -> Diagram {
        let mut index = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.i] != usize::MAX && index[e.j] != usize::MAX)
            .map(|e| Edge {
                i: index[e.i],
                j: index[e.j],
                dij: e.dij,
                dji: e.dji,
            })
            .collect();
        let marked = self.marked.and_then(|m| (index[m] != usize::MAX).then(|| index[m]));
        Diagram::unchecked(labels, edges, marked).expect("induced subdiagram is valid")
    }

    /// Connected components of `Γ \ v`; empty if `Γ` is a single vertex.
    pub fn remove_vertex(&self, v: VertexId) -> Result<Vec<Diagram>> {
        if v >= self.len() {
            return Err(Error::NoSuchVertex(v));
        }
        let keep: Vec<VertexId> = (0..self.len()).filter(|&w| w != v).collect();
        Ok(self.induced(&keep).components())
    }

    /// Connected components of `Γ` with `(i, j)` deleted: the one containing
    /// `i`, then the one containing `j` (equal if the edge lies on a cycle).
    pub fn split_at_edge(&self, i: VertexId, j: VertexId) -> Result<(Diagram, VertexId, Diagram, VertexId)> {
        if self.weight(i, j).is_none() {
            return Err(Error::InvalidDiagram(format!("no edge ({i}, {j})")));
        }
        let mut cut = self.clone();
        cut.edges.retain(|e| !((e.i == i && e.j == j) || (e.i == j && e.j == i)));
        let ci = cut.component_of(i);
        if ci.contains(&j) {
            return Err(Error::InvalidDiagram(format!("edge ({i}, {j}) lies on a cycle")));
        }
        let cj = cut.component_of(j);
        let pi = ci.iter().position(|&v| v == i).unwrap();
        let pj = cj.iter().position(|&v| v == j).unwrap();
        Ok((cut.induced(&ci), pi, cut.induced(&cj), pj))
    }

    fn components(&self) -> Vec<Diagram> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for v in 0..self.len() {
            if !seen[v] {
                let comp = self.component_of(v);
                for &w in &comp {
                    seen[w] = true;
                }
                out.push(self.induced(&comp));
            }
        }
        out
    }

    /// Disjoint union of `left` and `right` joined by `(α, β)`; the vertices of
    /// `right` follow those of `left`.
    pub fn join(
        left: &Diagram,
        alpha: VertexId,
        right: &Diagram,
        beta: VertexId,
        d_ab: u32,
        d_ba: u32,
    ) -> Result<Diagram> {
        if alpha >= left.len() {
            return Err(Error::NoSuchVertex(alpha));
        }
        if beta >= right.len() {
            return Err(Error::NoSuchVertex(beta));
        }
        let off = left.len();
        let mut labels = left.labels.clone();
        labels.extend(right.labels.iter().cloned());
        dedup_labels(&mut labels);
        let mut edges = left.edges.clone();
        edges.extend(right.edges.iter().map(|e| Edge {
            i: e.i + off,
            j: e.j + off,
            ..*e
        }));
        edges.push(Edge {
            i: alpha,
            j: beta + off,
            dij: d_ab,
            dji: d_ba,
        });
        Diagram::new(labels, edges, None)
    }

    /// `Γ(n)`: a new hub `β` (vertex 0) joined to `n` copies of `base` at
    /// `attach`.
    pub fn glue_star(base: &Diagram, attach: VertexId, n: usize) -> Result<Diagram> {
        if n < 1 {
            return Err(Error::MalformedParameters("glue_star needs n >= 1".into()));
        }
        if attach >= base.len() {
            return Err(Error::NoSuchVertex(attach));
        }
        let size = base.len();
        let mut labels = vec![String::from("β")];
        let mut edges = Vec::new();
        for c in 0..n {
            let off = 1 + c * size;
            labels.extend(base.labels.iter().map(|l| format!("{l}.{}", c + 1)));
            edges.extend(base.edges.iter().map(|e| Edge {
                i: e.i + off,
                j: e.j + off,
                ..*e
            }));
            edges.push(Edge {
                i: 0,
                j: attach + off,
                dij: 1,
                dji: 1,
            });
        }
        Diagram::new(labels, edges, None)
    }

    /// Fold along an automorphism with the given orbits. Folded vertices are
    /// ordered by their least member; `K^f_{[i][j]} = Σ_{j' ∈ [j]} k_{ij'}`.
    pub fn fold(&self, orbits: &[Vec<VertexId>]) -> Result<Diagram> {
        let n = self.len();
        let mut owner = vec![usize::MAX; n];
        for (o, orbit) in orbits.iter().enumerate() {
            if orbit.is_empty() {
                return Err(Error::BadOrbits("empty orbit".into()));
            }
            for &v in orbit {
                if v >= n {
                    return Err(Error::NoSuchVertex(v));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::BadOrbits(format!("vertex {v} appears twice")));
                }
                owner[v] = o;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::BadOrbits(format!("vertex {v} is in no orbit")));
        }
        let k = self.cartan_matrix();
        if !iso::orbits_from_automorphism(&k, &owner, orbits.len()) {
            return Err(Error::BadOrbits(
                "no diagram automorphism has exactly these orbits".into(),
            ));
        }
        let mut sorted: Vec<Vec<VertexId>> = orbits
            .iter()
            .map(|o| {
                let mut o = o.clone();
                o.sort_unstable();
                o
            })
            .collect();
        sorted.sort();
        let r = sorted.len();
        let folded = Matrix::from_fn(r, r, |a, b| {
            let i = sorted[a][0];
            sorted[b].iter().map(|&j| k[(i, j)].clone()).sum::<BigInt>()
        });
        crate::cartan::check_gcm(&folded).map_err(|e| Error::FoldNotCartan(e.to_string()))?;
        let labels = sorted.iter().map(|o| self.labels[o[0]].clone()).collect();
        let marked = self
            .marked
            .map(|m| sorted.iter().position(|o| o.contains(&m)).unwrap());
        Diagram::from_cartan(&folded)?
            .with_labels(labels)
            .with_marked(marked)
    }

    /// Same graph with every weight pair swapped (`K ↦ Kᵗ`).
    pub fn transpose(&self) -> Diagram {
        let mut d = self.clone();
        for e in &mut d.edges {
            core::mem::swap(&mut e.dij, &mut e.dji);
        }
        d
    }

    /// Relabel so that new vertex `v` is old vertex `perm[v]`.
    pub fn permute(&self, perm: &[VertexId]) -> Result<Diagram> {
        let n = self.len();
        if perm.len() != n {
            return Err(Error::InvalidDiagram("permutation has the wrong length".into()));
        }
        let mut inv = vec![usize::MAX; n];
        for (new, &old) in perm.iter().enumerate() {
            if old >= n || inv[old] != usize::MAX {
                return Err(Error::InvalidDiagram("not a permutation".into()));
            }
            inv[old] = new;
        }
        let labels = perm.iter().map(|&o| self.labels[o].clone()).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                i: inv[e.i],
                j: inv[e.j],
                dij: e.dij,
                dji: e.dji,
            })
            .collect();
        Diagram::new(labels, edges, self.marked.map(|m| inv[m]))
    }

    /// A permutation `p` with `other = self.permute(p)` as weighted graphs.
    pub fn isomorphism(&self, other: &Diagram) -> Option<Vec<VertexId>> {
        matrix_isomorphism(&self.cartan_matrix(), &other.cartan_matrix())
    }

    pub fn is_isomorphic(&self, other: &Diagram) -> bool {
        self.isomorphism(other).is_some()
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn fresh_label(labels: &[String]) -> String {
    (labels.len() + 1..)
        .map(|i| format!("v{i}"))
        .find(|l| !labels.contains(l))
        .unwrap()
}

fn dedup_labels(labels: &mut [String]) {
    for i in 0..labels.len() {
        if labels[..i].contains(&labels[i]) {
            let fresh = fresh_label(labels);
            labels[i] = fresh;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Diagram {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Diagram::simply_laced(n, &e).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(
            Diagram::from_edges(2, &[(0, 0, 1, 1)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Diagram::from_edges(2, &[(0, 1, 1, 1), (1, 0, 1, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(Diagram::from_edges(2, &[(0, 1, 0, 1)]).is_err());
        assert!(Diagram::from_edges(3, &[(0, 1, 1, 1)]).is_err());
    }

    #[test]
    fn bicolor_path_and_triangle() {
        let p = path(2).bicolor().unwrap();
        assert_eq!(p.s1, vec![0]);
        assert_eq!(p.s2, vec![1]);
        let tri = path(3).add_edge(0, 2, 1, 1).unwrap();
        assert!(matches!(tri.bicolor(), Err(Error::NotBipartite(_))));
    }

    #[test]
    fn add_edge_is_value_semantic() {
        let a2 = path(2);
        let a3 = a2.add_edge(1, 2, 1, 1).unwrap();
        assert_eq!(a2.len(), 2);
        assert!(a3.is_isomorphic(&path(3)));
        assert!(matches!(a3.add_edge(0, 1, 1, 1), Err(Error::DuplicateEdge(0, 1))));
    }

    #[test]
    fn glue_counts() {
        let a2 = path(2);
        let g = Diagram::glue_star(&a2, 0, 3).unwrap();
        assert_eq!(g.len(), 3 * 2 + 1);
        assert_eq!(g.edges().len(), 3 + 3);
        assert!(Diagram::glue_star(&a2, 1, 2).unwrap().is_isomorphic(&path(5)));
        assert!(Diagram::glue_star(&a2, 0, 0).is_err());
    }

    #[test]
    fn fold_a3_gives_c2_column_sums() {
        let a3 = path(3);
        let f = a3.fold(&[vec![0, 2], vec![1]]).unwrap();
        // orbit {0,2} first: row sums K_0,{1} = -1; K_1,{0,2} = -2
        assert_eq!(f.cartan_matrix(), Matrix::from_i64(&[&[2, -1], &[-2, 2]]));
        assert!(a3.fold(&[vec![0, 1], vec![2]]).is_err());
    }

    #[test]
    fn split_and_remove() {
        let p = path(4);
        let (l, a, r, b) = p.split_at_edge(1, 2).unwrap();
        assert_eq!((l.len(), a, r.len(), b), (2, 1, 2, 0));
        assert_eq!(p.remove_vertex(1).unwrap().len(), 2);
        assert!(path(1).remove_vertex(0).unwrap().is_empty());
    }
}
