//! Simple undirected graphs on dense vertex sets `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are kept as sorted `(u, v)` pairs
//! with `u < v`, so two values compare equal exactly when they have the same
//! labeled edge set. Isomorphism-aware comparison lives in
//! [`crate::enumerate::canonical_form`].

mod families;
mod graph6;
mod io;

pub use families::{
    complete, cycle, double_star, empty, family_g, path, star, star_plus, star_plus_edges, FamilySpec,
};
pub use graph6::{graph6_decode, graph6_encode, GRAPH6_MAX_VERTICES};
pub use io::{parse_edge_list, parse_graph6_lines, to_edge_list};

use crate::error::{Error, Result};

/// Adjacency rows are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

/// Connected components as vertex blocks, ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn omega(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every vertex.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v] = b;
            }
        }
        out
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edge_list(n, &[])
    }

    /// Builds a graph, dropping duplicate pairs. Rejects self-loops and
    /// out-of-range endpoints.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, limit: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { u, v, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Caller guarantees a symmetric, loop-free mask set.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            let mut higher = row & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                edges.push((u, v));
                higher &= higher - 1;
            }
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut mask = self.adj[v];
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let w = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(w)
            }
        })
    }

    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&m| m == 0).count()
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut pairs = self.edges.clone();
        pairs.push((u, v));
        Self::from_edge_list(self.n, &pairs)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut adj = self.adj.clone();
        if u < self.n && v < self.n {
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
        Self::from_adjacency(adj)
    }

    /// Appends `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Result<Self> {
        Self::from_edge_list(self.n + k, &self.edges)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let shift = self.n;
        let pairs: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_edge_list(self.n + other.n, &pairs)
    }

    /// Subgraph induced on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let adj = vertices
            .iter()
            .map(|&v| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(v, w))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        Self::from_adjacency(adj)
    }

    /// Spanning subgraph on the same vertex set with the given edges of `self`.
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edge_list(self.n, edges)
    }

    /// `perm[v]` is the new label of vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Self::from_adjacency(adj)
    }

    pub fn components(&self) -> ComponentPartition {
        let mut seen = 0u64;
        let mut blocks = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut block_mask = 1u64 << start;
            let mut frontier = block_mask;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !block_mask;
                block_mask |= fresh;
                frontier |= fresh;
            }
            seen |= block_mask;
            blocks.push(mask_vertices(block_mask));
        }
        ComponentPartition { blocks }
    }

    pub fn is_connected(&self) -> bool {
        self.components().omega() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edge_count() + 1 == self.n && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.cycle_space_dim() == 0
    }

    /// `e - n + ω`.
    pub fn cycle_space_dim(&self) -> usize {
        self.edge_count() + self.components().omega() - self.n
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub(crate) fn mask_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = k3();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(Graph::empty(4).unwrap().edge_count(), 0);
        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_bad_pairs() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn full_width_graphs() {
        let pairs: Vec<_> = (0..63).map(|v| (v, v + 1)).chain([(0, 63)]).collect();
        let g = Graph::from_edge_list(64, &pairs).unwrap();
        assert_eq!(g.edge_count(), 64);
        assert_eq!(g.degree(63), 2);
        assert!(g.is_connected());
        assert_eq!(g.cycle_space_dim(), 1);
    }

    #[test]
    fn components_and_cycle_space() {
        let k3_k2 = k3().disjoint_union(&complete(2).unwrap()).unwrap();
        assert_eq!(k3().components().omega(), 1);
        assert_eq!(k3_k2.components().omega(), 2);
        assert!(!k3_k2.is_connected());
        assert_eq!(Graph::empty(4).unwrap().components().omega(), 4);
        assert_eq!(path(5).unwrap().cycle_space_dim(), 0);
        assert_eq!(star_plus(4).unwrap().cycle_space_dim(), 1);
        assert_eq!(complete(4).unwrap().cycle_space_dim(), 3);
    }

    #[test]
    fn tree_predicates() {
        assert!(path(5).unwrap().is_tree());
        let kp = star_plus(3).unwrap();
        assert!(kp.is_connected() && !kp.is_tree());
        assert!(!Graph::empty(0).unwrap().is_tree());
        assert!(Graph::empty(3).unwrap().is_forest());
    }

    #[test]
    fn relabel_and_induced() {
        let p = path(4).unwrap();
        let q = p.relabel(&[3, 2, 1, 0]);
        assert_eq!(q.edges(), p.edges());
        let sub = complete(5).unwrap().induced_subgraph(&[4, 1, 2]);
        assert_eq!(sub, k3());
        assert!(cycle(6).unwrap().is_bipartite());
        assert!(!cycle(5).unwrap().is_bipartite());
    }
}
