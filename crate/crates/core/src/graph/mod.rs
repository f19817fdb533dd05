//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is a `u64` bitset per vertex, so adjacency tests and
//! neighbourhood intersections are single word operations. Isolated vertices
//! are part of the graph: a `Graph` is the pair `(n, E)`.

mod canon;
mod coloring;
mod embed;
mod family;
mod graph6;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub use canon::{canonical_form, canonical_graph, edge_deletions_up_to_iso, is_isomorphic, EdgeDeletion};
pub use coloring::{chromatic_number, clique_number, is_proper_coloring, optimal_coloring};
pub(crate) use embed::pattern_order;
pub use embed::{
    automorphism_count, contains_subgraph, contains_subgraph_through, copies, count_copies,
    count_embeddings, for_each_embedding, has_homomorphism, homomorphism,
};
pub use family::FamilySpec;
pub use graph6::{decode as parse_graph6, encode as encode_graph6};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a word, lowest first.
#[inline]
pub(crate) fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let v = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_VERTICES`]; use [`Graph::try_new`] for untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("graph too large")
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{n} vertices (at most {MAX_VERTICES} supported)"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.adj[v] = low_mask(n) & !bit(v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(0, n - 1);
        g
    }

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// # Panics
    /// On a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Validation(format!("loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Validation(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect(),
        }
    }

    /// Subgraph induced on the vertex set `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Subgraph on the same vertex set keeping only the edges of `mask`
    /// restricted to vertices (edges with both ends in `mask`).
    pub fn restrict_to(&self, mask: u64) -> Graph {
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| if mask & bit(v) != 0 { self.adj[v] & mask } else { 0 })
                .collect(),
        }
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Removes vertex `v`, shifting higher labels down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !bit(v))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0) == self.vertex_mask()
    }

    pub(crate) fn component_of(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in bits(self.adj[u]) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominating_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.adj[v] | bit(v) == self.vertex_mask())
            .collect()
    }
}

/// Serialized as its graph6 string.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text = encode_graph6(self).map_err(serde::ser::Error::custom)?;
        s.serialize_str(&text)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_vec())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match encode_graph6(self) {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "{self:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_constructors() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(Graph::path(3).edge_vec(), vec![(0, 1), (1, 2)]);
        assert_eq!(Graph::complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(Graph::new(0).edge_count(), 0);
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::new(3);
        assert!(g.try_add_edge(1, 1).is_err());
        assert!(g.try_add_edge(0, 3).is_err());
        assert!(Graph::try_new(65).is_err());
    }

    #[test]
    fn connectivity_and_components() {
        let mut g = Graph::new(5);
        g.add_edge(0, 1);
        g.add_edge(3, 4);
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![0b11, 0b100, 0b11000]);
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
    }

    #[test]
    fn induced_and_delete() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.delete_vertex(2), Graph::complete(3));
        assert_eq!(k4.induced(0b1011).edge_count(), 3);
        assert_eq!(Graph::path(3).dominating_vertices(), vec![1]);
    }
}
