//! Berge copies in hypergraphs.
//!
//! A hypergraph contains a Berge copy of `F` when the vertices of `F` embed
//! injectively and each edge of `F` can be given its own hyperedge containing
//! both endpoints. [`find_berge`] searches core embeddings in the shadow graph
//! and keeps a maximum matching between placed core edges and hyperedges,
//! abandoning a branch as soon as the matching cannot saturate them.

mod heavy;
mod hypergraph;
mod matching;
mod search;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{bit, bits, Graph};
use crate::{Error, Result};

pub use heavy::{edge_multiplicity, extend_heavy, heaviness_profile, HeavinessProfile, ShadowEdge};
pub use hypergraph::Hypergraph;
pub use search::{find_berge, is_berge_free};

/// An injective core map and an injective edge-to-hyperedge assignment.
///
/// `edge_assignment[i]` is the hyperedge index used for the `i`-th edge of
/// `F` in lexicographic order (`Graph::edges`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    pub core_map: Vec<usize>,
    pub edge_assignment: Vec<usize>,
}

/// Checks both witness invariants against `f` and `h`.
///
/// Returns `Ok(false)` when the witness is well formed but wrong, and an error
/// when it does not even fit the shapes of `f` and `h`.
pub fn verify_witness(w: &BergeWitness, f: &Graph, h: &Hypergraph) -> Result<bool> {
    if w.core_map.len() != f.n() {
        return Err(Error::Validation(format!(
            "core map has {} entries for {} core vertices",
            w.core_map.len(),
            f.n()
        )));
    }
    let edges = f.edge_vec();
    if w.edge_assignment.len() != edges.len() {
        return Err(Error::Validation(format!(
            "assignment has {} entries for {} core edges",
            w.edge_assignment.len(),
            edges.len()
        )));
    }
    if let Some(&v) = w.core_map.iter().find(|&&v| v >= h.n()) {
        return Err(Error::Validation(format!("core vertex mapped to {v}, out of range")));
    }
    if let Some(&i) = w.edge_assignment.iter().find(|&&i| i >= h.len()) {
        return Err(Error::Validation(format!("hyperedge index {i} out of range")));
    }
    let mut seen = 0u64;
    for &v in &w.core_map {
        if seen & bit(v) != 0 {
            return Ok(false);
        }
        seen |= bit(v);
    }
    let mut used = vec![false; h.len()];
    for (&(a, b), &i) in edges.iter().zip(&w.edge_assignment) {
        if std::mem::replace(&mut used[i], true) {
            return Ok(false);
        }
        let pair = bit(w.core_map[a]) | bit(w.core_map[b]);
        if h.edge_mask(i) & pair != pair {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Graph on the same vertices with `uv` whenever some hyperedge contains both.
pub fn shadow_graph(h: &Hypergraph) -> Graph {
    let mut g = Graph::new(h.n());
    for &e in h.edge_masks() {
        let vs: Vec<usize> = bits(e).collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// One uniformly random 2-subset from every hyperedge, drawn independently.
///
/// The generator is ChaCha8 seeded with `seed` (`seed_from_u64`); hyperedges
/// are visited in index order and each draws one index into the
/// lexicographic list of its vertex pairs.
pub fn sample_subedge_graph(h: &Hypergraph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(h.n());
    for &e in h.edge_masks() {
        let vs: Vec<usize> = bits(e).collect();
        let k = vs.len();
        let mut idx = rng.gen_range(0..k * (k - 1) / 2);
        'pick: for i in 0..k {
            for j in i + 1..k {
                if idx == 0 {
                    g.add_edge(vs[i], vs[j]);
                    break 'pick;
                }
                idx -= 1;
            }
        }
    }
    g
}
