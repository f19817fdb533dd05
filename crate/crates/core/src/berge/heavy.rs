use serde::Serialize;

use super::{verify_witness, BergeWitness, Hypergraph};
use crate::graph::{bit, Graph};
use crate::{Error, Result};

/// Number of hyperedges containing both `u` and `v`.
pub fn edge_multiplicity(h: &Hypergraph, u: usize, v: usize) -> Result<usize> {
    if u == v {
        return Err(Error::Validation(format!("multiplicity of a loop at {u}")));
    }
    if u >= h.n() || v >= h.n() {
        return Err(Error::Validation(format!(
            "pair {u},{v} out of range for {} vertices",
            h.n()
        )));
    }
    Ok(h.containing(bit(u) | bit(v)).count())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowEdge {
    pub u: usize,
    pub v: usize,
    pub multiplicity: usize,
    pub heavy: bool,
}

/// Multiplicity of every shadow edge and its t-heavy/t-light class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeavinessProfile {
    pub t: usize,
    pub n: usize,
    pub edges: Vec<ShadowEdge>,
}

impl HeavinessProfile {
    fn graph_of(&self, heavy: bool) -> Graph {
        let mut g = Graph::new(self.n);
        for e in self.edges.iter().filter(|e| e.heavy == heavy) {
            g.add_edge(e.u, e.v);
        }
        g
    }

    /// Shadow edges contained in at least `t` hyperedges.
    pub fn heavy_graph(&self) -> Graph {
        self.graph_of(true)
    }

    /// Shadow edges contained in fewer than `t` hyperedges.
    pub fn light_graph(&self) -> Graph {
        self.graph_of(false)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let (u, v) = (u.min(v), u.max(v));
        self.edges
            .iter()
            .find(|e| e.u == u && e.v == v)
            .map_or(0, |e| e.multiplicity)
    }
}

pub fn heaviness_profile(h: &Hypergraph, t: usize) -> Result<HeavinessProfile> {
    if t == 0 {
        return Err(Error::Validation("heaviness threshold must be positive".into()));
    }
    let n = h.n();
    let mut mult = vec![vec![0usize; n]; n];
    for &e in h.edge_masks() {
        let vs: Vec<usize> = crate::graph::bits(e).collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                mult[u][v] += 1;
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mult[u][v] > 0 {
                edges.push(ShadowEdge {
                    u,
                    v,
                    multiplicity: mult[u][v],
                    heavy: mult[u][v] >= t,
                });
            }
        }
    }
    Ok(HeavinessProfile { t, n, edges })
}

/// Completes a Berge copy of `sub` to one of `f` using heavy shadow edges.
///
/// `sub` must be a spanning subgraph of `f`, `w` a witness for `sub`, and
/// every edge of `f` missing from `sub` must be `t`-heavy under `w`'s core map
/// with `t >= |E(f)|`. Missing edges are handled in lexicographic order, each
/// taking the lowest-index hyperedge not used so far. At most `|E(f)| - 1`
/// hyperedges are ever in use, so a heavy edge always has a free hyperedge.
pub fn extend_heavy(
    f: &Graph,
    sub: &Graph,
    w: &BergeWitness,
    h: &Hypergraph,
    t: usize,
) -> Result<BergeWitness> {
    let m = f.edge_count();
    if t < m {
        return Err(Error::Contract(format!(
            "heaviness threshold {t} is below |E(F)| = {m}"
        )));
    }
    if !sub.is_subgraph_of(f) {
        return Err(Error::Contract(
            "partial core must be a spanning subgraph of F".into(),
        ));
    }
    if !verify_witness(w, sub, h)? {
        return Err(Error::Contract("witness is not a Berge copy of the partial core".into()));
    }
    let mut used = vec![false; h.len()];
    let mut assigned = std::collections::BTreeMap::new();
    for (edge, &i) in sub.edges().zip(&w.edge_assignment) {
        used[i] = true;
        assigned.insert(edge, i);
    }
    for (a, b) in f.edges() {
        if sub.has_edge(a, b) {
            continue;
        }
        let pair = bit(w.core_map[a]) | bit(w.core_map[b]);
        let containing: Vec<usize> = h.containing(pair).collect();
        if containing.len() < t {
            return Err(Error::Contract(format!(
                "extension edge {a}-{b} has multiplicity {} < {t}",
                containing.len()
            )));
        }
        let pick = containing
            .into_iter()
            .find(|&i| !used[i])
            .expect("heavy edge always has an unused hyperedge");
        used[pick] = true;
        assigned.insert((a, b), pick);
    }
    let out = BergeWitness {
        core_map: w.core_map.clone(),
        edge_assignment: f.edges().map(|e| assigned[&e]).collect(),
    };
    assert!(
        verify_witness(&out, f, h)?,
        "heavy extension produced an invalid witness"
    );
    Ok(out)
}
