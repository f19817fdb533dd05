//! Subgraph embeddings (injective, not necessarily induced) and homomorphisms.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use super::{bit, bits, Graph};

/// Search order for the pattern: pinned vertices first, then repeatedly the
/// vertex with most already-placed neighbours (ties: higher degree, lower index).
pub(crate) fn pattern_order(h: &Graph, pinned: &[usize]) -> Vec<usize> {
    let n = h.n();
    let mut order: Vec<usize> = pinned.to_vec();
    let mut placed: u64 = pinned.iter().fold(0, |m, &v| m | bit(v));
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (h.neighbors(v) & placed).count_ones(),
                    h.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed |= bit(v);
        order.push(v);
    }
    order
}

struct Embedder<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: Vec<usize>,
    /// For each position, the pattern vertices placed earlier that are adjacent.
    back: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: u64,
    injective: bool,
}

impl<'a> Embedder<'a> {
    fn new(h: &'a Graph, g: &'a Graph, pinned: &[usize], injective: bool) -> Self {
        let order = pattern_order(h, pinned);
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                order[..i]
                    .iter()
                    .copied()
                    .filter(|&w| h.has_edge(v, w))
                    .collect()
            })
            .collect();
        Embedder {
            h,
            g,
            order,
            back,
            map: vec![usize::MAX; h.n()],
            used: 0,
            injective,
        }
    }

    fn candidates(&self, pos: usize) -> u64 {
        let v = self.order[pos];
        let mut cand = self.g.vertex_mask();
        for &w in &self.back[pos] {
            cand &= self.g.neighbors(self.map[w]);
        }
        if self.injective {
            cand &= !self.used;
            let need = self.h.degree(v);
            if need > 0 {
                let mut ok = 0;
                for c in bits(cand) {
                    if self.g.degree(c) >= need {
                        ok |= bit(c);
                    }
                }
                cand = ok;
            }
        }
        cand
    }

    fn run<F>(&mut self, pos: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if pos == self.order.len() {
            return f(&self.map);
        }
        let v = self.order[pos];
        if self.map[v] != usize::MAX {
            // pinned; verify against earlier placements
            let img = self.map[v];
            if self.candidates(pos) & bit(img) == 0 {
                return ControlFlow::Continue(());
            }
            self.used |= bit(img);
            let r = self.run(pos + 1, f);
            self.used &= !bit(img);
            return r;
        }
        for c in bits(self.candidates(pos)) {
            self.map[v] = c;
            self.used |= bit(c);
            let r = self.run(pos + 1, f);
            self.used &= !bit(c);
            if r.is_break() {
                self.map[v] = usize::MAX;
                return r;
            }
        }
        self.map[v] = usize::MAX;
        ControlFlow::Continue(())
    }
}

/// Calls `f` with every injective edge-preserving map `V(h) -> V(g)`,
/// given as `map[h_vertex] = g_vertex`, optionally with some vertices pinned.
pub fn for_each_embedding<F>(h: &Graph, g: &Graph, pinned: &[(usize, usize)], mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if h.n() > g.n() {
        return ControlFlow::Continue(());
    }
    let mut seen = 0u64;
    for &(hv, gv) in pinned {
        if hv >= h.n() || gv >= g.n() || seen & bit(gv) != 0 {
            return ControlFlow::Continue(());
        }
        seen |= bit(gv);
    }
    let pins: Vec<usize> = pinned.iter().map(|&(hv, _)| hv).collect();
    let mut e = Embedder::new(h, g, &pins, true);
    for &(hv, gv) in pinned {
        e.map[hv] = gv;
    }
    e.run(0, &mut f)
}

pub fn count_embeddings(h: &Graph, g: &Graph) -> u64 {
    let mut count = 0u64;
    let _ = for_each_embedding(h, g, &[], |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

pub fn automorphism_count(h: &Graph) -> u64 {
    count_embeddings(h, h)
}

/// Number of (unlabelled) copies of `h` in `g`: embeddings divided by `|Aut(h)|`.
pub fn count_copies(h: &Graph, g: &Graph) -> u64 {
    let emb = count_embeddings(h, g);
    if emb == 0 {
        return 0;
    }
    emb / automorphism_count(h)
}

pub fn contains_subgraph(h: &Graph, g: &Graph) -> bool {
    for_each_embedding(h, g, &[], |_| ControlFlow::Break(())).is_break()
}

/// Whether `g` has a copy of `h` that uses the edge `uv` of `g`.
pub fn contains_subgraph_through(h: &Graph, g: &Graph, u: usize, v: usize) -> bool {
    if !g.has_edge(u, v) {
        return false;
    }
    for (a, b) in h.edges() {
        for (x, y) in [(a, b), (b, a)] {
            if for_each_embedding(h, g, &[(x, u), (y, v)], |_| ControlFlow::Break(())).is_break() {
                return true;
            }
        }
    }
    false
}

/// Distinct copies of `h` in `g`, each given as its sorted edge list in `g`.
/// Copies that differ only in where isolated pattern vertices land share an
/// edge set and are reported once.
pub fn copies(h: &Graph, g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let h_edges = h.edge_vec();
    let mut out = BTreeSet::new();
    let _ = for_each_embedding(h, g, &[], |map| {
        let mut es: Vec<(usize, usize)> = h_edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map[a], map[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        es.sort_unstable();
        out.insert(es);
        ControlFlow::Continue(())
    });
    out.into_iter().collect()
}

/// A homomorphism `f -> h` (edges to edges, not necessarily injective), if any.
pub fn homomorphism(f: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if f.n() == 0 {
        return Some(Vec::new());
    }
    if h.n() == 0 {
        return None;
    }
    let mut e = Embedder::new(f, h, &[], false);
    let mut found = None;
    let _ = e.run(0, &mut |map: &[usize]| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Whether `f` is a subgraph of some blow-up of `h`.
pub fn has_homomorphism(f: &Graph, h: &Graph) -> bool {
    homomorphism(f, h).is_some()
}
