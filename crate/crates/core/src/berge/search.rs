use super::matching::Matching;
use super::{shadow_graph, BergeWitness, Hypergraph};
use crate::graph::{bit, bits, pattern_order, Graph};

struct Search<'a> {
    f: &'a Graph,
    h: &'a Hypergraph,
    shadow: Graph,
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    edge_index: Vec<Vec<usize>>,
    map: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, used: u64, matching: &Matching) -> Option<BergeWitness> {
        if pos == self.order.len() {
            return Some(BergeWitness {
                core_map: self.map.clone(),
                edge_assignment: matching.assignment(),
            });
        }
        let v = self.order[pos];
        let mut cand = self.shadow.vertex_mask() & !used;
        for &w in &self.back[pos] {
            cand &= self.shadow.neighbors(self.map[w]);
        }
        let need = self.f.degree(v);
        for c in bits(cand) {
            if self.shadow.degree(c) < need {
                continue;
            }
            let mut next = matching.clone();
            let feasible = self.back[pos].iter().all(|&w| {
                let pair = bit(c) | bit(self.map[w]);
                next.add(self.edge_index[v][w], self.h.containing(pair).collect())
            });
            if !feasible {
                continue;
            }
            self.map[v] = c;
            if let Some(found) = self.run(pos + 1, used | bit(c), &next) {
                return Some(found);
            }
        }
        self.map[v] = usize::MAX;
        None
    }
}

/// Finds a Berge copy of `f` in `h`, returning the first witness in search
/// order. The search is exhaustive, so `None` means `h` is Berge-`f`-free.
pub fn find_berge(f: &Graph, h: &Hypergraph) -> Option<BergeWitness> {
    let edges = f.edge_vec();
    if f.n() > h.n() || edges.len() > h.len() {
        return None;
    }
    let mut edge_index = vec![vec![usize::MAX; f.n()]; f.n()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        edge_index[a][b] = i;
        edge_index[b][a] = i;
    }
    let order = pattern_order(f, &[]);
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            order[..i]
                .iter()
                .copied()
                .filter(|&w| f.has_edge(v, w))
                .collect()
        })
        .collect();
    let mut search = Search {
        f,
        h,
        shadow: shadow_graph(h),
        order,
        back,
        edge_index,
        map: vec![usize::MAX; f.n()],
    };
    let matching = Matching::new(edges.len(), h.len());
    search.run(0, 0, &matching)
}

pub fn is_berge_free(f: &Graph, h: &Hypergraph) -> bool {
    find_berge(f, h).is_none()
}
