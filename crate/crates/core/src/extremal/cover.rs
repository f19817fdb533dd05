use serde::Serialize;

use crate::graph::{copies, Graph};
use crate::{Error, Result};

/// A minimum set of edges of `G` meeting every copy of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
}

struct HittingSet {
    /// Each copy as sorted indices into the host edge list.
    sets: Vec<Vec<usize>>,
    chosen: Vec<bool>,
    picked: Vec<usize>,
    best: Vec<usize>,
}

impl HittingSet {
    fn hit(&self, s: &[usize]) -> bool {
        s.iter().any(|&e| self.chosen[e])
    }

    /// Size of a greedy family of pairwise disjoint unhit sets.
    fn packing_bound(&self) -> usize {
        let mut used = vec![false; self.chosen.len()];
        let mut count = 0;
        for s in &self.sets {
            if self.hit(s) || s.iter().any(|&e| used[e]) {
                continue;
            }
            for &e in s {
                used[e] = true;
            }
            count += 1;
        }
        count
    }

    fn run(&mut self) {
        if self.picked.len() + self.packing_bound() >= self.best.len() {
            return;
        }
        // branch on the smallest unhit set
        let target = self
            .sets
            .iter()
            .filter(|s| !self.hit(s))
            .min_by_key(|s| s.len())
            .cloned();
        let Some(target) = target else {
            self.best = self.picked.clone();
            return;
        };
        for e in target {
            self.chosen[e] = true;
            self.picked.push(e);
            self.run();
            self.picked.pop();
            self.chosen[e] = false;
        }
    }
}

/// `C(H, G)`: the fewest edges of `g` such that every copy of `h` in `g`
/// contains one of them.
pub fn cover_number(h: &Graph, g: &Graph) -> Result<Cover> {
    let host = g.edge_vec();
    let found = copies(h, g);
    if found.is_empty() {
        return Ok(Cover {
            size: 0,
            edges: Vec::new(),
        });
    }
    if h.edge_count() == 0 {
        return Err(Error::Validation(
            "copies of an edgeless graph cannot be covered by edges".into(),
        ));
    }
    let index = |e: &(usize, usize)| host.binary_search(e).expect("copy edge lies in host");
    let mut sets: Vec<Vec<usize>> = found
        .iter()
        .map(|c| c.iter().map(index).collect())
        .collect();
    sets.sort_by_key(|s| s.len());
    let mut hs = HittingSet {
        chosen: vec![false; host.len()],
        picked: Vec::new(),
        best: Vec::new(),
        sets,
    };
    // greedy upper bound: repeatedly take the edge in most unhit sets
    let mut greedy = Vec::new();
    while hs.sets.iter().any(|s| !hs.hit(s)) {
        let mut score = vec![0usize; host.len()];
        for s in hs.sets.iter().filter(|s| !hs.hit(s)) {
            for &e in s {
                score[e] += 1;
            }
        }
        let e = (0..host.len()).max_by_key(|&e| (score[e], std::cmp::Reverse(e))).unwrap();
        hs.chosen[e] = true;
        greedy.push(e);
    }
    hs.chosen.iter_mut().for_each(|c| *c = false);
    hs.best = greedy;
    hs.run();
    let mut edges: Vec<(usize, usize)> = hs.best.iter().map(|&e| host[e]).collect();
    edges.sort_unstable();
    Ok(Cover {
        size: edges.len(),
        edges,
    })
}

/// Whether removing `edges` from `g` leaves no copy of `h`.
pub fn is_cover(h: &Graph, g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut rest = g.clone();
    for &(u, v) in edges {
        rest.remove_edge(u, v);
    }
    !crate::graph::contains_subgraph(h, &rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest edge subset (by size) whose removal kills every copy.
    fn brute_cover(h: &Graph, g: &Graph) -> usize {
        let es = g.edge_vec();
        (0u64..1 << es.len())
            .filter(|mask| {
                let pick: Vec<(usize, usize)> = es
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                is_cover(h, g, &pick)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        let c = cover_number(&Graph::complete(3), &Graph::complete(4)).unwrap();
        assert_eq!(c.size, 2);
        assert!(is_cover(&Graph::complete(3), &Graph::complete(4), &c.edges));
        assert_eq!(cover_number(&Graph::complete(3), &Graph::cycle(5)).unwrap().size, 0);
        assert_eq!(cover_number(&Graph::complete(3), &Graph::complete(3)).unwrap().size, 1);
        assert!(cover_number(&Graph::new(2), &Graph::complete(3)).is_err());
    }

    #[test]
    fn matches_brute_force_on_small_hosts() {
        let patterns = [Graph::complete(3), Graph::path(3), Graph::cycle(4), Graph::complete(2)];
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in (0u32..1 << pairs.len()).step_by(13) {
            let mut g = Graph::new(5);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            for h in &patterns {
                let c = cover_number(h, &g).unwrap();
                assert!(is_cover(h, &g, &c.edges));
                assert_eq!(c.size, brute_cover(h, &g), "{g:?} {h:?}");
            }
        }
    }
}
