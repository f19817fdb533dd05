//! Exhaustive generation of forbidden-subgraph-free graphs and hypergraphs.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::berge::{is_berge_free, Hypergraph};
use crate::graph::{canonical_form, canonical_graph, contains_subgraph_through, Graph};
use crate::{Budget, SearchBudget};

pub(crate) struct FreeGraphs {
    /// Canonical representatives, by edge count and then canonical form.
    pub graphs: Vec<Graph>,
    pub complete: bool,
    pub nodes: u64,
}

/// Every `f`-free graph on `n` vertices up to isomorphism.
///
/// Level `m + 1` is obtained by adding one non-edge to each representative of
/// level `m`; a level is only expanded if its full cost (one node per
/// non-edge tried) fits in the budget, so the node count does not depend on
/// the thread count.
pub(crate) fn free_graphs(n: usize, f: &Graph, budget: &SearchBudget) -> FreeGraphs {
    let mut budget: Budget = budget.start();
    let mut level = vec![Graph::new(n)];
    let mut graphs = Vec::new();
    let mut complete = true;
    while !level.is_empty() {
        let cost: u64 = level
            .iter()
            .map(|g| (n * n.saturating_sub(1) / 2 - g.edge_count()) as u64)
            .sum();
        graphs.extend(level.iter().cloned());
        if cost == 0 {
            break;
        }
        if !budget.charge(cost) {
            complete = false;
            break;
        }
        let found: Vec<Vec<(Vec<u8>, Graph)>> = level
            .par_iter()
            .map(|g| {
                let mut out = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if g.has_edge(u, v) {
                            continue;
                        }
                        let mut next = g.clone();
                        next.add_edge(u, v);
                        if !contains_subgraph_through(f, &next, u, v) {
                            let c = canonical_graph(&next);
                            out.push((canonical_form(&c), c));
                        }
                    }
                }
                out
            })
            .collect();
        let next: BTreeMap<Vec<u8>, Graph> = found.into_iter().flatten().collect();
        level = next.into_values().collect();
    }
    FreeGraphs {
        graphs,
        complete,
        nodes: budget.used(),
    }
}

/// All `r`-subsets of `0..n` as masks, in lexicographic order of their
/// sorted vertex lists.
pub(crate) fn r_subsets(n: usize, r: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for v in start..=n - left {
            rec(v + 1, n, left - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    if r <= n {
        rec(0, n, r, 0, &mut out);
    }
    out
}

pub(crate) enum Goal<'a> {
    /// Most hyperedges.
    Size,
    /// Largest score over the inclusion-maximal families.
    Score(&'a dyn Fn(&Hypergraph) -> u64),
}

pub(crate) struct HyperBest {
    pub value: u64,
    pub witness: Hypergraph,
    pub complete: bool,
    pub nodes: u64,
}

struct HyperSearch<'a> {
    f: &'a Graph,
    cands: Vec<u64>,
    current: Hypergraph,
    taken: Vec<bool>,
    budget: Budget,
    stopped: bool,
    goal: Goal<'a>,
    best: Option<(u64, Hypergraph)>,
}

impl HyperSearch<'_> {
    fn beats(&self, value: u64) -> bool {
        self.best.as_ref().map_or(true, |(b, _)| value > *b)
    }

    fn leaf(&mut self) {
        let value = match self.goal {
            Goal::Size => self.current.len() as u64,
            Goal::Score(score) => {
                // any score we use is monotone, so non-maximal families never win
                for (i, &c) in self.cands.iter().enumerate() {
                    if !self.taken[i] {
                        let mut more = self.current.clone();
                        more.push_mask(c).expect("candidate fits");
                        if is_berge_free(self.f, &more) {
                            return;
                        }
                    }
                }
                score(&self.current)
            }
        };
        if self.beats(value) {
            self.best = Some((value, self.current.clone()));
        }
    }

    fn run(&mut self, k: usize) {
        if self.stopped {
            return;
        }
        if k == self.cands.len() {
            self.leaf();
            return;
        }
        if matches!(self.goal, Goal::Size)
            && !self.beats((self.current.len() + self.cands.len() - k) as u64)
        {
            return;
        }
        for include in [true, false] {
            if !self.budget.tick() {
                self.stopped = true;
                return;
            }
            if include {
                self.current.push_mask(self.cands[k]).expect("candidate fits");
                if is_berge_free(self.f, &self.current) {
                    self.taken[k] = true;
                    self.run(k + 1);
                    self.taken[k] = false;
                }
                self.current.pop();
            } else {
                self.run(k + 1);
            }
            if self.stopped {
                return;
            }
        }
    }
}

/// Include/exclude search over the simple `r`-uniform hypergraphs on `n`
/// vertices, keeping only Berge-`f`-free families. Ties keep the first
/// family met, with inclusion tried before exclusion.
pub(crate) fn best_free_hypergraph(
    r: usize,
    n: usize,
    f: &Graph,
    goal: Goal<'_>,
    budget: &SearchBudget,
) -> HyperBest {
    let cands = r_subsets(n, r);
    let mut s = HyperSearch {
        f,
        taken: vec![false; cands.len()],
        cands,
        current: Hypergraph::new(n).expect("n checked by caller"),
        budget: budget.start(),
        stopped: false,
        goal,
        best: None,
    };
    s.run(0);
    let nodes = s.budget.used();
    let complete = !s.stopped;
    let (value, witness) = s.best.unwrap_or_else(|| {
        let empty = Hypergraph::new(n).expect("n checked by caller");
        let value = match s.goal {
            Goal::Size => 0,
            Goal::Score(score) => score(&empty),
        };
        (value, empty)
    });
    HyperBest {
        value,
        witness,
        complete,
        nodes,
    }
}
