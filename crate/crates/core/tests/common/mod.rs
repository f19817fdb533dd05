//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use bergeth_core::{Graph, Hypergraph};
use rand::Rng;

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

fn injections(k: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    for v in 0..n {
        if !prefix.contains(&v) {
            prefix.push(v);
            injections(k, n, prefix, out);
            prefix.pop();
        }
    }
}

/// All injective maps `0..k -> 0..n`.
pub fn all_injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k <= n {
        injections(k, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Tries every core map and every injective edge-to-hyperedge assignment.
pub fn naive_has_berge(f: &Graph, h: &Hypergraph) -> bool {
    let edges = f.edge_vec();
    let assignments = all_injections(edges.len(), h.len());
    all_injections(f.n(), h.n()).iter().any(|map| {
        assignments.iter().any(|asg| {
            edges.iter().zip(asg).all(|(&(a, b), &i)| {
                let e = h.edge(i);
                e.contains(&map[a]) && e.contains(&map[b])
            })
        })
    })
}

/// `m` hyperedges on `n` vertices, each of a size drawn from `sizes`.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, m: usize, sizes: std::ops::RangeInclusive<usize>) -> Hypergraph {
    let mut h = Hypergraph::new(n).unwrap();
    for _ in 0..m {
        let k = rng.gen_range(sizes.clone()).min(n);
        let verts = rand::seq::index::sample(rng, n, k).into_vec();
        h.push(&verts).unwrap();
    }
    h
}

/// Adds random `r`-sets in random order whenever the result stays
/// Berge-`f`-free. A set may be added more than once.
pub fn random_free_hypergraph<R: Rng>(rng: &mut R, n: usize, r: usize, f: &Graph, tries: usize) -> Hypergraph {
    let mut h = Hypergraph::new(n).unwrap();
    for _ in 0..tries {
        let verts = rand::seq::index::sample(rng, n, r).into_vec();
        let mut next = h.clone();
        next.push(&verts).unwrap();
        if bergeth_core::berge::is_berge_free(f, &next) {
            h = next;
        }
    }
    h
}
