//! Canonical labelling by individualisation-refinement.
//!
//! Cells of an ordered partition are refined to an equitable partition, the
//! first non-singleton cell is individualised vertex by vertex, and every
//! discrete leaf yields a relabelled adjacency matrix. The largest matrix is
//! the canonical form. Automorphisms found at equal leaves prune sibling
//! branches in the same orbit of the current pointwise stabiliser.

use std::collections::BTreeMap;

use super::{bit, Graph};
use crate::{Error, Result};

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | bit(v));
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: usize| (g.neighbors(v) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
                for &v in &cells[c] {
                    groups.entry(count(v)).or_default().push(v);
                }
                cells.splice(c..=c, groups.into_values());
                continue 'outer;
            }
        }
        return cells;
    }
}

struct Leaf {
    cert: Vec<u64>,
    /// `label[v]` = canonical position of vertex `v`.
    label: Vec<usize>,
    /// Individualised vertices from the root to this leaf.
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Records a leaf. When it matches a known leaf, the automorphism between
    /// them is stored and the depth to jump back to is returned.
    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let n = self.g.n();
        let mut label = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let mut cert = vec![0u64; n];
        for (u, v) in self.g.edges() {
            cert[label[u]] |= bit(label[v]);
            cert[label[v]] |= bit(label[u]);
        }
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.cert == cert {
                // the vertex at position p here maps to the vertex at position p in `known`
                let mut inv = vec![0; n];
                for (v, &p) in known.label.iter().enumerate() {
                    inv[p] = v;
                }
                let auto: Vec<usize> = (0..n).map(|v| inv[label[v]]).collect();
                let jump = common_prefix(path, &known.path);
                self.autos.push(auto);
                return Some(jump);
            }
        }
        let leaf = Leaf {
            cert,
            label,
            path: path.to_vec(),
        };
        if self.first.is_none() {
            self.first = Some(Leaf {
                cert: leaf.cert.clone(),
                label: leaf.label.clone(),
                path: leaf.path.clone(),
            });
        }
        if self.best.as_ref().is_none_or(|b| leaf.cert > b.cert) {
            self.best = Some(leaf);
        }
        None
    }

    /// Orbit roots under the found automorphisms that fix `fixed` pointwise.
    fn orbits(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.autos {
            if fixed.iter().all(|&f| a[f] == f) {
                for x in 0..n {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                    if rx != ry {
                        parent[rx.max(ry)] = rx.min(ry);
                    }
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }

    /// Explores the subtree below `fixed`. `Some(d)` asks the caller to unwind
    /// to depth `d`: everything deeper is equivalent to an explored subtree.
    fn run(&mut self, cells: Cells, fixed: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, fixed);
        };
        let depth = fixed.len();
        let cell = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                let roots = self.orbits(fixed);
                if explored.iter().any(|&w| roots[w] == roots[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            fixed.push(v);
            let jump = self.run(next, fixed);
            fixed.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Canonical labelling: `label[v]` is the position of `v` in the canonical graph.
fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    // Start from cells ordered by degree, which refinement would produce anyway.
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search.run(by_degree.into_values().collect(), &mut Vec::new());
    search.best.expect("at least one leaf").label
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

/// Byte string equal for two graphs exactly when they are isomorphic:
/// vertex count, then the canonical adjacency rows.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let c = canonical_graph(g);
    let width = c.n().div_ceil(8);
    let mut out = Vec::with_capacity(1 + width * c.n());
    out.push(c.n() as u8);
    for v in 0..c.n() {
        out.extend_from_slice(&c.neighbors(v).to_le_bytes()[..width]);
    }
    out
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let degs = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    degs(a) == degs(b) && canonical_form(a) == canonical_form(b)
}

/// One isomorphism class of `F - e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDeletion {
    /// The graph `F - e` for the first edge `e` of the class.
    pub graph: Graph,
    /// Every edge of `F` whose deletion lands in this class, lexicographic.
    pub edges: Vec<(usize, usize)>,
}

impl EdgeDeletion {
    pub fn edge(&self) -> (usize, usize) {
        self.edges[0]
    }
}

/// `F - e` for every edge `e`, one representative per isomorphism class, in
/// order of first appearance. Vertices are kept even when they become isolated.
pub fn edge_deletions_up_to_iso(f: &Graph) -> Result<Vec<EdgeDeletion>> {
    if f.edge_count() == 0 {
        return Err(Error::Validation("graph has no edges to delete".into()));
    }
    let mut out: Vec<EdgeDeletion> = Vec::new();
    let mut forms: Vec<Vec<u8>> = Vec::new();
    for (u, v) in f.edges() {
        let g = f.without_edge(u, v);
        let form = canonical_form(&g);
        match forms.iter().position(|x| *x == form) {
            Some(i) => out[i].edges.push((u, v)),
            None => {
                forms.push(form);
                out.push(EdgeDeletion {
                    graph: g,
                    edges: vec![(u, v)],
                });
            }
        }
    }
    Ok(out)
}
