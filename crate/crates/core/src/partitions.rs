//! t-admissible partitions, quotient graphs and the partition lower bound
//! `th(F) >= (c_t(F) - 1) t + 1`.
//!
//! Partitions are enumerated as restricted-growth strings. A vertex joins a
//! block only if the block stays within the size cap and no pair of blocks
//! gets a second crossing edge, so inadmissible prefixes are cut immediately.

use serde::Serialize;

use crate::graph::{bit, chromatic_number, Graph};
use crate::{Error, Result};

/// Largest graph accepted by the partition enumeration (Bell-number growth).
pub const MAX_PARTITION_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    cap: usize,
}

impl VertexPartition {
    /// Blocks must be nonempty, pairwise disjoint and of size at most `cap`.
    /// Vertices are sorted inside each block; block order is kept.
    pub fn new(blocks: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::Validation("block size cap must be positive".into()));
        }
        let mut seen = 0u64;
        let mut sorted = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::Validation("empty block".into()));
            }
            if b.len() > cap {
                return Err(Error::Validation(format!(
                    "block of size {} exceeds cap {cap}",
                    b.len()
                )));
            }
            for &v in &b {
                if v >= 64 || seen & bit(v) != 0 {
                    return Err(Error::Validation(format!("vertex {v} repeated or out of range")));
                }
                seen |= bit(v);
            }
            b.sort_unstable();
            sorted.push(b);
        }
        Ok(VertexPartition {
            blocks: sorted,
            cap,
        })
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            cap: 1,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn max_block(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn block_of(&self, n: usize) -> Result<Vec<usize>> {
        let mut owner = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                if v >= n {
                    return Err(Error::Validation(format!(
                        "vertex {v} is not a vertex of a {n}-vertex graph"
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Validation(format!("vertex {v} is in no block")));
        }
        Ok(owner)
    }

    fn crossing_counts(&self, f: &Graph) -> Result<Vec<Vec<usize>>> {
        let owner = self.block_of(f.n())?;
        let k = self.blocks.len();
        let mut count = vec![vec![0usize; k]; k];
        for (u, v) in f.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != b {
                count[a][b] += 1;
                count[b][a] += 1;
            }
        }
        Ok(count)
    }
}

/// Every pair of distinct blocks has at most one crossing edge of `f`.
pub fn is_admissible(f: &Graph, p: &VertexPartition) -> Result<bool> {
    let count = p.crossing_counts(f)?;
    Ok(count.iter().flatten().all(|&c| c <= 1))
}

/// `F(P)`: blocks as vertices, adjacent when an edge of `f` crosses them.
pub fn quotient(f: &Graph, p: &VertexPartition) -> Result<Graph> {
    let count = p.crossing_counts(f)?;
    if count.iter().flatten().any(|&c| c > 1) {
        return Err(Error::Contract(
            "quotient is only defined for admissible partitions".into(),
        ));
    }
    let k = p.blocks.len();
    let mut q = Graph::try_new(k)?;
    for a in 0..k {
        for b in a + 1..k {
            if count[a][b] == 1 {
                q.add_edge(a, b);
            }
        }
    }
    Ok(q)
}

/// Smallest quotient chromatic number among admissible partitions whose
/// largest block has exactly `s` vertices, for every `s`.
#[derive(Debug, Clone)]
struct ByMaxBlock {
    best: Vec<Option<(usize, VertexPartition)>>,
}

fn guard(f: &Graph) -> Result<()> {
    if f.n() > MAX_PARTITION_VERTICES {
        return Err(Error::TooLarge(format!(
            "partition enumeration supports at most {MAX_PARTITION_VERTICES} vertices, got {}",
            f.n()
        )));
    }
    Ok(())
}

fn enumerate(f: &Graph, cap: usize) -> ByMaxBlock {
    struct State<'a> {
        f: &'a Graph,
        cap: usize,
        owner: Vec<usize>,
        blocks: Vec<u64>,
        cross: Vec<Vec<u8>>,
        best: Vec<Option<(usize, VertexPartition)>>,
    }

    impl State<'_> {
        fn leaf(&mut self) {
            let k = self.blocks.len();
            let mut q = Graph::new(k);
            for a in 0..k {
                for b in a + 1..k {
                    if self.cross[a][b] == 1 {
                        q.add_edge(a, b);
                    }
                }
            }
            let s = self.blocks.iter().map(|b| b.count_ones() as usize).max().unwrap_or(0);
            let chi = chromatic_number(&q);
            if self.best[s].as_ref().is_none_or(|(c, _)| chi < *c) {
                let blocks = self
                    .blocks
                    .iter()
                    .map(|&b| crate::graph::bits(b).collect())
                    .collect();
                let p = VertexPartition::new(blocks, self.cap).expect("valid by construction");
                self.best[s] = Some((chi, p));
            }
        }

        fn place(&mut self, v: usize) {
            if v == self.f.n() {
                self.leaf();
                return;
            }
            let k = self.blocks.len();
            for b in 0..=k {
                if b < k && self.blocks[b].count_ones() as usize >= self.cap {
                    continue;
                }
                if b == k {
                    self.blocks.push(0);
                    for row in &mut self.cross {
                        row.push(0);
                    }
                    self.cross.push(vec![0; k + 1]);
                }
                // crossing edges to earlier vertices in other blocks
                let mut ok = true;
                let mut touched = Vec::new();
                for u in crate::graph::bits(self.f.neighbors(v) & (bit(v) - 1)) {
                    let other = self.owner[u];
                    if other == b {
                        continue;
                    }
                    self.cross[b][other] += 1;
                    self.cross[other][b] += 1;
                    touched.push(other);
                    if self.cross[b][other] > 1 {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    self.blocks[b] |= bit(v);
                    self.owner[v] = b;
                    self.place(v + 1);
                    self.blocks[b] &= !bit(v);
                    self.owner[v] = usize::MAX;
                }
                for other in touched {
                    self.cross[b][other] -= 1;
                    self.cross[other][b] -= 1;
                }
                if b == k {
                    self.blocks.pop();
                    self.cross.pop();
                    for row in &mut self.cross {
                        row.pop();
                    }
                }
            }
        }
    }

    let mut st = State {
        f,
        cap,
        owner: vec![usize::MAX; f.n()],
        blocks: Vec::new(),
        cross: Vec::new(),
        best: vec![None; f.n() + 1],
    };
    st.place(0);
    ByMaxBlock { best: st.best }
}

impl ByMaxBlock {
    /// `c_t` together with a partition attaining it.
    fn c_t(&self, t: usize) -> Option<(usize, VertexPartition)> {
        let mut out: Option<(usize, VertexPartition)> = None;
        for entry in self.best.iter().take(t + 1).flatten() {
            if out.as_ref().is_none_or(|(c, _)| entry.0 < *c) {
                out = Some(entry.clone());
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CtResult {
    pub t: usize,
    pub value: usize,
    /// An admissible partition whose quotient has chromatic number `value`.
    pub partition: VertexPartition,
}

/// `c_t(F)`: minimum chromatic number of `F(P)` over t-admissible partitions `P`.
pub fn c_t(f: &Graph, t: usize) -> Result<CtResult> {
    if t == 0 {
        return Err(Error::Validation("t must be at least 1".into()));
    }
    guard(f)?;
    let cap = t.min(f.n().max(1));
    let table = enumerate(f, cap);
    let (value, mut partition) = table.c_t(cap).expect("singleton partition is admissible");
    partition.cap = t;
    Ok(CtResult { t, value, partition })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum LowerProvenance {
    /// `(c_t - 1) t + 1` from an admissible partition with `c_t >= 3`.
    #[serde(rename = "theorem-10")]
    Partition {
        t: usize,
        c_t: usize,
        partition: VertexPartition,
    },
    /// Floor of 3 for non-bipartite graphs (quadratic Turán number at r = 2).
    TrivialNonbipartite,
    TrivialBipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub provenance: LowerProvenance,
}

fn trivial_floor(f: &Graph) -> LowerBound {
    if chromatic_number(f) >= 3 {
        LowerBound {
            value: 3,
            provenance: LowerProvenance::TrivialNonbipartite,
        }
    } else {
        LowerBound {
            value: 2,
            provenance: LowerProvenance::TrivialBipartite,
        }
    }
}

/// Best partition lower bound over `1 <= t <= |V(F)| - 1` with `c_t(F) >= 3`,
/// or the trivial floor when no `t` qualifies. Ties go to the smallest `t`.
pub fn gmt_lower_bound(f: &Graph) -> Result<LowerBound> {
    guard(f)?;
    let n = f.n();
    if n < 2 {
        return Ok(trivial_floor(f));
    }
    let table = enumerate(f, n - 1);
    let mut best: Option<LowerBound> = None;
    for t in 1..n {
        let (c, mut partition) = table.c_t(t).expect("singletons are admissible");
        if c < 3 {
            continue;
        }
        let value = (c - 1) * t + 1;
        if best.as_ref().is_none_or(|b| value > b.value) {
            partition.cap = t;
            best = Some(LowerBound {
                value,
                provenance: LowerProvenance::Partition { t, c_t: c, partition },
            });
        }
    }
    Ok(best.unwrap_or_else(|| trivial_floor(f)))
}

/// Cone structure: a vertex adjacent to all others whose removal leaves a
/// connected graph, or a bipartite graph with at least two components that
/// contain an edge. When it exists the partition bound reaches
/// `(χ(F) - 1)(|V(F)| - 1) + 1`.
pub fn cone_apex(f: &Graph) -> Option<usize> {
    if f.n() < 2 {
        return None;
    }
    f.dominating_vertices().into_iter().find(|&v| {
        let base = f.delete_vertex(v);
        if base.is_connected() {
            return true;
        }
        base.is_bipartite()
            && base
                .components()
                .iter()
                .filter(|&&c| c.count_ones() > 1)
                .count()
                >= 2
    })
}

pub fn cone_lower_applies(f: &Graph) -> bool {
    cone_apex(f).is_some()
}

/// The partition bound at `t = |V(F)| - 1` for cone graphs, which needs no
/// enumeration: every admissible partition then has quotient chromatic
/// number at least `χ(F)`.
pub fn cone_lower_bound(f: &Graph) -> Option<LowerBound> {
    cone_apex(f)?;
    let chi = chromatic_number(f);
    if chi < 3 {
        return None;
    }
    let t = f.n() - 1;
    let mut partition = VertexPartition::singletons(f.n());
    partition.cap = t;
    Some(LowerBound {
        value: (chi - 1) * t + 1,
        provenance: LowerProvenance::Partition { t, c_t: chi, partition },
    })
}

/// `(χ(F) - 1)(|V(F)| - 1) + 1`.
pub fn chvatal_value(f: &Graph) -> usize {
    (chromatic_number(f).saturating_sub(1)) * f.n().saturating_sub(1) + 1
}
