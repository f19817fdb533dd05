//! Two-colour Ramsey numbers `R(H, G)` for small graphs.
//!
//! `ramsey_avoidable` decides whether some blue/red colouring of `K_n` has
//! neither a blue `H` nor a red `G`. Pairs are coloured in lexicographic
//! order and a branch dies as soon as the last coloured pair completes a
//! monochromatic copy. Vertex 0 is normalised: its blue neighbours are
//! `1..=d` for some `d`, which splits the search into `n` independent branches.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{contains_subgraph, contains_subgraph_through, Graph};
use crate::{Budget, Error, Result, SearchBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

/// A complete blue/red colouring of the pairs of `0..n`; blue pairs are the
/// edges of `blue`, every other pair is red.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    blue: Graph,
}

impl TwoColoring {
    pub fn from_blue(blue: Graph) -> Self {
        TwoColoring { blue }
    }

    pub fn n(&self) -> usize {
        self.blue.n()
    }

    pub fn color(&self, u: usize, v: usize) -> Color {
        if self.blue.has_edge(u, v) {
            Color::Blue
        } else {
            Color::Red
        }
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    pub fn red(&self) -> Graph {
        self.blue.complement()
    }

    /// No blue `h` and no red `g`.
    pub fn avoids(&self, h: &Graph, g: &Graph) -> bool {
        !contains_subgraph(h, &self.blue) && !contains_subgraph(g, &self.red())
    }
}

/// `n` on the first line, then `u v color` for every pair `u < v`.
impl fmt::Display for TwoColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                let c = match self.color(u, v) {
                    Color::Blue => "blue",
                    Color::Red => "red",
                };
                writeln!(f, "{u} {v} {c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for TwoColoring {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, first) = lines.next().ok_or_else(|| Error::line(1, "missing vertex count"))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::line(ln, format!("bad vertex count {first:?}")))?;
        let mut blue = Graph::try_new(n).map_err(|e| Error::line(ln, e.to_string()))?;
        let mut seen = vec![vec![false; n]; n];
        let mut count = 0;
        for (ln, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [u, v, c] = toks[..] else {
                return Err(Error::line(ln, "expected \"u v color\""));
            };
            let parse = |s: &str| {
                s.parse::<usize>()
                    .ok()
                    .filter(|&x| x < n)
                    .ok_or_else(|| Error::line(ln, format!("bad vertex {s:?}")))
            };
            let (u, v) = (parse(u)?, parse(v)?);
            if u == v || seen[u][v] {
                return Err(Error::line(ln, format!("pair {u} {v} repeated or a loop")));
            }
            seen[u][v] = true;
            seen[v][u] = true;
            count += 1;
            match c {
                "blue" => blue.add_edge(u, v),
                "red" => {}
                other => return Err(Error::line(ln, format!("unknown colour {other:?}"))),
            }
        }
        if count != n * n.saturating_sub(1) / 2 {
            return Err(Error::line(
                text.lines().count().max(1),
                format!("{count} pairs coloured, expected {}", n * n.saturating_sub(1) / 2),
            ));
        }
        Ok(TwoColoring { blue })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Avoidable {
    Witness { coloring: TwoColoring, nodes: u64 },
    Impossible { nodes: u64 },
    BudgetExhausted { nodes: u64 },
}

impl Avoidable {
    pub fn nodes(&self) -> u64 {
        match self {
            Avoidable::Witness { nodes, .. }
            | Avoidable::Impossible { nodes }
            | Avoidable::BudgetExhausted { nodes } => *nodes,
        }
    }
}

enum Branch {
    Found(TwoColoring),
    Exhausted,
    Done,
}

struct Search<'a> {
    h: &'a Graph,
    g: &'a Graph,
    pairs: Vec<(usize, usize)>,
    blue: Graph,
    red: Graph,
    budget: Budget,
}

impl Search<'_> {
    /// Colours `(u, v)` and reports whether that completes a forbidden copy.
    fn set(&mut self, u: usize, v: usize, color: Color) -> bool {
        match color {
            Color::Blue => {
                self.blue.add_edge(u, v);
                contains_subgraph_through(self.h, &self.blue, u, v)
            }
            Color::Red => {
                self.red.add_edge(u, v);
                contains_subgraph_through(self.g, &self.red, u, v)
            }
        }
    }

    fn unset(&mut self, u: usize, v: usize) {
        self.blue.remove_edge(u, v);
        self.red.remove_edge(u, v);
    }

    fn run(&mut self, k: usize) -> Branch {
        if k == self.pairs.len() {
            return Branch::Found(TwoColoring {
                blue: self.blue.clone(),
            });
        }
        let (u, v) = self.pairs[k];
        for color in [Color::Blue, Color::Red] {
            if !self.budget.tick() {
                return Branch::Exhausted;
            }
            let bad = self.set(u, v, color);
            if !bad {
                match self.run(k + 1) {
                    Branch::Done => {}
                    other => {
                        self.unset(u, v);
                        return other;
                    }
                }
            }
            self.unset(u, v);
        }
        Branch::Done
    }
}

/// Runs the branch where vertex 0 has blue neighbours exactly `1..=d`.
fn run_branch(h: &Graph, g: &Graph, n: usize, d: usize, budget: &SearchBudget) -> (Branch, u64) {
    let mut s = Search {
        h,
        g,
        pairs: (1..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        blue: Graph::new(n),
        red: Graph::new(n),
        budget: budget.start(),
    };
    for j in 1..n {
        if !s.budget.tick() {
            return (Branch::Exhausted, s.budget.used());
        }
        let color = if j <= d { Color::Blue } else { Color::Red };
        if s.set(0, j, color) {
            return (Branch::Done, s.budget.used());
        }
    }
    let out = s.run(0);
    (out, s.budget.used())
}

/// Is there a colouring of `K_n` with no blue `h` and no red `g`?
///
/// The verdict and node count equal those of running the `n` vertex-0
/// branches one after another with a shared budget; branches are evaluated
/// in parallel but each is replayed against the budget left by its
/// predecessors, so the thread count never changes the answer.
pub fn ramsey_avoidable(h: &Graph, g: &Graph, n: usize, budget: &SearchBudget) -> Result<Avoidable> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(Error::Validation(format!(
            "n must be in 1..={}, got {n}",
            crate::graph::MAX_VERTICES
        )));
    }
    if n == 1 {
        let coloring = TwoColoring {
            blue: Graph::new(1),
        };
        return Ok(if coloring.avoids(h, g) {
            Avoidable::Witness { coloring, nodes: 0 }
        } else {
            Avoidable::Impossible { nodes: 0 }
        });
    }
    // d = n-1 down to 0 puts the blue-heavy branches first
    let degrees: Vec<usize> = (0..n).rev().collect();
    let results: Vec<(Branch, u64)> = degrees
        .par_iter()
        .map(|&d| run_branch(h, g, n, d, budget))
        .collect();
    let mut used = 0u64;
    for (branch, nodes) in results {
        let allowance = budget.max_nodes - used;
        if nodes > allowance || (matches!(branch, Branch::Exhausted) && nodes >= allowance) {
            return Ok(Avoidable::BudgetExhausted {
                nodes: budget.max_nodes,
            });
        }
        used += nodes;
        match branch {
            Branch::Found(coloring) => {
                debug_assert!(coloring.avoids(h, g));
                return Ok(Avoidable::Witness { coloring, nodes: used });
            }
            Branch::Exhausted => {
                return Ok(Avoidable::BudgetExhausted { nodes: used });
            }
            Branch::Done => {}
        }
    }
    Ok(Avoidable::Impossible { nodes: used })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RamseyValue {
    Exact { value: usize },
    /// Search ran out: `lo` is one more than the largest verified avoidable
    /// order, the upper end is unknown.
    AtLeast { lo: usize },
}

impl RamseyValue {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            RamseyValue::Exact { value } => Some(value),
            RamseyValue::AtLeast { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match *self {
            RamseyValue::Exact { value } => value,
            RamseyValue::AtLeast { lo } => lo,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyResult {
    pub value: RamseyValue,
    /// A verified avoiding colouring on `value.lower() - 1` vertices.
    pub witness: TwoColoring,
    pub nodes: u64,
}

/// `R(h, g)`, searching `n` upward from `max(|V(h)|, |V(g)|)`.
pub fn ramsey_number(h: &Graph, g: &Graph, budget: &SearchBudget) -> Result<RamseyResult> {
    if h.edge_count() == 0 || g.edge_count() == 0 {
        return Err(Error::Validation(
            "Ramsey numbers need both graphs to have an edge".into(),
        ));
    }
    let start = h.n().max(g.n());
    // below `start` one colour class is too small to host its graph
    let mut witness = if h.n() == start {
        TwoColoring::from_blue(Graph::complete(start - 1))
    } else {
        TwoColoring::from_blue(Graph::new(start - 1))
    };
    debug_assert!(witness.avoids(h, g));
    let mut used = 0u64;
    for n in start..=crate::graph::MAX_VERTICES {
        let remaining = budget.max_nodes - used;
        if remaining == 0 {
            return Ok(RamseyResult {
                value: RamseyValue::AtLeast { lo: n },
                witness,
                nodes: used,
            });
        }
        let step = SearchBudget {
            max_nodes: remaining,
            max_seconds: budget.max_seconds,
        };
        match ramsey_avoidable(h, g, n, &step)? {
            Avoidable::Witness { coloring, nodes } => {
                used += nodes;
                witness = coloring;
            }
            Avoidable::Impossible { nodes } => {
                return Ok(RamseyResult {
                    value: RamseyValue::Exact { value: n },
                    witness,
                    nodes: used + nodes,
                });
            }
            Avoidable::BudgetExhausted { nodes } => {
                return Ok(RamseyResult {
                    value: RamseyValue::AtLeast { lo: n },
                    witness,
                    nodes: used + nodes,
                });
            }
        }
    }
    Ok(RamseyResult {
        value: RamseyValue::AtLeast {
            lo: crate::graph::MAX_VERTICES + 1,
        },
        witness,
        nodes: used,
    })
}

/// Colouring of `K_{(p-1)(|V(g)|-1)}` whose red graph is `p - 1` disjoint
/// cliques of order `|V(g)| - 1`: no blue `K_p` (pigeonhole over the cliques)
/// and no red `g` (connected, too large for any red component).
pub fn chvatal_witness(g: &Graph, p: usize) -> Result<TwoColoring> {
    if p < 2 {
        return Err(Error::Validation(format!("p must be at least 2, got {p}")));
    }
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Contract(
            "the clique-partition colouring needs a connected graph on at least 2 vertices".into(),
        ));
    }
    let part = g.n() - 1;
    let n = (p - 1) * part;
    let mut blue = Graph::try_new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if u / part != v / part {
                blue.add_edge(u, v);
            }
        }
    }
    Ok(TwoColoring { blue })
}

/// `(p - 1)(|V(g)| - 1) + 1`.
pub fn chvatal_bound(g: &Graph, p: usize) -> usize {
    (p - 1) * (g.n() - 1) + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PGood {
    True,
    False,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PGoodResult {
    pub verdict: PGood,
    /// `(p - 1)(|V(g)| - 1) + 1`.
    pub target: usize,
    /// A colouring of `K_target` avoiding blue `K_p` and red `g`, when one
    /// was found (then `R(K_p, g) > target`).
    pub counterexample: Option<TwoColoring>,
    pub nodes: u64,
}

/// Whether `R(K_p, g) = (p - 1)(|V(g)| - 1) + 1`.
///
/// The clique-partition colouring already shows `R > target - 1`, so only
/// `K_target` has to be searched.
pub fn is_p_good(g: &Graph, p: usize, budget: &SearchBudget) -> Result<PGoodResult> {
    if g.edge_count() == 0 {
        return Err(Error::Validation("graph must have an edge".into()));
    }
    let lower = chvatal_witness(g, p)?;
    debug_assert!(lower.avoids(&Graph::complete(p), g));
    let target = chvatal_bound(g, p);
    let out = match ramsey_avoidable(&Graph::complete(p), g, target, budget)? {
        Avoidable::Impossible { nodes } => PGoodResult {
            verdict: PGood::True,
            target,
            counterexample: None,
            nodes,
        },
        Avoidable::Witness { coloring, nodes } => PGoodResult {
            verdict: PGood::False,
            target,
            counterexample: Some(coloring),
            nodes,
        },
        Avoidable::BudgetExhausted { nodes } => PGoodResult {
            verdict: PGood::Unknown,
            target,
            counterexample: None,
            nodes,
        },
    };
    Ok(out)
}
