//! Exact Turán-type numbers at small orders.
//!
//! Graph quantities maximise over the `F`-free graphs on `n` vertices taken up
//! to isomorphism. Hypergraph quantities search simple `r`-uniform families
//! directly. Among optimal hosts the witness is the first one met: fewest
//! edges and then least canonical form for graphs, the include-first search
//! order for hypergraphs.

mod cover;
mod enumerate;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::berge::{heaviness_profile, is_berge_free, shadow_graph, Hypergraph};
use crate::graph::{contains_subgraph, count_copies, Graph};
use crate::{Error, Result, SearchBudget};

pub use cover::{cover_number, is_cover, Cover};

use enumerate::{best_free_hypergraph, free_graphs, Goal};

/// Largest `n` for graph searches without `allow_large`.
pub const GRAPH_LIMIT: usize = 8;
/// Largest `n` for hypergraph searches with `r >= 3` without `allow_large`.
pub const HYPERGRAPH_LIMIT: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalOptions {
    pub budget: SearchBudget,
    /// Lifts the size guards.
    pub allow_large: bool,
}

impl Default for ExtremalOptions {
    fn default() -> Self {
        ExtremalOptions {
            budget: SearchBudget::default(),
            allow_large: false,
        }
    }
}

impl From<SearchBudget> for ExtremalOptions {
    fn from(budget: SearchBudget) -> Self {
        ExtremalOptions {
            budget,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    TuranEx,
    GenTuranEx,
    BergeEx,
    CoverTuranX,
    BergeShadowMaxCopies,
    BergeCoverTuran,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::TuranEx => "turan_ex",
            Quantity::GenTuranEx => "gen_turan_ex",
            Quantity::BergeEx => "berge_ex",
            Quantity::CoverTuranX => "cover_turan_x",
            Quantity::BergeShadowMaxCopies => "berge_shadow_max_copies",
            Quantity::BergeCoverTuran => "berge_cover_turan",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub r: Option<usize>,
    pub n: usize,
    pub h: Option<Graph>,
    pub f: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub quantity: Quantity,
    pub params: Params,
    pub value: u64,
    pub witness: Witness,
    /// `false` when the budget ran out; `value` is then only a lower bound.
    pub complete: bool,
    pub nodes: u64,
}

impl ExtremalResult {
    /// Rechecks freeness of the witness and the value it attains.
    pub fn verify(&self) -> Result<bool> {
        let p = &self.params;
        let h = p.h.as_ref();
        Ok(match (&self.witness, self.quantity) {
            (Witness::Graph(g), q) => {
                if contains_subgraph(&p.f, g) {
                    return Ok(false);
                }
                let attained = match q {
                    Quantity::TuranEx | Quantity::BergeEx => g.edge_count() as u64,
                    Quantity::GenTuranEx | Quantity::BergeShadowMaxCopies => {
                        count_copies(h.expect("pattern"), g)
                    }
                    Quantity::CoverTuranX | Quantity::BergeCoverTuran => {
                        cover_number(h.expect("pattern"), g)?.size as u64
                    }
                };
                attained == self.value
            }
            (Witness::Hypergraph(hg), q) => {
                if !is_berge_free(&p.f, hg) || hg.uniformity().is_some_and(|u| Some(u) != p.r) {
                    return Ok(false);
                }
                let attained = match q {
                    Quantity::BergeEx => hg.len() as u64,
                    Quantity::BergeShadowMaxCopies => count_copies(h.expect("pattern"), &shadow_graph(hg)),
                    Quantity::BergeCoverTuran => cover_number(h.expect("pattern"), &shadow_graph(hg))?.size as u64,
                    _ => return Ok(false),
                };
                attained == self.value
            }
        })
    }

    fn checked(self) -> Result<Self> {
        if !self.verify()? {
            return Err(Error::Contract(format!(
                "{} witness failed re-verification",
                self.quantity
            )));
        }
        Ok(self)
    }
}

fn check_graph_args(n: usize, f: &Graph, opts: &ExtremalOptions) -> Result<()> {
    if n == 0 {
        return Err(Error::Validation("n must be at least 1".into()));
    }
    if f.edge_count() == 0 {
        return Err(Error::Validation("forbidden graph must have an edge".into()));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge(format!("n = {n}")));
    }
    if n > GRAPH_LIMIT && !opts.allow_large {
        return Err(Error::TooLarge(format!(
            "graph searches are limited to n <= {GRAPH_LIMIT} unless explicitly allowed"
        )));
    }
    Ok(())
}

fn check_hyper_args(r: usize, n: usize, f: &Graph, opts: &ExtremalOptions) -> Result<()> {
    if r < 2 || n < r {
        return Err(Error::Validation(format!("need r >= 2 and n >= r, got r = {r}, n = {n}")));
    }
    if f.edge_count() == 0 {
        return Err(Error::Validation("forbidden graph must have an edge".into()));
    }
    let limit = if r == 2 { GRAPH_LIMIT } else { HYPERGRAPH_LIMIT };
    if n > limit && !opts.allow_large {
        return Err(Error::TooLarge(format!(
            "{r}-uniform searches are limited to n <= {limit} unless explicitly allowed"
        )));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge(format!("n = {n}")));
    }
    Ok(())
}

/// Maximum of `score` over the `f`-free graphs on `n` vertices.
fn graph_max<S>(quantity: Quantity, params: Params, opts: &ExtremalOptions, score: S) -> Result<ExtremalResult>
where
    S: Fn(&Graph) -> Result<u64> + Sync,
{
    check_graph_args(params.n, &params.f, opts)?;
    let free = free_graphs(params.n, &params.f, &opts.budget);
    let scores: Vec<u64> = free.graphs.par_iter().map(&score).collect::<Result<_>>()?;
    let mut best = 0;
    for (i, &s) in scores.iter().enumerate() {
        if s > scores[best] {
            best = i;
        }
    }
    ExtremalResult {
        quantity,
        params,
        value: scores[best],
        witness: Witness::Graph(free.graphs[best].clone()),
        complete: free.complete,
        nodes: free.nodes,
    }
    .checked()
}

/// `ex(n, F)`: most edges in an `F`-free graph on `n` vertices.
pub fn turan_ex(n: usize, f: &Graph, opts: &ExtremalOptions) -> Result<ExtremalResult> {
    let params = Params { r: None, n, h: None, f: f.clone() };
    graph_max(Quantity::TuranEx, params, opts, |g| Ok(g.edge_count() as u64))
}

/// `ex(n, H, F)`: most copies of `H` in an `F`-free graph on `n` vertices.
pub fn gen_turan_ex(n: usize, h: &Graph, f: &Graph, opts: &ExtremalOptions) -> Result<ExtremalResult> {
    let params = Params { r: None, n, h: Some(h.clone()), f: f.clone() };
    graph_max(Quantity::GenTuranEx, params, opts, |g| Ok(count_copies(h, g)))
}

/// `x(n, H, F)`: largest cover number `C(H, G)` over `F`-free `G` on `n` vertices.
pub fn cover_turan_x(n: usize, h: &Graph, f: &Graph, opts: &ExtremalOptions) -> Result<ExtremalResult> {
    let params = Params { r: None, n, h: Some(h.clone()), f: f.clone() };
    graph_max(Quantity::CoverTuranX, params, opts, |g| Ok(cover_number(h, g)?.size as u64))
}

/// Reuses a graph result for the 2-uniform case of a hypergraph quantity.
fn as_two_uniform(mut res: ExtremalResult, quantity: Quantity) -> Result<ExtremalResult> {
    res.quantity = quantity;
    res.params.r = Some(2);
    if let Witness::Graph(g) = &res.witness {
        res.witness = Witness::Hypergraph(Hypergraph::from_graph(g));
    }
    res.checked()
}

fn hyper_max(
    quantity: Quantity,
    params: Params,
    opts: &ExtremalOptions,
    goal: Goal<'_>,
) -> Result<ExtremalResult> {
    let r = params.r.expect("hypergraph quantity");
    let best = best_free_hypergraph(r, params.n, &params.f, goal, &opts.budget);
    ExtremalResult {
        quantity,
        params,
        value: best.value,
        witness: Witness::Hypergraph(best.witness),
        complete: best.complete,
        nodes: best.nodes,
    }
    .checked()
}

/// `ex_r(n, Berge-F)` over simple `r`-uniform hypergraphs.
pub fn berge_ex(r: usize, n: usize, f: &Graph, opts: &ExtremalOptions) -> Result<ExtremalResult> {
    check_hyper_args(r, n, f, opts)?;
    if r == 2 {
        return as_two_uniform(turan_ex(n, f, opts)?, Quantity::BergeEx);
    }
    let params = Params { r: Some(r), n, h: None, f: f.clone() };
    hyper_max(Quantity::BergeEx, params, opts, Goal::Size)
}

/// Most copies of `H` in the shadow of a simple Berge-`F`-free `r`-uniform
/// hypergraph on `n` vertices.
pub fn berge_shadow_max_copies(
    r: usize,
    n: usize,
    h: &Graph,
    f: &Graph,
    opts: &ExtremalOptions,
) -> Result<ExtremalResult> {
    check_hyper_args(r, n, f, opts)?;
    if r == 2 {
        return as_two_uniform(gen_turan_ex(n, h, f, opts)?, Quantity::BergeShadowMaxCopies);
    }
    let score = |hg: &Hypergraph| count_copies(h, &shadow_graph(hg));
    let params = Params { r: Some(r), n, h: Some(h.clone()), f: f.clone() };
    hyper_max(Quantity::BergeShadowMaxCopies, params, opts, Goal::Score(&score))
}

/// Largest `C(H, shadow)` over simple Berge-`F`-free `r`-uniform hypergraphs
/// on `n` vertices.
pub fn berge_cover_turan(
    r: usize,
    n: usize,
    h: &Graph,
    f: &Graph,
    opts: &ExtremalOptions,
) -> Result<ExtremalResult> {
    check_hyper_args(r, n, f, opts)?;
    if h.edge_count() == 0 {
        return Err(Error::Validation("pattern must have an edge".into()));
    }
    if r == 2 {
        return as_two_uniform(cover_turan_x(n, h, f, opts)?, Quantity::BergeCoverTuran);
    }
    let score = |hg: &Hypergraph| {
        cover_number(h, &shadow_graph(hg)).expect("pattern has an edge").size as u64
    };
    let params = Params { r: Some(r), n, h: Some(h.clone()), f: f.clone() };
    hyper_max(Quantity::BergeCoverTuran, params, opts, Goal::Score(&score))
}

/// Hyperedges `e` of `hg` such that the `t`-light shadow edges inside `e`
/// contain a copy of `h`.
pub fn count_light_h_hyperedges(hg: &Hypergraph, h: &Graph, t: usize) -> Result<usize> {
    let light = heaviness_profile(hg, t)?.light_graph();
    Ok(hg
        .edge_masks()
        .iter()
        .filter(|&&e| contains_subgraph(h, &light.induced(e)))
        .count())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub r: usize,
    pub n: usize,
    /// `ex(n, K_r, F)`.
    pub clique_count: ExtremalResult,
    /// `ex_r(n, Berge-F)`.
    pub berge: ExtremalResult,
    /// `ex(n, F)`.
    pub turan: ExtremalResult,
    /// `binom(r, 2)^{|E(F)|}`: the inverse of the chance that a fixed copy of
    /// `F` in the shadow survives when each hyperedge keeps one random pair.
    pub sampling_factor: u128,
    /// `None` when some quantity was cut off by the budget.
    pub holds: Option<bool>,
}

/// Checks `ex(n, K_r, F) <= ex_r(n, Berge-F) <= ex(n, K_r, F) + ex(n, F)`
/// on exactly computed values.
pub fn verify_gp_sandwich(r: usize, n: usize, f: &Graph, opts: &ExtremalOptions) -> Result<SandwichReport> {
    check_hyper_args(r, n, f, opts)?;
    let clique_count = gen_turan_ex(n, &Graph::complete(r), f, opts)?;
    let berge = berge_ex(r, n, f, opts)?;
    let turan = turan_ex(n, f, opts)?;
    let complete = clique_count.complete && berge.complete && turan.complete;
    let holds = complete.then(|| {
        clique_count.value <= berge.value && berge.value <= clique_count.value + turan.value
    });
    let pairs = (r * (r - 1) / 2) as u128;
    let sampling_factor = u32::try_from(f.edge_count())
        .ok()
        .and_then(|e| pairs.checked_pow(e))
        .unwrap_or(u128::MAX);
    Ok(SandwichReport {
        r,
        n,
        clique_count,
        berge,
        turan,
        sampling_factor,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn opts() -> ExtremalOptions {
        ExtremalOptions::default()
    }

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
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

    #[test]
    fn mantel() {
        for n in 3..=7 {
            let r = turan_ex(n, &k(3), &opts()).unwrap();
            assert!(r.complete);
            assert_eq!(r.value, (n * n / 4) as u64, "n = {n}");
        }
        let r = turan_ex(5, &k(3), &opts()).unwrap();
        let Witness::Graph(g) = &r.witness else { panic!() };
        assert!(crate::graph::is_isomorphic(g, &Graph::complete_bipartite(2, 3)));
        assert_eq!(turan_ex(6, &k(2), &opts()).unwrap().value, 0);
    }

    #[test]
    fn graph_quantities_match_naive_enumeration() {
        let forb = [k(3), k(4), Graph::cycle(4), Graph::path(3)];
        let pats = [k(2), k(3), Graph::path(3)];
        for n in 1..=5 {
            for f in &forb {
                let free: Vec<Graph> = all_graphs(n).filter(|g| !contains_subgraph(f, g)).collect();
                let ex = free.iter().map(|g| g.edge_count() as u64).max().unwrap();
                assert_eq!(turan_ex(n, f, &opts()).unwrap().value, ex);
                for h in &pats {
                    let gen = free.iter().map(|g| count_copies(h, g)).max().unwrap();
                    assert_eq!(gen_turan_ex(n, h, f, &opts()).unwrap().value, gen);
                    let x = free
                        .iter()
                        .map(|g| cover_number(h, g).unwrap().size as u64)
                        .max()
                        .unwrap();
                    assert_eq!(cover_turan_x(n, h, f, &opts()).unwrap().value, x);
                }
            }
        }
    }

    #[test]
    fn generalized_and_cover_examples() {
        let r = gen_turan_ex(4, &k(3), &k(4), &opts()).unwrap();
        assert_eq!(r.value, 2);
        let Witness::Graph(g) = &r.witness else { panic!() };
        assert!(crate::graph::is_isomorphic(g, &k(4).without_edge(0, 1)));
        assert_eq!(gen_turan_ex(5, &k(3), &k(3), &opts()).unwrap().value, 0);
        assert_eq!(
            gen_turan_ex(6, &k(2), &Graph::cycle(4), &opts()).unwrap().value,
            turan_ex(6, &Graph::cycle(4), &opts()).unwrap().value
        );
        assert_eq!(cover_turan_x(3, &k(3), &k(4), &opts()).unwrap().value, 1);
        assert_eq!(cover_turan_x(6, &k(3), &k(3), &opts()).unwrap().value, 0);
    }

    #[test]
    fn berge_examples() {
        let r = berge_ex(3, 4, &k(3), &opts()).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.complete);
        let r5 = berge_ex(3, 5, &k(3), &opts()).unwrap();
        assert!(r5.verify().unwrap());
        for n in 3..=6 {
            assert_eq!(
                berge_ex(2, n, &k(3), &opts()).unwrap().value,
                turan_ex(n, &k(3), &opts()).unwrap().value
            );
        }
        assert!(berge_ex(3, 2, &k(3), &opts()).is_err());
        assert!(matches!(berge_ex(3, 6, &k(3), &opts()), Err(Error::TooLarge(_))));
        let big = ExtremalOptions { allow_large: true, ..opts() };
        assert!(berge_ex(3, 6, &k(3), &big).is_ok());
    }

    #[test]
    fn shadow_quantities() {
        let r = berge_shadow_max_copies(3, 4, &k(3), &k(3), &opts()).unwrap();
        assert!(r.verify().unwrap());
        // two triples on four vertices have shadow K_4 minus an edge
        assert_eq!(r.value, 2);
        assert_eq!(berge_shadow_max_copies(3, 4, &k(5), &k(3), &opts()).unwrap().value, 0);
        assert_eq!(
            berge_shadow_max_copies(2, 5, &k(3), &k(4), &opts()).unwrap().value,
            gen_turan_ex(5, &k(3), &k(4), &opts()).unwrap().value
        );
        assert_eq!(
            berge_cover_turan(2, 5, &k(3), &k(4), &opts()).unwrap().value,
            cover_turan_x(5, &k(3), &k(4), &opts()).unwrap().value
        );
        let x = berge_cover_turan(3, 4, &k(3), &k(3), &opts()).unwrap();
        assert_eq!(x.value, 1);
    }

    #[test]
    fn light_counts() {
        let h = Hypergraph::from_edges(3, [[0usize, 1, 2]]).unwrap();
        assert_eq!(count_light_h_hyperedges(&h, &k(3), 2).unwrap(), 1);
        assert_eq!(count_light_h_hyperedges(&h, &k(3), 1).unwrap(), 0);
        assert!(count_light_h_hyperedges(&h, &k(3), 0).is_err());
    }

    #[test]
    fn sandwich() {
        let rep = verify_gp_sandwich(3, 4, &k(3), &opts()).unwrap();
        assert_eq!(
            (rep.clique_count.value, rep.berge.value, rep.turan.value),
            (0, 2, 4)
        );
        assert_eq!(rep.holds, Some(true));
        assert_eq!(rep.sampling_factor, 27);
        let rep = verify_gp_sandwich(2, 5, &Graph::cycle(4), &opts()).unwrap();
        assert_eq!(rep.berge.value, rep.turan.value);
        assert_eq!(rep.holds, Some(true));
        let b2 = FamilySpec::Book { t: 2 }.build().unwrap();
        assert_eq!(verify_gp_sandwich(3, 5, &b2, &opts()).unwrap().holds, Some(true));
    }

    #[test]
    fn exhausted_budget_is_flagged() {
        let tiny = ExtremalOptions::from(SearchBudget::nodes(3).unwrap());
        let r = turan_ex(6, &k(3), &tiny).unwrap();
        assert!(!r.complete);
        assert!(r.verify().unwrap());
        let r = berge_ex(3, 5, &k(3), &tiny).unwrap();
        assert!(!r.complete);
        let rep = verify_gp_sandwich(3, 5, &k(3), &tiny).unwrap();
        assert_eq!(rep.holds, None);
    }
}
