//! Lower and upper bounds on the uniformity threshold `th(F)`.
//!
//! Upper bounds come from Ramsey numbers `R(X, F - e)` for a host `X` that
//! `F` maps into (`F` itself, `K_χ(F)`, or a user-supplied graph), from the
//! clique-partition value `(χ(F) - 1)(|V(F)| - 1) + 1` when `F` spans few
//! triangles, and from the closed forms known for fans, books, even wheels
//! and generalized books. [`compose_bounds`] keeps the best of each side.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{
    chromatic_number, edge_deletions_up_to_iso, encode_graph6, has_homomorphism, is_isomorphic,
    FamilySpec, Graph,
};
use crate::partitions::{
    chvatal_value, cone_lower_bound, gmt_lower_bound, LowerBound, LowerProvenance,
    MAX_PARTITION_VERTICES,
};
use crate::ramsey::{ramsey_number, RamseyValue};
use crate::{Error, Result, SearchBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum UpperSource {
    /// `R(K_χ(F), F - e)`.
    #[serde(rename = "theorem-4")]
    CliqueRamsey,
    /// `R(F, F - e)`.
    #[serde(rename = "theorem-3")]
    SelfRamsey,
    /// `R(H, F - e)` for a host `H` with a homomorphism `F -> H`.
    #[serde(rename = "proposition-fo")]
    HostRamsey,
    #[serde(rename = "family-exact")]
    Family,
    /// `(χ(F) - 1)(|V(F)| - 1) + 1` when `ex(n, K_3, F) = o(n^2)`.
    #[serde(rename = "theorem-kicsi")]
    SparseTriangles,
}

/// Where a numeric value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueStatus {
    ComputedExact,
    ClosedFormFamily,
    UserAsserted,
}

/// How the triangle-sparsity condition was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Applicability {
    /// `F` is recognised as a book or a fan.
    FamilyDerived,
    /// The caller vouches for `ex(n, K_3, F) = o(n^2)`.
    Asserted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub source: UpperSource,
    /// `None` when the Ramsey number could not be settled within budget.
    pub value: Option<usize>,
    /// The bounding expression, e.g. `R(K3, F\e)`.
    pub expression: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub host: Option<Graph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<ValueStatus>,
    /// Best known lower end of an unsettled Ramsey number.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ramsey_at_least: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
    pub nodes: u64,
}

impl UpperBound {
    fn closed(source: UpperSource, value: usize, expression: String, status: ValueStatus) -> Self {
        UpperBound {
            source,
            value: Some(value),
            expression,
            edge: None,
            host: None,
            status: Some(status),
            ramsey_at_least: None,
            caveat: None,
            nodes: 0,
        }
    }
}

fn host_name(h: &Graph) -> String {
    let n = h.n();
    if h.edge_count() == n * n.saturating_sub(1) / 2 {
        format!("K{n}")
    } else {
        encode_graph6(h).unwrap_or_else(|_| "H".into())
    }
}

fn check_edge(f: &Graph, e: (usize, usize)) -> Result<()> {
    if e.0 >= f.n() || e.1 >= f.n() || !f.has_edge(e.0, e.1) {
        return Err(Error::Validation(format!("({}, {}) is not an edge of F", e.0, e.1)));
    }
    Ok(())
}

/// `R(host, F - e)` evaluated within `budget`, or left symbolic.
fn ramsey_upper(
    source: UpperSource,
    host: &Graph,
    symbol: &str,
    f: &Graph,
    e: (usize, usize),
    budget: &SearchBudget,
) -> Result<UpperBound> {
    check_edge(f, e)?;
    let rest = f.without_edge(e.0, e.1);
    let edge = Some((e.0.min(e.1), e.0.max(e.1)));
    let mut out = UpperBound {
        source,
        value: None,
        expression: format!("R({symbol}, F\\e)"),
        edge,
        host: (source == UpperSource::HostRamsey).then(|| host.clone()),
        status: None,
        ramsey_at_least: None,
        caveat: None,
        nodes: 0,
    };
    if rest.edge_count() == 0 {
        // a red edgeless graph on |V(F)| vertices is always present, and the
        // all-red colouring of a smaller clique contains neither graph
        out.value = Some(rest.n());
        out.status = Some(ValueStatus::ComputedExact);
        return Ok(out);
    }
    if budget.max_nodes == 0 {
        return Ok(out);
    }
    let r = ramsey_number(host, &rest, budget)?;
    out.nodes = r.nodes;
    match r.value {
        RamseyValue::Exact { value } => {
            out.value = Some(value);
            out.status = Some(ValueStatus::ComputedExact);
        }
        RamseyValue::AtLeast { lo } => out.ramsey_at_least = Some(lo),
    }
    Ok(out)
}

/// `th(F) <= R(F, F - e)`.
pub fn upper_gmt(f: &Graph, e: (usize, usize), budget: &SearchBudget) -> Result<UpperBound> {
    ramsey_upper(UpperSource::SelfRamsey, f, "F", f, e, budget)
}

/// `th(F) <= R(K_χ(F), F - e)`.
pub fn upper_main(f: &Graph, e: (usize, usize), budget: &SearchBudget) -> Result<UpperBound> {
    let k = Graph::complete(chromatic_number(f));
    let name = host_name(&k);
    ramsey_upper(UpperSource::CliqueRamsey, &k, &name, f, e, budget)
}

/// `th(F) <= R(H, F - e)` for `F` inside a blow-up of `H`.
pub fn upper_fo(f: &Graph, h: &Graph, e: (usize, usize), budget: &SearchBudget) -> Result<UpperBound> {
    if !has_homomorphism(f, h) {
        return Err(Error::Contract(
            "F is not a subgraph of a blow-up of H (no homomorphism F -> H)".into(),
        ));
    }
    ramsey_upper(UpperSource::HostRamsey, h, "H", f, e, budget)
}

/// `(χ(F) - 1)(|V(F)| - 1) + 1`, valid once `ex(n, K_3, F) = o(n^2)` is known.
/// Without an assertion this is only accepted for books and fans.
pub fn upper_kicsi(f: &Graph, asserted: bool) -> Result<(UpperBound, Applicability)> {
    let basis = if recognize_families(f)
        .iter()
        .any(|s| matches!(s, FamilySpec::Book { .. } | FamilySpec::Fan { .. }))
    {
        Applicability::FamilyDerived
    } else if asserted {
        Applicability::Asserted
    } else {
        return Err(Error::Contract(
            "the clique-partition upper bound needs ex(n, K3, F) = o(n^2); this is only known \
             here for books and fans, assert it explicitly for other graphs"
                .into(),
        ));
    };
    let status = match basis {
        Applicability::FamilyDerived => ValueStatus::ClosedFormFamily,
        Applicability::Asserted => ValueStatus::UserAsserted,
    };
    let mut ub = UpperBound::closed(
        UpperSource::SparseTriangles,
        chvatal_value(f),
        "(chi(F)-1)(|V(F)|-1)+1".into(),
        status,
    );
    if basis == Applicability::Asserted {
        ub.caveat = Some("relies on the asserted bound ex(n, K3, F) = o(n^2)".into());
    }
    Ok((ub, basis))
}

pub const GENBOOK_CAVEAT: &str = "valid for m large enough; the threshold on m is not quantified";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FamilyThreshold {
    Covered {
        value: usize,
        formula: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        caveat: Option<String>,
    },
    NotCovered {
        reason: String,
    },
}

impl FamilyThreshold {
    pub fn value(&self) -> Option<usize> {
        match self {
            FamilyThreshold::Covered { value, .. } => Some(*value),
            FamilyThreshold::NotCovered { .. } => None,
        }
    }
}

/// Exact thresholds of fans, books, even wheels and generalized books.
pub fn family_threshold(spec: &FamilySpec) -> FamilyThreshold {
    let covered = |value, formula: &str, caveat: Option<&str>| FamilyThreshold::Covered {
        value,
        formula: formula.into(),
        caveat: caveat.map(Into::into),
    };
    let not = |reason: String| FamilyThreshold::NotCovered { reason };
    match *spec {
        FamilySpec::Fan { k } if k > 1 => covered(4 * k + 1, "4k+1", None),
        FamilySpec::Fan { k } => not(format!("fan:{k} needs k > 1")),
        FamilySpec::Book { t } if t > 1 => covered(2 * t + 3, "2t+3", None),
        FamilySpec::Book { t } => not(format!("book:{t} needs t > 1")),
        FamilySpec::Wheel { k } if k > 4 && k % 2 == 0 => covered(2 * k + 1, "2k+1", None),
        FamilySpec::Wheel { k } => not(format!("wheel:{k} needs an even k > 4")),
        FamilySpec::GeneralizedBook { p, q, m } if p >= 1 && p < q && q >= 3 && m >= 1 => covered(
            (q - 1) * (m * (q - p) + p - 1) + 1,
            "(q-1)(m(q-p)+p-1)+1",
            Some(GENBOOK_CAVEAT),
        ),
        FamilySpec::GeneralizedBook { p, q, m } => {
            not(format!("genbook:{p},{q},{m} needs 1 <= p < q, q >= 3 and m >= 1"))
        }
        other => not(format!("{other} is not a fan, book, wheel or generalized book")),
    }
}

/// Every fan, book, wheel, generalized book, complete graph, cycle or path
/// isomorphic to `g`.
pub fn recognize_families(g: &Graph) -> Vec<FamilySpec> {
    let n = g.n();
    let m = g.edge_count();
    let mut cands = Vec::new();
    if n >= 3 && n % 2 == 1 {
        cands.push(FamilySpec::Fan { k: (n - 1) / 2 });
    }
    if n >= 3 {
        cands.push(FamilySpec::Book { t: n - 2 });
    }
    if n >= 4 {
        cands.push(FamilySpec::Wheel { k: n - 1 });
    }
    for p in 1..n {
        for q in p + 1..=n {
            if (n - p) % (q - p) == 0 && n > p {
                cands.push(FamilySpec::GeneralizedBook { p, q, m: (n - p) / (q - p) });
            }
        }
    }
    if n >= 1 {
        cands.push(FamilySpec::Complete { n });
        cands.push(FamilySpec::Path { k: n });
    }
    if n >= 3 {
        cands.push(FamilySpec::Cycle { k: n });
    }
    cands
        .into_iter()
        .filter(|s| s.validate().is_ok() && s.vertex_count() == n)
        .filter(|s| {
            let built = s.build().expect("validated");
            built.edge_count() == m && is_isomorphic(&built, g)
        })
        .collect()
}

/// A graph given directly or through a family spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Graph(Graph),
    Family(FamilySpec),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Graph(g) => write!(f, "{g}"),
            Target::Family(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BoundsOptions {
    pub budget: SearchBudget,
    /// Evaluate every Ramsey bound even when the interval is already closed.
    pub thorough: bool,
    /// Extra blow-up hosts for the `R(H, F - e)` bound.
    pub hosts: Vec<Graph>,
    /// Accept `ex(n, K_3, F) = o(n^2)` for graphs not known to satisfy it.
    pub assert_sparse_triangles: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub graph6: String,
    pub lower: LowerBound,
    pub upper: UpperBound,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    /// Every upper bound evaluated, in evaluation order.
    pub candidates: Vec<UpperBound>,
}

impl BoundReport {
    /// The candidates whose value equals the reported upper bound.
    pub fn upper_attained_by(&self) -> Vec<&UpperBound> {
        match self.upper.value {
            Some(v) => self.candidates.iter().filter(|c| c.value == Some(v)).collect(),
            None => vec![&self.upper],
        }
    }
}

fn lower_bound(f: &Graph) -> Result<LowerBound> {
    if f.n() <= MAX_PARTITION_VERTICES {
        return gmt_lower_bound(f);
    }
    if let Some(lb) = cone_lower_bound(f) {
        return Ok(lb);
    }
    Ok(if chromatic_number(f) >= 3 {
        LowerBound {
            value: 3,
            provenance: LowerProvenance::TrivialNonbipartite,
        }
    } else {
        LowerBound {
            value: 2,
            provenance: LowerProvenance::TrivialBipartite,
        }
    })
}

fn best_upper(cands: &[UpperBound]) -> Option<&UpperBound> {
    cands
        .iter()
        .filter(|c| c.value.is_some())
        .min_by_key(|c| (c.value, c.caveat.is_some(), c.source))
}

/// Best interval for `th(F)` from every applicable bound.
///
/// Ramsey searches run over the edges of `F` up to symmetry. They are
/// skipped for graphs with an unconditional closed-form threshold unless
/// `thorough` is set,
/// and `R(F, F - e)` is only tried while the interval is still open.
pub fn compose_bounds(target: &Target, opts: &BoundsOptions) -> Result<BoundReport> {
    let f = match target {
        Target::Graph(g) => g.clone(),
        Target::Family(s) => s.build()?,
    };
    if f.edge_count() == 0 {
        return Err(Error::Validation("F must have at least one edge".into()));
    }
    let lower = lower_bound(&f)?;
    let mut specs = recognize_families(&f);
    if let Target::Family(s) = target {
        specs.retain(|x| x != s);
        specs.insert(0, *s);
    }
    let mut cands = Vec::new();
    for spec in &specs {
        if let FamilyThreshold::Covered { value, formula, caveat } = family_threshold(spec) {
            let mut ub = UpperBound::closed(
                UpperSource::Family,
                value,
                format!("{formula} for {spec}"),
                ValueStatus::ClosedFormFamily,
            );
            ub.caveat = caveat;
            cands.push(ub);
        }
    }
    if let Ok((ub, _)) = upper_kicsi(&f, opts.assert_sparse_triangles) {
        cands.push(ub);
    }
    let closed_form = cands
        .iter()
        .any(|c| c.source == UpperSource::Family && c.caveat.is_none());
    let tight = |cands: &[UpperBound]| best_upper(cands).is_some_and(|b| b.value == Some(lower.value));
    if !closed_form || opts.thorough {
        let edges: Vec<(usize, usize)> = edge_deletions_up_to_iso(&f)?
            .iter()
            .map(|d| d.edge())
            .collect();
        let run = |which: &(dyn Fn((usize, usize)) -> Result<UpperBound> + Sync)| {
            edges
                .par_iter()
                .map(|&e| which(e))
                .collect::<Result<Vec<_>>>()
        };
        cands.extend(run(&|e| upper_main(&f, e, &opts.budget))?);
        for h in &opts.hosts {
            if has_homomorphism(&f, h) {
                cands.extend(run(&|e| upper_fo(&f, h, e, &opts.budget))?);
            }
        }
        if opts.thorough || !tight(&cands) {
            cands.extend(run(&|e| upper_gmt(&f, e, &opts.budget))?);
        }
    }
    let upper = best_upper(&cands)
        .or_else(|| cands.first())
        .cloned()
        .expect("at least one upper bound is always evaluated");
    if let Some(v) = upper.value {
        if v < lower.value {
            return Err(Error::Contract(format!(
                "upper bound {v} below lower bound {}",
                lower.value
            )));
        }
    }
    Ok(BoundReport {
        graph: target.to_string(),
        graph6: encode_graph6(&f).unwrap_or_default(),
        exact: (upper.value == Some(lower.value)).then_some(lower.value),
        lower,
        upper,
        candidates: cands,
    })
}
