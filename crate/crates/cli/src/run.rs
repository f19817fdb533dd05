use std::fmt::Write as _;

use bergeth_core::berge::{
    find_berge, heaviness_profile, is_berge_free, sample_subedge_graph, shadow_graph,
};
use bergeth_core::bounds::{compose_bounds, recognize_families, BoundReport, BoundsOptions, Target};
use bergeth_core::extremal::{
    berge_cover_turan, berge_ex, berge_shadow_max_copies, cover_number, cover_turan_x,
    gen_turan_ex, turan_ex, verify_gp_sandwich, ExtremalOptions, ExtremalResult, Witness,
};
use bergeth_core::graph::{chromatic_number, clique_number, encode_graph6};
use bergeth_core::partitions::{c_t, gmt_lower_bound, LowerBound, LowerProvenance};
use bergeth_core::ramsey::{is_p_good, ramsey_number, PGood, RamseyValue, TwoColoring};
use bergeth_core::{Graph, SearchBudget};
use serde_json::{json, Value};

use crate::cli::{BergeCommand, Command, Global};
use crate::input::{load_graph, load_hypergraph, CliError, GraphArg};

pub struct Output {
    pub json: Value,
    pub text: String,
    /// `false` when a search ran out of budget or a verdict is unknown.
    pub definite: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            definite: true,
        }
    }
}

fn g6(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

fn tag<T: serde::Serialize>(x: &T) -> String {
    match serde_json::to_value(x) {
        Ok(Value::String(s)) => s,
        Ok(v) => v.to_string(),
        Err(_) => String::new(),
    }
}

fn coloring_json(c: &TwoColoring) -> Value {
    json!({ "n": c.n(), "blue": g6(c.blue()) })
}

fn lower_text(lb: &LowerBound) -> String {
    match &lb.provenance {
        LowerProvenance::Partition { t, c_t, partition } => format!(
            "{} {} (t={t}, c_t={c_t}, blocks {:?})",
            lb.value,
            provenance_tag(&lb.provenance),
            partition.blocks()
        ),
        other => format!("{} {}", lb.value, provenance_tag(other)),
    }
}

fn provenance_tag(p: &LowerProvenance) -> String {
    serde_json::to_value(p)
        .ok()
        .and_then(|v| v.get("source").and_then(Value::as_str).map(str::to_string))
        .unwrap_or_default()
}

fn extremal_output(command: &str, res: ExtremalResult) -> Output {
    let p = &res.params;
    let mut params = json!({ "n": p.n, "f": g6(&p.f) });
    if let Some(r) = p.r {
        params["r"] = json!(r);
    }
    if let Some(h) = &p.h {
        params["h"] = json!(g6(h));
    }
    let (witness, witness_text) = match &res.witness {
        Witness::Graph(g) => (json!({ "graph6": g6(g) }), g6(g)),
        Witness::Hypergraph(h) => (json!({ "hypergraph": h.to_string() }), h.to_string()),
    };
    let json = json!({
        "command": command,
        "quantity": res.quantity.name(),
        "params": params,
        "value": res.value,
        "complete": res.complete,
        "witness": witness,
        "nodes": res.nodes,
    });
    let mut text = format!("{} = {}", res.quantity, res.value);
    if !res.complete {
        text.push_str(" (lower bound only: budget exhausted)");
    }
    let _ = write!(text, "\nwitness:\n{}", witness_text.trim_end());
    let _ = write!(text, "\nnodes: {}", res.nodes);
    Output {
        json,
        text,
        definite: res.complete,
    }
}

fn bounds_table(r: &BoundReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "graph   {} ({})", r.graph, r.graph6);
    let _ = writeln!(t, "lower   {}", lower_text(&r.lower));
    let num = |v: Option<usize>| v.map_or("?".to_string(), |v| v.to_string());
    let row = |c: &bergeth_core::bounds::UpperBound| {
        let mut s = format!("{:<4} {:<15} {}", num(c.value), tag(&c.source), c.expression);
        if let Some((u, v)) = c.edge {
            let _ = write!(s, " e={u}-{v}");
        }
        if let Some(st) = c.status {
            let _ = write!(s, " [{}]", tag(&st));
        }
        if let Some(lo) = c.ramsey_at_least {
            let _ = write!(s, " (Ramsey value >= {lo})");
        }
        if let Some(cv) = &c.caveat {
            let _ = write!(s, " caveat: {cv}");
        }
        s
    };
    let _ = writeln!(t, "upper   {}", row(&r.upper));
    let _ = writeln!(t, "exact   {}", num(r.exact));
    let _ = writeln!(t, "candidates:");
    for c in &r.candidates {
        let _ = writeln!(t, "  {}", row(c));
    }
    t.trim_end().to_string()
}

pub fn run(command: &Command, global: &Global) -> Result<Output, CliError> {
    let mut budget = SearchBudget::nodes(global.budget_nodes)?;
    if let Some(s) = global.budget_seconds {
        budget = budget.with_seconds(s)?;
    }
    let xopts = ExtremalOptions {
        budget,
        allow_large: global.i_know,
    };
    let graph = |s: &str| -> Result<GraphArg, CliError> { load_graph(s, global.input_as) };

    Ok(match command {
        Command::Gen { family } => {
            let spec: bergeth_core::FamilySpec = family.parse()?;
            let g = spec.build()?;
            let code = g6(&g);
            Output::new(
                json!({
                    "command": "gen",
                    "family": spec.to_string(),
                    "graph6": code,
                    "n": g.n(),
                    "m": g.edge_count(),
                }),
                code,
            )
        }
        Command::Info { graph: arg } => {
            let a = graph(arg)?;
            let g = &a.graph;
            let families: Vec<String> = recognize_families(g).iter().map(|s| s.to_string()).collect();
            let chi = chromatic_number(g);
            let omega = clique_number(g);
            let text = format!(
                "graph6 {}\nn {}\nm {}\nchromatic number {chi}\nclique number {omega}\nconnected {}\nbipartite {}\nfamilies {}",
                g6(g),
                g.n(),
                g.edge_count(),
                g.is_connected(),
                g.is_bipartite(),
                if families.is_empty() { "-".to_string() } else { families.join(" ") },
            );
            Output::new(
                json!({
                    "command": "info",
                    "graph6": g6(g),
                    "n": g.n(),
                    "m": g.edge_count(),
                    "chromatic_number": chi,
                    "clique_number": omega,
                    "connected": g.is_connected(),
                    "bipartite": g.is_bipartite(),
                    "families": families,
                }),
                text,
            )
        }
        Command::Berge(BergeCommand::Find { f, hypergraph }) => {
            let f = graph(f)?.graph;
            let h = load_hypergraph(hypergraph)?;
            match find_berge(&f, &h) {
                Some(w) => {
                    let text = format!(
                        "found\ncore_map {:?}\nedge_assignment {:?}",
                        w.core_map, w.edge_assignment
                    );
                    Output::new(json!({ "command": "berge-find", "found": true, "witness": w }), text)
                }
                None => Output::new(
                    json!({ "command": "berge-find", "found": false, "witness": null }),
                    "none: the hypergraph is Berge-F-free".into(),
                ),
            }
        }
        Command::Berge(BergeCommand::Free { f, hypergraph }) => {
            let f = graph(f)?.graph;
            let h = load_hypergraph(hypergraph)?;
            let free = is_berge_free(&f, &h);
            Output::new(
                json!({ "command": "berge-free", "free": free }),
                if free { "free" } else { "not free" }.into(),
            )
        }
        Command::Shadow { hypergraph } => {
            let s = shadow_graph(&load_hypergraph(hypergraph)?);
            Output::new(
                json!({ "command": "shadow", "graph6": g6(&s), "edges": s.edge_vec() }),
                g6(&s),
            )
        }
        Command::Heavy { hypergraph, t } => {
            let p = heaviness_profile(&load_hypergraph(hypergraph)?, *t)?;
            let mut text = String::new();
            for e in &p.edges {
                let class = if e.heavy { "heavy" } else { "light" };
                let _ = writeln!(text, "{} {} {} {class}", e.u, e.v, e.multiplicity);
            }
            let _ = write!(
                text,
                "heavy {}\nlight {}",
                g6(&p.heavy_graph()),
                g6(&p.light_graph())
            );
            Output::new(
                json!({
                    "command": "heavy",
                    "t": t,
                    "edges": p.edges,
                    "heavy_graph6": g6(&p.heavy_graph()),
                    "light_graph6": g6(&p.light_graph()),
                }),
                text,
            )
        }
        Command::Ct { graph: arg, t } => {
            let f = graph(arg)?.graph;
            let r = c_t(&f, *t)?;
            Output::new(
                json!({ "command": "ct", "t": r.t, "value": r.value, "partition": r.partition }),
                format!("c_{} = {}\npartition {:?}", r.t, r.value, r.partition.blocks()),
            )
        }
        Command::Lower { graph: arg } => {
            let f = graph(arg)?.graph;
            let lb = gmt_lower_bound(&f)?;
            Output::new(
                json!({ "command": "lower", "graph6": g6(&f), "value": lb.value, "provenance": lb.provenance }),
                lower_text(&lb),
            )
        }
        Command::Ramsey { h, g } => {
            let (h, g) = (graph(h)?, graph(g)?);
            let r = ramsey_number(&h.graph, &g.graph, &budget)?;
            let name = format!("R({}, {})", h.label, g.label);
            let (text, definite) = match r.value {
                RamseyValue::Exact { value } => (format!("{name} = {value}"), true),
                RamseyValue::AtLeast { lo } => (format!("{name} >= {lo} (budget exhausted)"), false),
            };
            let text = format!(
                "{text}\nwitness on {} vertices, blue graph6 {}\nnodes: {}",
                r.witness.n(),
                g6(r.witness.blue()),
                r.nodes
            );
            let mut json = json!({
                "command": "ramsey",
                "h": g6(&h.graph),
                "g": g6(&g.graph),
                "result": r.value,
                "witness": coloring_json(&r.witness),
                "nodes": r.nodes,
            });
            json["lower"] = json!(r.value.lower());
            Output { json, text, definite }
        }
        Command::Pgood { g, p } => {
            let g = graph(g)?;
            let r = is_p_good(&g.graph, *p, &budget)?;
            let text = format!(
                "{}-good({}): {} (target {})\nnodes: {}",
                p,
                g.label,
                tag(&r.verdict),
                r.target,
                r.nodes
            );
            Output {
                json: json!({
                    "command": "pgood",
                    "g": g6(&g.graph),
                    "p": p,
                    "target": r.target,
                    "verdict": r.verdict,
                    "counterexample": r.counterexample.as_ref().map(coloring_json),
                    "nodes": r.nodes,
                }),
                text,
                definite: r.verdict != PGood::Unknown,
            }
        }
        Command::Turan { n, f } => extremal_output("turan", turan_ex(*n, &graph(f)?.graph, &xopts)?),
        Command::Genturan { n, h, f } => extremal_output(
            "genturan",
            gen_turan_ex(*n, &graph(h)?.graph, &graph(f)?.graph, &xopts)?,
        ),
        Command::Bergeturan { r, n, f } => {
            extremal_output("bergeturan", berge_ex(*r, *n, &graph(f)?.graph, &xopts)?)
        }
        Command::Bergeshadow { r, n, h, f } => extremal_output(
            "bergeshadow",
            berge_shadow_max_copies(*r, *n, &graph(h)?.graph, &graph(f)?.graph, &xopts)?,
        ),
        Command::Bergecover { r, n, h, f } => extremal_output(
            "bergecover",
            berge_cover_turan(*r, *n, &graph(h)?.graph, &graph(f)?.graph, &xopts)?,
        ),
        Command::Coverturan { n, h, f } => extremal_output(
            "coverturan",
            cover_turan_x(*n, &graph(h)?.graph, &graph(f)?.graph, &xopts)?,
        ),
        Command::Cover { h, g } => {
            let c = cover_number(&graph(h)?.graph, &graph(g)?.graph)?;
            Output::new(
                json!({ "command": "cover", "size": c.size, "edges": c.edges }),
                format!("C = {}\nedges {:?}", c.size, c.edges),
            )
        }
        Command::Sandwich { r, n, f } => {
            let f = graph(f)?.graph;
            let rep = verify_gp_sandwich(*r, *n, &f, &xopts)?;
            let verdict = match rep.holds {
                Some(true) => "holds",
                Some(false) => "VIOLATED",
                None => "inconclusive (budget exhausted)",
            };
            let text = format!(
                "ex(n,K_r,F) = {}\nex_r(n,Berge-F) = {}\nex(n,F) = {}\n{} <= {} <= {} + {}: {verdict}\nsampling factor binom(r,2)^|E(F)| = {}",
                rep.clique_count.value,
                rep.berge.value,
                rep.turan.value,
                rep.clique_count.value,
                rep.berge.value,
                rep.clique_count.value,
                rep.turan.value,
                rep.sampling_factor
            );
            Output {
                json: json!({
                    "command": "sandwich",
                    "r": r,
                    "n": n,
                    "f": g6(&f),
                    "ex_clique": rep.clique_count.value,
                    "ex_berge": rep.berge.value,
                    "ex": rep.turan.value,
                    "complete": rep.holds.is_some(),
                    "holds": rep.holds,
                    "sampling_factor": rep.sampling_factor.to_string(),
                }),
                text,
                definite: rep.holds.is_some(),
            }
        }
        Command::Bounds {
            graph: arg,
            thorough,
            hosts,
            assert_sparse_triangles,
        } => {
            let a = graph(arg)?;
            let target = match a.family {
                Some(spec) => Target::Family(spec),
                None => Target::Graph(a.graph),
            };
            let opts = BoundsOptions {
                budget,
                thorough: *thorough,
                hosts: hosts
                    .iter()
                    .map(|h| graph(h).map(|x| x.graph))
                    .collect::<Result<_, _>>()?,
                assert_sparse_triangles: *assert_sparse_triangles,
            };
            let report = compose_bounds(&target, &opts)?;
            let mut json = serde_json::to_value(&report).map_err(|e| CliError::Usage(e.to_string()))?;
            json["command"] = json!("bounds");
            Output {
                text: bounds_table(&report),
                definite: report.upper.value.is_some(),
                json,
            }
        }
        Command::Sample { hypergraph } => {
            let g = sample_subedge_graph(&load_hypergraph(hypergraph)?, global.seed);
            Output::new(
                json!({ "command": "sample", "seed": global.seed, "graph6": g6(&g), "edges": g.edge_vec() }),
                format!("seed {}\n{}", global.seed, g6(&g)),
            )
        }
    })
}
