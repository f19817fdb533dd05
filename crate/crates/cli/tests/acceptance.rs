//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so the report is always printed.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bergeth_core::berge::{
    find_berge, heaviness_profile, is_berge_free, sample_subedge_graph, verify_witness,
};
use bergeth_core::bounds::{
    compose_bounds, family_threshold, BoundsOptions, FamilyThreshold, Target, UpperSource,
    ValueStatus, GENBOOK_CAVEAT,
};
use bergeth_core::extremal::{
    berge_ex, count_light_h_hyperedges, cover_number, gen_turan_ex, turan_ex, verify_gp_sandwich,
    ExtremalOptions,
};
use bergeth_core::partitions::{c_t, gmt_lower_bound, LowerProvenance};
use bergeth_core::ramsey::{chvatal_witness, is_p_good, ramsey_number, PGood, RamseyValue};
use bergeth_core::{FamilySpec, Graph, Hypergraph, SearchBudget};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_graphs, all_injections, naive_has_berge, random_free_hypergraph, random_hypergraph};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.2?}, limit {limit:?}"))
}

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

fn build(s: &str) -> Graph {
    spec(s).build().unwrap()
}

/// Labelled copies of `h` in `g` divided by the automorphisms of `h`.
fn naive_copies(h: &Graph, g: &Graph) -> u64 {
    let embeds = |host: &Graph| {
        all_injections(h.n(), host.n())
            .iter()
            .filter(|m| h.edges().all(|(a, b)| host.has_edge(m[a], m[b])))
            .count() as u64
    };
    embeds(g) / embeds(h)
}

fn naive_contains(h: &Graph, g: &Graph) -> bool {
    all_injections(h.n(), g.n())
        .iter()
        .any(|m| h.edges().all(|(a, b)| g.has_edge(m[a], m[b])))
}

/// Decides `R(h, g) <= n` by listing every colouring of `K_n`.
fn naive_ramsey_forced(h: &Graph, g: &Graph, n: usize) -> bool {
    all_graphs(n).all(|blue| naive_contains(h, &blue) || naive_contains(g, &blue.complement()))
}

fn family_thresholds() -> Check {
    let expected = [("fan:2", 9), ("fan:3", 13), ("book:2", 7), ("book:3", 9), ("wheel:6", 13)];
    for (name, value) in expected {
        let start = Instant::now();
        let ft = family_threshold(&spec(name));
        ensure(ft.value() == Some(value), || format!("family_threshold({name}) = {ft:?}"))?;
        let rep = compose_bounds(&Target::Family(spec(name)), &BoundsOptions::default())
            .map_err(|e| e.to_string())?;
        ensure(rep.exact == Some(value), || {
            format!("compose_bounds({name}) = [{}, {:?}]", rep.lower.value, rep.upper.value)
        })?;
        within(start, Duration::from_secs(1), name)?;
    }
    let start = Instant::now();
    let (p, q, m) = (2, 3, 4);
    let formula = (q - 1) * (m * (q - p) + p - 1) + 1;
    match family_threshold(&spec("genbook:2,3,4")) {
        FamilyThreshold::Covered { value, caveat, .. } => {
            ensure(value == formula, || format!("genbook:2,3,4 gave {value}, want {formula}"))?;
            ensure(caveat.as_deref() == Some(GENBOOK_CAVEAT), || "genbook caveat missing".into())?;
        }
        other => return Err(format!("genbook:2,3,4 not covered: {other:?}")),
    }
    let rep = compose_bounds(&Target::Family(spec("genbook:2,3,4")), &BoundsOptions::default())
        .map_err(|e| e.to_string())?;
    ensure(rep.upper.value == Some(formula), || format!("genbook upper {:?}", rep.upper.value))?;
    ensure(
        rep.candidates
            .iter()
            .any(|c| c.source == UpperSource::Family && c.value == Some(formula) && c.caveat.is_some()),
        || "genbook candidate lacks the caveat".into(),
    )?;
    within(start, Duration::from_secs(1), "genbook:2,3,4")
}

fn triangle_threshold() -> Check {
    let start = Instant::now();
    let rep = compose_bounds(&Target::Graph(Graph::complete(3)), &BoundsOptions::default())
        .map_err(|e| e.to_string())?;
    ensure(rep.lower.value == 5 && rep.upper.value == Some(5), || {
        format!("K3 interval [{}, {:?}]", rep.lower.value, rep.upper.value)
    })?;
    match &rep.lower.provenance {
        LowerProvenance::Partition { t, c_t, .. } => {
            ensure(*t == 2 && *c_t == 3, || format!("lower from t={t}, c_t={c_t}"))?
        }
        other => return Err(format!("lower provenance {other:?}")),
    }
    let up = &rep.upper;
    ensure(
        up.source == UpperSource::CliqueRamsey && up.status == Some(ValueStatus::ComputedExact),
        || format!("upper {up:?}"),
    )?;
    let r = ramsey_number(&Graph::complete(3), &Graph::path(3), &SearchBudget::default())
        .map_err(|e| e.to_string())?;
    ensure(r.value == RamseyValue::Exact { value: 5 }, || format!("R(K3, P3) = {:?}", r.value))?;
    within(start, Duration::from_secs(10), "K3 bounds")
}

fn small_ramsey_values() -> Check {
    let budget = SearchBudget::nodes(100_000_000).unwrap();
    let k3 = Graph::complete(3);
    let cases = [
        ("K3", Graph::complete(3), 6),
        ("P3", Graph::path(3), 5),
        ("C4", Graph::cycle(4), 7),
        ("B2", build("book:2"), 7),
    ];
    for (name, g, value) in cases {
        let start = Instant::now();
        let r = ramsey_number(&k3, &g, &budget).map_err(|e| e.to_string())?;
        ensure(r.value == RamseyValue::Exact { value }, || format!("R(K3, {name}) = {:?}", r.value))?;
        let w = &r.witness;
        ensure(w.n() == value - 1, || format!("R(K3, {name}) witness on {} vertices", w.n()))?;
        ensure(!naive_contains(&k3, w.blue()) && !naive_contains(&g, &w.red()), || {
            format!("R(K3, {name}) witness contains a monochromatic copy")
        })?;
        within(start, Duration::from_secs(60), name)?;
    }
    for (g, value) in [(Graph::complete(3), 6), (Graph::path(3), 5)] {
        ensure(naive_ramsey_forced(&k3, &g, value) && !naive_ramsey_forced(&k3, &g, value - 1), || {
            format!("brute force disagrees on R(K3, {g:?}) = {value}")
        })?;
    }
    Ok(())
}

fn p_goodness() -> Check {
    let budget = SearchBudget::default();
    for (name, g, want) in [
        ("C4", Graph::cycle(4), PGood::True),
        ("B2", build("book:2"), PGood::True),
        ("K3", Graph::complete(3), PGood::False),
    ] {
        let res = is_p_good(&g, 3, &budget).map_err(|e| e.to_string())?;
        ensure(res.verdict == want, || format!("is_p_good({name}, 3) = {:?}", res.verdict))?;
        if let Some(c) = &res.counterexample {
            ensure(
                c.n() == res.target && !naive_contains(&Graph::complete(3), c.blue()) && !naive_contains(&g, &c.red()),
                || format!("bad counterexample for {name}"),
            )?;
        }
    }
    Ok(())
}

fn extremal_oracles() -> Check {
    let start = Instant::now();
    let opts = ExtremalOptions::default();
    let k3 = Graph::complete(3);
    for n in 3..=7 {
        let res = turan_ex(n, &k3, &opts).map_err(|e| e.to_string())?;
        let naive = all_graphs(n)
            .filter(|g| !naive_contains(&k3, g))
            .map(|g| g.edge_count() as u64)
            .max()
            .unwrap();
        let mantel = (n * n / 4) as u64;
        ensure(res.value == mantel && naive == mantel && res.complete, || {
            format!("ex({n}, K3): search {}, naive {naive}, Mantel {mantel}", res.value)
        })?;
    }

    let res = berge_ex(3, 4, &k3, &opts).map_err(|e| e.to_string())?;
    let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let naive = (0u32..16)
        .map(|mask| Hypergraph::from_edges(4, triples.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e)).unwrap())
        .filter(|h| !naive_has_berge(&k3, h))
        .map(|h| h.len() as u64)
        .max()
        .unwrap();
    ensure(res.value == 2 && naive == 2, || format!("ex_3(4, Berge-K3): search {}, naive {naive}", res.value))?;

    let k4 = Graph::complete(4);
    let res = gen_turan_ex(4, &k3, &k4, &opts).map_err(|e| e.to_string())?;
    let naive = all_graphs(4)
        .filter(|g| !naive_contains(&k4, g))
        .map(|g| naive_copies(&k3, &g))
        .max()
        .unwrap();
    ensure(res.value == 2 && naive == 2, || format!("ex(4, K3, K4): search {}, naive {naive}", res.value))?;
    within(start, Duration::from_secs(120), "extremal oracles")
}

fn sandwich() -> Check {
    for n in [4, 5] {
        let rep = verify_gp_sandwich(3, n, &Graph::complete(3), &ExtremalOptions::default())
            .map_err(|e| e.to_string())?;
        ensure(rep.holds == Some(true), || {
            format!(
                "n={n}: {} <= {} <= {} + {} fails",
                rep.clique_count.value, rep.berge.value, rep.clique_count.value, rep.turan.value
            )
        })?;
    }
    Ok(())
}

fn berge_detection() -> Check {
    let cores = [Graph::complete(3), Graph::path(3), Graph::cycle(4)];
    let agree = |f: &Graph, h: &Hypergraph| -> Check {
        let naive = naive_has_berge(f, h);
        let found = find_berge(f, h);
        if let Some(w) = &found {
            ensure(verify_witness(w, f, h).unwrap_or(false), || format!("invalid witness for {f:?} in {h}"))?;
        }
        ensure(found.is_some() == naive && is_berge_free(f, h) != naive, || {
            format!("disagreement for {f:?} in {h}")
        })
    };
    let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut exhaustive = 0;
    for a in 0..=4 {
        for b in a..=4 {
            for c in b..=4 {
                // index 4 stands for "no hyperedge"
                let picked = [a, b, c].into_iter().filter(|&i| i < 4).map(|i| triples[i]);
                let h = Hypergraph::from_edges(4, picked).unwrap();
                for f in &cores {
                    agree(f, &h)?;
                }
                exhaustive += 1;
            }
        }
    }
    ensure(exhaustive == 35, || format!("{exhaustive} multisets enumerated"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..10_000 {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(0..=5);
        let h = random_hypergraph(&mut rng, n, m, 2..=n.min(4));
        agree(&cores[trial % 3], &h)?;
    }
    Ok(())
}

fn proof_properties() -> Check {
    const TRIALS: usize = 1000;
    let fs = [Graph::complete(3), Graph::cycle(4), Graph::path(4), Graph::complete(4).without_edge(0, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..TRIALS {
        let f = &fs[trial % fs.len()];
        let n = rng.gen_range(4..=7);
        let r = rng.gen_range(3..=4);
        let h = random_free_hypergraph(&mut rng, n, r, f, 12);
        let g = sample_subedge_graph(&h, rng.gen());
        ensure(!naive_contains(f, &g), || format!("(i) {f:?} in a sample of {h}"))?;
    }
    let mut heavy_seen = 0;
    for trial in 0..TRIALS {
        let f = &fs[trial % fs.len()];
        let n = rng.gen_range(4..=6);
        let r = rng.gen_range(3..=n.min(5));
        let h = random_free_hypergraph(&mut rng, n, r, f, 20);
        let heavy = heaviness_profile(&h, f.edge_count()).map_err(|e| e.to_string())?.heavy_graph();
        heavy_seen += usize::from(heavy.edge_count() > 0);
        ensure(!naive_contains(f, &heavy), || format!("(ii) heavy {f:?} in {h}"))?;
    }
    ensure(heavy_seen > 0, || "(ii) no trial had a heavy edge".into())?;
    let patterns = [Graph::complete(3), Graph::path(3)];
    for trial in 0..TRIALS {
        let pat = &patterns[trial % 2];
        let n = rng.gen_range(3..=7);
        let m = rng.gen_range(1..=10);
        let hg = random_hypergraph(&mut rng, n, m, 3..=n.min(5));
        let t = rng.gen_range(1..=4);
        let light = heaviness_profile(&hg, t).map_err(|e| e.to_string())?.light_graph();
        let count = count_light_h_hyperedges(&hg, pat, t).map_err(|e| e.to_string())?;
        let cover = cover_number(pat, &light).map_err(|e| e.to_string())?.size;
        ensure(count <= (t - 1) * cover, || format!("(iii) {count} > ({t}-1)*{cover} for {hg}"))?;
    }
    let mut checked = 0;
    for n in 2..=5 {
        for g in all_graphs(n).filter(Graph::is_connected) {
            for p in [3, 4] {
                let w = chvatal_witness(&g, p).map_err(|e| e.to_string())?;
                let kp = Graph::complete(p);
                ensure(w.n() == (p - 1) * (n - 1), || format!("(iv) witness order for {g:?}"))?;
                ensure(!naive_contains(&kp, w.blue()) && !naive_contains(&g, &w.red()), || {
                    format!("(iv) monochromatic copy for {g:?}, p={p}")
                })?;
                checked += 1;
            }
        }
    }
    ensure(checked == 2 * (1 + 4 + 38 + 728), || format!("(iv) {checked} graphs checked"))
}

fn partitions() -> Check {
    let ct = |g: &Graph, t| c_t(g, t).map(|r| r.value).map_err(|e| e.to_string());
    ensure(ct(&Graph::complete(3), 2)? == 3, || "c_2(K3) != 3".into())?;
    ensure(ct(&Graph::cycle(5), 2)? == 2, || "c_2(C5) != 2".into())?;
    ensure(ct(&build("fan:2"), 4)? == 3, || "c_4(F2) != 3".into())?;
    let lb = |s: &str| gmt_lower_bound(&build(s)).map(|l| l.value).map_err(|e| e.to_string());
    ensure(lb("fan:2")? == 9, || "lower(F2) != 9".into())?;
    ensure(lb("wheel:6")? == 13, || "lower(W6) != 13".into())?;
    let mut graphs = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            let mut prev = ct(&g, 1)?;
            for t in 2..=n {
                let next = ct(&g, t)?;
                ensure(next <= prev, || format!("c_{t} = {next} > c_{} = {prev} for {g:?}", t - 1))?;
                prev = next;
            }
            graphs += 1;
        }
    }
    ensure(graphs == 1 + 2 + 8 + 64 + 1024 + 32768, || format!("{graphs} graphs checked"))
}

fn cli_determinism() -> Check {
    let cases: [&[&str]; 4] = [
        &["ramsey", "complete:3", "book:2"],
        &["bounds", "complete:3", "--thorough"],
        &["bergeturan", "3", "5", "complete:3", "--budget-nodes", "5000"],
        &["turan", "6", "cycle:4", "--budget-nodes", "2000"],
    ];
    for args in cases {
        let mut outputs = Vec::new();
        for threads in ["1", "2", "3", "4", "8"] {
            let out = Command::new(env!("CARGO_BIN_EXE_bergeth"))
                .args(args)
                .args(["--json", "--seed", "5", "--threads", threads])
                .output()
                .map_err(|e| e.to_string())?;
            ensure(matches!(out.status.code(), Some(0 | 2)), || {
                format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr))
            })?;
            outputs.push(out.stdout);
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{args:?} output varies"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("family thresholds", family_thresholds),
        ("triangle threshold", triangle_threshold),
        ("small Ramsey values", small_ramsey_values),
        ("p-goodness", p_goodness),
        ("extremal oracles", extremal_oracles),
        ("clique/Berge/Turan sandwich", sandwich),
        ("Berge detection oracle", berge_detection),
        ("structural properties", proof_properties),
        ("partitions", partitions),
        ("CLI determinism", cli_determinism),
    ];
    // keep panics from individual criteria out of the report
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS {name} ({took:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({took:.2?}): {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
