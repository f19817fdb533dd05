//! Randomised checks of the structural facts the bounds rely on.

mod common;

use bergeth_core::berge::{
    extend_heavy, find_berge, heaviness_profile, sample_subedge_graph, verify_witness, BergeWitness,
};
use bergeth_core::extremal::{count_light_h_hyperedges, cover_number};
use bergeth_core::graph::{contains_subgraph, for_each_embedding};
use bergeth_core::ramsey::chvatal_witness;
use bergeth_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::ops::ControlFlow;

use common::{all_graphs, random_free_hypergraph, random_hypergraph};

const TRIALS: usize = 1000;

fn forbidden() -> Vec<Graph> {
    vec![Graph::complete(3), Graph::cycle(4), Graph::path(4), Graph::complete(4).without_edge(0, 1)]
}

#[test]
fn sampled_subgraph_of_free_hypergraph_is_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let fs = forbidden();
    for trial in 0..TRIALS {
        let f = &fs[trial % fs.len()];
        let n = rng.gen_range(4..=8);
        let r = rng.gen_range(3..=4.min(n));
        let h = random_free_hypergraph(&mut rng, n, r, f, 12);
        let g = sample_subedge_graph(&h, rng.gen());
        assert!(!contains_subgraph(f, &g), "{f:?} in sample of {h}");
    }
}

#[test]
fn heavy_graph_of_free_hypergraph_is_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let fs = forbidden();
    let mut nonempty = 0;
    for trial in 0..TRIALS {
        let f = &fs[trial % fs.len()];
        let n = rng.gen_range(4..=6);
        let r = rng.gen_range(3..=n.min(5));
        let h = random_free_hypergraph(&mut rng, n, r, f, 20);
        let heavy = heaviness_profile(&h, f.edge_count()).unwrap().heavy_graph();
        nonempty += usize::from(heavy.edge_count() > 0);
        assert!(!contains_subgraph(f, &heavy), "{f:?} heavy in {h}");
    }
    assert!(nonempty > 0, "no trial produced a heavy edge");
}

#[test]
fn heavy_copies_extend_to_berge_copies() {
    // the contrapositive direction: any heavy copy of F completes greedily
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let fs = forbidden();
    let mut extended = 0;
    for trial in 0..TRIALS {
        let f = &fs[trial % fs.len()];
        let t = f.edge_count();
        let n = rng.gen_range(4..=6);
        let m = rng.gen_range(4..=14);
        let h = random_hypergraph(&mut rng, n, m, 3..=n.min(5));
        let heavy = heaviness_profile(&h, t).unwrap().heavy_graph();
        let mut map = None;
        let _ = for_each_embedding(f, &heavy, &[], |m| {
            map = Some(m.to_vec());
            ControlFlow::Break(())
        });
        let Some(core_map) = map else { continue };
        let empty = Graph::new(f.n());
        let w = BergeWitness { core_map, edge_assignment: Vec::new() };
        let full = extend_heavy(f, &empty, &w, &h, t).unwrap();
        assert!(verify_witness(&full, f, &h).unwrap());
        assert!(find_berge(f, &h).is_some());
        extended += 1;
    }
    assert!(extended > 0);
}

#[test]
fn light_hyperedges_bounded_by_light_cover() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let patterns = [Graph::complete(3), Graph::path(3)];
    for trial in 0..TRIALS {
        let h_pat = &patterns[trial % 2];
        let n = rng.gen_range(3..=7);
        let m = rng.gen_range(1..=10);
        let hg = random_hypergraph(&mut rng, n, m, 3..=n.min(5));
        let t = rng.gen_range(1..=4);
        let light = heaviness_profile(&hg, t).unwrap().light_graph();
        let count = count_light_h_hyperedges(&hg, h_pat, t).unwrap();
        let cover = cover_number(h_pat, &light).unwrap().size;
        assert!(count <= (t - 1) * cover, "{count} > ({t}-1)*{cover} for {hg}");
    }
}

#[test]
fn clique_partition_colourings_avoid_both_graphs() {
    let mut checked = 0;
    for n in 2..=5 {
        for g in all_graphs(n).filter(Graph::is_connected) {
            for p in [3, 4] {
                let w = chvatal_witness(&g, p).unwrap();
                assert_eq!(w.n(), (p - 1) * (n - 1));
                assert!(w.avoids(&Graph::complete(p), &g), "{g:?} p={p}");
                checked += 1;
            }
        }
    }
    // 1 + 4 + 38 + 728 connected labelled graphs on 2..=5 vertices
    assert_eq!(checked, 2 * (1 + 4 + 38 + 728));
}
