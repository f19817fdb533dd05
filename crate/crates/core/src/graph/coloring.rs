//! Exact vertex colouring for small graphs.
//!
//! Branch and bound: a maximum clique gives the lower bound, greedy DSATUR the
//! upper bound, and each `k` in between is decided by DSATUR backtracking.

use super::{bit, bits, Graph};

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// A proper colouring with `chromatic_number(g)` colours, colours `0..χ`.
pub fn optimal_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    let lower = clique_number(g).max(1);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if color_with(g, k, &mut colors, 0, 0) {
            return colors;
        }
    }
    greedy
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut cand = cand;
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            grow(g, size + 1, cand & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    grow(g, 0, g.vertex_mask(), &mut best);
    best
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> (u64, usize) {
    let mut seen = 0u64;
    for u in bits(g.neighbors(v)) {
        if colors[u] != usize::MAX {
            seen |= bit(colors[u]);
        }
    }
    (seen, seen.count_ones() as usize)
}

/// Uncoloured vertex with the most distinct neighbour colours, ties broken by
/// degree and then by smallest index.
fn pick(g: &Graph, colors: &[usize]) -> Option<(usize, u64)> {
    let mut best: Option<(usize, u64, usize, usize)> = None;
    for v in 0..g.n() {
        if colors[v] != usize::MAX {
            continue;
        }
        let (seen, sat) = saturation(g, colors, v);
        let deg = g.degree(v);
        if best.is_none_or(|(_, _, bs, bd)| (sat, deg) > (bs, bd)) {
            best = Some((v, seen, sat, deg));
        }
    }
    best.map(|(v, seen, _, _)| (v, seen))
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    while let Some((v, seen)) = pick(g, &colors) {
        colors[v] = (!seen).trailing_zeros() as usize;
    }
    colors
}

fn color_with(g: &Graph, k: usize, colors: &mut [usize], colored: usize, used: usize) -> bool {
    if colored == g.n() {
        return true;
    }
    let (v, seen) = pick(g, colors).expect("uncoloured vertex");
    // A fresh colour is interchangeable with any other fresh colour.
    for c in 0..k.min(used + 1) {
        if seen & bit(c) != 0 {
            continue;
        }
        colors[v] = c;
        if color_with(g, k, colors, colored + 1, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}
