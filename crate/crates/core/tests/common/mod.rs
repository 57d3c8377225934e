#![allow(dead_code)]

use std::collections::BTreeSet;

use dmr_core::graph::{circulant, compute_distances, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Erdős–Rényi graph on `n` vertices with edge probability `p`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Rejection-samples a connected `G(n, p)` with `n` in `lo..=hi`.
pub fn random_connected<R: Rng>(lo: usize, hi: usize, rng: &mut R) -> Graph {
    loop {
        let n = rng.gen_range(lo..=hi);
        let g = gnp(n, rng.gen_range(0.25..0.8), rng);
        if compute_distances(&g).is_ok() {
            return g;
        }
    }
}

/// Random connected circulant on at most `max_n` vertices.
pub fn random_circulant<R: Rng>(max_n: usize, rng: &mut R) -> Graph {
    loop {
        let n = rng.gen_range(3..=max_n);
        let s: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.5)).collect();
        if s.is_empty() {
            continue;
        }
        let g = circulant(n, &s).expect("valid connection set");
        if compute_distances(&g).is_ok() {
            return g;
        }
    }
}

/// `k`-regular graph from the pairing model, if one is found quickly.
pub fn random_regular<R: Rng>(n: usize, k: usize, rng: &mut R) -> Option<Graph> {
    'attempt: for _ in 0..200 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        stubs.shuffle(rng);
        let mut edges = BTreeSet::new();
        for pair in stubs.chunks(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a == b || !edges.insert((a, b)) {
                continue 'attempt;
            }
        }
        return Graph::from_edges(n, edges).ok();
    }
    None
}
