#![allow(dead_code)]

use std::collections::BTreeSet;

use kred_core::{gen_random, BicoloredGraph, EdgeColor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every connected simple graph on `n` labeled nodes under every red/blue
/// coloring: each node pair is absent, red or blue.
pub fn exhaustive(n: usize) -> impl Iterator<Item = BicoloredGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 3u64.pow(pairs.len() as u32);
    (0..total).filter_map(move |mut code| {
        let mut edges = Vec::new();
        for &(u, v) in &pairs {
            match code % 3 {
                1 => edges.push((u, v, EdgeColor::Red)),
                2 => edges.push((u, v, EdgeColor::Blue)),
                _ => {}
            }
            code /= 3;
        }
        let g = BicoloredGraph::new(n, edges).unwrap();
        g.is_connected().then_some(g)
    })
}

/// Random connected multigraph with `n` in `[6, 8]` and at most 24 edges.
pub fn random_small(rng: &mut ChaCha8Rng) -> BicoloredGraph {
    let n = rng.random_range(6..=8);
    let m = rng.random_range(n - 1..=24.min(3 * n));
    let red_prob = rng.random_range(0.0..=1.0);
    gen_random(n, m, red_prob, rng.random()).unwrap()
}

/// The acceptance corpus: exhaustive for `n <= 5`, then `random` instances
/// with `n` in `[6, 8]`.
pub fn small_corpus(random: usize, seed: u64) -> impl Iterator<Item = BicoloredGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (1..=5)
        .flat_map(exhaustive)
        .chain((0..random).map(move |_| random_small(&mut rng)))
}

/// Random connected instance with up to `max_n` nodes and `m` in
/// `[n - 1, 4n]`; sizes are spread on a log scale.
pub fn random_medium(rng: &mut ChaCha8Rng, max_n: usize) -> BicoloredGraph {
    let exp = rng.random_range(0.0..(max_n as f64).log2());
    let n = (2f64.powf(exp) as usize).clamp(2, max_n);
    let m = rng.random_range(n - 1..=4 * n);
    let red_prob = rng.random_range(0.0..=1.0);
    gen_random(n, m, red_prob, rng.random()).unwrap()
}

/// Spanning-tree check by edge count plus DFS reachability.
pub fn dfs_is_spanning_tree(g: &BicoloredGraph, edge_ids: &[usize]) -> bool {
    let n = g.n();
    if n == 0 || edge_ids.len() != n - 1 || edge_ids.iter().any(|&e| e >= g.m()) {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &e in edge_ids {
        let edge = g.edge(e);
        adj[edge.u].push(edge.v);
        adj[edge.v].push(edge.u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &w in &adj[x] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

pub fn range_set(lo: usize, hi: usize) -> BTreeSet<usize> {
    (lo..=hi).collect()
}

pub fn is_contiguous(set: &BTreeSet<usize>) -> bool {
    match (set.first(), set.last()) {
        (Some(&lo), Some(&hi)) => hi - lo + 1 == set.len(),
        _ => true,
    }
}

pub fn report(name: &str, pass: bool, detail: &str) {
    println!("[{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
}
