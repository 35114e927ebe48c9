//! Seeded random connected instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, EdgeColor};

/// Random connected multigraph with `n` nodes and `m` edges.
///
/// A random spanning tree comes first (each node in a shuffled order attaches
/// to a uniformly chosen earlier one), then `m - (n - 1)` uniform non-loop
/// edges. Every edge is red with probability `red_prob`. Output depends only
/// on the arguments.
pub fn gen_random(n: usize, m: usize, red_prob: f64, seed: u64) -> Result<BicoloredGraph> {
    if n < 1 {
        return Err(Error::BadParams("n must be at least 1".into()));
    }
    if m < n - 1 {
        return Err(Error::BadParams(format!(
            "m = {m} is below n - 1 = {}, so the graph cannot be connected",
            n - 1
        )));
    }
    if n == 1 && m > 0 {
        return Err(Error::BadParams("a single node admits no edges".into()));
    }
    if !(0.0..=1.0).contains(&red_prob) {
        return Err(Error::BadParams(format!(
            "red_prob {red_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut raw = Vec::with_capacity(m);
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        raw.push((order[i], parent));
    }
    while raw.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n - 1);
        // Skip over u so that v != u without rejection.
        raw.push((u, if v >= u { v + 1 } else { v }));
    }
    let colored = raw.into_iter().map(|(u, v)| {
        let color = if rng.random_bool(red_prob) {
            EdgeColor::Red
        } else {
            EdgeColor::Blue
        };
        (u, v, color)
    });
    BicoloredGraph::new(n, colored)
}
