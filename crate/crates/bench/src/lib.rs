//! Fixed inputs for the benchmarks, so every run measures the same graphs.

use kuratowski::graph::named;
use kuratowski::harness::{random_cubic_graph, random_graph, Rng};
use kuratowski::Graph;

pub const SEED: u64 = 2024;

/// Named graphs that exercise both verdicts.
pub fn landmarks() -> Vec<(&'static str, Graph)> {
    vec![
        ("k5", named::complete(5)),
        ("k33", named::complete_bipartite(3, 3)),
        ("petersen", named::petersen()),
        ("cube", named::cube()),
        ("k4", named::complete(4)),
    ]
}

/// `count` Erdős–Rényi graphs on `n` vertices with edge probability `p`.
pub fn random_graphs(n: usize, p: f64, count: usize) -> Vec<Graph> {
    let mut rng = Rng::new(SEED);
    (0..count).map(|_| random_graph(n, p, &mut rng).expect("valid probability")).collect()
}

pub fn cubic_graphs(n: usize, count: usize) -> Vec<Graph> {
    let mut rng = Rng::new(SEED);
    (0..count).map(|_| random_cubic_graph(n, &mut rng).expect("cubic graph")).collect()
}
