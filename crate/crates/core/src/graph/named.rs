//! Small named graphs used as patterns, fixtures and test oracles.

use std::collections::BTreeSet;

use super::{Edge, Graph};

fn build(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let set: BTreeSet<Edge> = pairs.into_iter().filter_map(|(u, v)| Edge::new(u, v)).collect();
    Graph::from_edge_set(n, set)
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Parts are `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle on `n >= 3` vertices; smaller `n` gives the path.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    build(10, outer.chain(inner).chain(spokes))
}

/// The 3-cube: vertices are 3-bit strings, edges join strings at Hamming distance 1.
pub fn cube() -> Graph {
    build(8, (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b)))))
}

/// Two vertices `0` and `1` joined by three paths of two edges each.
pub fn theta() -> Graph {
    build(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
}

/// `K5` with vertex 0 split into `x = 0` and `y = 5` joined by an edge;
/// `x` keeps the neighbors `left`, `y` takes the rest of `1..5`.
pub fn split_k5_vertex(left: &[usize]) -> Graph {
    let mut pairs = vec![(0, 5)];
    for u in 1..5 {
        for v in u + 1..5 {
            pairs.push((u, v));
        }
        pairs.push((if left.contains(&u) { 0 } else { 5 }, u));
    }
    build(6, pairs)
}
