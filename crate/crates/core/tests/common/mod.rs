#![allow(dead_code)]

use kuratowski::graph::{enumerate_labeled_graphs, pair_count};
use kuratowski::Graph;
use proptest::prelude::*;

/// Every labeled graph on `0..=max_n` vertices.
pub fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| enumerate_labeled_graphs(n).unwrap())
}

/// Arbitrary graphs on `lo..=hi` vertices, edges drawn uniformly.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, any::<u128>()).prop_map(|(n, bits)| {
        let pairs = pair_count(n);
        let mask = if pairs >= 128 { bits } else { bits & ((1u128 << pairs) - 1) };
        Graph::from_mask(n, mask).unwrap()
    })
}
