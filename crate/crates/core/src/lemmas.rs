//! Executable forms of the edge-deletion lemma and of the three equivalent
//! conditions that single out `K5` and `K3,3`.
//!
//! For a graph `K` and an edge `xy`:
//!
//! 1. `K - x - y` has no θ-subgraph and no vertex of degree below two;
//! 2. `K - x - y` is a cycle on at least three vertices;
//! 3. `K` is isomorphic to `K5` or to `K3,3`.
//!
//! Conditions 1 and 2 quantify over every edge. Condition 1 is vacuously
//! true on an edgeless graph; conditions 2 and 3 are false there.

use crate::error::{invalid, Result};
use crate::graph::{are_isomorphic, named, Edge, Graph};
use crate::topo::contains_theta;

/// Why an edge fails one of the edge-quantified conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureReason {
    ThetaFound,
    LowDegree,
    NotACycle,
}

impl FailureReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureReason::ThetaFound => "theta-found",
            FailureReason::LowDegree => "low-degree",
            FailureReason::NotACycle => "not-a-cycle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFailure {
    pub edge: Edge,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub condition1: bool,
    pub condition2: bool,
    pub condition3: bool,
    pub witnesses: Vec<EdgeFailure>,
}

fn remove_ends(k: &Graph, e: Edge) -> Graph {
    k.delete_vertices(e.lo(), e.hi()).expect("edge ends are vertices").0
}

fn low_degree(g: &Graph) -> bool {
    g.min_degree().is_some_and(|d| d < 2)
}

pub fn condition1(k: &Graph) -> bool {
    k.edges().iter().all(|&e| {
        let rest = remove_ends(k, e);
        !low_degree(&rest) && !contains_theta(&rest)
    })
}

pub fn condition2(k: &Graph) -> bool {
    k.edge_count() > 0 && k.edges().iter().all(|&e| remove_ends(k, e).is_cycle())
}

pub fn condition3(k: &Graph) -> bool {
    are_isomorphic(k, &named::complete(5)) || are_isomorphic(k, &named::complete_bipartite(3, 3))
}

/// `(min degree of G-x-y >= 2 with G-x-y non-empty, G-x-y has no θ)`.
pub fn deletion_lemma_predicates(g: &Graph, x: usize, y: usize) -> Result<(bool, bool)> {
    if !g.has_edge(x, y) {
        return invalid(format!("({x}, {y}) is not an edge"));
    }
    let rest = remove_ends(g, Edge::new(x, y).expect("edge"));
    let dega_ok = rest.vertex_count() > 0 && !low_degree(&rest);
    Ok((dega_ok, !contains_theta(&rest)))
}

/// All three conditions plus the per-edge failures behind 1 and 2.
pub fn evaluate(k: &Graph) -> LemmaReport {
    let mut witnesses = Vec::new();
    for &e in k.edges() {
        let rest = remove_ends(k, e);
        if contains_theta(&rest) {
            witnesses.push(EdgeFailure { edge: e, reason: FailureReason::ThetaFound });
        }
        if low_degree(&rest) {
            witnesses.push(EdgeFailure { edge: e, reason: FailureReason::LowDegree });
        }
        if !rest.is_cycle() {
            witnesses.push(EdgeFailure { edge: e, reason: FailureReason::NotACycle });
        }
    }
    let fails = |r: FailureReason| witnesses.iter().any(|w| w.reason == r);
    let condition1 = !fails(FailureReason::ThetaFound) && !fails(FailureReason::LowDegree);
    let condition2 = k.edge_count() > 0 && !fails(FailureReason::NotACycle);
    let condition3 = condition3(k);
    assert!(!condition3 || condition2, "a Kuratowski graph must satisfy condition 2");
    assert!(!condition2 || condition1, "condition 2 must imply condition 1");
    LemmaReport { condition1, condition2, condition3, witnesses }
}
