//! Subdivision and minor containment for the Kuratowski patterns and the
//! θ-graph, with certificates and independent validators.

mod lift;
mod minor;
mod subdivision;

use std::fmt;
use std::str::FromStr;

pub use lift::{lift_certificate, minor_to_subdivision};
pub use minor::{find_minor, validate_minor, MinorCertificate};
pub use subdivision::{contains_theta, find_kuratowski, find_subdivision, validate_subdivision, check_subdivision};

use crate::graph::{named, Graph};

/// The graphs searched for as subdivisions or minors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    K5,
    /// Parts `{0, 1, 2}` and `{3, 4, 5}`.
    K33,
    /// Two branch vertices joined by three internally disjoint paths.
    Theta,
}

const K5_EDGES: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
const K33_EDGES: [(usize, usize); 9] = [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];
const THETA_EDGES: [(usize, usize); 3] = [(0, 1), (0, 1), (0, 1)];

impl Pattern {
    pub const ALL: [Pattern; 3] = [Pattern::K5, Pattern::K33, Pattern::Theta];

    /// Number of branch vertices in a subdivision certificate.
    pub fn branch_count(self) -> usize {
        match self {
            Pattern::K5 => 5,
            Pattern::K33 => 6,
            Pattern::Theta => 2,
        }
    }

    /// Pattern edges in certificate order. The θ pattern has three parallel
    /// edges between its two branch vertices.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Pattern::K5 => &K5_EDGES,
            Pattern::K33 => &K33_EDGES,
            Pattern::Theta => &THETA_EDGES,
        }
    }

    /// Degree of every branch vertex.
    pub fn branch_degree(self) -> usize {
        match self {
            Pattern::K5 => 4,
            Pattern::K33 | Pattern::Theta => 3,
        }
    }

    /// Simple-graph normal form: `K5`, `K3,3`, and `K2,3` for θ (whose
    /// degree-3 vertices are `0` and `1`).
    pub fn graph(self) -> Graph {
        match self {
            Pattern::K5 => named::complete(5),
            Pattern::K33 => named::complete_bipartite(3, 3),
            Pattern::Theta => named::complete_bipartite(2, 3),
        }
    }

    /// The graph searched for as a minor. For θ this is the diamond
    /// `K4 - e` (degree-3 vertices `0` and `1`, adjacent), not `K2,3`: a θ
    /// may use one direct edge, as in `K4`, which has no `K2,3` minor.
    pub fn minor_graph(self) -> Graph {
        match self {
            Pattern::Theta => Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("diamond"),
            p => p.graph(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::K5 => "K5",
            Pattern::K33 => "K33",
            Pattern::Theta => "THETA",
        }
    }

    pub fn is_kuratowski(self) -> bool {
        matches!(self, Pattern::K5 | Pattern::K33)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Pattern, crate::Error> {
        match s {
            "K5" => Ok(Pattern::K5),
            "K33" => Ok(Pattern::K33),
            "THETA" => Ok(Pattern::Theta),
            other => Err(crate::Error::InvalidArgument(format!("unknown pattern {other:?}"))),
        }
    }
}

/// A subgraph of `G` homeomorphic to a pattern.
///
/// `branch[i]` is the image of pattern vertex `i`; `paths[j]` runs from the
/// image of `pattern.edges()[j].0` to the image of `pattern.edges()[j].1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubdivisionCertificate {
    pub pattern: Pattern,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl SubdivisionCertificate {
    /// Vertices used by the certificate, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.paths.iter().flatten().copied().chain(self.branch.iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// The certificate read as a subgraph of a graph on `n` vertices.
    pub fn subgraph(&self, n: usize) -> Option<Graph> {
        let mut pairs: Vec<(usize, usize)> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Graph::new(n, pairs).ok()
    }
}
