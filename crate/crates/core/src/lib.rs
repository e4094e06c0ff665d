//! Planarity certification for simple graphs.
//!
//! Every decision comes with a witness that can be checked independently:
//! a genus-0 rotation system when the graph is planar, or a subdivision of
//! `K5` / `K3,3` when it is not. The [`harness`] module runs exhaustive and
//! seeded campaigns that cross-check the different decision routes against
//! each other.

pub mod embedding;
pub mod error;
pub mod graph;
pub mod harness;
pub mod lemmas;
pub mod planarity;
pub mod topo;

pub use embedding::{Dart, FaceSet, RotationSystem};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexMap};
pub use lemmas::LemmaReport;
pub use planarity::{DecisionConfig, DecisionPath, Verdict};
pub use topo::{MinorCertificate, Pattern, SubdivisionCertificate};
