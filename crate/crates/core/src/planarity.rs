//! The decision procedure: a Kuratowski subdivision means non-planar, and
//! its absence means a genus-0 rotation must exist.
//!
//! The subdivision search has the last word. The rotation search only has
//! to produce the embedding that the theorem promises; if it cannot, that is
//! reported as [`Error::InternalInconsistency`], never as a verdict.

use crate::embedding::{find_planar_rotation, trace_faces, FaceSet, RotationSystem, SearchOptions, DEFAULT_NODE_BUDGET};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::topo::{find_kuratowski, find_minor, minor_to_subdivision, validate_subdivision, Pattern, SubdivisionCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecisionPath {
    #[default]
    Subdivision,
    Minor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecisionConfig {
    /// Node budget for the rotation search; must be positive.
    pub budget: u64,
    pub edge_bound_prefilter: bool,
    pub path: DecisionPath,
}

impl Default for DecisionConfig {
    fn default() -> Self {
        DecisionConfig { budget: DEFAULT_NODE_BUDGET, edge_bound_prefilter: true, path: DecisionPath::Subdivision }
    }
}

impl DecisionConfig {
    fn search_options(&self) -> Result<SearchOptions> {
        if self.budget == 0 {
            return invalid("decision budget must be positive");
        }
        Ok(SearchOptions { budget: self.budget, edge_bound_prefilter: self.edge_bound_prefilter })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Planar { rotation: RotationSystem, faces: FaceSet },
    NonPlanar { certificate: SubdivisionCertificate },
}

impl Verdict {
    pub fn is_planar(&self) -> bool {
        matches!(self, Verdict::Planar { .. })
    }

    /// Re-checks the witness against `g`.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        match self {
            Verdict::Planar { rotation, faces } => {
                let traced = trace_faces(g, rotation).map_err(|e| e.to_string())?;
                if &traced != faces {
                    return Err("faces do not match the rotation".into());
                }
                if traced.genus() != 0 || traced.euler_characteristic() != 2 * traced.component_count() as i64 {
                    return Err(format!("rotation has genus {}", traced.genus()));
                }
                Ok(())
            }
            Verdict::NonPlanar { certificate } => {
                if !certificate.pattern.is_kuratowski() {
                    return Err(format!("{} is not a Kuratowski pattern", certificate.pattern));
                }
                crate::topo::check_subdivision(g, certificate)
            }
        }
    }
}

/// Dispatches on `cfg.path`.
pub fn decide_with(g: &Graph, cfg: &DecisionConfig) -> Result<Verdict> {
    match cfg.path {
        DecisionPath::Subdivision => decide(g, cfg),
        DecisionPath::Minor => decide_via_minor(g, cfg),
    }
}

/// Components in order; the first one carrying a Kuratowski subdivision
/// decides. Otherwise every component is embedded.
pub fn decide(g: &Graph, cfg: &DecisionConfig) -> Result<Verdict> {
    let opts = cfg.search_options()?;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        if let Some(c) = find_kuratowski(&sub) {
            return Ok(Verdict::NonPlanar { certificate: relabel(&c, &comp) });
        }
    }
    embed(g, opts)
}

/// Same contract as [`decide`], with non-planarity found through a `K5` or
/// `K3,3` minor and converted into a subdivision.
pub fn decide_via_minor(g: &Graph, cfg: &DecisionConfig) -> Result<Verdict> {
    let opts = cfg.search_options()?;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        for pattern in [Pattern::K5, Pattern::K33] {
            if let Some(m) = find_minor(&sub, pattern)? {
                let c = minor_to_subdivision(&sub, &m)?;
                return Ok(Verdict::NonPlanar { certificate: relabel(&c, &comp) });
            }
        }
    }
    embed(g, opts)
}

fn embed(g: &Graph, opts: SearchOptions) -> Result<Verdict> {
    let Some(rotation) = find_planar_rotation(g, opts)? else {
        return Err(Error::InternalInconsistency(
            "no Kuratowski subdivision, yet the rotation search found no planar embedding".into(),
        ));
    };
    let faces = trace_faces(g, &rotation)?;
    if faces.genus() != 0 {
        return Err(Error::InternalInconsistency("rotation search returned a non-planar rotation".into()));
    }
    Ok(Verdict::Planar { rotation, faces })
}

fn relabel(c: &SubdivisionCertificate, comp: &[usize]) -> SubdivisionCertificate {
    SubdivisionCertificate {
        pattern: c.pattern,
        branch: c.branch.iter().map(|&v| comp[v]).collect(),
        paths: c.paths.iter().map(|p| p.iter().map(|&v| comp[v]).collect()).collect(),
    }
}

/// Both decision routes and the bare rotation search agree, and every
/// witness re-validates. Any error counts as disagreement.
pub fn cross_check(g: &Graph) -> bool {
    let cfg = DecisionConfig::default();
    let sound = |v: &Verdict| v.check(g).is_ok();
    let (Ok(a), Ok(b)) = (decide(g, &cfg), decide_via_minor(g, &cfg)) else {
        return false;
    };
    let Ok(raw) = find_planar_rotation(g, SearchOptions::default()) else {
        return false;
    };
    if let Verdict::NonPlanar { certificate } = &b {
        if !validate_subdivision(g, certificate) {
            return false;
        }
    }
    sound(&a) && sound(&b) && a.is_planar() == b.is_planar() && a.is_planar() == raw.is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn run(g: &Graph) -> (Verdict, Verdict) {
        let cfg = DecisionConfig::default();
        let a = decide(g, &cfg).unwrap();
        let b = decide_via_minor(g, &cfg).unwrap();
        assert_eq!(a.check(g), Ok(()));
        assert_eq!(b.check(g), Ok(()));
        (a, b)
    }

    #[test]
    fn obstruction_identities() {
        let (a, _) = run(&complete(5));
        assert!(matches!(a, Verdict::NonPlanar { ref certificate } if certificate.pattern == Pattern::K5));
        let (a, _) = run(&complete_bipartite(3, 3));
        assert!(matches!(a, Verdict::NonPlanar { ref certificate } if certificate.pattern == Pattern::K33));
        let (a, b) = run(&petersen());
        assert!(matches!(a, Verdict::NonPlanar { ref certificate } if certificate.pattern == Pattern::K33));
        assert!(!b.is_planar());
    }

    #[test]
    fn planar_examples() {
        let (a, _) = run(&complete(4));
        let Verdict::Planar { faces, .. } = a else { panic!("K4 is planar") };
        assert_eq!(faces.face_count(), 4);
        let (a, _) = run(&cube());
        let Verdict::Planar { faces, .. } = a else { panic!("Q3 is planar") };
        assert_eq!((faces.vertex_count(), faces.edge_count(), faces.face_count()), (8, 12, 6));
        let (a, b) = run(&star(6));
        assert!(a.is_planar() && b.is_planar());
    }

    #[test]
    fn disconnected_certificate_comes_from_first_bad_component() {
        // K4 on 0..4, K3,3 on 4..10, K5 on 10..15
        let mut pairs: Vec<(usize, usize)> = complete(4).edges().iter().map(|e| e.ends()).collect();
        pairs.extend(complete_bipartite(3, 3).edges().iter().map(|e| (e.lo() + 4, e.hi() + 4)));
        pairs.extend(complete(5).edges().iter().map(|e| (e.lo() + 10, e.hi() + 10)));
        let g = Graph::new(15, pairs).unwrap();
        let (a, b) = run(&g);
        for v in [a, b] {
            let Verdict::NonPlanar { certificate } = v else { panic!() };
            assert_eq!(certificate.pattern, Pattern::K33);
            assert!(certificate.branch.iter().all(|&x| (4..10).contains(&x)));
        }
    }

    #[test]
    fn zero_budget_is_rejected() {
        let cfg = DecisionConfig { budget: 0, ..DecisionConfig::default() };
        assert!(matches!(decide(&complete(4), &cfg), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn cross_check_examples() {
        assert!(cross_check(&complete(5)));
        assert!(cross_check(&complete(4)));
        assert!(cross_check(&Graph::empty(0)));
    }
}
