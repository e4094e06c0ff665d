//! JSON verdict and lemma documents.

use serde::{Deserialize, Serialize};

use kuratowski::embedding::trace_faces;
use kuratowski::lemmas::EdgeFailure;
use kuratowski::{Graph, LemmaReport, Pattern, RotationSystem, SubdivisionCertificate, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Euler {
    #[serde(rename = "V")]
    pub v: usize,
    #[serde(rename = "E")]
    pub e: usize,
    #[serde(rename = "F")]
    pub f: usize,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub pattern: String,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum VerdictDocument {
    Planar {
        /// Cyclic neighbor order at each vertex.
        rotation: Vec<Vec<usize>>,
        /// Each face as the vertices along its walk.
        faces: Vec<Vec<usize>>,
        euler: Euler,
    },
    Nonplanar { certificate: CertificateDoc },
}

impl VerdictDocument {
    pub fn from_verdict(v: &Verdict) -> VerdictDocument {
        match v {
            Verdict::Planar { rotation, faces } => VerdictDocument::Planar {
                rotation: rotation.cycles().to_vec(),
                faces: (0..faces.face_count()).map(|f| faces.face_vertices(f).expect("face index")).collect(),
                euler: Euler {
                    v: faces.vertex_count(),
                    e: faces.edge_count(),
                    f: faces.face_count(),
                    components: faces.component_count(),
                },
            },
            Verdict::NonPlanar { certificate } => VerdictDocument::Nonplanar {
                certificate: CertificateDoc {
                    pattern: certificate.pattern.name().to_string(),
                    branch: certificate.branch.clone(),
                    paths: certificate.paths.clone(),
                },
            },
        }
    }

    pub fn is_planar(&self) -> bool {
        matches!(self, VerdictDocument::Planar { .. })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<VerdictDocument, String> {
        let doc: VerdictDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if let VerdictDocument::Nonplanar { certificate } = &doc {
            certificate.pattern.parse::<Pattern>().map_err(|e| e.to_string())?;
        }
        Ok(doc)
    }

    /// Checks the document against `g`: a planar verdict needs a genus-0
    /// rotation of `g` whose faces and Euler data are the ones listed; a
    /// non-planar verdict needs a valid `K5` or `K3,3` subdivision.
    pub fn certify(&self, g: &Graph) -> Result<(), String> {
        match self {
            VerdictDocument::Planar { rotation, faces, euler } => {
                let rho = RotationSystem::for_graph(g, rotation.clone()).map_err(|e| e.to_string())?;
                let traced = trace_faces(g, &rho).map_err(|e| e.to_string())?;
                let verdict = Verdict::Planar { rotation: rho, faces: traced };
                verdict.check(g)?;
                let VerdictDocument::Planar { faces: f2, euler: e2, .. } = VerdictDocument::from_verdict(&verdict) else {
                    unreachable!("planar verdict");
                };
                if &e2 != euler {
                    return Err(format!("Euler data {euler:?} does not match the rotation ({e2:?})"));
                }
                if &f2 != faces {
                    return Err("listed faces do not match the rotation".into());
                }
                Ok(())
            }
            VerdictDocument::Nonplanar { certificate } => {
                let pattern: Pattern = certificate.pattern.parse().map_err(|e: kuratowski::Error| e.to_string())?;
                let c = SubdivisionCertificate {
                    pattern,
                    branch: certificate.branch.clone(),
                    paths: certificate.paths.clone(),
                };
                Verdict::NonPlanar { certificate: c }.check(g)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub edge: [usize; 2],
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaDocument {
    pub condition1: bool,
    pub condition2: bool,
    pub condition3: bool,
    pub witnesses: Vec<WitnessDoc>,
}

impl From<&LemmaReport> for LemmaDocument {
    fn from(r: &LemmaReport) -> LemmaDocument {
        let witness = |w: &EdgeFailure| WitnessDoc { edge: [w.edge.lo(), w.edge.hi()], reason: w.reason.as_str() };
        LemmaDocument {
            condition1: r.condition1,
            condition2: r.condition2,
            condition3: r.condition3,
            witnesses: r.witnesses.iter().map(witness).collect(),
        }
    }
}
