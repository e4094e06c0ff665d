//! Combinatorial embeddings.
//!
//! A [`RotationSystem`] fixes a cyclic order of the neighbors around every
//! vertex. Tracing faces uses one convention throughout: the walk leaving
//! dart `(u, v)` continues with `(v, w)`, where `w` follows `u` in the cyclic
//! order at `v`. Reversing every cyclic order only mirrors the faces.

mod search;

use std::collections::BTreeSet;

pub use search::{
    find_planar_rotation, find_planar_rotation_where, for_each_rotation, minimum_genus, rotation_count,
    SearchOptions, DEFAULT_NODE_BUDGET,
};

use crate::error::{invalid, Error, Result};
use crate::graph::{Edge, Graph};

/// An edge with a chosen direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

impl Dart {
    pub fn new(tail: usize, head: usize) -> Dart {
        Dart { tail, head }
    }

    pub fn reverse(self) -> Dart {
        Dart { tail: self.head, head: self.tail }
    }

    pub fn edge(self) -> Edge {
        Edge::new(self.tail, self.head).expect("darts never join a vertex to itself")
    }
}

/// All `2|E|` darts of `g`, sorted by `(tail, head)`.
pub fn darts(g: &Graph) -> Vec<Dart> {
    (0..g.vertex_count())
        .flat_map(|v| g.neighbors(v).iter().map(move |&w| Dart::new(v, w)))
        .collect()
}

/// Cyclic order of the neighbors at each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Wraps per-vertex neighbor cycles without checking them against a graph.
    pub fn from_cycles(order: Vec<Vec<usize>>) -> RotationSystem {
        RotationSystem { order }
    }

    /// The rotation that lists every neighborhood in ascending order.
    pub fn ascending(g: &Graph) -> RotationSystem {
        RotationSystem { order: (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect() }
    }

    pub fn for_graph(g: &Graph, order: Vec<Vec<usize>>) -> Result<RotationSystem> {
        let rho = RotationSystem { order };
        rho.check(g)?;
        Ok(rho)
    }

    /// Every cycle must be a permutation of exactly the neighbors of its vertex.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.vertex_count() {
            return invalid(format!(
                "rotation covers {} vertices, graph has {}",
                self.order.len(),
                g.vertex_count()
            ));
        }
        for (v, cyc) in self.order.iter().enumerate() {
            let mut sorted = cyc.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return invalid(format!("rotation at vertex {v} is not a permutation of its neighbors"));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn cycle(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.order
    }

    /// The neighbor after `u` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, u: usize) -> Option<usize> {
        let cyc = &self.order[v];
        let i = cyc.iter().position(|&w| w == u)?;
        Some(cyc[(i + 1) % cyc.len()])
    }

    /// Every cyclic order reversed: the mirror-image drawing.
    pub fn reversed(&self) -> RotationSystem {
        RotationSystem {
            order: self
                .order
                .iter()
                .map(|cyc| {
                    let mut r = cyc.clone();
                    r.reverse();
                    r
                })
                .collect(),
        }
    }

    /// Each cycle rotated to start at its smallest neighbor.
    pub fn normalized(&self) -> RotationSystem {
        RotationSystem {
            order: self
                .order
                .iter()
                .map(|cyc| {
                    let mut r = cyc.clone();
                    if let Some(i) = r.iter().enumerate().min_by_key(|&(_, w)| *w).map(|(i, _)| i) {
                        r.rotate_left(i);
                    }
                    r
                })
                .collect(),
        }
    }
}

/// Faces traced from a rotation system, together with the Euler data.
///
/// An isolated vertex has no darts; it contributes one face with an empty
/// walk, listed in `isolated` rather than in `walks`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    walks: Vec<Vec<Dart>>,
    isolated: Vec<usize>,
    vertices: usize,
    edges: usize,
    components: usize,
}

impl FaceSet {
    /// Dart walks; face `i < walks().len()` is `walks()[i]`.
    pub fn walks(&self) -> &[Vec<Dart>] {
        &self.walks
    }

    /// Isolated vertices; each one is the face `walks().len() + k`.
    pub fn isolated(&self) -> &[usize] {
        &self.isolated
    }

    pub fn face_count(&self) -> usize {
        self.walks.len() + self.isolated.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.face_count() as i64
    }

    /// `(2c - V + E - F) / 2`, summed over components.
    pub fn genus(&self) -> usize {
        let twice = 2 * self.components as i64 - self.euler_characteristic();
        debug_assert!(twice >= 0 && twice % 2 == 0, "Euler genus must be a non-negative integer");
        (twice / 2) as usize
    }

    /// Vertex sequence of face `f` (tails of its darts, in walk order).
    pub fn face_vertices(&self, f: usize) -> Option<Vec<usize>> {
        if let Some(w) = self.walks.get(f) {
            return Some(w.iter().map(|d| d.tail).collect());
        }
        self.isolated.get(f - self.walks.len()).map(|&v| vec![v])
    }

    fn face_edges(&self, f: usize) -> BTreeSet<Edge> {
        self.walks.get(f).map(|w| w.iter().map(|d| d.edge()).collect()).unwrap_or_default()
    }
}

/// Traces all faces of `rho`. Each walk starts at its smallest dart, and
/// walks are listed by that dart.
pub fn trace_faces(g: &Graph, rho: &RotationSystem) -> Result<FaceSet> {
    rho.check(g)?;
    let all = darts(g);
    let index = |d: Dart| all.binary_search(&d).expect("dart of g");
    let mut seen = vec![false; all.len()];
    let mut walks = Vec::new();
    for start in 0..all.len() {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            let d = all[i];
            walk.push(d);
            let w = rho.successor(d.head, d.tail).expect("checked rotation");
            i = index(Dart::new(d.head, w));
        }
        walks.push(walk);
    }
    let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).collect();
    Ok(FaceSet {
        walks,
        isolated,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        components: g.component_count(),
    })
}

pub fn genus(g: &Graph, rho: &RotationSystem) -> Result<usize> {
    Ok(trace_faces(g, rho)?.genus())
}

/// Subgraph made of the vertices and edges on face `f`, with vertex ids
/// compacted in ascending order.
pub fn face_boundary(g: &Graph, faces: &FaceSet, f: usize) -> Result<Graph> {
    let verts = face_boundary_vertices(g, faces, f)?;
    let edges = faces.face_edges(f);
    let idx = |v: usize| verts.binary_search(&v).expect("edge end on face");
    Graph::new(verts.len(), edges.iter().map(|e| (idx(e.lo()), idx(e.hi()))))
}

/// Sorted vertex ids on face `f`.
pub fn face_boundary_vertices(g: &Graph, faces: &FaceSet, f: usize) -> Result<Vec<usize>> {
    if f >= faces.face_count() {
        return invalid(format!("face index {f} out of range 0..{}", faces.face_count()));
    }
    if faces.vertex_count() != g.vertex_count() || faces.edge_count() != g.edge_count() {
        return invalid("face set was traced from a different graph");
    }
    let mut verts = faces.face_vertices(f).expect("index checked");
    verts.sort_unstable();
    verts.dedup();
    Ok(verts)
}

/// Index of a face whose boundary contains every edge of `g`.
pub fn face_covering_all_edges(g: &Graph, faces: &FaceSet) -> Option<usize> {
    (0..faces.face_count()).find(|&f| faces.face_edges(f).len() == g.edge_count())
}

/// Equal up to the mirror image: identical cyclic orders everywhere, or all
/// of them reversed.
pub fn rotations_equivalent(a: &RotationSystem, b: &RotationSystem) -> Result<bool> {
    let same_graph = a.vertex_count() == b.vertex_count()
        && a.order.iter().zip(&b.order).all(|(x, y)| {
            let (mut x, mut y) = (x.clone(), y.clone());
            x.sort_unstable();
            y.sort_unstable();
            x == y
        });
    if !same_graph {
        return Err(Error::InvalidArgument("rotation systems belong to different graphs".into()));
    }
    let an = a.normalized();
    Ok(an == b.normalized() || an == b.reversed().normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// A planar rotation of K4: vertex 3 in the middle of triangle 0-1-2.
    fn k4_planar() -> RotationSystem {
        RotationSystem::for_graph(&complete(4), vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]])
            .unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = cycle(3);
        let fs = trace_faces(&g, &RotationSystem::ascending(&g)).unwrap();
        assert_eq!(fs.face_count(), 2);
        assert!(fs.walks().iter().all(|w| w.len() == 3));
        assert_eq!(fs.genus(), 0);
        for f in 0..2 {
            assert_eq!(face_boundary(&g, &fs, f).unwrap(), g);
        }
    }

    #[test]
    fn k4_planar_rotation() {
        let g = complete(4);
        let fs = trace_faces(&g, &k4_planar()).unwrap();
        assert_eq!(fs.face_count(), 4);
        assert_eq!(fs.genus(), 0);
        for f in 0..4 {
            assert!(crate::graph::are_isomorphic(&face_boundary(&g, &fs, f).unwrap(), &cycle(3)));
        }
        assert!(face_boundary(&g, &fs, 4).is_err());
    }

    #[test]
    fn trees_have_one_face() {
        for g in [star(4), path(5), Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap()] {
            let fs = trace_faces(&g, &RotationSystem::ascending(&g)).unwrap();
            assert_eq!(fs.face_count(), 1);
            assert_eq!(fs.genus(), 0);
            assert_eq!(face_boundary(&g, &fs, 0).unwrap(), g);
            assert_eq!(face_covering_all_edges(&g, &fs), Some(0));
        }
    }

    #[test]
    fn cycle_faces_cover_everything() {
        let g = cycle(5);
        let fs = trace_faces(&g, &RotationSystem::ascending(&g)).unwrap();
        assert_eq!(face_covering_all_edges(&g, &fs), Some(0));
    }

    #[test]
    fn isolated_vertices_count_as_components() {
        let g = Graph::new(4, [(0, 1)]).unwrap();
        let fs = trace_faces(&g, &RotationSystem::ascending(&g)).unwrap();
        assert_eq!((fs.face_count(), fs.component_count(), fs.genus()), (3, 3, 0));
        assert_eq!(fs.face_vertices(1), Some(vec![2]));
    }

    #[test]
    fn rejects_foreign_rotation() {
        let g = complete(4);
        let bad = RotationSystem::from_cycles(vec![vec![1, 2], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]]);
        assert!(trace_faces(&g, &bad).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let r = k4_planar();
        assert!(rotations_equivalent(&r, &r).unwrap());
        assert!(rotations_equivalent(&r, &r.reversed()).unwrap());
        let other = RotationSystem::ascending(&complete(4));
        let g = complete(4);
        assert_ne!(genus(&g, &r).unwrap(), genus(&g, &other).unwrap());
        assert!(!rotations_equivalent(&r, &other).unwrap());
        assert!(rotations_equivalent(&r, &RotationSystem::ascending(&cycle(4))).is_err());
    }
}
