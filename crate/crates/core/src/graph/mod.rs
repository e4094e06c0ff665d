//! Simple undirected graphs and the elementary operations on them.
//!
//! A [`Graph`] is immutable once built. Every structural operation returns a
//! new graph together with a [`VertexMap`] that says where each old vertex
//! went, so certificates found in the result can be carried back.

mod enumerate;
mod iso;
pub mod named;

use std::collections::BTreeSet;
use std::fmt;

pub use enumerate::{enumerate_labeled_graphs, pair_count, pair_index, LabeledGraphs, MAX_ENUMERATION_N};
pub use iso::{are_homeomorphic, are_isomorphic, canonical_mask, is_canonical};

use crate::error::{invalid, Result};

/// An unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes `(u, v)` so that `u < v`. Returns `None` for a loop.
    pub fn new(u: usize, v: usize) -> Option<Edge> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge(u, v)),
            std::cmp::Ordering::Greater => Some(Edge(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn ends(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: usize) -> Option<usize> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated pairs and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u}, {v}) references a vertex outside 0..{n}"));
            }
            let Some(e) = Edge::new(u, v) else {
                return invalid(format!("loop at vertex {u}"));
            };
            if !set.insert(e) {
                return invalid(format!("duplicate edge {e}"));
            }
        }
        Ok(Graph::from_edge_set(n, set))
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Caller guarantees ids are in range; the set rules out duplicates.
    pub(crate) fn from_edge_set(n: usize, edges: BTreeSet<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges: edges.into_iter().collect(), adj }
    }

    /// Graph whose edge set is the given bitmask over [`pair_index`] order.
    pub fn from_mask(n: usize, mask: u128) -> Result<Graph> {
        let pairs = pair_count(n);
        if pairs > 128 {
            return Err(crate::Error::Capacity(format!("edge mask cannot address {n} vertices")));
        }
        if pairs < 128 && mask >> pairs != 0 {
            return invalid(format!("mask has bits beyond the {pairs} pairs of {n} vertices"));
        }
        let mut set = BTreeSet::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    set.insert(Edge(u, v));
                }
                bit += 1;
            }
        }
        Ok(Graph::from_edge_set(n, set))
    }

    /// Edge bitmask in [`pair_index`] order, or `None` above 16 vertices.
    pub fn to_mask(&self) -> Option<u128> {
        if pair_count(self.n) > 128 {
            return None;
        }
        Some(self.edges.iter().fold(0u128, |m, e| m | 1u128 << pair_index(self.n, e.0, e.1)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// True for the empty graph as well.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `vertices`; new id `i` stands for `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let set = self
            .edges
            .iter()
            .filter(|e| index[e.0] != usize::MAX && index[e.1] != usize::MAX)
            .filter_map(|e| Edge::new(index[e.0], index[e.1]))
            .collect();
        Graph::from_edge_set(vertices.len(), set)
    }

    /// True iff the graph is a single cycle on at least three vertices.
    /// Membership in the 2-core: what is left after repeatedly deleting
    /// vertices of degree below two.
    pub fn two_core(&self) -> Vec<bool> {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut active = vec![true; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] < 2).collect();
        while let Some(v) = stack.pop() {
            if !active[v] {
                continue;
            }
            active[v] = false;
            for &w in &self.adj[v] {
                if active[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        active
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    fn check_edge(&self, e: (usize, usize)) -> Result<Edge> {
        match Edge::new(e.0, e.1) {
            Some(edge) if self.contains_edge(edge) => Ok(edge),
            _ => invalid(format!("({}, {}) is not an edge of the graph", e.0, e.1)),
        }
    }

    /// `G - e`. Vertices are kept even if they become isolated.
    pub fn delete_edge(&self, e: (usize, usize)) -> Result<Graph> {
        let edge = self.check_edge(e)?;
        let set = self.edges.iter().copied().filter(|&f| f != edge).collect();
        Ok(Graph::from_edge_set(self.n, set))
    }

    /// `G - x`. Survivors keep their relative order.
    pub fn delete_vertex(&self, x: usize) -> Result<(Graph, VertexMap)> {
        if x >= self.n {
            return invalid(format!("vertex {x} out of range 0..{}", self.n));
        }
        let map = VertexMap::from_fn(self.n, |v| match v.cmp(&x) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        });
        Ok((self.apply_map(&map), map))
    }

    /// `G - x - y` for the two ends of an edge, or any two distinct vertices.
    pub fn delete_vertices(&self, x: usize, y: usize) -> Result<(Graph, VertexMap)> {
        if x == y {
            return invalid("delete_vertices needs two distinct vertices");
        }
        let (g1, m1) = self.delete_vertex(x)?;
        let y1 = m1.get(y).ok_or_else(|| crate::Error::InvalidArgument(format!("vertex {y} out of range")))?;
        let (g2, m2) = g1.delete_vertex(y1)?;
        Ok((g2, m1.then(&m2)))
    }

    /// `G / xy`. The merged vertex keeps the id `min(x, y)`, the larger id is
    /// removed and later ids shift down by one. The loop is dropped and
    /// parallel edges are merged, so the result stays simple.
    pub fn contract_edge(&self, e: (usize, usize)) -> Result<(Graph, usize, VertexMap)> {
        let edge = self.check_edge(e)?;
        let (keep, gone) = edge.ends();
        let map = VertexMap::from_fn(self.n, |v| match v.cmp(&gone) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => Some(keep),
            std::cmp::Ordering::Greater => Some(v - 1),
        });
        Ok((self.apply_map(&map), keep, map))
    }

    /// Replaces `uv` by `uw, wv` with the new vertex `w = n`.
    pub fn subdivide_edge(&self, e: (usize, usize)) -> Result<Graph> {
        let edge = self.check_edge(e)?;
        let w = self.n;
        let mut set: BTreeSet<Edge> = self.edges.iter().copied().filter(|&f| f != edge).collect();
        set.insert(Edge(edge.0, w));
        set.insert(Edge(edge.1, w));
        Ok(Graph::from_edge_set(self.n + 1, set))
    }

    /// Suppresses degree-2 vertices whose neighbors are not adjacent, lowest
    /// id first, until none is left. Cycles therefore end as triangles.
    pub fn smooth(&self) -> (Graph, VertexMap) {
        let mut adj: Vec<BTreeSet<usize>> = self.adj.iter().map(|a| a.iter().copied().collect()).collect();
        let mut alive = vec![true; self.n];
        loop {
            let found = (0..self.n).find(|&v| {
                if !alive[v] || adj[v].len() != 2 {
                    return false;
                }
                let mut it = adj[v].iter();
                let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
                !adj[a].contains(&b)
            });
            let Some(v) = found else { break };
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let (a, b) = (nb[0], nb[1]);
            adj[a].remove(&v);
            adj[b].remove(&v);
            adj[a].insert(b);
            adj[b].insert(a);
            adj[v].clear();
            alive[v] = false;
        }
        let mut next = 0;
        let map = VertexMap::from_fn(self.n, |v| {
            alive[v].then(|| {
                next += 1;
                next - 1
            })
        });
        let mut set = BTreeSet::new();
        for (u, nb) in adj.iter().enumerate() {
            for &w in nb {
                if u < w {
                    set.insert(Edge(map.get(u).unwrap(), map.get(w).unwrap()));
                }
            }
        }
        (Graph::from_edge_set(map.image_len(), set), map)
    }

    /// Image of the graph under a vertex map; edges with a removed end and
    /// edges collapsing to a loop are dropped.
    fn apply_map(&self, map: &VertexMap) -> Graph {
        let set = self
            .edges
            .iter()
            .filter_map(|e| Edge::new(map.get(e.0)?, map.get(e.1)?))
            .collect();
        Graph::from_edge_set(map.image_len(), set)
    }

    /// Applies a vertex permutation `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return invalid("relabel expects a permutation of the vertex ids");
        }
        let set = self.edges.iter().filter_map(|e| Edge::new(perm[e.0], perm[e.1])).collect();
        Ok(Graph::from_edge_set(self.n, set))
    }
}

/// Where each vertex of a source graph went in a derived graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    map: Vec<Option<usize>>,
    image_len: usize,
}

impl VertexMap {
    pub fn identity(n: usize) -> VertexMap {
        VertexMap { map: (0..n).map(Some).collect(), image_len: n }
    }

    pub(crate) fn from_fn(n: usize, f: impl FnMut(usize) -> Option<usize>) -> VertexMap {
        let map: Vec<Option<usize>> = (0..n).map(f).collect();
        let image_len = map.iter().flatten().max().map_or(0, |m| m + 1);
        VertexMap { map, image_len }
    }

    /// New id of `old`, or `None` if it was removed.
    pub fn get(&self, old: usize) -> Option<usize> {
        self.map.get(old).copied().flatten()
    }

    pub fn source_len(&self) -> usize {
        self.map.len()
    }

    pub fn image_len(&self) -> usize {
        self.image_len
    }

    /// All old vertices mapped onto `new`, ascending.
    pub fn preimage(&self, new: usize) -> Vec<usize> {
        (0..self.map.len()).filter(|&v| self.map[v] == Some(new)).collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        VertexMap {
            map: self.map.iter().map(|m| m.and_then(|v| next.get(v))).collect(),
            image_len: next.image_len,
        }
    }
}
