//! Minor containment by branch-set growth.
//!
//! In a connected graph, any minor model can be enlarged until its branch
//! sets cover every vertex (keep absorbing an unused vertex next to some
//! set). The search therefore enumerates partitions of a component into
//! `k` connected parts: the smallest unassigned vertex seeds the next part,
//! which grows through adjacent unassigned vertices. Once found, the
//! branch sets are trimmed back to the vertices the cross edges need.

use super::Pattern;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Disjoint connected branch sets, one per pattern vertex, with one edge of
/// `G` for every pattern edge joining the corresponding sets.
///
/// Pattern vertices and edges follow `pattern.minor_graph()`; for θ that is
/// the diamond.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorCertificate {
    pub pattern: Pattern,
    pub branch_sets: Vec<Vec<usize>>,
    pub cross_edges: Vec<Edge>,
}

type Set = u128;

const MAX_COMPONENT: usize = 128;

fn bit(v: usize) -> Set {
    1 << v
}

fn members(mut s: Set) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            return None;
        }
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        Some(v)
    })
}

/// A minor model of `pattern` in `g`, if one exists.
///
/// Components are searched in order of their smallest vertex. Fails with
/// [`Error::Capacity`] for a component above 128 vertices.
pub fn find_minor(g: &Graph, pattern: Pattern) -> Result<Option<MinorCertificate>> {
    let pg = pattern.minor_graph();
    for comp in g.components() {
        if comp.len() < pg.vertex_count() {
            continue;
        }
        if comp.len() > MAX_COMPONENT {
            return Err(Error::Capacity(format!(
                "minor search handles components of at most {MAX_COMPONENT} vertices, got {}",
                comp.len()
            )));
        }
        let sub = g.induced_subgraph(&comp);
        if sub.edge_count() < pg.edge_count() {
            continue;
        }
        if let Some(parts) = PartitionSearch::new(&sub, &pg).run() {
            let cert = certificate_from_parts(&sub, pattern, &pg, &parts);
            return Ok(Some(MinorCertificate {
                pattern,
                branch_sets: cert.branch_sets.iter().map(|s| s.iter().map(|&v| comp[v]).collect()).collect(),
                cross_edges: cert
                    .cross_edges
                    .iter()
                    .map(|e| Edge::new(comp[e.lo()], comp[e.hi()]).expect("distinct ends"))
                    .collect(),
            }));
        }
    }
    Ok(None)
}

struct PartitionSearch<'a> {
    nbr: Vec<Set>,
    k: usize,
    pattern: &'a Graph,
    pattern_nonedges: usize,
    pattern_min_degree: usize,
    complete: bool,
    parts: Vec<Set>,
}

impl<'a> PartitionSearch<'a> {
    fn new(g: &Graph, pattern: &'a Graph) -> PartitionSearch<'a> {
        let k = pattern.vertex_count();
        let nbr = (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0, |s, &w| s | bit(w))).collect();
        let pairs = k * (k - 1) / 2;
        PartitionSearch {
            nbr,
            k,
            pattern,
            pattern_nonedges: pairs - pattern.edge_count(),
            pattern_min_degree: pattern.min_degree().unwrap_or(0),
            complete: pattern.edge_count() == pairs,
            parts: Vec::with_capacity(k),
        }
    }

    fn run(mut self) -> Option<Vec<Set>> {
        let all: Set = if self.nbr.len() == 128 { Set::MAX } else { bit(self.nbr.len()) - 1 };
        self.next_part(all).then_some(self.parts)
    }

    fn neighborhood(&self, s: Set) -> Set {
        members(s).fold(0, |acc, v| acc | self.nbr[v]) & !s
    }

    fn is_connected(&self, s: Set) -> bool {
        if s == 0 {
            return false;
        }
        let mut reach = bit(s.trailing_zeros() as usize);
        loop {
            let grown = (reach | self.neighborhood(reach)) & s;
            if grown == reach {
                return reach == s;
            }
            reach = grown;
        }
    }

    /// Connected components of `s`.
    fn components(&self, mut s: Set) -> Vec<Set> {
        let mut out = Vec::new();
        while s != 0 {
            let mut c = bit(s.trailing_zeros() as usize);
            loop {
                let grown = (c | self.neighborhood(c)) & s;
                if grown == c {
                    break;
                }
                c = grown;
            }
            out.push(c);
            s &= !c;
        }
        out
    }

    fn next_part(&mut self, unassigned: Set) -> bool {
        let placed = self.parts.len();
        if placed == self.k {
            return unassigned == 0 && self.quotient_fits();
        }
        if unassigned == 0 {
            return false;
        }
        if placed + 1 == self.k {
            if !self.is_connected(unassigned) {
                return false;
            }
            return self.try_part(unassigned, unassigned);
        }
        let root = unassigned.trailing_zeros() as usize;
        let max_size = unassigned.count_ones() as usize - (self.k - placed - 1);
        let ext = self.nbr[root] & unassigned;
        self.grow(bit(root), ext, bit(root), unassigned, max_size)
    }

    /// Enumerates each connected set containing `s` exactly once: every
    /// frontier vertex is either taken (recursion) or banned for the
    /// remaining siblings.
    fn grow(&mut self, s: Set, mut ext: Set, mut banned: Set, unassigned: Set, max_size: usize) -> bool {
        if self.try_part(s, unassigned) {
            return true;
        }
        if s.count_ones() as usize >= max_size {
            return false;
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= !bit(w);
            banned |= bit(w);
            let s2 = s | bit(w);
            let ext2 = (ext | (self.nbr[w] & unassigned)) & !s2 & !(banned & !ext);
            if self.grow(s2, ext2, banned, unassigned, max_size) {
                return true;
            }
        }
        false
    }

    fn try_part(&mut self, s: Set, unassigned: Set) -> bool {
        let rest = unassigned & !s;
        let remaining = self.k - self.parts.len() - 1;
        if !self.feasible_with(s, rest, remaining) {
            return false;
        }
        self.parts.push(s);
        if self.next_part(rest) {
            return true;
        }
        self.parts.pop();
        false
    }

    fn feasible_with(&self, s: Set, rest: Set, remaining: usize) -> bool {
        let rest_components = if remaining > 0 { self.components(rest) } else { Vec::new() };
        if rest_components.len() > remaining || (remaining == 0 && rest != 0) {
            return false;
        }
        let mut all = self.parts.clone();
        all.push(s);
        let hoods: Vec<Set> = all.iter().map(|&p| self.neighborhood(p)).collect();
        let mut missing = 0;
        for (i, hood) in hoods.iter().enumerate() {
            let mut adjacent = 0;
            for (j, &part) in all.iter().enumerate() {
                if i != j && hood & part != 0 {
                    adjacent += 1;
                } else if i < j {
                    missing += 1;
                }
            }
            let touches_rest = hood & rest != 0;
            let potential = adjacent + if touches_rest { remaining } else { 0 };
            if potential < self.pattern_min_degree {
                return false;
            }
            if self.complete && rest_components.iter().any(|&c| hood & c == 0) {
                return false;
            }
        }
        missing <= self.pattern_nonedges
    }

    /// The quotient over the parts contains the pattern as a spanning subgraph.
    fn quotient_fits(&self) -> bool {
        let k = self.k;
        let hoods: Vec<Set> = self.parts.iter().map(|&p| self.neighborhood(p)).collect();
        let adj = |i: usize, j: usize| hoods[i] & self.parts[j] != 0;
        let mut image = vec![usize::MAX; k];
        let mut used = vec![false; k];
        fn rec(
            p: usize,
            pattern: &Graph,
            adj: &dyn Fn(usize, usize) -> bool,
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if p == image.len() {
                return true;
            }
            for q in 0..image.len() {
                if used[q] {
                    continue;
                }
                if pattern.neighbors(p).iter().any(|&r| r < p && !adj(image[r], q)) {
                    continue;
                }
                image[p] = q;
                used[q] = true;
                if rec(p + 1, pattern, adj, image, used) {
                    return true;
                }
                used[q] = false;
            }
            false
        }
        rec(0, self.pattern, &adj, &mut image, &mut used)
    }
}

/// Orders the parts along the pattern, picks the least cross edge for each
/// pattern edge, then trims every set to what its cross edges need.
fn certificate_from_parts(g: &Graph, pattern: Pattern, pg: &Graph, parts: &[Set]) -> MinorCertificate {
    let k = parts.len();
    let adj = |i: usize, j: usize| g.edges().iter().any(|e| {
        (parts[i] & bit(e.lo()) != 0 && parts[j] & bit(e.hi()) != 0)
            || (parts[j] & bit(e.lo()) != 0 && parts[i] & bit(e.hi()) != 0)
    });
    // first bijection pattern vertex -> part that respects the pattern edges
    let mut order: Vec<usize> = Vec::new();
    fn assign(p: usize, k: usize, pg: &Graph, adj: &dyn Fn(usize, usize) -> bool, order: &mut Vec<usize>) -> bool {
        if p == k {
            return true;
        }
        for q in 0..k {
            if order.contains(&q) || pg.neighbors(p).iter().any(|&r| r < p && !adj(order[r], q)) {
                continue;
            }
            order.push(q);
            if assign(p + 1, k, pg, adj, order) {
                return true;
            }
            order.pop();
        }
        false
    }
    assert!(assign(0, k, pg, &adj, &mut order), "search only returns fitting partitions");
    let mut sets: Vec<Set> = order.iter().map(|&q| parts[q]).collect();
    let cross: Vec<Edge> = pg
        .edges()
        .iter()
        .map(|pe| {
            let (a, b) = (sets[pe.lo()], sets[pe.hi()]);
            *g.edges()
                .iter()
                .find(|e| {
                    (a & bit(e.lo()) != 0 && b & bit(e.hi()) != 0) || (b & bit(e.lo()) != 0 && a & bit(e.hi()) != 0)
                })
                .expect("adjacent parts")
        })
        .collect();
    let nbr: Vec<Set> = (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0, |s, &w| s | bit(w))).collect();
    let connected = |s: Set| -> bool {
        if s == 0 {
            return false;
        }
        let mut reach = bit(s.trailing_zeros() as usize);
        loop {
            let grown = (reach | members(reach).fold(0, |acc, v| acc | nbr[v])) & s;
            if grown == reach {
                return reach == s;
            }
            reach = grown;
        }
    };
    for set in sets.iter_mut() {
        let terminals: Set = cross
            .iter()
            .flat_map(|e| [e.lo(), e.hi()])
            .filter(|&v| *set & bit(v) != 0)
            .fold(0, |s, v| s | bit(v));
        for v in members(*set) {
            if terminals & bit(v) == 0 && connected(*set & !bit(v)) {
                *set &= !bit(v);
            }
        }
    }
    MinorCertificate { pattern, branch_sets: sets.iter().map(|&s| members(s).collect()).collect(), cross_edges: cross }
}

/// Checks the model rules: sets non-empty, pairwise disjoint, each inducing
/// a connected subgraph, and every cross edge an edge of `g` joining the
/// two sets of its pattern edge.
pub fn validate_minor(g: &Graph, m: &MinorCertificate) -> bool {
    let pg = m.pattern.minor_graph();
    let n = g.vertex_count();
    if m.branch_sets.len() != pg.vertex_count() || m.cross_edges.len() != pg.edge_count() {
        return false;
    }
    let mut owner = vec![usize::MAX; n];
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        if !g.induced_subgraph(set).is_connected() {
            return false;
        }
    }
    pg.edges().iter().zip(&m.cross_edges).all(|(pe, e)| {
        g.contains_edge(*e) && {
            let (a, b) = (owner[e.lo()], owner[e.hi()]);
            (a, b) == (pe.lo(), pe.hi()) || (b, a) == (pe.lo(), pe.hi())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn minor(g: &Graph, p: Pattern) -> Option<MinorCertificate> {
        let m = find_minor(g, p).unwrap();
        if let Some(m) = &m {
            assert!(validate_minor(g, m), "{m:?}");
        }
        m
    }

    #[test]
    fn examples() {
        let m = minor(&petersen(), Pattern::K5).unwrap();
        assert!(m.branch_sets.iter().all(|s| s.len() >= 2));
        assert!(minor(&complete(4), Pattern::K5).is_none());
        let m = minor(&complete(5), Pattern::K5).unwrap();
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
        assert!(minor(&petersen(), Pattern::K33).is_some());
        assert!(minor(&cube(), Pattern::K5).is_none());
        assert!(minor(&cube(), Pattern::K33).is_none());
        assert!(minor(&complete(4), Pattern::Theta).is_some());
        assert!(minor(&cycle(8), Pattern::Theta).is_none());
    }

    #[test]
    fn disconnected_input() {
        let g = Graph::new(8, [(0, 1), (1, 2)].into_iter().chain(complete(5).edges().iter().map(|e| (e.lo() + 3, e.hi() + 3))))
            .unwrap();
        let m = minor(&g, Pattern::K5).unwrap();
        assert_eq!(m.branch_sets, vec![vec![3], vec![4], vec![5], vec![6], vec![7]]);
    }

    #[test]
    fn validator_rejects_broken_models() {
        let g = complete(5);
        let good = find_minor(&g, Pattern::K5).unwrap().unwrap();
        let mut overlap = good.clone();
        overlap.branch_sets[1] = vec![0];
        assert!(!validate_minor(&g, &overlap));
        let mut bad_edge = good.clone();
        bad_edge.cross_edges[0] = Edge::new(2, 3).unwrap();
        assert!(!validate_minor(&g, &bad_edge));
        let disconnected = MinorCertificate {
            pattern: Pattern::K5,
            branch_sets: vec![vec![0, 2], vec![1], vec![3], vec![4], vec![5]],
            cross_edges: good.cross_edges.clone(),
        };
        assert!(!validate_minor(&cycle(6), &disconnected));
    }
}
