//! Subdivision search: branch images modulo the pattern's symmetry, then
//! internally disjoint paths by backtracking.

use super::{Pattern, SubdivisionCertificate};
use crate::graph::Graph;

/// A subdivision of `pattern` inside `g`, if one exists.
///
/// Branch images are tried in ascending lexicographic order; each pattern
/// edge is routed shortest path first, and the search backtracks over all
/// simple paths, so a negative answer is exhaustive.
pub fn find_subdivision(g: &Graph, pattern: Pattern) -> Option<SubdivisionCertificate> {
    let active = g.two_core();
    let deg = |v: usize| g.neighbors(v).iter().filter(|&&w| active[w]).count();
    let candidates: Vec<usize> =
        (0..g.vertex_count()).filter(|&v| active[v] && deg(v) >= pattern.branch_degree()).collect();
    let k = pattern.branch_count();
    if candidates.len() < k {
        return None;
    }
    // a subdivision has the pattern's cycle rank; the 2-core must have at least that much
    let rank_needed = pattern.edges().len() + 1 - pattern.branch_count();
    if max_component_rank(g, &active) < rank_needed {
        return None;
    }

    let mut router = Router::new(g, &active, pattern);
    let mut found = None;
    for_each_combination(candidates.len(), k, |idx| {
        let chosen: Vec<usize> = idx.iter().map(|&i| candidates[i]).collect();
        match pattern {
            Pattern::K5 | Pattern::Theta => {
                if let Some(paths) = router.route(&chosen) {
                    found = Some(SubdivisionCertificate { pattern, branch: chosen, paths });
                }
            }
            Pattern::K33 => {
                // side A holds chosen[0] plus two more
                for_each_combination(5, 2, |pair| {
                    let a = [chosen[0], chosen[1 + pair[0]], chosen[1 + pair[1]]];
                    let b: Vec<usize> = chosen[1..].iter().copied().filter(|v| !a.contains(v)).collect();
                    let branch = vec![a[0], a[1], a[2], b[0], b[1], b[2]];
                    if let Some(paths) = router.route(&branch) {
                        found = Some(SubdivisionCertificate { pattern, branch, paths });
                    }
                    found.is_none()
                });
            }
        }
        found.is_none()
    });
    found
}

pub fn contains_theta(g: &Graph) -> bool {
    find_subdivision(g, Pattern::Theta).is_some()
}

/// A `K5` subdivision if there is one, otherwise a `K3,3` subdivision.
pub fn find_kuratowski(g: &Graph) -> Option<SubdivisionCertificate> {
    find_subdivision(g, Pattern::K5).or_else(|| find_subdivision(g, Pattern::K33))
}

/// Vertices of the 2-core: what is left after repeatedly removing vertices
/// of degree below two. Nothing outside it can lie on a subdivided cycle.
/// Largest cycle rank `E - V + 1` over the components of the active subgraph.
fn max_component_rank(g: &Graph, active: &[bool]) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut best = 0;
    for s in 0..n {
        if !active[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let (mut verts, mut degsum) = (0usize, 0usize);
        while let Some(v) = stack.pop() {
            verts += 1;
            for &w in g.neighbors(v) {
                if active[w] {
                    degsum += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        best = best.max((degsum / 2 + 1).saturating_sub(verts));
    }
    best
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

struct Router<'g> {
    g: &'g Graph,
    pattern: Pattern,
    /// Vertex may carry a path interior (in the 2-core, not a branch vertex, not yet used).
    free: Vec<bool>,
    active: Vec<bool>,
    branch: Vec<usize>,
    paths: Vec<Option<Vec<usize>>>,
    dist: Vec<usize>,
    queue: Vec<usize>,
}

impl<'g> Router<'g> {
    fn new(g: &'g Graph, active: &[bool], pattern: Pattern) -> Router<'g> {
        let n = g.vertex_count();
        Router {
            g,
            pattern,
            free: vec![false; n],
            active: active.to_vec(),
            branch: Vec::new(),
            paths: Vec::new(),
            dist: vec![usize::MAX; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn route(&mut self, branch: &[usize]) -> Option<Vec<Vec<usize>>> {
        self.free.clone_from(&self.active);
        for &b in branch {
            self.free[b] = false;
        }
        self.branch = branch.to_vec();
        let edges = self.pattern.edges();
        self.paths = vec![None; edges.len()];
        // A direct edge never hurts: any other route for the same pair can be
        // swapped for it, freeing its interior.
        let mut used_direct = Vec::new();
        for (j, &(a, b)) in edges.iter().enumerate() {
            let (s, t) = (branch[a], branch[b]);
            if self.g.has_edge(s, t) && !used_direct.contains(&(s, t)) {
                used_direct.push((s, t));
                self.paths[j] = Some(vec![s, t]);
            }
        }
        if self.solve() {
            Some(self.paths.iter().map(|p| p.clone().expect("all routed")).collect())
        } else {
            None
        }
    }

    fn free_degree(&self, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| self.free[w]).count()
    }

    /// BFS from the free neighbors of `t`: `dist[v]` is the fewest interior
    /// vertices on a free route from `v` (inclusive) into `t`.
    fn distances_to(&mut self, t: usize) {
        self.dist.iter_mut().for_each(|d| *d = usize::MAX);
        self.queue.clear();
        for &w in self.g.neighbors(t) {
            if self.free[w] {
                self.dist[w] = 1;
                self.queue.push(w);
            }
        }
        let mut i = 0;
        while i < self.queue.len() {
            let v = self.queue[i];
            i += 1;
            for &w in self.g.neighbors(v) {
                if self.free[w] && self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push(w);
                }
            }
        }
    }

    /// Shortest free detour for `(s, t)` in interior vertices, if any.
    fn detour_length(&mut self, s: usize, t: usize) -> Option<usize> {
        self.distances_to(t);
        self.g.neighbors(s).iter().filter(|&&w| self.free[w]).map(|&w| self.dist[w]).min().filter(|&d| d != usize::MAX)
    }

    fn solve(&mut self) -> bool {
        let edges = self.pattern.edges();
        let pending: Vec<usize> = (0..edges.len()).filter(|&j| self.paths[j].is_none()).collect();
        if pending.is_empty() {
            return true;
        }
        // each branch vertex needs a free neighbor per pending path
        let mut need = vec![0usize; self.branch.len()];
        for &j in &pending {
            need[edges[j].0] += 1;
            need[edges[j].1] += 1;
        }
        if need.iter().enumerate().any(|(i, &c)| c > self.free_degree(self.branch[i])) {
            return false;
        }
        // forward check, and pick the scarcest edge
        let mut best: Option<(usize, usize, usize)> = None;
        for &j in &pending {
            let (s, t) = (self.branch[edges[j].0], self.branch[edges[j].1]);
            let Some(len) = self.detour_length(s, t) else { return false };
            let slack = self.free_degree(s).min(self.free_degree(t));
            if best.is_none_or(|(bs, bl, _)| (slack, len) < (bs, bl)) {
                best = Some((slack, len, j));
            }
        }
        let (_, min_len, j) = best.expect("pending is non-empty");
        let (s, t) = (self.branch[edges[j].0], self.branch[edges[j].1]);
        let free_count = self.free.iter().filter(|&&f| f).count();
        for interior in min_len..=free_count {
            self.distances_to(t);
            let dist = self.dist.clone();
            let mut path = vec![s];
            if self.extend(j, t, interior, &dist, &mut path) {
                return true;
            }
        }
        false
    }

    /// Tries every free path `s .. t` with exactly `interior` inner vertices,
    /// recursing into [`Router::solve`] for each.
    fn extend(&mut self, j: usize, t: usize, interior: usize, dist: &[usize], path: &mut Vec<usize>) -> bool {
        let have = path.len() - 1;
        let cur = *path.last().expect("path starts at s");
        if have == interior {
            if !self.g.has_edge(cur, t) {
                return false;
            }
            path.push(t);
            self.paths[j] = Some(path.clone());
            if self.solve() {
                return true;
            }
            self.paths[j] = None;
            path.pop();
            return false;
        }
        let left = interior - have;
        for idx in 0..self.g.degree(cur) {
            let w = self.g.neighbors(cur)[idx];
            if !self.free[w] || dist[w] > left {
                continue;
            }
            self.free[w] = false;
            path.push(w);
            let done = self.extend(j, t, interior, dist, path);
            path.pop();
            self.free[w] = true;
            if done {
                return true;
            }
        }
        false
    }
}

/// Checks a certificate against `g`, reporting the first broken rule.
pub fn check_subdivision(g: &Graph, c: &SubdivisionCertificate) -> Result<(), String> {
    let n = g.vertex_count();
    let edges = c.pattern.edges();
    if c.branch.len() != c.pattern.branch_count() {
        return Err(format!("{} branch vertices for {}", c.branch.len(), c.pattern));
    }
    if c.paths.len() != edges.len() {
        return Err(format!("{} paths for {} pattern edges", c.paths.len(), edges.len()));
    }
    let mut owner = vec![usize::MAX; n];
    for (i, &b) in c.branch.iter().enumerate() {
        if b >= n {
            return Err(format!("branch vertex {b} out of range"));
        }
        if owner[b] != usize::MAX {
            return Err(format!("branch vertex {b} used twice"));
        }
        owner[b] = edges.len() + i;
    }
    let mut direct = Vec::new();
    for (j, (p, &(a, b))) in c.paths.iter().zip(edges).enumerate() {
        if p.len() < 2 {
            return Err(format!("path {j} has fewer than two vertices"));
        }
        if p[0] != c.branch[a] || p[p.len() - 1] != c.branch[b] {
            return Err(format!("path {j} does not join the images of pattern vertices {a} and {b}"));
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(format!("path {j} uses non-edge ({}, {})", w[0], w[1]));
            }
        }
        for &v in &p[1..p.len() - 1] {
            if v >= n {
                return Err(format!("path {j} vertex {v} out of range"));
            }
            if owner[v] != usize::MAX {
                return Err(format!("interior vertex {v} of path {j} is already used"));
            }
            owner[v] = j;
        }
        if p.len() == 2 {
            let e = (p[0].min(p[1]), p[0].max(p[1]));
            if direct.contains(&e) {
                return Err(format!("edge {e:?} used by two paths"));
            }
            direct.push(e);
        }
    }
    Ok(())
}

/// True iff every certificate rule holds in `g`: paths join the right branch
/// vertices along edges of `g`, interiors are pairwise disjoint and avoid
/// all branch vertices, and the branch map is injective.
pub fn validate_subdivision(g: &Graph, c: &SubdivisionCertificate) -> bool {
    check_subdivision(g, c).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn found(g: &Graph, p: Pattern) -> Option<SubdivisionCertificate> {
        let c = find_subdivision(g, p);
        if let Some(c) = &c {
            assert_eq!(check_subdivision(g, c), Ok(()));
            assert_eq!(c.pattern, p);
        }
        c
    }

    #[test]
    fn k5_in_k5_is_identity() {
        let c = found(&complete(5), Pattern::K5).unwrap();
        assert_eq!(c.branch, vec![0, 1, 2, 3, 4]);
        assert!(c.paths.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn theta_examples() {
        assert!(found(&cycle(5), Pattern::Theta).is_none());
        let c = found(&complete(4), Pattern::Theta).unwrap();
        assert_eq!(c.branch, vec![0, 1]);
        assert_eq!(c.paths.iter().filter(|p| p.len() == 2).count(), 1);
        assert!(!contains_theta(&star(5)));
        assert!(!contains_theta(&cycle(9)));
        assert!(contains_theta(&complete(4)));
        assert!(contains_theta(&theta()));
    }

    #[test]
    fn petersen_has_k33_but_no_k5() {
        assert!(found(&petersen(), Pattern::K33).is_some());
        assert!(found(&petersen(), Pattern::K5).is_none());
        assert_eq!(find_kuratowski(&petersen()).unwrap().pattern, Pattern::K33);
    }

    #[test]
    fn kuratowski_examples() {
        assert_eq!(find_kuratowski(&complete(5)).unwrap().pattern, Pattern::K5);
        assert!(find_kuratowski(&complete(4)).is_none());
        assert_eq!(find_kuratowski(&complete(6)).unwrap().pattern, Pattern::K5);
        assert_eq!(find_kuratowski(&complete_bipartite(3, 3)).unwrap().pattern, Pattern::K33);
        assert!(find_kuratowski(&cube()).is_none());
    }

    #[test]
    fn subdivided_k33_is_found_with_long_paths() {
        let mut g = complete_bipartite(3, 3);
        for e in [(0, 3), (1, 4), (2, 5)] {
            g = g.subdivide_edge(e).unwrap();
        }
        let c = found(&g, Pattern::K33).unwrap();
        assert_eq!(c.paths.iter().map(|p| p.len() - 1).sum::<usize>(), 12);
    }

    #[test]
    fn validator_rejects_bad_certificates() {
        let g = complete(4);
        let good = SubdivisionCertificate { pattern: Pattern::Theta, branch: vec![0, 1], paths: vec![vec![0, 1], vec![0, 2, 1], vec![0, 3, 1]] };
        assert!(validate_subdivision(&g, &good));
        let shared = SubdivisionCertificate { paths: vec![vec![0, 1], vec![0, 2, 1], vec![0, 2, 1]], ..good.clone() };
        assert!(!validate_subdivision(&g, &shared));
        let twice_direct = SubdivisionCertificate { paths: vec![vec![0, 1], vec![0, 1], vec![0, 3, 1]], ..good.clone() };
        assert!(!validate_subdivision(&g, &twice_direct));
        let g2 = g.delete_edge((2, 1)).unwrap();
        assert!(!validate_subdivision(&g2, &good));
        let through_branch = SubdivisionCertificate { paths: vec![vec![0, 1], vec![0, 2, 1], vec![0, 1, 3, 1]], ..good };
        assert!(!validate_subdivision(&g, &through_branch));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
