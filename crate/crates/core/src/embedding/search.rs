//! Backtracking search over rotation systems.
//!
//! The pruned search inserts the edges of a connected graph one at a time,
//! keeping every prefix connected. A new edge between two placed vertices
//! goes into one corner at each end; it splits a face when both corners lie
//! on that face and otherwise merges two faces, which raises the genus for
//! good. Only splitting insertions are followed, so every partial rotation
//! is planar and a branch dies at the first edge that cannot be added. Each
//! genus-0 rotation of the graph arises from exactly one sequence of
//! choices.

use super::{trace_faces, FaceSet, RotationSystem};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes before giving up with
    /// [`Error::ResourceExhausted`].
    pub budget: u64,
    /// Answer "absent" at once for a component with `V >= 3` and `E > 3V - 6`.
    pub edge_bound_prefilter: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_NODE_BUDGET, edge_bound_prefilter: true }
    }
}

/// A genus-0 rotation system of `g`, if there is one.
///
/// Components are searched separately and their rotations united. Only the
/// 2-core of each component is searched; the trees hanging off it are put
/// back afterwards, each new neighbor appended to the cyclic order, which
/// leaves the face count unchanged.
pub fn find_planar_rotation(g: &Graph, opts: SearchOptions) -> Result<Option<RotationSystem>> {
    if opts.budget == 0 {
        return invalid("search budget must be positive");
    }
    let core = g.two_core();
    let mut order: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    let mut spent = 0u64;
    for comp in g.components() {
        let kept: Vec<usize> = comp.iter().copied().filter(|&v| core[v]).collect();
        let sub = g.induced_subgraph(&kept);
        let left = SearchOptions { budget: opts.budget - spent, ..opts };
        let mut search = ConnectedSearch::new(&sub, left)?;
        let found = search.run(&mut |_, _| true)?;
        spent += search.nodes;
        let Some(rho) = found else { return Ok(None) };
        for (i, cyc) in rho.order.into_iter().enumerate() {
            order[kept[i]] = cyc.into_iter().map(|w| kept[w]).collect();
        }
    }
    for (v, cyc) in order.iter_mut().enumerate() {
        cyc.extend(g.neighbors(v).iter().filter(|&&w| !(core[v] && core[w])));
    }
    Ok(Some(RotationSystem { order }))
}

/// The first genus-0 rotation of a connected graph accepted by `accept`.
///
/// Rotations are explored up to global reversal, so `accept` must not tell
/// a rotation from its mirror image.
pub fn find_planar_rotation_where<F>(g: &Graph, opts: SearchOptions, mut accept: F) -> Result<Option<RotationSystem>>
where
    F: FnMut(&RotationSystem, &FaceSet) -> bool,
{
    if opts.budget == 0 {
        return invalid("search budget must be positive");
    }
    if !g.is_connected() {
        return invalid("filtered rotation search needs a connected graph");
    }
    ConnectedSearch::new(g, opts)?.run(&mut accept)
}

struct ConnectedSearch<'g> {
    g: &'g Graph,
    opts: SearchOptions,
    /// Edges in insertion order. `(u, v)` with `u` already placed; when `v`
    /// is not placed yet the edge brings it in.
    plan: Vec<(usize, usize)>,
    /// First step after which some vertex has degree three; the mirror
    /// quotient is applied there.
    mirror_step: usize,
    rot: Vec<Vec<usize>>,
    placed: Vec<bool>,
    nodes: u64,
}

/// A corner of the partial embedding: inserting at `pos` of the rotation at
/// the corner's vertex puts the new edge inside face `face`.
#[derive(Clone, Copy)]
struct Corner {
    face: usize,
    pos: usize,
}

impl<'g> ConnectedSearch<'g> {
    fn new(g: &'g Graph, opts: SearchOptions) -> Result<ConnectedSearch<'g>> {
        let n = g.vertex_count();
        let plan = insertion_plan(g);
        let mut deg = vec![0usize; n];
        let mut mirror_step = plan.len();
        for (k, &(u, v)) in plan.iter().enumerate() {
            deg[u] += 1;
            deg[v] += 1;
            if deg[u] == 3 || deg[v] == 3 {
                mirror_step = k;
                break;
            }
        }
        let mut placed = vec![false; n];
        if let Some(&(u, _)) = plan.first() {
            placed[u] = true;
        }
        Ok(ConnectedSearch { g, opts, plan, mirror_step, rot: vec![Vec::new(); n], placed, nodes: 0 })
    }

    fn run(&mut self, accept: &mut dyn FnMut(&RotationSystem, &FaceSet) -> bool) -> Result<Option<RotationSystem>> {
        let (v, e) = (self.g.vertex_count(), self.g.edge_count());
        if self.opts.edge_bound_prefilter && v >= 3 && e + 6 > 3 * v {
            return Ok(None);
        }
        self.step(0, accept)
    }

    fn step(&mut self, k: usize, accept: &mut dyn FnMut(&RotationSystem, &FaceSet) -> bool) -> Result<Option<RotationSystem>> {
        self.nodes += 1;
        if self.nodes > self.opts.budget {
            return Err(Error::ResourceExhausted { budget: self.opts.budget });
        }
        let Some(&(u, v)) = self.plan.get(k) else {
            return Ok(self.finish(accept));
        };
        if !self.placed[v] {
            // a new vertex hangs in any corner at u; faces stay as they are
            self.placed[v] = true;
            self.rot[v].push(u);
            for pos in 0..self.rot[u].len().max(1) {
                self.rot[u].insert(pos, v);
                let found = if self.keep_orientation(k, u, v) { self.step(k + 1, accept)? } else { None };
                self.rot[u].remove(pos);
                if found.is_some() {
                    self.placed[v] = false;
                    self.rot[v].clear();
                    return Ok(found);
                }
            }
            self.placed[v] = false;
            self.rot[v].clear();
            return Ok(None);
        }
        // both ends placed: the edge must split a face, so both corners
        // have to lie on the same face
        let (at_u, at_v) = self.corners(u, v);
        for cu in &at_u {
            for cv in at_v.iter().filter(|c| c.face == cu.face) {
                self.rot[u].insert(cu.pos, v);
                self.rot[v].insert(cv.pos, u);
                let found = if self.keep_orientation(k, u, v) { self.step(k + 1, accept)? } else { None };
                self.rot[u].remove(cu.pos);
                self.rot[v].remove(cv.pos);
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }

    /// Up to the first degree-3 vertex every partial rotation is its own
    /// mirror image; from there on mirror pairs are told apart by the
    /// orientation of that vertex, and only one orientation is kept.
    fn keep_orientation(&self, k: usize, u: usize, v: usize) -> bool {
        if k != self.mirror_step {
            return true;
        }
        let w = if self.rot[u].len() == 3 { u } else { v };
        let r = &self.rot[w];
        let m = (0..3).min_by_key(|&i| r[i]).expect("three neighbors");
        r[(m + 1) % 3] < r[(m + 2) % 3]
    }

    /// Corners at `u` and at `v`, each tagged with its face in the current
    /// partial embedding.
    fn corners(&self, u: usize, v: usize) -> (Vec<Corner>, Vec<Corner>) {
        let n = self.g.vertex_count();
        let mut offset = vec![0; n + 1];
        for x in 0..n {
            offset[x + 1] = offset[x] + self.rot[x].len();
        }
        let mut face_of = vec![usize::MAX; offset[n]];
        let (mut at_u, mut at_v) = (Vec::new(), Vec::new());
        let mut faces = 0;
        for x in 0..n {
            for i in 0..self.rot[x].len() {
                if face_of[offset[x] + i] != usize::MAX {
                    continue;
                }
                // walk the face through dart x -> rot[x][i]
                let (mut a, mut ai) = (x, i);
                while face_of[offset[a] + ai] == usize::MAX {
                    face_of[offset[a] + ai] = faces;
                    let b = self.rot[a][ai];
                    let j = self.rot[b].iter().position(|&y| y == a).expect("symmetric rotation");
                    let next = (j + 1) % self.rot[b].len();
                    if b == u {
                        at_u.push(Corner { face: faces, pos: j + 1 });
                    } else if b == v {
                        at_v.push(Corner { face: faces, pos: j + 1 });
                    }
                    (a, ai) = (b, next);
                }
                faces += 1;
            }
        }
        (at_u, at_v)
    }

    fn finish(&mut self, accept: &mut dyn FnMut(&RotationSystem, &FaceSet) -> bool) -> Option<RotationSystem> {
        let rho = RotationSystem { order: self.rot.clone() };
        let faces = trace_faces(self.g, &rho).expect("search builds valid rotations");
        (faces.genus() == 0 && accept(&rho, &faces)).then_some(rho)
    }
}

/// Edge insertion order for a connected graph. Vertices come in one at a
/// time, starting from a highest-degree one and always taking the vertex
/// with the most neighbors already in; each brings its edge from the
/// earliest such neighbor first, then its other edges back into the placed
/// part. Every prefix is connected, and cycles close as early as possible.
fn insertion_plan(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut rank = vec![usize::MAX; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut links = vec![0usize; n];
    let mut plan = Vec::with_capacity(g.edge_count());
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| rank[v] == usize::MAX)
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        if !order.is_empty() && links[next] == 0 {
            break; // not connected; callers only pass connected graphs
        }
        rank[next] = order.len();
        order.push(next);
        let mut back: Vec<usize> = g.neighbors(next).iter().copied().filter(|&w| rank[w] != usize::MAX).collect();
        back.sort_by_key(|&w| rank[w]);
        for w in back {
            plan.push((w, next));
        }
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    plan
}

/// Number of distinct rotation systems: the product of `(deg - 1)!`.
/// Saturates at `u64::MAX`.
pub fn rotation_count(g: &Graph) -> u64 {
    (0..g.vertex_count()).fold(1u64, |acc, v| {
        let f = (1..g.degree(v).max(1) as u64).fold(1u64, |a, b| a.saturating_mul(b));
        acc.saturating_mul(f)
    })
}

/// Visits every rotation system of `g` (no pruning, no symmetry quotient).
/// Refuses graphs with more than `limit` rotation systems.
pub fn for_each_rotation<F>(g: &Graph, limit: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&RotationSystem),
{
    let total = rotation_count(g);
    if total > limit {
        return Err(Error::Capacity(format!("{total} rotation systems exceed the limit of {limit}")));
    }
    let choices: Vec<Vec<Vec<usize>>> = (0..g.vertex_count()).map(|v| cyclic_orders(g.neighbors(v))).collect();
    let mut pick = vec![0usize; choices.len()];
    let mut count = 0;
    loop {
        let order = pick.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        visit(&RotationSystem { order });
        count += 1;
        // odometer
        let mut v = 0;
        loop {
            if v == pick.len() {
                return Ok(count);
            }
            pick[v] += 1;
            if pick[v] < choices[v].len() {
                break;
            }
            pick[v] = 0;
            v += 1;
        }
    }
}

/// All cyclic orders of `items`, each starting with `items[0]`.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    let mut cur = vec![first];
    let mut used = vec![false; rest.len()];
    fn rec(rest: &[usize], used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == rest.len() + 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            if !used[i] {
                used[i] = true;
                cur.push(rest[i]);
                rec(rest, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(rest, &mut used, &mut cur, &mut out);
    out
}

/// Minimum genus over all rotation systems, with the first rotation that
/// attains it.
pub fn minimum_genus(g: &Graph, limit: u64) -> Result<(usize, RotationSystem)> {
    let mut best: Option<(usize, RotationSystem)> = None;
    for_each_rotation(g, limit, |rho| {
        let gen = trace_faces(g, rho).expect("enumerated rotations are valid").genus();
        if best.as_ref().is_none_or(|(b, _)| gen < *b) {
            best = Some((gen, rho.clone()));
        }
    })?;
    Ok(best.expect("at least one rotation system exists"))
}
