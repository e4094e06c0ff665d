use super::{pair_count, pair_index, Graph};

/// Per-vertex invariant: degree and the sorted degrees of the neighbors.
fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Brute-force isomorphism test with invariant pruning. Meant for small
/// graphs (about ten vertices); no canonical labeling is involved.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let ig = vertex_invariants(g);
    let ih = vertex_invariants(h);
    let mut sg = ig.clone();
    let mut sh = ih.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return false;
    }
    // Map high-degree vertices first, then grow along edges.
    let n = g.vertex_count();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let seed = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        placed[seed] = true;
        let start = order.len();
        order.push(seed);
        let mut i = start;
        while i < order.len() {
            for &w in g.neighbors(order[i]) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_iso(g, h, &ig, &ih, &order, 0, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &Graph,
    h: &Graph,
    ig: &[(usize, Vec<usize>)],
    ih: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else { return true };
    for cand in 0..h.vertex_count() {
        if used[cand] || ih[cand] != ig[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g.has_edge(u, v) == h.has_edge(image[u], cand));
        if !consistent {
            continue;
        }
        image[v] = cand;
        used[cand] = true;
        if extend_iso(g, h, ig, ih, order, depth + 1, image, used) {
            return true;
        }
        used[cand] = false;
    }
    image[v] = usize::MAX;
    false
}

/// Homeomorphism test: both graphs smoothed to normal form, then compared
/// up to isomorphism.
pub fn are_homeomorphic(g: &Graph, h: &Graph) -> bool {
    are_isomorphic(&g.smooth().0, &h.smooth().0)
}

/// Canonical edge mask: the least mask over all relabelings that list the
/// vertices in ascending invariant order. Isomorphic graphs get the same
/// value. Returns `None` above 16 vertices.
pub fn canonical_mask(g: &Graph) -> Option<u128> {
    let n = g.vertex_count();
    if pair_count(n) > 128 {
        return None;
    }
    let inv = vertex_invariants(g);
    let mut by_inv: Vec<usize> = (0..n).collect();
    by_inv.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    // cell_of_pos[p]: the block of positions sharing one invariant value
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in by_inv.iter().enumerate() {
        if i == 0 || inv[by_inv[i - 1]] != inv[v] {
            cells.push(Vec::new());
        }
        cells.last_mut().unwrap().push(v);
    }
    let mut cell_of_pos = Vec::with_capacity(n);
    for (c, cell) in cells.iter().enumerate() {
        cell_of_pos.extend(std::iter::repeat_n(c, cell.len()));
    }
    let mut pos = vec![usize::MAX; n];
    let mut best = u128::MAX;
    let mut used = vec![false; n];
    canon_rec(g, &cells, &cell_of_pos, 0, &mut pos, &mut used, &mut best);
    Some(if n < 2 { 0 } else { best })
}

/// True when `g` is the representative of its isomorphism class, i.e. its
/// own mask is the canonical one.
pub fn is_canonical(g: &Graph) -> bool {
    let inv = vertex_invariants(g);
    if inv.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    canonical_mask(g).is_some_and(|c| Some(c) == g.to_mask())
}

fn canon_rec(
    g: &Graph,
    cells: &[Vec<usize>],
    cell_of_pos: &[usize],
    p: usize,
    pos: &mut [usize],
    used: &mut [bool],
    best: &mut u128,
) {
    let n = g.vertex_count();
    if p == n {
        let m = g
            .edges()
            .iter()
            .fold(0u128, |m, e| m | 1u128 << pair_index(n, pos[e.lo()], pos[e.hi()]));
        *best = (*best).min(m);
        return;
    }
    for &v in &cells[cell_of_pos[p]] {
        if used[v] {
            continue;
        }
        used[v] = true;
        pos[v] = p;
        canon_rec(g, cells, cell_of_pos, p + 1, pos, used, best);
        used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn isomorphism_examples() {
        let k5 = complete(5);
        assert!(are_isomorphic(&k5, &k5.relabel(&[3, 0, 4, 1, 2]).unwrap()));
        assert!(!are_isomorphic(&complete_bipartite(3, 3), &k5.delete_edge((0, 1)).unwrap()));
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_triangles));
    }

    #[test]
    fn homeomorphism_examples() {
        assert!(are_homeomorphic(&cycle(3), &cycle(100)));
        // three paths of length three between 0 and 1
        let theta_paths = Graph::new(8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)]).unwrap();
        assert!(are_homeomorphic(&complete_bipartite(2, 3), &theta_paths));
        assert!(!are_homeomorphic(&complete(5), &complete_bipartite(3, 3)));
    }

    #[test]
    fn canonical_mask_is_relabel_invariant() {
        let p = petersen();
        let c = canonical_mask(&p).unwrap();
        let q = p.relabel(&[9, 3, 5, 7, 1, 0, 2, 4, 6, 8]).unwrap();
        assert_eq!(canonical_mask(&q), Some(c));
        assert_ne!(canonical_mask(&cube()), canonical_mask(&complete_bipartite(4, 4)));
    }
}
