//! Carrying subdivision certificates back through an edge contraction.
//!
//! Let `z` be the vertex of `G/xy` that `x` and `y` merged into. If `z` is
//! not on the certificate, only ids change. If `z` is inside a path, it is
//! replaced by `x`, `y`, or the edge between them. If `z` is a branch
//! vertex, its certificate paths leave either through `x` or through `y`:
//! with all of them on one side that end becomes the branch vertex; with a
//! single path on the minority side the branch vertex stays on the majority
//! end and that path is extended across `xy`; a 2:2 split of a `K5` branch
//! vertex turns into a `K3,3`.

use super::subdivision::check_subdivision;
use super::{validate_minor, MinorCertificate, Pattern, SubdivisionCertificate};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexMap};

/// Lifts `c` from `G/xy` to `G`.
///
/// The output pattern is the input pattern, except that a `K5` whose merged
/// branch vertex splits 2:2 comes back as a `K3,3`.
pub fn lift_certificate(g: &Graph, x: usize, y: usize, c: &SubdivisionCertificate) -> Result<SubdivisionCertificate> {
    let (h, z, map) = g.contract_edge((x, y))?;
    if let Err(why) = check_subdivision(&h, c) {
        return invalid(format!("certificate is not valid in the contracted graph: {why}"));
    }
    let back = preimages(&map, h.vertex_count());
    let up = |v: usize| -> usize { back[v] };
    let lifted = if let Some(p) = c.branch.iter().position(|&b| b == z) {
        lift_branch(g, x, y, p, c, &up)
    } else if let Some(j) = c.paths.iter().position(|path| path.contains(&z)) {
        let mut out = translate(c, &up);
        let path = &c.paths[j];
        let i = path.iter().position(|&v| v == z).expect("z on path");
        let (a, b) = (up(path[i - 1]), up(path[i + 1]));
        let splice: Vec<usize> = if g.has_edge(a, x) && g.has_edge(x, b) {
            vec![x]
        } else if g.has_edge(a, y) && g.has_edge(y, b) {
            vec![y]
        } else if g.has_edge(a, x) {
            vec![x, y]
        } else {
            vec![y, x]
        };
        let mut p: Vec<usize> = path[..i].iter().map(|&v| up(v)).collect();
        p.extend(splice);
        p.extend(path[i + 1..].iter().map(|&v| up(v)));
        out.paths[j] = p;
        out
    } else {
        translate(c, &up)
    };
    if let Err(why) = check_subdivision(g, &lifted) {
        return Err(Error::InternalInconsistency(format!("lifted certificate does not validate: {why}")));
    }
    Ok(lifted)
}

/// `back[v]` is the unique preimage of `v`; the merged vertex maps to its
/// smaller preimage, callers never translate it blindly.
fn preimages(map: &VertexMap, len: usize) -> Vec<usize> {
    let mut back = vec![usize::MAX; len];
    for old in (0..map.source_len()).rev() {
        if let Some(new) = map.get(old) {
            back[new] = old;
        }
    }
    back
}

fn translate(c: &SubdivisionCertificate, up: &dyn Fn(usize) -> usize) -> SubdivisionCertificate {
    SubdivisionCertificate {
        pattern: c.pattern,
        branch: c.branch.iter().map(|&v| up(v)).collect(),
        paths: c.paths.iter().map(|p| p.iter().map(|&v| up(v)).collect()).collect(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    X,
    Y,
}

fn lift_branch(
    g: &Graph,
    x: usize,
    y: usize,
    p: usize,
    c: &SubdivisionCertificate,
    up: &dyn Fn(usize) -> usize,
) -> SubdivisionCertificate {
    let edges = c.pattern.edges();
    // certificate paths at z, with the first vertex after z (in G)
    let incident: Vec<(usize, usize)> = (0..edges.len())
        .filter_map(|j| {
            let path = &c.paths[j];
            if edges[j].0 == p {
                Some((j, up(path[1])))
            } else if edges[j].1 == p {
                Some((j, up(path[path.len() - 2])))
            } else {
                None
            }
        })
        .collect();
    let at_x = |w: usize| g.has_edge(w, x);
    let at_y = |w: usize| g.has_edge(w, y);
    let forced_x = incident.iter().filter(|&&(_, w)| at_x(w) && !at_y(w)).count();
    let forced_y = incident.iter().filter(|&&(_, w)| at_y(w) && !at_x(w)).count();
    // flexible paths join the side that already has more (x on a tie)
    let flex = if forced_y == 0 {
        Side::X
    } else if forced_x == 0 {
        Side::Y
    } else if forced_x >= forced_y {
        Side::X
    } else {
        Side::Y
    };
    let side: Vec<(usize, usize, Side)> = incident
        .iter()
        .map(|&(j, w)| {
            let s = match (at_x(w), at_y(w)) {
                (true, false) => Side::X,
                (false, true) => Side::Y,
                _ => flex,
            };
            (j, w, s)
        })
        .collect();
    let on_x = side.iter().filter(|s| s.2 == Side::X).count();
    let on_y = side.len() - on_x;
    let end = |s: Side| if s == Side::X { x } else { y };

    let mut out = translate(c, up);
    // replace z at the start or end of a translated path
    let set_end = |path: &mut Vec<usize>, j: usize, v: &[usize]| {
        if edges[j].0 == p {
            path.splice(0..1, v.iter().copied());
        } else {
            let n = path.len();
            path.splice(n - 1..n, v.iter().rev().copied());
        }
    };

    if on_x == 2 && on_y == 2 {
        debug_assert_eq!(c.pattern, Pattern::K5);
        return rebuild_k33(c, p, x, y, &side, &out);
    }
    let (major, minor) = if on_x >= on_y { (Side::X, Side::Y) } else { (Side::Y, Side::X) };
    out.branch[p] = end(major);
    for &(j, _, s) in &side {
        let mut path = out.paths[j].clone();
        if s == major {
            set_end(&mut path, j, &[end(major)]);
        } else {
            // the lone minority path crosses xy
            set_end(&mut path, j, &[end(major), end(minor)]);
        }
        out.paths[j] = path;
    }
    out
}

/// `K5` branch vertex `p` split 2:2. With `a, b` the far ends of the paths
/// through `x` and `c, d` those through `y`, the parts `{a, b, y}` and
/// `{c, d, x}` span a `K3,3`.
fn rebuild_k33(
    c: &SubdivisionCertificate,
    p: usize,
    x: usize,
    y: usize,
    side: &[(usize, usize, Side)],
    lifted: &SubdivisionCertificate,
) -> SubdivisionCertificate {
    let edges = c.pattern.edges();
    let far = |j: usize| if edges[j].0 == p { edges[j].1 } else { edges[j].0 };
    let mut via_x: Vec<(usize, usize)> = side.iter().filter(|s| s.2 == Side::X).map(|s| (far(s.0), s.0)).collect();
    let mut via_y: Vec<(usize, usize)> = side.iter().filter(|s| s.2 == Side::Y).map(|s| (far(s.0), s.0)).collect();
    via_x.sort_unstable();
    via_y.sort_unstable();
    // path between two K5 pattern vertices, oriented from `from` to `to`
    let k5_path = |from: usize, to: usize| -> Vec<usize> {
        let j = edges.iter().position(|&(a, b)| (a, b) == (from.min(to), from.max(to))).expect("K5 edge");
        let mut path = lifted.paths[j].clone();
        if from > to {
            path.reverse();
        }
        path
    };
    // path from the far end `q` of path j into `end`, replacing z
    let spoke = |j: usize, end: usize| -> Vec<usize> {
        let mut path = lifted.paths[j].clone();
        if edges[j].0 == p {
            path.reverse();
        }
        let n = path.len();
        path[n - 1] = end;
        path
    };
    let a_side = [via_x[0].0, via_x[1].0];
    let b_side = [via_y[0].0, via_y[1].0];
    let branch = vec![
        lifted.branch[a_side[0]],
        lifted.branch[a_side[1]],
        y,
        lifted.branch[b_side[0]],
        lifted.branch[b_side[1]],
        x,
    ];
    let mut paths = Vec::with_capacity(9);
    for &(qa, ja) in &via_x {
        paths.push(k5_path(qa, b_side[0]));
        paths.push(k5_path(qa, b_side[1]));
        paths.push(spoke(ja, x));
    }
    let mut from_y: Vec<Vec<usize>> = via_y
        .iter()
        .map(|&(_, jy)| {
            let mut s = spoke(jy, y);
            s.reverse();
            s
        })
        .collect();
    paths.push(from_y.remove(0));
    paths.push(from_y.remove(0));
    paths.push(vec![y, x]);
    SubdivisionCertificate { pattern: Pattern::K33, branch, paths }
}

/// Turns a minor model into a subdivision: each branch set is contracted
/// along a spanning tree, the pattern is read off as an identity
/// certificate, and the contractions are undone one by one with
/// [`lift_certificate`]. A `K5` model may come back as a `K3,3` subdivision.
pub fn minor_to_subdivision(g: &Graph, m: &MinorCertificate) -> Result<SubdivisionCertificate> {
    if !validate_minor(g, m) {
        return invalid("minor certificate does not validate");
    }
    let mut tree_edges = Vec::new();
    for set in &m.branch_sets {
        let mut inside = vec![false; g.vertex_count()];
        for &v in set {
            inside[v] = true;
        }
        let mut reached = vec![set[0]];
        inside[set[0]] = false;
        let mut i = 0;
        while i < reached.len() {
            let v = reached[i];
            i += 1;
            for &w in g.neighbors(v) {
                if inside[w] {
                    inside[w] = false;
                    reached.push(w);
                    tree_edges.push((v, w));
                }
            }
        }
    }
    let mut cur = g.clone();
    let mut now: Vec<usize> = (0..g.vertex_count()).collect();
    let mut steps: Vec<(Graph, usize, usize)> = Vec::with_capacity(tree_edges.len());
    for (u, v) in tree_edges {
        let (x, y) = (now[u], now[v]);
        let (next, _, map) = cur.contract_edge((x, y))?;
        for id in now.iter_mut() {
            *id = map.get(*id).expect("contraction removes no vertex");
        }
        steps.push((std::mem::replace(&mut cur, next), x, y));
    }
    let img: Vec<usize> = m.branch_sets.iter().map(|s| now[s[0]]).collect();
    let mut cert = match m.pattern {
        Pattern::K5 | Pattern::K33 => SubdivisionCertificate {
            pattern: m.pattern,
            branch: img.clone(),
            paths: m.pattern.edges().iter().map(|&(a, b)| vec![img[a], img[b]]).collect(),
        },
        // diamond model: sets 0 and 1 adjacent, sets 2 and 3 each between them
        Pattern::Theta => SubdivisionCertificate {
            pattern: Pattern::Theta,
            branch: vec![img[0], img[1]],
            paths: vec![vec![img[0], img[1]], vec![img[0], img[2], img[1]], vec![img[0], img[3], img[1]]],
        },
    };
    if let Err(why) = check_subdivision(&cur, &cert) {
        return Err(Error::InternalInconsistency(format!("contracted model is not a pattern copy: {why}")));
    }
    for (before, x, y) in steps.into_iter().rev() {
        cert = lift_certificate(&before, x, y, &cert)?;
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::topo::{find_kuratowski, find_minor, find_subdivision, validate_subdivision};

    fn k5_identity() -> SubdivisionCertificate {
        find_subdivision(&complete(5), Pattern::K5).unwrap()
    }

    #[test]
    fn two_two_split_gives_k33() {
        let g = split_k5_vertex(&[1, 2]);
        let lifted = lift_certificate(&g, 0, 5, &k5_identity()).unwrap();
        assert_eq!(lifted.pattern, Pattern::K33);
        assert!(validate_subdivision(&g, &lifted));
    }

    #[test]
    fn three_one_split_keeps_k5() {
        let g = split_k5_vertex(&[1, 2, 3]);
        let lifted = lift_certificate(&g, 0, 5, &k5_identity()).unwrap();
        assert_eq!(lifted.pattern, Pattern::K5);
        assert_eq!(lifted.branch[0], 0);
        assert!(lifted.paths.iter().any(|p| p == &vec![0, 5, 4]));
    }

    #[test]
    fn unused_merged_vertex_only_renames() {
        // K5 on 0..5 plus a pendant path 5 - 6
        let mut pairs: Vec<(usize, usize)> = complete(5).edges().iter().map(|e| e.ends()).collect();
        pairs.extend([(4, 5), (5, 6)]);
        let g = Graph::new(7, pairs).unwrap();
        let (h, _, _) = g.contract_edge((5, 6)).unwrap();
        let c = find_kuratowski(&h).unwrap();
        assert_eq!(lift_certificate(&g, 5, 6, &c).unwrap(), c);
    }

    #[test]
    fn interior_merge_is_spliced() {
        // K3,3 with edge 0-3 subdivided twice: 0 - 6 - 7 - 3
        let g = complete_bipartite(3, 3).subdivide_edge((0, 3)).unwrap().subdivide_edge((3, 6)).unwrap();
        let (h, _, _) = g.contract_edge((6, 7)).unwrap();
        let c = find_subdivision(&h, Pattern::K33).unwrap();
        let lifted = lift_certificate(&g, 6, 7, &c).unwrap();
        assert_eq!(lifted.pattern, Pattern::K33);
        assert!(validate_subdivision(&g, &lifted));
    }

    #[test]
    fn rejects_certificate_from_elsewhere() {
        let g = split_k5_vertex(&[1, 2]);
        // a K5 on 1..=5 of K6 does not live in the 5-vertex contraction
        let k = k5_identity();
        let shift = |v: &usize| v + 1;
        let bogus = SubdivisionCertificate {
            pattern: Pattern::K5,
            branch: k.branch.iter().map(shift).collect(),
            paths: k.paths.iter().map(|p| p.iter().map(shift).collect()).collect(),
        };
        assert!(matches!(lift_certificate(&g, 0, 5, &bogus), Err(Error::InvalidArgument(_))));
        assert!(lift_certificate(&g, 1, 5, &k5_identity()).is_err());
    }

    #[test]
    fn minor_conversion_examples() {
        let p = petersen();
        let m = find_minor(&p, Pattern::K5).unwrap().unwrap();
        let s = minor_to_subdivision(&p, &m).unwrap();
        assert!(validate_subdivision(&p, &s));
        assert!(s.pattern.is_kuratowski());

        let k5 = complete(5);
        let s = minor_to_subdivision(&k5, &find_minor(&k5, Pattern::K5).unwrap().unwrap()).unwrap();
        assert!(s.paths.iter().all(|path| path.len() == 2));

        let k33 = complete_bipartite(3, 3);
        let s = minor_to_subdivision(&k33, &find_minor(&k33, Pattern::K33).unwrap().unwrap()).unwrap();
        assert_eq!(s, find_subdivision(&k33, Pattern::K33).unwrap());

        let k4 = complete(4);
        let s = minor_to_subdivision(&k4, &find_minor(&k4, Pattern::Theta).unwrap().unwrap()).unwrap();
        assert!(validate_subdivision(&k4, &s));
    }
}
