use std::time::Instant;

use super::{random_cubic_graph, random_graph, sweep, CampaignReport, Rng, Tally};
use crate::embedding::{
    face_boundary, face_covering_all_edges, find_planar_rotation, find_planar_rotation_where, for_each_rotation,
    minimum_genus, trace_faces, SearchOptions,
};
use crate::error::{Error, Result};
use crate::graph::{enumerate_labeled_graphs, is_canonical, named, pair_count, Graph, MAX_ENUMERATION_N};
use crate::lemmas::{condition1, condition2, condition3};
use crate::planarity::{decide, decide_via_minor, DecisionConfig};
use crate::topo::{contains_theta, find_kuratowski, find_subdivision, lift_certificate, validate_subdivision, Pattern};

const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];
const ROTATION_LIMIT: u64 = 1_000_000;

fn check_range(max_n: usize, cap: usize, what: &str) -> Result<()> {
    if max_n > cap {
        return Err(Error::Capacity(format!("{what} is exhaustive only up to {cap} vertices, got {max_n}")));
    }
    Ok(())
}

/// Every labeled graph on `0..=max_n` vertices as `(n, mask)`, in order.
fn labeled_index(max_n: usize) -> Vec<(usize, u64)> {
    (0..=max_n).map(|n| (n, 1u64 << pair_count(n))).collect()
}

fn sweep_labeled<F>(max_n: usize, parallel: bool, f: F) -> Result<Tally>
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    let mut total = Tally::default();
    for (n, count) in labeled_index(max_n) {
        enumerate_labeled_graphs(n)?;
        let part = sweep(count, parallel, |mask, t| {
            let g = Graph::from_mask(n, mask as u128).expect("mask in range");
            f(&g, t)
        });
        total.merge(part);
    }
    Ok(total)
}

fn sweep_graphs<F>(graphs: &[Graph], parallel: bool, f: F) -> Tally
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    sweep(graphs.len() as u64, parallel, |i, t| f(&graphs[i as usize], t))
}

/// Decides `g` by both certificate routes and asks the rotation oracle,
/// with and without the edge-count prefilter. Returns the agreed planarity
/// or a description of the disagreement.
fn judge(g: &Graph, oracle: bool, t: &mut Tally) -> std::result::Result<bool, String> {
    let cfg = DecisionConfig::default();
    let by_sub = decide(g, &cfg).map_err(|e| format!("subdivision route failed: {e}"))?;
    let by_minor = decide_via_minor(g, &cfg).map_err(|e| format!("minor route failed: {e}"))?;
    by_sub.check(g).map_err(|e| format!("subdivision route witness: {e}"))?;
    by_minor.check(g).map_err(|e| format!("minor route witness: {e}"))?;
    let planar = by_sub.is_planar();
    if by_minor.is_planar() != planar {
        return Err(format!("subdivision route says planar={planar}, minor route disagrees"));
    }
    if oracle {
        t.bump("oracle_runs");
        for prefilter in [true, false] {
            let opts = SearchOptions { edge_bound_prefilter: prefilter, ..SearchOptions::default() };
            let found = find_planar_rotation(g, opts).map_err(|e| format!("oracle failed: {e}"))?;
            if found.is_some() != planar {
                return Err(format!("oracle (prefilter={prefilter}) says planar={}", found.is_some()));
            }
        }
    }
    Ok(planar)
}

fn record(g: &Graph, outcome: std::result::Result<bool, String>, t: &mut Tally) {
    match outcome {
        Ok(planar) => {
            t.examine(planar);
            if !planar {
                t.bump(format!("nonplanar.n{}", g.vertex_count()));
            }
        }
        Err(detail) => {
            t.examine(false);
            t.mismatch(g, detail);
        }
    }
}

/// Both decision routes and the rotation oracle on every labeled graph with
/// at most `max_n` vertices.
pub fn verify_kuratowski(max_n: usize, parallel: bool) -> Result<CampaignReport> {
    check_range(max_n, MAX_ENUMERATION_N, "verify_kuratowski")?;
    let start = Instant::now();
    let tally = sweep_labeled(max_n, parallel, |g, t| {
        t.bump(format!("graphs.n{}", g.vertex_count()));
        let outcome = judge(g, true, t);
        record(g, outcome, t);
    })?;
    Ok(tally.into_report("kuratowski", start.elapsed()))
}

/// Same checks on `samples` seeded random graphs with `n` vertices.
pub fn verify_kuratowski_sampled(n: usize, samples: usize, seed: u64, parallel: bool) -> Result<CampaignReport> {
    if pair_count(n) > 128 {
        return Err(Error::Capacity(format!("sampled graphs are limited to 16 vertices, got {n}")));
    }
    let start = Instant::now();
    let mut rng = Rng::new(seed);
    let graphs = (0..samples)
        .map(|i| random_graph(n, EDGE_PROBABILITIES[i % 3], &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let tally = sweep_graphs(&graphs, parallel, |g, t| {
        let outcome = judge(g, true, t);
        record(g, outcome, t);
    });
    Ok(tally.into_report("kuratowski-sampled", start.elapsed()))
}

/// One representative per isomorphism class of 7-vertex graphs; the oracle
/// runs only where `E <= 3V - 6` leaves planarity open.
pub fn verify_kuratowski_dedup7(parallel: bool) -> Result<CampaignReport> {
    let n = 7;
    let start = Instant::now();
    enumerate_labeled_graphs(n)?;
    let tally = sweep(1u64 << pair_count(n), parallel, |mask, t| {
        let g = Graph::from_mask(n, mask as u128).expect("mask in range");
        if !is_canonical(&g) {
            return;
        }
        t.bump("classes");
        let outcome = judge(&g, g.edge_count() <= 3 * n - 6, t);
        record(&g, outcome, t);
    });
    Ok(tally.into_report("kuratowski-dedup7", start.elapsed()))
}

/// Among graphs of minimum degree at least three, conditions 1 and 2 hold
/// exactly on copies of `K5` and `K3,3`; on every graph with an edge,
/// 3 implies 2 implies 1.
pub fn verify_lemma_characterization(max_n: usize, parallel: bool) -> Result<CampaignReport> {
    check_range(max_n, 6, "verify_lemma_characterization")?;
    let start = Instant::now();
    let tally = sweep_labeled(max_n, parallel, |g, t| {
        t.examine(find_kuratowski(g).is_none());
        if g.edge_count() == 0 {
            return;
        }
        let n = g.vertex_count();
        let (c1, c2, c3) = (condition1(g), condition2(g), condition3(g));
        if c3 && !c2 {
            t.mismatch(g, "condition 3 holds without condition 2");
        }
        if c2 && !c1 {
            t.mismatch(g, "condition 2 holds without condition 1");
        }
        if g.min_degree().is_some_and(|d| d >= 3) {
            t.bump(format!("min_degree3.n{n}"));
            for (holds, name) in [(c1, "condition1"), (c2, "condition2"), (c3, "condition3")] {
                if holds {
                    t.bump(format!("{name}.n{n}"));
                }
            }
            if c1 != c3 || c2 != c3 {
                t.mismatch(g, format!("conditions differ: 1={c1} 2={c2} 3={c3}"));
            }
        }
    })?;
    Ok(tally.into_report("lemma", start.elapsed()))
}

/// Connected graphs: θ-free exactly when some genus-0 rotation has one
/// face whose boundary carries every edge.
pub fn verify_chartrand_harary(max_n: usize, parallel: bool) -> Result<CampaignReport> {
    check_range(max_n, 6, "verify_chartrand_harary")?;
    let start = Instant::now();
    let tally = sweep_labeled(max_n, parallel, |g, t| {
        if g.vertex_count() == 0 || !g.is_connected() {
            return;
        }
        let n = g.vertex_count();
        t.examine(find_kuratowski(g).is_none());
        t.bump(format!("connected.n{n}"));
        let theta_free = !contains_theta(g);
        if theta_free {
            t.bump(format!("theta_free.n{n}"));
        }
        let found = find_planar_rotation_where(g, SearchOptions::default(), |_, faces| {
            face_covering_all_edges(g, faces).is_some()
        });
        match found {
            Ok(rho) if rho.is_some() == theta_free => {}
            Ok(rho) => t.mismatch(g, format!("theta_free={theta_free} but one-face drawing found={}", rho.is_some())),
            Err(e) => t.mismatch(g, format!("rotation search failed: {e}")),
        }
    })?;
    Ok(tally.into_report("chartrand-harary", start.elapsed()))
}

/// Seeded connected cubic graphs, sizes taken from `sizes` in turn: planar
/// exactly when there is no `K3,3` subdivision, and never a `K5` one.
pub fn verify_menger_cubic(samples: usize, seed: u64, sizes: &[usize], parallel: bool) -> Result<CampaignReport> {
    if sizes.is_empty() && samples > 0 {
        return Err(Error::InvalidArgument("no cubic graph sizes given".into()));
    }
    let start = Instant::now();
    let mut rng = Rng::new(seed);
    let graphs = (0..samples)
        .map(|i| random_cubic_graph(sizes[i % sizes.len()], &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let tally = sweep_graphs(&graphs, parallel, |g, t| {
        t.bump(format!("samples.n{}", g.vertex_count()));
        let verdict = match decide_via_minor(g, &DecisionConfig::default()) {
            Ok(v) => v,
            Err(e) => {
                t.examine(false);
                return t.mismatch(g, format!("minor route failed: {e}"));
            }
        };
        t.examine(verdict.is_planar());
        if let Err(e) = verdict.check(g) {
            t.mismatch(g, format!("minor route witness: {e}"));
        }
        let k33 = find_subdivision(g, Pattern::K33);
        if k33.as_ref().is_some_and(|c| !validate_subdivision(g, c)) {
            t.mismatch(g, "K33 subdivision does not validate");
        }
        if verdict.is_planar() == k33.is_some() {
            t.mismatch(g, format!("planar={} yet K33 subdivision found={}", verdict.is_planar(), k33.is_some()));
        }
        if find_subdivision(g, Pattern::K5).is_some() {
            t.mismatch(g, "cubic graph with a K5 subdivision");
        }
    });
    Ok(tally.into_report("menger", start.elapsed()))
}

/// Seeded random graphs; every `K5` or `K3,3` subdivision found after
/// contracting an edge must lift back to a valid certificate.
pub fn verify_lifting(samples: usize, seed: u64, parallel: bool) -> Result<CampaignReport> {
    let start = Instant::now();
    let mut rng = Rng::new(seed);
    let graphs = (0..samples)
        .map(|i| {
            let n = 5 + rng.below(5);
            random_graph(n, EDGE_PROBABILITIES[i % 3], &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    let tally = sweep_graphs(&graphs, parallel, |g, t| {
        t.examine(find_kuratowski(g).is_none());
        for &e in g.edges() {
            t.bump("contractions");
            let (x, y) = e.ends();
            let (h, _, _) = g.contract_edge((x, y)).expect("edge of g");
            for pattern in [Pattern::K5, Pattern::K33] {
                let Some(c) = find_subdivision(&h, pattern) else {
                    t.bump(format!("absent.{pattern}"));
                    continue;
                };
                let lifted = match lift_certificate(g, x, y, &c) {
                    Ok(l) => l,
                    Err(err) => {
                        t.mismatch(g, format!("lifting {pattern} across ({x}, {y}) failed: {err}"));
                        continue;
                    }
                };
                let allowed = match pattern {
                    Pattern::K5 => lifted.pattern.is_kuratowski(),
                    _ => lifted.pattern == pattern,
                };
                if !allowed || !validate_subdivision(g, &lifted) {
                    t.mismatch(g, format!("{pattern} across ({x}, {y}) lifted to an invalid {}", lifted.pattern));
                }
                t.bump(format!("lifted.{pattern}->{}", lifted.pattern));
            }
        }
    });
    Ok(tally.into_report("lifting", start.elapsed()))
}

/// Every face boundary of every genus-0 rotation system is θ-free.
pub fn verify_face_boundaries(max_n: usize, parallel: bool) -> Result<CampaignReport> {
    check_range(max_n, 5, "verify_face_boundaries")?;
    let start = Instant::now();
    let tally = sweep_labeled(max_n, parallel, |g, t| {
        let mut planar = false;
        let mut visited = 0u64;
        let mut faces_checked = 0u64;
        let mut bad = None;
        let run = for_each_rotation(g, ROTATION_LIMIT, |rho| {
            visited += 1;
            let faces = trace_faces(g, rho).expect("rotation of g");
            if faces.genus() != 0 {
                return;
            }
            planar = true;
            for f in 0..faces.face_count() {
                faces_checked += 1;
                let boundary = face_boundary(g, &faces, f).expect("face of g");
                if bad.is_none() && contains_theta(&boundary) {
                    bad = Some(format!("face {:?} has a theta subgraph", faces.face_vertices(f)));
                }
            }
        });
        t.examine(planar);
        if let Err(e) = run {
            t.mismatch(g, format!("rotation enumeration failed: {e}"));
        }
        if let Some(detail) = bad {
            t.mismatch(g, detail);
        }
        *t.counters.entry("rotations".into()).or_default() += visited;
        *t.counters.entry("faces_checked".into()).or_default() += faces_checked;
    })?;
    Ok(tally.into_report("faces", start.elapsed()))
}

/// Known minimum genera, found by exhaustive rotation search.
pub const GENUS_LANDMARKS: [(&str, usize); 5] = [("K4", 0), ("K5", 1), ("K33", 1), ("Petersen", 1), ("Q3", 0)];

pub fn verify_genus_landmarks() -> Result<CampaignReport> {
    let start = Instant::now();
    let mut t = Tally::default();
    for (name, expected) in GENUS_LANDMARKS {
        let g = match name {
            "K4" => named::complete(4),
            "K5" => named::complete(5),
            "K33" => named::complete_bipartite(3, 3),
            "Petersen" => named::petersen(),
            _ => named::cube(),
        };
        let (genus, rho) = minimum_genus(&g, ROTATION_LIMIT)?;
        t.examine(genus == 0);
        *t.counters.entry(format!("genus.{name}")).or_default() += genus as u64;
        if genus != expected || trace_faces(&g, &rho)?.genus() != genus {
            t.mismatch(&g, format!("{name}: minimum genus {genus}, expected {expected}"));
        }
    }
    Ok(t.into_report("genus", start.elapsed()))
}
