//! The acceptance suite: every criterion at full scale, zero tolerance.
//! Prints one `PASS`/`FAIL` line per criterion and fails if any line fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use kuratowski::graph::{are_isomorphic, enumerate_labeled_graphs, named};
use kuratowski::harness::{
    random_graph, verify_chartrand_harary, verify_face_boundaries, verify_genus_landmarks, verify_kuratowski,
    verify_kuratowski_dedup7, verify_lemma_characterization, verify_lifting, verify_menger_cubic, CampaignReport,
    Rng,
};
use kuratowski::lemmas::{condition1, condition2};
use kuratowski::planarity::decide;
use kuratowski::topo::find_subdivision;
use kuratowski::{DecisionConfig, Pattern, Verdict};
use kuratowski_cli::{parse_edge_list, print_edge_list};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clean(r: kuratowski::Result<CampaignReport>) -> Result<CampaignReport, String> {
    let r = r.map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{} mismatches\n{}", r.mismatches.len(), r.to_text()))?;
    Ok(r)
}

fn kuratowski_exhaustive() -> Outcome {
    let r = clean(verify_kuratowski(6, false))?;
    ensure(r.examined == 1 + 1 + 2 + 8 + 64 + 1024 + 32768, || format!("examined {}", r.examined))?;
    Ok(format!("{} graphs, {} non-planar", r.examined, r.nonplanar))
}

fn dedup7() -> Outcome {
    let r = clean(verify_kuratowski_dedup7(false))?;
    let classes = r.counter("classes");
    ensure(classes == 1044, || format!("{classes} isomorphism classes"))?;
    Ok(format!("{classes} classes, {} planar", r.planar))
}

fn obstruction_identities() -> Outcome {
    let cfg = DecisionConfig::default();
    let pattern_of = |g: &kuratowski::Graph| match decide(g, &cfg) {
        Ok(Verdict::NonPlanar { certificate }) => Some(certificate.pattern),
        _ => None,
    };
    ensure(pattern_of(&named::complete(5)) == Some(Pattern::K5), || "K5".into())?;
    ensure(pattern_of(&named::complete_bipartite(3, 3)) == Some(Pattern::K33), || "K3,3".into())?;
    let p = named::petersen();
    ensure(pattern_of(&p) == Some(Pattern::K33), || "Petersen".into())?;
    ensure(find_subdivision(&p, Pattern::K5).is_none(), || "Petersen has a K5 subdivision".into())?;
    let q = named::cube();
    match decide(&q, &cfg) {
        Ok(Verdict::Planar { faces, .. }) => {
            let (v, e, f) = (faces.vertex_count(), faces.edge_count(), faces.face_count());
            ensure((v, e, f) == (8, 12, 6), || format!("Q3 gave V={v} E={e} F={f}"))?;
        }
        _ => return Err("Q3 not planar".into()),
    }
    Ok("K5, K3,3, Petersen, Q3".into())
}

fn lemma_characterization() -> Outcome {
    let r = clean(verify_lemma_characterization(6, false))?;
    let (k5, k33) = (named::complete(5), named::complete_bipartite(3, 3));
    let mut counts = [0usize; 7];
    for (n, count) in counts.iter_mut().enumerate() {
        for g in enumerate_labeled_graphs(n).map_err(|e| e.to_string())? {
            if g.min_degree().is_none_or(|d| d < 3) {
                continue;
            }
            let copy = are_isomorphic(&g, &k5) || are_isomorphic(&g, &k33);
            let (c1, c2) = (condition1(&g), condition2(&g));
            ensure(c1 == copy && c2 == copy, || format!("{:?}: copy={copy} c1={c1} c2={c2}", g.edges()))?;
            *count += copy as usize;
        }
    }
    ensure(counts[5] == 1 && counts[6] == 10 && counts.iter().sum::<usize>() == 11, || format!("{counts:?}"))?;
    ensure(r.counter("condition1.n5") == 1 && r.counter("condition1.n6") == 10, || r.to_text())?;
    ensure(r.counter("condition2.n5") == 1 && r.counter("condition2.n6") == 10, || r.to_text())?;
    Ok("1 copy at n=5, 10 copies at n=6".into())
}

fn face_boundaries() -> Outcome {
    let r = clean(verify_face_boundaries(5, false))?;
    Ok(format!("{} rotations, {} faces", r.counter("rotations"), r.counter("faces_checked")))
}

fn lifting() -> Outcome {
    let r = clean(verify_lifting(1000, 42, false))?;
    ensure(r.examined == 1000, || format!("examined {}", r.examined))?;
    let lifted: u64 = r.counters.iter().filter(|(k, _)| k.starts_with("lifted.")).map(|(_, v)| v).sum();
    ensure(lifted > 0, || "nothing was lifted".into())?;
    Ok(format!("{} contractions, {lifted} lifts", r.counter("contractions")))
}

fn chartrand_harary() -> Outcome {
    let r = clean(verify_chartrand_harary(6, false))?;
    ensure(r.counter("connected.n6") == 26704, || format!("{} connected at n=6", r.counter("connected.n6")))?;
    Ok(format!("{} connected graphs", r.examined))
}

fn menger() -> Outcome {
    let r = clean(verify_menger_cubic(500, 42, &[8, 10, 12], false))?;
    ensure(r.examined == 500, || format!("examined {}", r.examined))?;
    Ok(format!("{} planar, {} non-planar", r.planar, r.nonplanar))
}

fn genus() -> Outcome {
    let r = clean(verify_genus_landmarks())?;
    ensure(r.counter("genus.K5") == 1 && r.counter("genus.K33") == 1, || r.to_text())?;
    Ok("K5 and K3,3 have genus 1".into())
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_kuratowski");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (name, code) in [("k5.txt", 1), ("k4.txt", 0), ("petersen.txt", 1)] {
        for via in ["subdivision", "minor"] {
            let out = Command::new(bin).args(["check", "--via", via, &fixture(name)]).output().map_err(|e| e.to_string())?;
            ensure(out.status.code() == Some(code), || format!("{name} via {via}: exit {:?}", out.status.code()))?;
            let path = dir.path().join("verdict.json");
            std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
            let cert = Command::new(bin)
                .args(["certify", &fixture(name), path.to_str().unwrap()])
                .output()
                .map_err(|e| e.to_string())?;
            ensure(cert.status.code() == Some(0), || format!("{name} via {via} did not certify"))?;
        }
    }
    let bad = Command::new(bin).args(["check", &fixture("bad_vertex.txt")]).output().map_err(|e| e.to_string())?;
    ensure(bad.status.code() == Some(2), || "bad input did not exit 2".into())?;
    let mut rng = Rng::new(42);
    for i in 0..100 {
        let g = random_graph(1 + rng.below(12), [0.3, 0.5, 0.7][i % 3], &mut rng).map_err(|e| e.to_string())?;
        let back = parse_edge_list(&print_edge_list(&g)).map_err(|e| e.to_string())?;
        ensure(back == g, || format!("round trip changed {:?}", g.edges()))?;
    }
    Ok("exit codes, certify, 100 round trips".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("kuratowski theorem, n <= 6 exhaustive", kuratowski_exhaustive),
        ("n = 7 isomorphism classes", dedup7),
        ("obstruction identities", obstruction_identities),
        ("lemma characterization", lemma_characterization),
        ("face boundaries are theta-free", face_boundaries),
        ("lifting soundness", lifting),
        ("chartrand-harary, n <= 6 connected", chartrand_harary),
        ("menger cubic", menger),
        ("genus landmarks", genus),
        ("cli contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
