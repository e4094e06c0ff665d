//! Verification campaigns: exhaustive sweeps over small labeled graphs and
//! seeded random samples, each producing a [`CampaignReport`].

mod campaigns;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

pub use campaigns::{
    verify_chartrand_harary, verify_face_boundaries, verify_genus_landmarks, verify_kuratowski,
    verify_kuratowski_dedup7, verify_kuratowski_sampled, verify_lemma_characterization, verify_lifting,
    verify_menger_cubic,
};

/// One graph on which a campaign's claim failed. `mask` rebuilds the graph
/// through [`Graph::from_mask`] with `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub mask: u128,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignReport {
    pub campaign: String,
    pub examined: u64,
    pub planar: u64,
    pub nonplanar: u64,
    pub mismatches: Vec<Mismatch>,
    /// Campaign-specific tallies, e.g. per-size counts.
    pub counters: BTreeMap<String, u64>,
    pub wall_time: Duration,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn counter(&self, key: &str) -> u64 {
        self.counters.get(key).copied().unwrap_or(0)
    }

    /// Machine-readable `key=value` lines. Wall time is left out so that
    /// equal runs give byte-identical output.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "campaign={}", self.campaign);
        let _ = writeln!(out, "status={}", if self.passed() { "pass" } else { "fail" });
        let _ = writeln!(out, "examined={}", self.examined);
        let _ = writeln!(out, "planar={}", self.planar);
        let _ = writeln!(out, "nonplanar={}", self.nonplanar);
        let _ = writeln!(out, "mismatches={}", self.mismatches.len());
        for (k, v) in &self.counters {
            let _ = writeln!(out, "counter.{k}={v}");
        }
        for (i, m) in self.mismatches.iter().enumerate() {
            let _ = writeln!(out, "mismatch.{i}=n:{} mask:{:#x} {}", m.n, m.mask, m.detail);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} ({} graphs, {} planar, {} non-planar, {} mismatches) in {:.2?}\n",
            self.campaign,
            if self.passed() { "PASS" } else { "FAIL" },
            self.examined,
            self.planar,
            self.nonplanar,
            self.mismatches.len(),
            self.wall_time,
        );
        for (k, v) in &self.counters {
            let _ = writeln!(out, "  {k:<24} {v}");
        }
        for m in &self.mismatches {
            let _ = writeln!(out, "  mismatch n={} mask={:#x}: {}", m.n, m.mask, m.detail);
        }
        out
    }
}

/// Seeded generator; the same seed always yields the same graph stream.
#[derive(Debug, Clone)]
pub struct Rng(ChaCha8Rng);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn below(&mut self, bound: usize) -> usize {
        self.0.gen_range(0..bound)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.0.gen_bool(p)
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        items.shuffle(&mut self.0);
    }
}

/// Erdős–Rényi graph: each pair, in mask order, is an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("edge probability {p} is outside [0, 1]"));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, pairs)
}

pub const CUBIC_RETRIES: usize = 10_000;

/// Connected 3-regular graph from a random perfect matching of `3n` points,
/// rejecting loops, parallel edges and disconnected results.
pub fn random_cubic_graph(n: usize, rng: &mut Rng) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return invalid(format!("no cubic graph on {n} vertices"));
    }
    let mut points: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
    for _ in 0..CUBIC_RETRIES {
        rng.shuffle(&mut points);
        let mut pairs: Vec<(usize, usize)> =
            points.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = Graph::new(n, pairs)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::ResourceExhausted { budget: CUBIC_RETRIES as u64 })
}

/// Mergeable partial result of a campaign.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    examined: u64,
    planar: u64,
    nonplanar: u64,
    mismatches: Vec<Mismatch>,
    counters: BTreeMap<String, u64>,
}

impl Tally {
    pub(crate) fn examine(&mut self, planar: bool) {
        self.examined += 1;
        if planar {
            self.planar += 1;
        } else {
            self.nonplanar += 1;
        }
    }

    pub(crate) fn bump(&mut self, key: impl Into<String>) {
        *self.counters.entry(key.into()).or_default() += 1;
    }

    pub(crate) fn mismatch(&mut self, g: &Graph, detail: impl Into<String>) {
        self.mismatches.push(Mismatch {
            n: g.vertex_count(),
            mask: g.to_mask().expect("campaign graphs have at most 16 vertices"),
            detail: detail.into(),
        });
    }

    fn merge(&mut self, other: Tally) {
        self.examined += other.examined;
        self.planar += other.planar;
        self.nonplanar += other.nonplanar;
        self.mismatches.extend(other.mismatches);
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
    }

    pub(crate) fn into_report(self, campaign: &str, wall_time: Duration) -> CampaignReport {
        CampaignReport {
            campaign: campaign.to_string(),
            examined: self.examined,
            planar: self.planar,
            nonplanar: self.nonplanar,
            mismatches: self.mismatches,
            counters: self.counters,
            wall_time,
        }
    }
}

const CHUNK: u64 = 1 << 10;

/// Calls `f` on every index in `0..count` and merges the tallies in index
/// order, so serial and parallel runs report the same thing.
pub(crate) fn sweep<F>(count: u64, parallel: bool, f: F) -> Tally
where
    F: Fn(u64, &mut Tally) + Sync,
{
    let chunks = count.div_ceil(CHUNK);
    let run = |c: u64| {
        let mut t = Tally::default();
        for i in c * CHUNK..((c + 1) * CHUNK).min(count) {
            f(i, &mut t);
        }
        t
    };
    let parts: Vec<Tally> = if parallel {
        (0..chunks).into_par_iter().map(run).collect()
    } else {
        (0..chunks).map(run).collect()
    };
    let mut total = Tally::default();
    for p in parts {
        total.merge(p);
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Campaign {
    Kuratowski,
    KuratowskiDedup7,
    Lemma,
    ChartrandHarary,
    Menger,
    Lifting,
    Faces,
    Genus,
}

impl Campaign {
    pub const ALL: [Campaign; 8] = [
        Campaign::Kuratowski,
        Campaign::KuratowskiDedup7,
        Campaign::Lemma,
        Campaign::ChartrandHarary,
        Campaign::Menger,
        Campaign::Lifting,
        Campaign::Faces,
        Campaign::Genus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::Kuratowski => "kuratowski",
            Campaign::KuratowskiDedup7 => "kuratowski-dedup7",
            Campaign::Lemma => "lemma",
            Campaign::ChartrandHarary => "chartrand-harary",
            Campaign::Menger => "menger",
            Campaign::Lifting => "lifting",
            Campaign::Faces => "faces",
            Campaign::Genus => "genus",
        }
    }
}

impl FromStr for Campaign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Campaign> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown campaign {s:?}")))
    }
}

/// Knobs shared by all campaigns; each campaign reads the ones it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignParams {
    pub max_n: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub parallel: bool,
}

impl Default for CampaignParams {
    fn default() -> Self {
        CampaignParams { max_n: None, samples: 1000, seed: 42, parallel: false }
    }
}

pub const MENGER_SIZES: [usize; 3] = [8, 10, 12];

pub fn run_campaign(c: Campaign, p: &CampaignParams) -> Result<CampaignReport> {
    match c {
        Campaign::Kuratowski => match p.max_n.unwrap_or(6) {
            n if n <= crate::graph::MAX_ENUMERATION_N => verify_kuratowski(n, p.parallel),
            n => verify_kuratowski_sampled(n, p.samples, p.seed, p.parallel),
        },
        Campaign::KuratowskiDedup7 => verify_kuratowski_dedup7(p.parallel),
        Campaign::Lemma => verify_lemma_characterization(p.max_n.unwrap_or(6), p.parallel),
        Campaign::ChartrandHarary => verify_chartrand_harary(p.max_n.unwrap_or(6), p.parallel),
        Campaign::Menger => verify_menger_cubic(p.samples, p.seed, &MENGER_SIZES, p.parallel),
        Campaign::Lifting => verify_lifting(p.samples, p.seed, p.parallel),
        Campaign::Faces => verify_face_boundaries(p.max_n.unwrap_or(5), p.parallel),
        Campaign::Genus => verify_genus_landmarks(),
    }
}
