//! Command-line front end: edge-list input, JSON verdicts, certificate
//! checking and harness campaigns.
//!
//! Every command returns an [`Outcome`] instead of printing, so the exit
//! code contract can be tested in-process.

pub mod document;
pub mod edgelist;

use std::io::Read as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kuratowski::harness::{run_campaign, Campaign, CampaignParams};
use kuratowski::planarity::decide_with;
use kuratowski::{lemmas, DecisionConfig, DecisionPath, Error, Graph};

pub use document::{LemmaDocument, VerdictDocument};
pub use edgelist::{parse_edge_list, print_edge_list, ParseError};

pub const EXIT_PLANAR: i32 = 0;
pub const EXIT_NONPLANAR: i32 = 1;
pub const EXIT_VALID: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kuratowski", version, about = "Certified planarity testing")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide planarity and print a verdict with its witness.
    Check(CheckArgs),
    /// Validate a verdict document against a graph.
    Certify {
        /// Edge-list file, or "-" for standard input.
        graph: String,
        /// Verdict JSON file, or "-" for standard input.
        verdict: String,
    },
    /// Evaluate the three Kuratowski-graph conditions.
    Lemmas {
        /// Edge-list file, or "-" for standard input.
        graph: String,
    },
    /// Run a verification campaign.
    Harness(HarnessArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Subdivision,
    Minor,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Edge-list file, or "-" for standard input.
    pub input: String,
    #[arg(long, value_enum, default_value = "subdivision")]
    pub via: Via,
    /// Re-check the witness before printing it.
    #[arg(long)]
    pub validate: bool,
    /// Node budget for the embedding search.
    #[arg(long, default_value_t = kuratowski::embedding::DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct HarnessArgs {
    /// One of: kuratowski, kuratowski-dedup7, lemma, chartrand-harary,
    /// menger, lifting, faces, genus.
    pub campaign: String,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Spread the work over all cores; the report is unchanged.
    #[arg(long)]
    pub parallel: bool,
    /// Human-readable report instead of key=value lines.
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Outcome {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn err(code: i32, stderr: impl Into<String>) -> Outcome {
        Outcome { code, stdout: String::new(), stderr: stderr.into() }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Certify { graph, verdict } => cmd_certify(&graph, &verdict),
        Command::Lemmas { graph } => cmd_lemmas(&graph),
        Command::Harness(args) => cmd_harness(&args),
    }
}

/// Reads a path, with "-" meaning standard input.
pub fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn load_graph(path: &str) -> Result<Graph, Outcome> {
    let text = read_input(path).map_err(|e| Outcome::err(EXIT_INPUT, format!("{path}: {e}")))?;
    parse_edge_list(&text).map_err(|e| Outcome::err(EXIT_INPUT, format!("{path}: {e}")))
}

pub fn check_graph(g: &Graph, args: &CheckArgs) -> Outcome {
    let cfg = DecisionConfig {
        budget: args.budget,
        path: match args.via {
            Via::Subdivision => DecisionPath::Subdivision,
            Via::Minor => DecisionPath::Minor,
        },
        ..DecisionConfig::default()
    };
    let verdict = match decide_with(g, &cfg) {
        Ok(v) => v,
        Err(e @ Error::InvalidArgument(_)) => return Outcome::err(EXIT_INPUT, e.to_string()),
        Err(e) => return Outcome::err(EXIT_RESOURCE, e.to_string()),
    };
    let doc = VerdictDocument::from_verdict(&verdict);
    let json = doc.to_json();
    if args.validate {
        let checked = VerdictDocument::from_json(&json).and_then(|d| d.certify(g));
        if let Err(why) = checked {
            return Outcome::err(EXIT_RESOURCE, format!("emitted verdict failed validation: {why}"));
        }
    }
    Outcome::out(if doc.is_planar() { EXIT_PLANAR } else { EXIT_NONPLANAR }, json + "\n")
}

pub fn cmd_check(args: &CheckArgs) -> Outcome {
    match load_graph(&args.input) {
        Ok(g) => check_graph(&g, args),
        Err(o) => o,
    }
}

pub fn certify_text(g: &Graph, verdict_json: &str) -> Outcome {
    let doc = match VerdictDocument::from_json(verdict_json) {
        Ok(d) => d,
        Err(e) => return Outcome::err(EXIT_INPUT, format!("verdict: {e}")),
    };
    match doc.certify(g) {
        Ok(()) => Outcome::out(EXIT_VALID, "valid\n".into()),
        Err(why) => Outcome { code: EXIT_INVALID, stdout: "invalid\n".into(), stderr: why },
    }
}

pub fn cmd_certify(graph: &str, verdict: &str) -> Outcome {
    let g = match load_graph(graph) {
        Ok(g) => g,
        Err(o) => return o,
    };
    match read_input(verdict) {
        Ok(text) => certify_text(&g, &text),
        Err(e) => Outcome::err(EXIT_INPUT, format!("{verdict}: {e}")),
    }
}

pub fn cmd_lemmas(graph: &str) -> Outcome {
    match load_graph(graph) {
        Ok(g) => {
            let doc = LemmaDocument::from(&lemmas::evaluate(&g));
            Outcome::out(0, serde_json::to_string_pretty(&doc).expect("serializable") + "\n")
        }
        Err(o) => o,
    }
}

pub fn cmd_harness(args: &HarnessArgs) -> Outcome {
    let campaign: Campaign = match args.campaign.parse() {
        Ok(c) => c,
        Err(e) => return Outcome::err(EXIT_INPUT, e.to_string()),
    };
    let params = CampaignParams { max_n: args.max_n, samples: args.samples, seed: args.seed, parallel: args.parallel };
    match run_campaign(campaign, &params) {
        Ok(report) => {
            let body = if args.text { report.to_text() } else { report.to_key_values() };
            Outcome::out(if report.passed() { 0 } else { 1 }, body)
        }
        Err(e @ (Error::InvalidArgument(_) | Error::Capacity(_))) => Outcome::err(EXIT_INPUT, e.to_string()),
        Err(e) => Outcome::err(EXIT_RESOURCE, e.to_string()),
    }
}
