//! Command-line front end. Reports are JSON on stdout (or `--output`), one
//! document per line for multi-graph inputs.
//!
//! Exit codes: 0 verified or passing, 1 counterexample or violation found,
//! 2 budget exhausted before a verdict, 3 input error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::decompose::{run_pipeline, validate_technical_lemma, LemmaVerdict};
use crate::detect::{find_path, Target};
use crate::format::{self, FormatError};
use crate::generate;
use crate::goodness::{
    verify_goodness, verify_ramsey_value, Budget, GoodnessVerdict, RamseyVerdict, SearchConfig, SearchMode,
};
use crate::graph::{ColoredGraph, Graph};
use crate::hypergraph::{
    chromatic_index, chromatic_index_search, valid_instances, ChromaticIndex, Hypergraph3, HypergraphError,
};
use crate::orientation::{
    build_witness, orient_colored, witness_orientation, witness_params, BoundParams, Family, OrientError,
};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INDETERMINATE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "ramsey-orient", version, about = "Partial orientations, Ramsey verification and coloring pipelines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunConfig,
}

/// Settings shared by every command.
#[derive(Debug, Args)]
pub struct RunConfig {
    /// Stop after this many colorings (or search nodes for coloring searches).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_colorings: Option<u64>,
    /// Stop after this many seconds of wall-clock time.
    #[arg(long, global = true)]
    pub budget_seconds: Option<f64>,
    /// Worker threads for parallel searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Seed for randomly generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Input file (default: stdin).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Input format for `orient`, output format for `witness`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Graph6,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orient P_N-free graphs (graph6 lines) or every part of a colored graph (JSON).
    Orient {
        #[arg(long)]
        family: Family,
    },
    /// Run one of the verifiers.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
    /// Emit the two-colored complete graph with no monochromatic P_N.
    Witness {
        #[arg(long = "N")]
        order: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Reference,
    Pruned,
    Symmetric,
}

impl From<Mode> for SearchMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Reference => SearchMode::Reference,
            Mode::Pruned => SearchMode::Pruned,
            Mode::Symmetric => SearchMode::Symmetric,
        }
    }
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    /// Comma-separated targets, one per color: P<n>, S<n>, K<n>, C<n>, G[<graph6>].
    #[arg(long, value_delimiter = ',', required = true)]
    pub targets: Vec<Target>,
    /// Number of colors; a single target is repeated this many times.
    #[arg(long)]
    pub colors: Option<usize>,
    /// Search engine (default: symmetric for complete hosts).
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyKind {
    /// Decide whether R(targets) equals N.
    Ramsey {
        #[arg(long = "N")]
        order: usize,
        #[command(flatten)]
        targets: TargetArgs,
    },
    /// Check every coloring of a host graph (`--host K6` or graph6 `--input`).
    Goodness {
        #[arg(long)]
        host: Option<Target>,
        #[command(flatten)]
        targets: TargetArgs,
    },
    /// Check the minimum-degree lemma on an oriented colored graph (JSON input).
    Lemma {
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Check this many generated inputs instead of reading one.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Parts, multigraph, König coloring and vertex coloring of a colored graph.
    Pipeline {
        /// Use the witness construction for this N instead of reading input.
        #[arg(long = "witness")]
        witness: Option<usize>,
        /// Run on this many generated instances instead of reading input.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Chromatic index of a hypergraph (JSON input), or of every valid
    /// instance up to `--max-edges` hyperedges.
    ChiIndex {
        #[arg(long)]
        max_edges: Option<usize>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Orient(#[from] OrientError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Parses arguments, runs the command and returns the exit code.
pub fn main() -> u8 {
    env_logger::Builder::from_env(env_logger::Env::new().filter("RAMSEY_ORIENT_LOG")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

struct Io<'a> {
    config: &'a RunConfig,
    out: Box<dyn Write>,
}

impl Io<'_> {
    fn emit(&mut self, value: &Value) -> io::Result<()> {
        writeln!(self.out, "{value}")
    }

    fn reader(&self) -> io::Result<Box<dyn BufRead>> {
        Ok(match &self.config.input {
            Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(File::open(p)?)),
            _ => Box::new(BufReader::new(io::stdin())),
        })
    }

    fn read_all(&self) -> io::Result<String> {
        let mut s = String::new();
        self.reader()?.read_to_string(&mut s)?;
        Ok(s)
    }
}

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    if let Some(w) = cli.run.workers {
        // searches without their own pool use the global one; a second call
        // in the same process keeps the first setting
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w as usize).build_global();
    }
    let out: Box<dyn Write> = match &cli.run.output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let mut io = Io { config: &cli.run, out };
    let code = match &cli.command {
        Command::Orient { family } => cmd_orient(&mut io, *family)?,
        Command::Verify { kind } => cmd_verify(&mut io, kind)?,
        Command::Witness { order } => cmd_witness(&mut io, *order)?,
    };
    io.out.flush()?;
    Ok(code)
}

fn search_config(config: &RunConfig, mode: Option<Mode>) -> SearchConfig {
    SearchConfig {
        mode: mode.map(Into::into),
        budget: Budget { max_colorings: config.budget_colorings, max_seconds: config.budget_seconds },
        workers: config.workers.map(|w| w as usize),
    }
}

fn targets_of(args: &TargetArgs) -> Result<Vec<Target>, CliError> {
    match (args.targets.as_slice(), args.colors) {
        ([one], Some(k)) => Ok(vec![one.clone(); k]),
        (many, Some(k)) if many.len() != k => {
            Err(CliError::Usage(format!("{} targets given for {k} colors", many.len())))
        }
        (many, _) => Ok(many.to_vec()),
    }
}

fn cmd_orient(io: &mut Io<'_>, family: Family) -> Result<u8, CliError> {
    if io.config.format == Some(Format::Json) {
        let cg = format::colored_from_json(&io.read_all()?)?;
        let (po, parts) = orient_colored(&cg, family)?;
        let pass = parts.iter().all(|p| p.verdict.passes());
        io.emit(&json!({
            "family": family.to_string(),
            "params": family.params(),
            "orientation": format::orientation_to_value(&po),
            "parts": parts,
            "pass": pass,
        }))?;
        return Ok(if pass { EXIT_PASS } else { EXIT_VIOLATION });
    }
    let mut code = EXIT_PASS;
    let reader = io.reader()?;
    for (index, graph) in format::read_graph6_lines(reader).enumerate() {
        let g = graph?;
        if let Some(path) = find_path(&g, family.path_order()) {
            io.emit(&json!({
                "index": index,
                "graph6": format::to_graph6(&g),
                "error": format!("graph contains P{}", family.path_order()),
                "witness_path": path,
            }))?;
            code = EXIT_INPUT;
            continue;
        }
        let parts = crate::graph::connected_components(&g);
        let mut pass = true;
        let mut reports = Vec::new();
        for comp in parts.into_iter().filter(|c| c.len() > 1) {
            let (sub, map) = g.induced(&comp);
            let built = family.orient(&sub)?;
            pass &= built.verdict.passes();
            let arcs: Vec<[usize; 2]> = built.arcs(&sub).map(|(a, b)| [map[a], map[b]]).collect();
            reports.push(json!({
                "part": comp,
                "rule": built.rule,
                "arcs": arcs,
                "violations": built.verdict.violations,
            }));
        }
        info!("graph {index}: {} parts, pass = {pass}", reports.len());
        if !pass && code == EXIT_PASS {
            code = EXIT_VIOLATION;
        }
        io.emit(&json!({
            "index": index,
            "graph6": format::to_graph6(&g),
            "parts": reports,
            "pass": pass,
        }))?;
    }
    Ok(code)
}

fn cmd_verify(io: &mut Io<'_>, kind: &VerifyKind) -> Result<u8, CliError> {
    match kind {
        VerifyKind::Ramsey { order, targets } => {
            let t = targets_of(targets)?;
            if *order == 0 {
                return Err(CliError::Usage("--N must be positive".into()));
            }
            let report = verify_ramsey_value(*order, &t, &search_config(io.config, targets.mode));
            io.emit(&report.to_json())?;
            Ok(match report.verdict {
                RamseyVerdict::IsRamsey => EXIT_PASS,
                RamseyVerdict::TooSmall | RamseyVerdict::NotTight => EXIT_VIOLATION,
                RamseyVerdict::Indeterminate => EXIT_INDETERMINATE,
            })
        }
        VerifyKind::Goodness { host, targets } => {
            let t = targets_of(targets)?;
            let g = match host {
                Some(h) => h.as_graph(),
                None => read_first_graph6(io)?,
            };
            let cert = verify_goodness(&g, &t, &search_config(io.config, targets.mode));
            let mut report = cert.to_json();
            report["host"] = json!(format::to_graph6(&g));
            io.emit(&report)?;
            Ok(match cert.verdict {
                GoodnessVerdict::AllColoringsHit => EXIT_PASS,
                GoodnessVerdict::CounterexampleColoring => EXIT_VIOLATION,
                GoodnessVerdict::Indeterminate => EXIT_INDETERMINATE,
            })
        }
        VerifyKind::Lemma { family, n, s, t, random } => {
            let params = match (family, n, s, t) {
                (Some(f), None, None, None) => f.params(),
                (None, Some(n), Some(s), Some(t)) => BoundParams { n: *n, s: *s, t: *t },
                _ => return Err(CliError::Usage("give either --family or all of --n, --s, --t".into())),
            };
            let single = random.is_none();
            let inputs: Vec<_> = match random {
                Some(count) => {
                    // parts of size t keep every color degree at t - 1
                    let mut rng = ChaCha8Rng::seed_from_u64(io.config.seed);
                    let size = params.t.max(2);
                    (0..*count)
                        .map(|i| {
                            let cg = generate::crossing_parts(&mut rng, size + 2, size, i % 2 == 1, params.n);
                            generate::random_orientation(&mut rng, &cg, [0.0, 0.02, 0.1][i % 3])
                        })
                        .collect()
                }
                None => vec![format::orientation_from_json(&io.read_all()?)?],
            };
            let mut code = EXIT_PASS;
            for po in inputs {
                let report = validate_technical_lemma(&po, params)?;
                match report.verdict {
                    LemmaVerdict::CounterexampleCandidate => code = EXIT_VIOLATION,
                    LemmaVerdict::HypothesisFailed if single => code = EXIT_INPUT,
                    _ => {}
                }
                io.emit(&json!(report))?;
            }
            Ok(code)
        }
        VerifyKind::Pipeline { witness, random } => {
            let inputs: Vec<ColoredGraph> = match (witness, random) {
                (Some(order), _) => vec![build_witness(*order)?],
                (None, Some(count)) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(io.config.seed);
                    (0..*count)
                        .map(|i| generate::crossing_parts(&mut rng, 6 + i % 6, 4 + i % 2, i % 3 == 0, 5))
                        .collect()
                }
                (None, None) => vec![format::colored_from_json(&io.read_all()?)?],
            };
            let mut code = EXIT_PASS;
            for cg in inputs {
                match run_pipeline(&cg) {
                    Ok(report) => io.emit(&report.to_json())?,
                    Err(e) => {
                        code = EXIT_VIOLATION;
                        io.emit(&json!({ "proper": false, "error": e.to_string() }))?;
                    }
                }
            }
            Ok(code)
        }
        VerifyKind::ChiIndex { max_edges } => {
            let budget = io.config.budget_colorings;
            let corpus = match max_edges {
                Some(m) => valid_instances(*m),
                None => vec![Hypergraph3::from_json(&io.read_all()?)?],
            };
            if max_edges.is_some() {
                let summary = chromatic_index_search(&corpus, budget);
                io.emit(&json!(summary))?;
                return Ok(if summary.flagged > 0 {
                    EXIT_VIOLATION
                } else if summary.indeterminate > 0 {
                    EXIT_INDETERMINATE
                } else {
                    EXIT_PASS
                });
            }
            let h = &corpus[0];
            let chi = chromatic_index(h, budget);
            io.emit(&json!({ "chromatic_index": chi, "properties": h.properties() }))?;
            Ok(match chi {
                ChromaticIndex::Exact { value } if value >= 6 => EXIT_VIOLATION,
                ChromaticIndex::Exact { .. } => EXIT_PASS,
                ChromaticIndex::Indeterminate { .. } => EXIT_INDETERMINATE,
            })
        }
    }
}

fn read_first_graph6(io: &Io<'_>) -> Result<Graph, CliError> {
    format::read_graph6_lines(io.reader()?).next().ok_or(FormatError::Empty)?.map_err(Into::into)
}

fn cmd_witness(io: &mut Io<'_>, order: usize) -> Result<u8, CliError> {
    let cg = build_witness(order)?;
    match io.config.format {
        Some(Format::Graph6) => writeln!(io.out, "{}", format::to_graph6(cg.graph()))?,
        Some(Format::Json) => io.emit(&format::orientation_to_value(&witness_orientation(order)?))?,
        None => io.emit(&json!({
            "order": order,
            "vertices": cg.n(),
            "graph6": format::to_graph6(cg.graph()),
            "colored": format::colored_to_value(&cg),
            "orientation": format::orientation_to_value(&witness_orientation(order)?),
            "params": witness_params(order),
        }))?,
    }
    Ok(EXIT_PASS)
}
