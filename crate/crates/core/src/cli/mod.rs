//! The `iasi` command line.
//!
//! Exit codes: 0 the requested property holds, 1 it fails, 2 input or limit
//! error, 3 internal invariant breach.

mod report;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::construct::{self, ConstructionSpec, Mode};
use crate::error::{Error, Result};
use crate::graph::{self, io::parse_graph, io::write_graph, Graph, VertexId};
use crate::labeling::{self, io::parse_labeling, io::write_labeling};
use crate::oracle::{self, MinChainOutcome, OracleConfig};

pub use report::{Format, InputDigest, RunReport};

/// Environment variable naming the oracle checkpoint directory.
pub const CHECKPOINT_ENV: &str = "IASI_ORACLE_CHECKPOINT_DIR";

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "iasi", version, about = "Strong integer-additive set-indexers on graphs")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Where to write the command's artifact: the labeling for `construct`,
    /// the graph for `ops`, the report otherwise.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a labeling is an IASI (default), strong, or strongly concurrent.
    Verify {
        graph: PathBuf,
        labeling: PathBuf,
        #[arg(long)]
        strong: bool,
        /// Strong on the graph and on its complement.
        #[arg(long)]
        concurrent: bool,
    },
    /// Build a strong IASI for a graph.
    Construct {
        graph: PathBuf,
        /// Uniform label cardinality.
        #[arg(long, conflicts_with = "cards", default_value_t = 2)]
        cardinality: usize,
        /// Per-vertex cardinalities, one `name: c` line each.
        #[arg(long)]
        cards: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Coloring)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the construction trace (JSON) here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Nourishing number (clique number) with a maximum clique as witness.
    Nourish { graph: PathBuf },
    /// Apply a graph operation and compare the result's nourishing number
    /// with the value predicted from its operands.
    Ops {
        #[arg(value_enum)]
        op: OpArg,
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
    },
    /// Exhaustive searches on tiny instances.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Coloring,
    CliqueCover,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Coloring => Mode::Coloring,
            ModeArg::CliqueCover => Mode::CliqueCover,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum OpArg {
    Union,
    Join,
    Complement,
    Product,
    Corona,
    Intersection,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Sumset size versus difference-set disjointness over all subset pairs.
    Lemma {
        #[arg(long = "max", default_value_t = 8)]
        universe_max: u32,
    },
    /// Minimum over strong labelings of the largest chain, compared with ω(G).
    Minchain {
        graph: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Search for strongly concurrent labelings.
    Concurrent {
        graph: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Exact label cardinality (sets both bounds).
    #[arg(long, conflicts_with_all = ["min_card", "max_card"])]
    cards: Option<usize>,
    #[arg(long, default_value_t = 2)]
    min_card: usize,
    #[arg(long, default_value_t = 2)]
    max_card: usize,
    /// Labels are subsets of {0..=max}.
    #[arg(long = "max", default_value_t = 8)]
    universe_max: u32,
    #[arg(long, default_value_t = 5)]
    vertex_limit: usize,
}

impl SearchArgs {
    fn config(&self) -> OracleConfig {
        let (lo, hi) = self.cards.map_or((self.min_card, self.max_card), |c| (c, c));
        OracleConfig {
            universe_max: self.universe_max,
            min_card: lo,
            max_card: hi,
            vertex_limit: self.vertex_limit,
            checkpoint_dir: std::env::var_os(CHECKPOINT_ENV).map(PathBuf::from),
            ..OracleConfig::default()
        }
    }
}

/// Entry point for the binary: parses `std::env::args`, prints, returns the
/// exit code.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one command line, writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_HOLDS };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, artifact)) => {
            let rendered = report.render(cli.format);
            let emitted = match (&cli.output, artifact) {
                (Some(path), Some(text)) => {
                    std::fs::write(path, text).map(|_| writeln!(out, "{rendered}"))
                }
                (Some(path), None) => std::fs::write(path, format!("{rendered}\n")).map(Ok),
                (None, _) => Ok(writeln!(out, "{rendered}")),
            };
            match emitted {
                Ok(Ok(())) => report.exit_code,
                Ok(Err(e)) | Err(e) => {
                    let _ = writeln!(err, "error: {}", Error::from(e));
                    EXIT_INPUT
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvariantBreach(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            }
        }
    }
}

struct Inputs(Vec<InputDigest>);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.0.push(InputDigest::of(path, &bytes));
        String::from_utf8(bytes).map_err(|_| Error::Io(format!("{}: not valid UTF-8", path.display())))
    }

    fn graph(&mut self, path: &Path) -> Result<Graph> {
        let text = self.read(path)?;
        parse_graph(&text).map_err(|e| in_file(path, e))
    }
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Runs the command, returning the report and an optional artifact for `--output`.
fn execute(cli: &Cli) -> Result<(RunReport, Option<String>)> {
    let started = Instant::now();
    let mut inputs = Inputs(Vec::new());
    let (name, outcome, exit_code, artifact) = match &cli.command {
        Command::Verify {
            graph,
            labeling,
            strong,
            concurrent,
        } => {
            let g = inputs.graph(graph)?;
            let text = inputs.read(labeling)?;
            let f = parse_labeling(&text).map_err(|e| in_file(labeling, e))?;
            let report = labeling::verify(&g, &f)?;
            let mut outcome = json!({ "report": to_value(&report) });
            let (property, holds) = if *concurrent {
                let holds = labeling::verify_concurrent_strong(&g, &f)?;
                let comp = labeling::verify(&g.complement(), &f)?;
                outcome["complement_report"] = to_value(&comp);
                ("strongly-concurrent", holds)
            } else if *strong {
                ("strong", report.is_strong)
            } else {
                ("iasi", report.is_iasi)
            };
            outcome["property"] = json!(property);
            outcome["holds"] = json!(holds);
            let code = if holds { EXIT_HOLDS } else { EXIT_FAILS };
            ("verify", outcome, code, None)
        }
        Command::Construct {
            graph,
            cardinality,
            cards,
            mode,
            seed,
            trace,
        } => {
            let g = inputs.graph(graph)?;
            let cardinalities = match cards {
                Some(path) => {
                    let text = inputs.read(path)?;
                    parse_cards(&text).map_err(|e| in_file(path, e))?
                }
                None => ConstructionSpec::uniform(&g, *cardinality).cardinalities,
            };
            let spec = ConstructionSpec {
                cardinalities,
                seed: *seed,
                mode: (*mode).into(),
            };
            let built = construct::construct_strong_traced(&g, &spec)?;
            let check = labeling::verify(&g, &built.labeling)?;
            if !check.is_strong {
                return Err(Error::InvariantBreach(
                    "constructed labeling failed strong verification".into(),
                ));
            }
            if let Some(path) = trace {
                let text = serde_json::to_string_pretty(&to_value(&built.trace)).expect("json");
                std::fs::write(path, text + "\n")?;
            }
            let text = write_labeling(&built.labeling);
            let mut outcome = json!({
                "verified_strong": true,
                "strides": built.trace.strides,
                "classes": built.trace.classes.len(),
                "max_element": built.trace.max_element,
                "trace": to_value(&built.trace),
            });
            if cli.output.is_none() {
                outcome["labeling"] = json!(text);
            }
            ("construct", outcome, EXIT_HOLDS, Some(text))
        }
        Command::Nourish { graph } => {
            let g = inputs.graph(graph)?;
            let kappa = labeling::nourishing_number(&g)?;
            let witness = graph::maximum_clique(&g);
            let outcome = json!({ "nourishing_number": kappa, "witness_clique": witness });
            ("nourish", outcome, EXIT_HOLDS, None)
        }
        Command::Ops { op, graphs } => {
            let gs = graphs.iter().map(|p| inputs.graph(p)).collect::<Result<Vec<_>>>()?;
            let (outcome, result) = run_op(*op, &gs)?;
            let matches = outcome["prediction_holds"].as_bool().unwrap_or(true)
                && outcome["counts_hold"].as_bool().unwrap_or(true);
            let text = write_graph(&result);
            let mut outcome = outcome;
            if cli.output.is_none() {
                outcome["graph"] = json!(text);
            }
            let code = if matches { EXIT_HOLDS } else { EXIT_FAILS };
            ("ops", outcome, code, Some(text))
        }
        Command::Oracle { command } => {
            let (outcome, code) = run_oracle(command, &mut inputs)?;
            ("oracle", outcome, code, None)
        }
    };
    Ok((
        RunReport {
            command: name.to_string(),
            inputs: inputs.0,
            outcome,
            exit_code,
            wall_ms: started.elapsed().as_millis() as u64,
        },
        artifact,
    ))
}

/// `name: c` lines, `#` comments.
fn parse_cards(text: &str) -> Result<BTreeMap<VertexId, usize>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((name, card)) = line.rsplit_once(':') else {
            return Err(Error::parse(i + 1, 1, "expected 'name: cardinality'"));
        };
        let v = VertexId::new(name.trim()).map_err(|e| Error::parse(i + 1, 1, e.to_string()))?;
        let c = card
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(i + 1, name.len() + 2, format!("invalid cardinality '{}'", card.trim())))?;
        out.insert(v, c);
    }
    Ok(out)
}

fn arity(op: OpArg) -> usize {
    match op {
        OpArg::Complement => 1,
        _ => 2,
    }
}

/// Applies `op` and compares κ(result) with the value predicted from the
/// operands' κ. κ of an operand is its clique number.
fn run_op(op: OpArg, gs: &[Graph]) -> Result<(Value, Graph)> {
    if gs.len() != arity(op) {
        return Err(Error::invalid(format!(
            "{op:?} takes {} graph file(s), got {}",
            arity(op),
            gs.len()
        )));
    }
    let kappas = gs.iter().map(graph::clique_number).collect::<Result<Vec<_>>>()?;
    let (result, relation, predicted, expected_counts, note) = match op {
        OpArg::Union => {
            let (g1, g2) = (&gs[0], &gs[1]);
            let inter = g1.intersection(g2);
            let max = kappas[0].max(kappas[1]);
            // Equality is claimed when the overlap is triangle-free; otherwise
            // only the lower bound.
            let (rel, note) = if inter.is_empty() {
                ("=", "disjoint union")
            } else if graph::is_triangle_free(&inter) {
                ("=", "triangle-free intersection")
            } else {
                (">=", "intersection contains a triangle")
            };
            (g1.union(g2), rel, Some(max), None, Some(note))
        }
        OpArg::Join => {
            let (g1, g2) = (&gs[0], &gs[1]);
            let counts = (
                g1.vertex_count() + g2.vertex_count(),
                g1.edge_count() + g2.edge_count() + g1.vertex_count() * g2.vertex_count(),
            );
            (g1.join(g2)?, "=", Some(kappas[0] + kappas[1]), Some(counts), None)
        }
        OpArg::Complement => (gs[0].complement(), "=", None, None, None),
        OpArg::Intersection => (gs[0].intersection(&gs[1]), "=", None, None, None),
        OpArg::Product => {
            let (g1, g2) = (&gs[0], &gs[1]);
            let (p1, q1, p2, q2) = (g1.vertex_count(), g1.edge_count(), g2.vertex_count(), g2.edge_count());
            let counts = (p1 * p2, p1 * q2 + p2 * q1);
            (g1.cartesian_product(g2)?, "=", Some(kappas[0].max(kappas[1])), Some(counts), None)
        }
        OpArg::Corona => {
            let (g1, g2) = (&gs[0], &gs[1]);
            let (p1, q1, p2, q2) = (g1.vertex_count(), g1.edge_count(), g2.vertex_count(), g2.edge_count());
            let counts = (p1 * (1 + p2), q1 + p1 * q2 + p1 * p2);
            let note = match kappas[0].cmp(&kappas[1]) {
                std::cmp::Ordering::Greater => "κ1 > κ2: κ1",
                std::cmp::Ordering::Less => "κ2 > κ1: κ2 + 1",
                std::cmp::Ordering::Equal => "unspecified branch: max rule",
            };
            (
                g1.corona(g2)?,
                "=",
                Some(kappas[0].max(1 + kappas[1])),
                Some(counts),
                Some(note),
            )
        }
    };
    let kappa = if result.is_empty() { None } else { Some(graph::clique_number(&result)?) };
    let mut outcome = json!({
        "op": format!("{op:?}").to_lowercase(),
        "vertices": result.vertex_count(),
        "edges": result.edge_count(),
        "operand_kappas": kappas,
        "kappa": kappa,
    });
    if let Some(p) = predicted {
        let holds = match (relation, kappa) {
            ("=", Some(k)) => k == p,
            (_, Some(k)) => k >= p,
            (_, None) => false,
        };
        outcome["predicted_kappa"] = json!({ "relation": relation, "value": p });
        outcome["prediction_holds"] = json!(holds);
    }
    if let Some((v, e)) = expected_counts {
        outcome["expected_counts"] = json!({ "vertices": v, "edges": e });
        outcome["counts_hold"] = json!(v == result.vertex_count() && e == result.edge_count());
    }
    if let Some(n) = note {
        outcome["note"] = json!(n);
    }
    Ok((outcome, result))
}

fn run_oracle(command: &OracleCommand, inputs: &mut Inputs) -> Result<(Value, i32)> {
    match command {
        OracleCommand::Lemma { universe_max } => {
            let o = oracle::lemma_oracle(*universe_max)?;
            let verdict = if o.agrees() { "agrees on all pairs" } else { "counterexample found" };
            let mut outcome = to_value(&o);
            outcome["verdict"] = json!(verdict);
            Ok((outcome, if o.agrees() { EXIT_HOLDS } else { EXIT_FAILS }))
        }
        OracleCommand::Minchain { graph, search } => {
            let g = inputs.graph(graph)?;
            let cfg = search.config();
            let o = oracle::min_max_chain(&g, &cfg)?;
            let omega = graph::clique_number(&g)?;
            let agree = o.value() == Some(omega);
            let oracle_value = match &o {
                MinChainOutcome::Found { min_max_chain, .. } => json!(min_max_chain),
                MinChainOutcome::SearchSpaceExhausted => json!("search space exhausted"),
            };
            let mut outcome = json!({
                "oracle": oracle_value,
                "clique_number": omega,
                "agreement": if agree { "agree" } else { "disagree" },
                "search": to_value(&o),
            });
            if let MinChainOutcome::Found { witness, .. } = &o {
                outcome["witness_labeling"] = json!(write_labeling(witness));
            }
            Ok((outcome, if agree { EXIT_HOLDS } else { EXIT_FAILS }))
        }
        OracleCommand::Concurrent { graph, search } => {
            let g = inputs.graph(graph)?;
            let o = oracle::exists_concurrent(&g, &search.config())?;
            let mut outcome = to_value(&o);
            outcome["exists"] = json!(o.exists());
            let ok = o.disjointness_violations == 0;
            Ok((outcome, if ok { EXIT_HOLDS } else { EXIT_FAILS }))
        }
    }
}
