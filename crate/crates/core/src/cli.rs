//! Command-line surface: every subcommand maps onto one library operation
//! and emits either a graph/coloring file or a replayable certificate
//! document.
//!
//! Exit codes: 0 = success (certify: valid witness; verify: valid or
//! confirmed replay), 1 = any error including usage, 2 = a search or
//! counting budget ran out.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds;
use crate::certify::{self, AssemblyMode, CertifyOutcome};
use crate::color::{self, RamseyInstance};
use crate::count;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::persist::{
    self, AuditPayload, CertificateDocument, CheckedColoring, DocumentBody, Provenance,
    WitnessPayload, COLORING_SPEC_PREFIX,
};
use crate::recipe::GraphRecipe;
use crate::rng;
use crate::spectral::{self, DEFAULT_SPECTRUM_CAP, DEFAULT_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

// ==================================================================
// argument shapes
// ==================================================================

#[derive(Parser, Debug)]
#[command(
    name = "ramseycert",
    version,
    about = "Construct clique-free pseudorandom graphs, overlay them into edge \
             colorings, and emit replayable certificates for every claim."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Master seed for randomized commands; generated and printed when
    /// omitted. Never read from the environment.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Output path; stdout when omitted. Files are written atomically.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Graph file format for graph outputs.
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::Text)]
    pub format: GraphFormat,

    /// Numeric slack for spectral comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,

    /// Trial budget (certify) or exploration-node budget (counting).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Text edge list: `n m` header then `u v` lines.
    Text,
    /// graph6 interop format.
    Graph6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Balanced blowups plus identity permutations; deterministic.
    Identity,
    /// Seeded random blowups and permutations.
    Random,
}

impl From<Mode> for AssemblyMode {
    fn from(m: Mode) -> AssemblyMode {
        match m {
            Mode::Identity => AssemblyMode::Identity,
            Mode::Random => AssemblyMode::Random,
        }
    }
}

/// One graph input, either a file or a construction recipe.
#[derive(Args, Debug)]
pub struct GraphInput {
    /// Graph file to load.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,

    /// Construction recipe, e.g. `cycle:5`, `paley:13`, `turan:12,3`,
    /// `random_regular:24,5,3,7`, with optional `|blowup:t`,
    /// `|random_blowup:n,seed`, `|complement` stages.
    #[arg(long)]
    pub family: Option<String>,
}

impl GraphInput {
    /// Builds the graph and its canonical provenance spec.
    fn resolve(&self) -> Result<(Graph, String)> {
        match (&self.graph, &self.family) {
            (Some(path), None) => {
                let spec = format!("file:{}", path.display());
                Ok((persist::read_graph(path)?, spec))
            }
            (None, Some(text)) => {
                let recipe: GraphRecipe = text.parse()?;
                Ok((recipe.build()?, recipe.to_string()))
            }
            _ => Err(Error::Precondition(
                "exactly one of --graph and --family is required".into(),
            )),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph from a recipe and write it out.
    Construct {
        /// Construction recipe (see --family).
        #[arg(long)]
        family: String,
    },
    /// Eigenvalues and the (n, d, lambda) certificate of a graph.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        /// Refuse graphs larger than this (dense eigensolve).
        #[arg(long, default_value_t = DEFAULT_SPECTRUM_CAP)]
        cap: usize,
    },
    /// Rescale a graph by balanced or random blowup.
    Blowup {
        #[command(flatten)]
        input: GraphInput,
        /// Balanced blowup factor (every vertex becomes t copies).
        #[arg(long, conflicts_with = "target")]
        factor: Option<usize>,
        /// Random blowup target size (uses --seed).
        #[arg(long)]
        target: Option<usize>,
    },
    /// Overlay rescaled sources into an edge coloring of the complete host.
    Color {
        /// One recipe per constrained color.
        #[arg(long, required = true)]
        family: Vec<String>,
        /// Host size N.
        #[arg(long = "N")]
        host: usize,
        #[arg(long, value_enum, default_value_t = Mode::Identity)]
        mode: Mode,
    },
    /// Verify a coloring against clique thresholds, or replay a document.
    Verify {
        /// Certificate document to re-derive and confirm byte-exactly.
        #[arg(long, conflicts_with_all = ["coloring", "forbidden", "final_clique"])]
        replay: Option<PathBuf>,
        /// Coloring file to verify.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Forbidden clique size per constrained color (repeatable).
        #[arg(long = "s", value_delimiter = ',')]
        forbidden: Vec<usize>,
        /// Final-color clique size t.
        #[arg(long = "t")]
        final_clique: Option<usize>,
    },
    /// Exact independent-tuple count via the independence profile.
    CountTuples {
        #[command(flatten)]
        input: GraphInput,
        /// Tuple length.
        #[arg(long = "t")]
        tuple_length: usize,
    },
    /// Probability and expectation bounds.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Trace the greedy candidate-set bookkeeping along a sequence.
    Trace {
        #[command(flatten)]
        input: GraphInput,
        /// Pairwise nonadjacent vertex sequence, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sequence: Vec<usize>,
    },
    /// Sampled and structural audits.
    #[command(subcommand)]
    Audit(AuditCommand),
    /// Search seeds for a verified lower-bound witness.
    Certify {
        /// Forbidden clique size per constrained color (repeatable).
        #[arg(long = "s", value_delimiter = ',', required = true)]
        forbidden: Vec<usize>,
        /// Final-color clique size t.
        #[arg(long = "t")]
        final_clique: usize,
        /// Host size N.
        #[arg(long = "N")]
        host: usize,
        /// One source recipe per constrained color.
        #[arg(long, required = true)]
        family: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Identity)]
        mode: Mode,
    },
}

#[derive(Subcommand, Debug)]
pub enum BoundCommand {
    /// Independent-tuple upper bound from a spectral certificate.
    Tuple {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long = "t")]
        tuple_length: usize,
    },
    /// Independence bound for a random blowup of the graph.
    Blowup {
        #[command(flatten)]
        input: GraphInput,
        /// Blowup target size N.
        #[arg(long)]
        target: usize,
        #[arg(long = "t")]
        set_size: usize,
    },
    /// Assembled union bound over one instance.
    Union {
        /// One recipe per constrained color.
        #[arg(long, required = true)]
        family: Vec<String>,
        #[arg(long = "s", value_delimiter = ',', required = true)]
        forbidden: Vec<usize>,
        #[arg(long = "t")]
        final_clique: usize,
        #[arg(long = "N")]
        host: usize,
    },
    /// Heuristic source/host size suggestion (constants set to 1).
    Suggest {
        #[arg(long = "s", value_delimiter = ',', required = true)]
        forbidden: Vec<usize>,
        /// One weak-optimality exponent per forbidden clique.
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<f64>,
        #[arg(long = "t")]
        final_clique: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum AuditCommand {
    /// Max degree, neighborhood edges, and greedy independence of the
    /// union of constrained classes.
    Union {
        /// Coloring file to audit.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long = "s", value_delimiter = ',', required = true)]
        forbidden: Vec<usize>,
        #[arg(long = "t")]
        final_clique: usize,
    },
    /// Sampled expander-mixing checks.
    Mixing {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Sampled greedy-trace bound checks.
    Traces {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 16)]
        max_len: usize,
    },
    /// Monte Carlo check of the exact blowup expectation.
    Expectation {
        #[command(flatten)]
        input: GraphInput,
        /// Blowup target size N.
        #[arg(long)]
        target: usize,
        #[arg(long = "t")]
        set_size: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        /// Also check every sampled blowup misses this clique size.
        #[arg(long)]
        forbidden: Option<usize>,
    },
}

// ==================================================================
// dispatch
// ==================================================================

/// Parses arguments and runs; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit { .. } | Error::ExhaustedAttempts { .. } => EXIT_BUDGET,
                _ => EXIT_ERROR,
            }
        }
    }
}

/// Uses the provided seed or draws, prints, and returns a fresh one.
fn ensure_seed(seed: Option<u64>) -> u64 {
    match seed {
        Some(s) => s,
        None => {
            let s = rng::random_seed();
            eprintln!("seed: {s}");
            s
        }
    }
}

fn emit_graph(g: &Graph, out: &Option<PathBuf>, format: GraphFormat) -> Result<()> {
    match (out, format) {
        (Some(path), GraphFormat::Text) => {
            persist::write_graph(g, path)?;
            eprintln!("wrote graph to {}", path.display());
        }
        (Some(path), GraphFormat::Graph6) => {
            persist::write_graph_g6(g, path)?;
            eprintln!("wrote graph to {}", path.display());
        }
        (None, GraphFormat::Text) => print!("{}", persist::format_graph(g)),
        (None, GraphFormat::Graph6) => println!("{}", persist::graph_to_g6(g)?),
    }
    Ok(())
}

fn emit_document(doc: &CertificateDocument, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            persist::write_document(doc, path)?;
            eprintln!("wrote certificate document to {}", path.display());
        }
        None => println!("{}", serde_json::to_string_pretty(doc)?),
    }
    Ok(())
}

fn parse_recipes(texts: &[String]) -> Result<(Vec<Graph>, Vec<String>)> {
    let mut graphs = Vec::with_capacity(texts.len());
    let mut specs = Vec::with_capacity(texts.len());
    for text in texts {
        let recipe: GraphRecipe = text.parse()?;
        graphs.push(recipe.build()?);
        specs.push(recipe.to_string());
    }
    Ok((graphs, specs))
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Construct { family } => {
            let recipe: GraphRecipe = family.parse()?;
            emit_graph(&recipe.build()?, &cli.out, cli.format)?;
            Ok(EXIT_OK)
        }

        Command::Spectrum { input, cap } => {
            let (g, spec) = input.resolve()?;
            let cert = spectral::certify_spectrum(&g, *cap, cli.tolerance)?;
            let doc = CertificateDocument::new(
                DocumentBody::Spectral(cert),
                Provenance::new(vec![spec]),
            );
            emit_document(&doc, &cli.out)?;
            Ok(EXIT_OK)
        }

        Command::Blowup {
            input,
            factor,
            target,
        } => {
            let (g, _) = input.resolve()?;
            let blown = match (factor, target) {
                (Some(t), None) => crate::families::balanced_blowup(&g, *t)?.0,
                (None, Some(n)) => {
                    let seed = ensure_seed(cli.seed);
                    crate::families::random_blowup(&g, *n, seed)?.0
                }
                _ => {
                    return Err(Error::Precondition(
                        "exactly one of --factor and --target is required".into(),
                    ))
                }
            };
            emit_graph(&blown, &cli.out, cli.format)?;
            Ok(EXIT_OK)
        }

        Command::Color { family, host, mode } => {
            let (sources, _) = parse_recipes(family)?;
            let k = sources.len();
            let (blowup_seeds, perm_seeds) = match mode {
                Mode::Identity => (Vec::new(), Vec::new()),
                Mode::Random => certify::trial_seeds(ensure_seed(cli.seed), 1, k),
            };
            let coloring = certify::assemble_coloring(
                &sources,
                *host,
                (*mode).into(),
                &blowup_seeds,
                &perm_seeds,
            )?;
            match &cli.out {
                Some(path) => {
                    persist::write_coloring(&coloring, path)?;
                    eprintln!("wrote coloring to {}", path.display());
                }
                None => print!("{}", persist::format_coloring(&coloring)),
            }
            Ok(EXIT_OK)
        }

        Command::Verify {
            replay,
            coloring,
            forbidden,
            final_clique,
        } => match (replay, coloring) {
            (Some(doc_path), None) => {
                let doc = persist::read_document(doc_path)?;
                persist::replay_document(&doc)?;
                eprintln!("replay confirmed: payload reproduces byte-exactly");
                Ok(EXIT_OK)
            }
            (None, Some(col_path)) => {
                let t = final_clique.ok_or_else(|| {
                    Error::Precondition("--t is required to verify a coloring".into())
                })?;
                let col = persist::read_coloring(col_path)?;
                let inst = RamseyInstance::new(forbidden.clone(), t, col.n())?;
                let verification = color::verify_witness(&col, &inst)?;
                let valid = verification.valid;
                let doc = CertificateDocument::new(
                    DocumentBody::Witness(WitnessPayload::Checked(CheckedColoring {
                        instance: inst,
                        coloring_checksum: certify::coloring_checksum(&col),
                        class_sizes: col.class_sizes(),
                        verification,
                    })),
                    Provenance::new(vec![format!(
                        "{COLORING_SPEC_PREFIX}{}",
                        col_path.display()
                    )]),
                );
                emit_document(&doc, &cli.out)?;
                Ok(if valid { EXIT_OK } else { EXIT_ERROR })
            }
            _ => Err(Error::Precondition(
                "exactly one of --replay and --coloring is required".into(),
            )),
        },

        Command::CountTuples {
            input,
            tuple_length,
        } => {
            let (g, spec) = input.resolve()?;
            let report =
                count::count_independent_tuples(&g, *tuple_length, cli.budget.unwrap_or(u64::MAX))?;
            let doc = CertificateDocument::new(
                DocumentBody::TupleCount(report),
                Provenance::new(vec![spec]),
            );
            emit_document(&doc, &cli.out)?;
            Ok(EXIT_OK)
        }

        Command::Bound(bound) => run_bound(cli, bound),

        Command::Trace { input, sequence } => {
            let (g, spec) = input.resolve()?;
            let cert =
                spectral::certify_spectrum(&g, DEFAULT_SPECTRUM_CAP.max(g.n()), cli.tolerance)?;
            let report = spectral::candidate_trace(&g, &cert, sequence)?;
            let doc = CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::Trace(report)),
                Provenance::new(vec![spec]),
            );
            emit_document(&doc, &cli.out)?;
            Ok(EXIT_OK)
        }

        Command::Audit(audit) => run_audit(cli, audit),

        Command::Certify {
            forbidden,
            final_clique,
            host,
            family,
            mode,
        } => {
            let inst = RamseyInstance::new(forbidden.clone(), *final_clique, *host)?;
            let (sources, specs) = parse_recipes(family)?;
            let master_seed = match mode {
                Mode::Identity => 0,
                Mode::Random => ensure_seed(cli.seed),
            };
            let budget = cli.budget.unwrap_or(100);
            let outcome = certify::certify(&sources, &inst, (*mode).into(), master_seed, budget)?;
            let mut prov = Provenance::new(specs);
            let (payload, code) = match outcome {
                CertifyOutcome::Valid(w) => {
                    prov.master_seed = w.master_seed;
                    prov.derived_seeds = w
                        .blowup_seeds
                        .iter()
                        .chain(&w.permutation_seeds)
                        .copied()
                        .collect();
                    eprintln!(
                        "valid witness at trial {}: no K_{} in the final color on {} vertices",
                        w.trial, inst.final_clique, inst.host_size
                    );
                    (WitnessPayload::Valid(w), EXIT_OK)
                }
                CertifyOutcome::Exhausted(report) => {
                    prov.master_seed = report.master_seed;
                    eprintln!(
                        "budget exhausted: {} trial(s), no valid witness",
                        report.trials_attempted
                    );
                    (WitnessPayload::Exhausted(report), EXIT_BUDGET)
                }
            };
            let doc = CertificateDocument::new(DocumentBody::Witness(payload), prov);
            emit_document(&doc, &cli.out)?;
            Ok(code)
        }
    }
}

fn run_bound(cli: &Cli, bound: &BoundCommand) -> Result<i32> {
    let doc = match bound {
        BoundCommand::Tuple {
            input,
            tuple_length,
        } => {
            let (g, spec) = input.resolve()?;
            let cert =
                spectral::certify_spectrum(&g, DEFAULT_SPECTRUM_CAP.max(g.n()), cli.tolerance)?;
            CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::TupleBound(spectral::tuple_upper_bound(
                    &cert,
                    *tuple_length,
                )?)),
                Provenance::new(vec![spec]),
            )
        }
        BoundCommand::Blowup {
            input,
            target,
            set_size,
        } => {
            let (g, spec) = input.resolve()?;
            let cert =
                spectral::certify_spectrum(&g, DEFAULT_SPECTRUM_CAP.max(g.n()), cli.tolerance)?;
            CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::BlowupBound(
                    bounds::blowup_independence_bound(&cert, *target, *set_size)?,
                )),
                Provenance::new(vec![spec]),
            )
        }
        BoundCommand::Union {
            family,
            forbidden,
            final_clique,
            host,
        } => {
            let inst = RamseyInstance::new(forbidden.clone(), *final_clique, *host)?;
            let (graphs, specs) = parse_recipes(family)?;
            let certs = graphs
                .iter()
                .map(|g| {
                    spectral::certify_spectrum(g, DEFAULT_SPECTRUM_CAP.max(g.n()), cli.tolerance)
                })
                .collect::<Result<Vec<_>>>()?;
            CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::UnionBound(bounds::union_bound_report(
                    &certs, &inst,
                )?)),
                Provenance::new(specs),
            )
        }
        BoundCommand::Suggest {
            forbidden,
            alpha,
            final_clique,
        } => {
            if forbidden.len() != alpha.len() {
                return Err(Error::SizeMismatch {
                    expected: forbidden.len(),
                    got: alpha.len(),
                });
            }
            let pairs: Vec<(usize, f64)> =
                forbidden.iter().copied().zip(alpha.iter().copied()).collect();
            CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::Suggestion {
                    forbidden: forbidden.clone(),
                    alphas: alpha.clone(),
                    suggestion: bounds::suggest_parameters(&pairs, *final_clique)?,
                }),
                Provenance::new(vec![]),
            )
        }
    };
    emit_document(&doc, &cli.out)?;
    Ok(EXIT_OK)
}

fn run_audit(cli: &Cli, audit: &AuditCommand) -> Result<i32> {
    let doc = match audit {
        AuditCommand::Union {
            coloring,
            forbidden,
            final_clique,
        } => {
            let col = persist::read_coloring(coloring)?;
            let inst = RamseyInstance::new(forbidden.clone(), *final_clique, col.n())?;
            let audit = color::audit_union(&col, &inst)?;
            CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::Union {
                    instance: inst,
                    audit,
                }),
                Provenance::new(vec![format!(
                    "{COLORING_SPEC_PREFIX}{}",
                    coloring.display()
                )]),
            )
        }
        AuditCommand::Mixing { input, samples } => {
            let (g, spec) = input.resolve()?;
            let cert =
                spectral::certify_spectrum(&g, DEFAULT_SPECTRUM_CAP.max(g.n()), cli.tolerance)?;
            let seed = ensure_seed(cli.seed);
            let report = spectral::sample_mixing(&g, &cert, *samples, seed, cli.tolerance)?;
            CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::MixingSample(report)),
                Provenance::new(vec![spec]).with_master_seed(seed),
            )
        }
        AuditCommand::Traces {
            input,
            samples,
            max_len,
        } => {
            let (g, spec) = input.resolve()?;
            let cert =
                spectral::certify_spectrum(&g, DEFAULT_SPECTRUM_CAP.max(g.n()), cli.tolerance)?;
            let seed = ensure_seed(cli.seed);
            let report = spectral::sample_traces(&g, &cert, *samples, *max_len, seed)?;
            CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::TraceSample(report)),
                Provenance::new(vec![spec]).with_master_seed(seed),
            )
        }
        AuditCommand::Expectation {
            input,
            target,
            set_size,
            trials,
            forbidden,
        } => {
            let (g, spec) = input.resolve()?;
            let seed = ensure_seed(cli.seed);
            let report = bounds::sample_expectation(
                &g,
                *target,
                *set_size,
                *trials,
                seed,
                *forbidden,
                cli.budget.unwrap_or(u64::MAX),
            )?;
            CertificateDocument::new(
                DocumentBody::Audit(AuditPayload::ExpectationSample(report)),
                Provenance::new(vec![spec]).with_master_seed(seed),
            )
        }
    };
    emit_document(&doc, &cli.out)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn spec_example_invocations_parse() {
        for argv in [
            vec![
                "ramseycert",
                "certify",
                "--s",
                "3",
                "--t",
                "3",
                "--N",
                "5",
                "--family",
                "cycle:5",
                "--mode",
                "identity",
            ],
            vec!["ramseycert", "count-tuples", "--graph", "c5.g", "--t", "2"],
            vec!["ramseycert", "spectrum", "--graph", "paley13.g"],
            vec![
                "ramseycert",
                "audit",
                "expectation",
                "--family",
                "cycle:5",
                "--target",
                "8",
                "--t",
                "2",
                "--trials",
                "1000",
                "--seed",
                "7",
            ],
            vec!["ramseycert", "bound", "suggest", "--s", "3", "--alpha", "0.5", "--t", "64"],
            vec!["ramseycert", "verify", "--replay", "doc.json"],
        ] {
            Cli::try_parse_from(&argv).unwrap_or_else(|e| panic!("{argv:?}: {e}"));
        }
    }

    #[test]
    fn conflicting_flags_are_rejected() {
        assert!(Cli::try_parse_from([
            "ramseycert",
            "spectrum",
            "--graph",
            "a.g",
            "--family",
            "cycle:5"
        ])
        .is_err());
        assert!(Cli::try_parse_from([
            "ramseycert",
            "verify",
            "--replay",
            "d.json",
            "--coloring",
            "w.col"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["ramseycert", "color", "--N", "5"]).is_err());
    }

    #[test]
    fn seeds_pass_through() {
        let cli = Cli::try_parse_from([
            "ramseycert", "certify", "--seed", "42", "--s", "3", "--t", "3", "--N", "5",
            "--family", "cycle:5", "--mode", "random",
        ])
        .unwrap();
        assert_eq!(cli.seed, Some(42));
        assert_eq!(ensure_seed(Some(42)), 42);
    }
}
