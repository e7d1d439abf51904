//! Command-line front end: parse JSON documents, dispatch one operation,
//! emit one deterministic output envelope.
//!
//! Exit codes: 0 success or passing check, 1 failing check (the envelope
//! carries the counterexample), 2 input or validation error, 3 enumeration
//! or closure budget exceeded.

mod envelope;
mod ops;

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deltakit::doc::to_json_string;
use deltakit::error::Error;
use deltakit::DEFAULT_ENUM_BUDGET;

use envelope::{Envelope, Invocation, CLI_SCHEMA};
use ops::Handled;

#[derive(Parser)]
#[command(
    name = "deltakit",
    version,
    about = "Finite simplicial toolkit: deterministic JSON artifacts and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write the output envelope to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Record wall-clock duration in the envelope (not byte-stable)
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Strict,
    Pi0,
    NerveEquivalence,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Strict => "strict",
            Mode::Pi0 => "pi0",
            Mode::NerveEquivalence => "nerve-equivalence",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the monotone maps [n] -> [m]
    DeltaHom {
        n: usize,
        m: usize,
        /// Enumeration step budget
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
    /// List the automorphisms of the simplex category up to a degree
    DeltaAut {
        max_degree: usize,
        /// Enumeration step budget
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Nerve of a finite category as a truncated complex
    Nerve {
        /// Category document (JSON)
        input: PathBuf,
        /// Truncation degree of the output complex
        #[arg(long, default_value_t = 2)]
        truncation: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Segal check for a complex (strict) or a simplicial space (strict or pi0)
    SegalCheck {
        /// Simplicial set or space document (JSON)
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        #[command(flatten)]
        output: Output,
    },
    /// Completeness check for a simplicial space (a complex is lifted discretely)
    CompleteCheck {
        /// Simplicial set or space document (JSON)
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Pi0)]
        mode: Mode,
        #[command(flatten)]
        output: Output,
    },
    /// Realization of a simplicial space as a single complex
    Realize {
        /// Simplicial space document (JSON)
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Diagonal of a simplicial space
    Diagonal {
        /// Simplicial space document (JSON)
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Nerve of the realization unit, as a simplicial space
    CNerve {
        /// Simplicial space document (JSON)
        input: PathBuf,
        /// Outer truncation of the output
        #[arg(long, default_value_t = 2)]
        outer: usize,
        /// Enumeration step budget
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Classification diagram of a relative category
    Classify {
        /// Relative category document (JSON, with a weq list)
        input: PathBuf,
        /// Outer truncation of the output
        #[arg(long, default_value_t = 2)]
        outer: usize,
        /// Inner truncation of the output levels
        #[arg(long, default_value_t = 2)]
        truncation: usize,
        /// Enumeration step budget
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Run the axiom harness over the seeded default corpus
    AxiomCheck {
        /// Run every check (the default)
        #[arg(long)]
        all: bool,
        /// Keep only reports for this check name
        #[arg(long, conflicts_with = "all", value_name = "NAME")]
        check: Option<String>,
        /// Corpus seed
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Enumeration step budget
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Search for interval-shaped categories within size bounds
    IntervalSearch {
        max_objects: usize,
        max_arrows: usize,
        /// Enumeration step budget
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Emit the seeded corpus as category documents
    CorpusGen {
        /// Corpus seed
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Validate a document, report, batch, or output envelope
    Validate {
        /// Any JSON document this tool reads or writes
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let started = Instant::now();
    let (invocation, output, outcome) = dispatch(cli.command);
    finish(invocation, &output, outcome, started)
}

fn dispatch(command: Command) -> (Invocation, Output, Result<Handled, Error>) {
    match command {
        Command::DeltaHom { n, m, budget, output } => (
            Invocation::new("delta-hom", vec![n.to_string(), m.to_string()]).budget(budget),
            output,
            ops::delta_hom(n, m, budget),
        ),
        Command::DeltaAut { max_degree, budget, output } => (
            Invocation::new("delta-aut", vec![max_degree.to_string()]).budget(budget),
            output,
            ops::delta_aut(max_degree, budget),
        ),
        Command::Nerve { input, truncation, output } => (
            Invocation::new("nerve", vec![display(&input)]).truncation(truncation),
            output,
            ops::nerve_cmd(&input, truncation),
        ),
        Command::SegalCheck { input, mode, output } => (
            Invocation::new("segal-check", vec![display(&input)]).mode(mode.as_str()),
            output,
            ops::segal_check(&input, mode.as_str()),
        ),
        Command::CompleteCheck { input, mode, output } => (
            Invocation::new("complete-check", vec![display(&input)]).mode(mode.as_str()),
            output,
            ops::complete_check(&input, mode.as_str()),
        ),
        Command::Realize { input, output } => (
            Invocation::new("realize", vec![display(&input)]),
            output,
            ops::realize_cmd(&input),
        ),
        Command::Diagonal { input, output } => (
            Invocation::new("diagonal", vec![display(&input)]),
            output,
            ops::diagonal_cmd(&input),
        ),
        Command::CNerve { input, outer, budget, output } => (
            Invocation::new("c-nerve", vec![display(&input)]).outer(outer).budget(budget),
            output,
            ops::c_nerve_cmd(&input, outer, budget),
        ),
        Command::Classify { input, outer, truncation, budget, output } => (
            Invocation::new("classify", vec![display(&input)])
                .outer(outer)
                .truncation(truncation)
                .budget(budget),
            output,
            ops::classify_cmd(&input, outer, truncation, budget),
        ),
        Command::AxiomCheck { all: _, check, seed, budget, output } => (
            Invocation::new("axiom-check", check.iter().cloned().collect())
                .seed(seed)
                .budget(budget),
            output,
            ops::axiom_check(seed, budget, check.as_deref()),
        ),
        Command::IntervalSearch { max_objects, max_arrows, budget, output } => (
            Invocation::new(
                "interval-search",
                vec![max_objects.to_string(), max_arrows.to_string()],
            )
            .budget(budget),
            output,
            ops::interval_search(max_objects, max_arrows, budget),
        ),
        Command::CorpusGen { seed, output } => (
            Invocation::new("corpus-gen", Vec::new()).seed(seed),
            output,
            ops::corpus_gen(seed),
        ),
        Command::Validate { input, output } => (
            Invocation::new("validate", vec![display(&input)]),
            output,
            ops::validate_cmd(&input),
        ),
    }
}

fn display(path: &PathBuf) -> String {
    path.display().to_string()
}

fn finish(
    mut invocation: Invocation,
    output: &Output,
    outcome: Result<Handled, Error>,
    started: Instant,
) -> i32 {
    match outcome {
        Ok(handled) => {
            if output.timings {
                invocation.elapsed_ms = Some(started.elapsed().as_millis() as u64);
            }
            let envelope =
                Envelope { schema: CLI_SCHEMA.to_string(), invocation, result: handled.result };
            let text = to_json_string(&envelope);
            if let Some(path) = &output.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                print!("{text}");
            }
            i32::from(handled.failed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded(_) | Error::NonTerminating(_) => 3,
                _ => 2,
            }
        }
    }
}
