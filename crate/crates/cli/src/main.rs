//! `odcodes`: batch front end for order-domain presentations and the
//! evaluation codes built on them.
//!
//! Exit status: 0 success, 1 I/O, parse or resource error, 2 a checked
//! condition failed, 3 exhaustive distance search hit its ceiling.

mod commands;
mod refs;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Ctx, Monomials, Outcome};
use odcodes::codes::DistanceMethod;
use odcodes::Limits;
use refs::VarietyRef;
use report::{render_table, RunConfig, RunReport};

#[derive(Parser, Debug)]
#[command(
    name = "odcodes",
    version,
    about = "Order domains, Groebner criteria and evaluation codes over finite fields"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for every randomized step.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Most candidate tuples scanned during point enumeration.
    #[arg(long, global = true)]
    max_points: Option<u64>,
    /// Most messages visited by exhaustive distance search.
    #[arg(long, global = true)]
    max_codewords: Option<u64>,
    /// Most S-pairs processed by Buchberger's algorithm.
    #[arg(long, global = true)]
    gb_pair_limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Distance {
    Exhaustive,
    Bound,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Hermitian,
    Grassmann,
    Orbits,
}

/// A presentation given as a JSON file or as a variety reference.
#[derive(Args, Debug)]
struct Source {
    /// Presentation JSON file.
    file: Option<PathBuf>,
    #[arg(long)]
    variety: Option<VarietyRef>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe GF(p^m): modulus, primitive element, Hermitian constants.
    Field { p: u32, m: u32 },
    /// Build a variety's presentation and count its affine points.
    Variety {
        reference: VarietyRef,
        /// Write the presentation as JSON.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Check the Groebner-basis criterion, optionally probing the order axioms.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        bound: Option<u32>,
        /// Random trials for the axiom probe (0 disables it).
        #[arg(long, default_value_t = 0)]
        probe: usize,
    },
    /// Reduced grevlex basis of the toric ideal of the weight matrix.
    Toric {
        #[command(flatten)]
        source: Source,
    },
    /// Deform a verified presentation to its toric ideal.
    Deform {
        #[command(flatten)]
        source: Source,
        /// Comma-separated deformation weight; searched for when absent.
        #[arg(long, value_delimiter = ',')]
        omega: Option<Vec<u64>>,
    },
    /// Build an evaluation code and measure its minimum distance.
    Code {
        #[arg(long)]
        variety: VarietyRef,
        /// Use every standard monomial of degree at most A.
        #[arg(long, conflicts_with = "ell")]
        a: Option<u32>,
        /// Use the first ELL standard monomials.
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long, value_enum, default_value_t = Distance::Exhaustive)]
        distance: Distance,
        /// Random codewords sampled in bound mode.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Write the generator matrix, one column per line.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Rerun a published table and compare cell by cell.
    Reproduce {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, default_value_t = 4)]
        r_max: u32,
    },
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(v) = cli.max_points {
        l.max_points = v;
    }
    if let Some(v) = cli.max_codewords {
        l.max_codewords = v;
    }
    if let Some(v) = cli.gb_pair_limit {
        l.gb_pair_limit = v;
    }
    l
}

fn run(cli: &Cli, ctx: &Ctx) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Field { p, m } => commands::field(*p, *m, &ctx.limits),
        Command::Variety { reference, save } => commands::variety(*reference, save.as_deref(), ctx),
        Command::Verify { source, bound, probe } => {
            let p = commands::load_presentation(source.file.as_deref(), source.variety, &ctx.limits)?;
            commands::verify(&p, *bound, *probe, ctx)
        }
        Command::Toric { source } => {
            let p = commands::load_presentation(source.file.as_deref(), source.variety, &ctx.limits)?;
            commands::toric(&p, ctx)
        }
        Command::Deform { source, omega } => {
            let p = commands::load_presentation(source.file.as_deref(), source.variety, &ctx.limits)?;
            commands::deform(p, omega.clone(), ctx)
        }
        Command::Code { variety, a, ell, distance, samples, dump } => {
            let which = match (a, ell) {
                (Some(a), None) => Monomials::DegreeAtMost(*a),
                (None, Some(l)) => Monomials::First(*l),
                _ => anyhow::bail!("give one of --a or --ell"),
            };
            let method = match distance {
                Distance::Exhaustive => DistanceMethod::Exhaustive,
                Distance::Bound => DistanceMethod::Bound,
            };
            commands::code(*variety, which, method, *samples, dump.as_ref(), ctx)
        }
        Command::Reproduce { family, q, r_max } => {
            let name = match family {
                Family::Hermitian => "hermitian",
                Family::Grassmann => "grassmann",
                Family::Orbits => "orbits",
            };
            commands::reproduce(name, *q, *r_max, ctx)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let ctx = Ctx { seed: cli.seed, limits: limits(&cli) };
    let start = Instant::now();
    let outcome = match run(&cli, &ctx) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let (code, results) = match outcome {
        Outcome::Ok(v) => (0, v),
        Outcome::Failed(v) => (2, v),
        Outcome::Ceiling(v) => (3, v),
    };
    let report = RunReport {
        command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
        config: RunConfig { seed: cli.seed, threads: rayon::current_num_threads(), limits: ctx.limits },
        results,
        duration_ms: start.elapsed().as_millis(),
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        Format::Table => print!("{}", render_table(&report)),
    }
    ExitCode::from(code)
}
