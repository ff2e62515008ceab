//! `qsum`: spectra, exhaustive searches and claim verification for sums of
//! the largest signless Laplacian eigenvalues.

mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{enumerate, search, spectrum, verify};
use error::CliResult;
use output::Format;

#[derive(Debug, Parser)]
#[command(name = "qsum", version, about = "Sums of the largest signless Laplacian eigenvalues")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Decimal digits shown for floating-point values.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=30))]
    precision: u8,

    /// Worker threads for searches and suites (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    parallelism: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum, S2 and f of a graph.
    Spectrum(spectrum::Args),
    /// Exhaustive extremal searches.
    Search(search::Args),
    /// Run verification suites.
    Verify(verify::Args),
    /// List non-isomorphic graphs as canonical graph6.
    Enumerate(enumerate::Args),
}

/// What a command printed and how the process should exit.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

#[derive(Clone, Copy)]
pub struct Display {
    pub format: Format,
    pub precision: usize,
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let display = Display { format: cli.format, precision: cli.precision as usize };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.parallelism {
        pool = pool.num_threads(k as usize);
    }
    let pool = pool.build()?;
    pool.install(|| match cli.command {
        Command::Spectrum(a) => spectrum::run(a, display),
        Command::Search(a) => search::run(a, display),
        Command::Verify(a) => verify::run(a, display),
        Command::Enumerate(a) => enumerate::run(a, display),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
