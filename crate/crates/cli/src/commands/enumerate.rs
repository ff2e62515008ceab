use clap::ArgGroup;
use qsum_core::enumerate::{enumerate_graphs, EnumSpec};

use crate::error::CliResult;
use crate::output::{csv_rows, json, Format};
use crate::{Display, Outcome};

#[derive(Debug, clap::Args)]
#[command(group(ArgGroup::new("size").required(true).args(["vertices", "edges"])))]
pub struct Args {
    /// Graphs on exactly this many vertices.
    #[arg(long)]
    vertices: Option<usize>,

    /// Graphs with exactly this many edges (isolated vertices excluded).
    #[arg(long)]
    edges: Option<usize>,

    #[arg(long)]
    connected: bool,

    #[arg(long)]
    no_isolated: bool,

    #[arg(long)]
    trees: bool,

    /// Keep graphs with this cycle space dimension e - n + omega.
    #[arg(long)]
    cycle_dim: Option<usize>,
}

fn spec_of(args: &Args) -> EnumSpec {
    let mut spec = match (args.vertices, args.edges) {
        (Some(n), _) => EnumSpec::vertices(n),
        (None, Some(m)) => EnumSpec::edges(m),
        (None, None) => unreachable!("clap requires a size"),
    };
    if args.connected {
        spec = spec.connected();
    }
    if args.no_isolated {
        spec = spec.no_isolated();
    }
    if args.trees {
        spec = spec.trees();
    }
    if let Some(c) = args.cycle_dim {
        spec = spec.cycle_dim(c);
    }
    spec
}

pub fn run(args: Args, display: Display) -> CliResult<Outcome> {
    let reps = enumerate_graphs(&spec_of(&args))?;
    let names: Vec<String> = reps.into_iter().map(|r| r.canonical).collect();
    let stdout = match display.format {
        Format::Table => names.iter().map(|s| format!("{s}\n")).collect(),
        Format::Json => json(&names),
        Format::Csv => csv_rows(&["graph6"], &names.iter().map(|s| vec![s.clone()]).collect::<Vec<_>>())?,
    };
    Ok(Outcome::ok(stdout))
}
