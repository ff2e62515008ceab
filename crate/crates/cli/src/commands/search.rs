use std::path::{Path, PathBuf};

use clap::{ArgGroup, Subcommand, ValueEnum};
use qsum_core::enumerate::{
    laplacian_equality_class, max_s2_by_cycle_dim, max_s2_trees, min_f_by_edges, min_f_by_vertices,
    search_graph6_stream, EnumSpec, Objective, SearchReport,
};

use super::read_file;
use crate::error::{CliError, CliResult};
use crate::output::{csv_rows, interval, json, key_values, Format};
use crate::{Display, Outcome};

#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(subcommand)]
    objective: SearchCommand,
}

#[derive(Debug, Subcommand)]
enum SearchCommand {
    /// Minimum f over graphs with m edges and no isolated vertices.
    MinFEdges {
        #[arg(long)]
        m: usize,
    },
    /// Minimum f over all graphs on n vertices.
    MinFVertices {
        #[arg(long)]
        n: usize,
    },
    /// Maximum S2 over connected graphs on n vertices with cycle space dimension c.
    MaxS2Cycledim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    /// Maximum S2 over trees on n vertices.
    MaxS2Trees {
        #[arg(long)]
        n: usize,
    },
    /// Graphs with Laplacian mu1 + mu2 = e + 3, by vertex or edge count.
    #[command(group(ArgGroup::new("size").required(true).args(["n", "m"])))]
    LaplacianEquality {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        connected: bool,
    },
    /// Search a graph6 stream read from a file (`-` for standard input).
    Stream {
        #[arg(long)]
        graph6: PathBuf,
        #[arg(long, value_enum, default_value_t = StreamObjective::MinF)]
        objective: StreamObjective,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StreamObjective {
    MinF,
    MaxS2,
    LaplacianEquality,
}

fn read_stream(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|source| CliError::Io { path: "-".into(), source })
    } else {
        read_file(path)
    }
}

fn execute(cmd: SearchCommand) -> CliResult<SearchReport> {
    Ok(match cmd {
        SearchCommand::MinFEdges { m } => min_f_by_edges(m)?,
        SearchCommand::MinFVertices { n } => min_f_by_vertices(n)?,
        SearchCommand::MaxS2Cycledim { n, c } => max_s2_by_cycle_dim(n, c)?,
        SearchCommand::MaxS2Trees { n } => max_s2_trees(n)?,
        SearchCommand::LaplacianEquality { n, m, connected } => {
            let mut spec = match (n, m) {
                (Some(n), None) => EnumSpec::vertices(n),
                (None, Some(m)) => EnumSpec::edges(m),
                _ => return Err(CliError::Usage("give exactly one of --n and --m".into())),
            };
            if connected {
                spec = spec.connected();
            }
            laplacian_equality_class(&spec)?
        }
        SearchCommand::Stream { graph6, objective } => {
            let text = read_stream(&graph6)?;
            let objective = match objective {
                StreamObjective::MinF => Objective::MinF,
                StreamObjective::MaxS2 => Objective::MaxS2,
                StreamObjective::LaplacianEquality => Objective::LaplacianEquality,
            };
            search_graph6_stream(&text, objective)
                .map_err(|source| CliError::Input { path: graph6.display().to_string(), source })?
        }
    })
}

fn render_table(r: &SearchReport, p: usize) -> String {
    let mut kv = vec![
        ("objective".to_string(), r.objective.clone()),
        ("examined".to_string(), r.examined.to_string()),
        ("argext".to_string(), r.argext.join(" ")),
        ("unique".to_string(), r.unique.to_string()),
        ("value".to_string(), interval(&r.ext_value, p)),
    ];
    match &r.runner_up {
        Some(ru) => kv.push(("runner-up".to_string(), format!("{} {}", ru.graph6, interval(&ru.value, p)))),
        None => kv.push(("runner-up".to_string(), "none".to_string())),
    }
    for note in &r.notes {
        kv.push(("note".to_string(), note.clone()));
    }
    key_values(&kv)
}

fn render_csv(r: &SearchReport, p: usize) -> CliResult<String> {
    let rows: Vec<Vec<String>> = r
        .argext
        .iter()
        .map(|g| {
            let (lo, hi) = r.ext_value.to_f64();
            vec![
                r.objective.clone(),
                g.clone(),
                crate::output::fixed(lo, p),
                crate::output::fixed(hi, p),
                r.unique.to_string(),
                r.examined.to_string(),
            ]
        })
        .collect();
    csv_rows(&["objective", "graph6", "value_lo", "value_hi", "unique", "examined"], &rows)
}

pub fn run(args: Args, display: Display) -> CliResult<Outcome> {
    let report = execute(args.objective)?;
    let stdout = match display.format {
        Format::Table => render_table(&report, display.precision),
        Format::Json => json(&report),
        Format::Csv => render_csv(&report, display.precision)?,
    };
    Ok(Outcome::ok(stdout))
}
