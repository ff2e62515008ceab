use std::path::PathBuf;

use clap::ArgGroup;
use qsum_core::exact::pow10_inv;
use qsum_core::graph::{graph6_decode, graph6_encode, parse_edge_list, parse_graph6_lines};
use qsum_core::{certify_f, spectrum, ExactSpectrum, FamilySpec, Graph, MatrixKind, RationalInterval};
use serde::Serialize;

use super::read_file;
use crate::error::{CliError, CliResult};
use crate::output::{csv_rows, fixed, interval, json, key_values, Format};
use crate::{Display, Outcome};

#[derive(Debug, clap::Args)]
#[command(group(ArgGroup::new("input").required(true).args(["g6", "file", "family"])))]
pub struct Args {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,

    /// File holding graph6 lines or an edge list (`n m` header, `u v` lines).
    #[arg(long)]
    file: Option<PathBuf>,

    /// Named family, e.g. `star-plus:3`, `G:2,1`, `double-star:2,2`.
    #[arg(long)]
    family: Option<String>,

    /// Matrix: `Q` (signless Laplacian) or `L` (Laplacian).
    #[arg(long, default_value = "Q")]
    kind: MatrixKind,

    /// Add exact rational brackets for every eigenvalue, S2 and f.
    #[arg(long)]
    certify: bool,
}

#[derive(Serialize)]
struct Certificate {
    eigenvalues: Vec<RationalInterval>,
    s2: Option<RationalInterval>,
    f: Option<RationalInterval>,
}

#[derive(Serialize)]
struct SpectrumRow {
    input: String,
    graph6: Option<String>,
    kind: String,
    n: usize,
    e: usize,
    c: usize,
    omega: usize,
    eigenvalues: Vec<f64>,
    s2: Option<f64>,
    f: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
}

fn load(args: &Args) -> CliResult<Vec<(String, Graph)>> {
    if let Some(s) = &args.g6 {
        let g = graph6_decode(s).map_err(|source| CliError::Input { path: format!("--g6 {s}"), source })?;
        return Ok(vec![(s.clone(), g)]);
    }
    if let Some(spec) = &args.family {
        let fam: FamilySpec = spec.parse()?;
        return Ok(vec![(fam.to_string(), fam.build()?)]);
    }
    let path = args.file.as_ref().expect("clap enforces one input");
    let text = read_file(path)?;
    let name = path.display().to_string();
    let wrap = |source| CliError::Input { path: name.clone(), source };
    if looks_like_edge_list(&text) {
        Ok(vec![(name.clone(), parse_edge_list(&text).map_err(wrap)?)])
    } else {
        let graphs = parse_graph6_lines(&text).map_err(wrap)?;
        let labels = text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from);
        Ok(labels.zip(graphs).collect())
    }
}

/// Edge lists open with an `n m` header of two integers.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let fields: Vec<_> = l.split_whitespace().collect();
            fields.len() == 2 && fields.iter().all(|f| f.chars().all(|c| c.is_ascii_digit()))
        })
}

fn analyse(input: String, g: &Graph, kind: MatrixKind, certify: bool, precision: usize) -> CliResult<SpectrumRow> {
    let sp = spectrum(g, kind)?;
    let n = g.n();
    let s2 = (n >= 2).then(|| sp.top_sum(2));
    let f = if n >= 2 { Some(qsum_core::f_value(g)?) } else { None };
    let certificate = if certify {
        let width = pow10_inv(precision as u32 + 2);
        let mut exact = ExactSpectrum::of_graph(g, kind)?;
        let eigenvalues = (0..n)
            .map(|i| {
                let mut r = exact.eigenvalue(i).expect("index below the order");
                r.refine(&width);
                r.interval().clone()
            })
            .collect();
        let s2 = if n >= 2 { Some(exact.top_sum_interval(2, &width)?) } else { None };
        let f = if n >= 2 { Some(certify_f(g, &width)?) } else { None };
        Some(Certificate { eigenvalues, s2, f })
    } else {
        None
    };
    Ok(SpectrumRow {
        input,
        graph6: graph6_encode(g).ok(),
        kind: kind.to_string(),
        n,
        e: g.edge_count(),
        c: g.cycle_space_dim(),
        omega: g.components().omega(),
        eigenvalues: sp.values.clone(),
        s2,
        f,
        certificate,
    })
}

fn opt(x: Option<f64>, p: usize) -> String {
    x.map_or_else(|| "n/a".to_string(), |v| fixed(v, p))
}

fn render_table(rows: &[SpectrumRow], p: usize) -> String {
    let mut out = String::new();
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let eig: Vec<String> = r.eigenvalues.iter().map(|&x| fixed(x, p)).collect();
        let mut kv = vec![
            ("graph".to_string(), r.input.clone()),
            ("matrix".to_string(), r.kind.clone()),
            ("n".to_string(), r.n.to_string()),
            ("e".to_string(), r.e.to_string()),
            ("c".to_string(), r.c.to_string()),
            ("omega".to_string(), r.omega.to_string()),
            ("eigenvalues".to_string(), eig.join(" ")),
            ("S2".to_string(), opt(r.s2, p)),
            ("f (from Q)".to_string(), opt(r.f, p)),
        ];
        if let Some(c) = &r.certificate {
            for (j, iv) in c.eigenvalues.iter().enumerate() {
                kv.push((format!("eigenvalue {}", j + 1), interval(iv, p)));
            }
            if let Some(s2) = &c.s2 {
                kv.push(("S2 certified".to_string(), interval(s2, p)));
            }
            if let Some(f) = &c.f {
                kv.push(("f certified".to_string(), interval(f, p)));
            }
        }
        out.push_str(&key_values(&kv));
    }
    out
}

fn render_csv(rows: &[SpectrumRow], p: usize) -> CliResult<String> {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let eig: Vec<String> = r.eigenvalues.iter().map(|&x| fixed(x, p)).collect();
            vec![
                r.input.clone(),
                r.kind.clone(),
                r.n.to_string(),
                r.e.to_string(),
                r.c.to_string(),
                r.omega.to_string(),
                eig.join(" "),
                opt(r.s2, p),
                opt(r.f, p),
            ]
        })
        .collect();
    csv_rows(&["graph", "kind", "n", "e", "c", "omega", "eigenvalues", "s2", "f"], &body)
}

pub fn run(args: Args, display: Display) -> CliResult<Outcome> {
    let p = display.precision;
    let rows = load(&args)?
        .into_iter()
        .map(|(label, g)| analyse(label, &g, args.kind, args.certify, p))
        .collect::<CliResult<Vec<_>>>()?;
    let stdout = match display.format {
        Format::Table => render_table(&rows, p),
        Format::Json => json(&rows),
        Format::Csv => render_csv(&rows, p)?,
    };
    Ok(Outcome::ok(stdout))
}
