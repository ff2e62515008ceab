//! Plain-text graph input: edge lists and graph6 streams.

use super::{graph6_decode, Graph};
use crate::error::{Error, Result};

/// Parses `"n m"` followed by `m` lines of `"u v"`. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<_> = l.split_whitespace().collect();
        let bad = |reason: &str| Error::EdgeList { line, reason: reason.to_string() };
        match fields.as_slice() {
            [a, b] => Ok((
                a.parse().map_err(|_| bad("expected a non-negative integer"))?,
                b.parse().map_err(|_| bad("expected a non-negative integer"))?,
            )),
            _ => Err(bad("expected two fields")),
        }
    };
    let (hline, header) = lines
        .next()
        .ok_or(Error::EdgeList { line: 1, reason: "missing `n m` header".into() })?;
    let (n, m) = pair(hline, header)?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u == v || u >= n || v >= n {
            return Err(Error::EdgeList {
                line,
                reason: format!("invalid edge ({u}, {v}) for {n} vertices"),
            });
        }
        pairs.push((u, v));
        last_line = line;
    }
    if pairs.len() != m {
        return Err(Error::EdgeList {
            line: last_line,
            reason: format!("header declares {m} edges, found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(n, &pairs)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One graph6 string per non-empty line. Errors carry the line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            graph6_decode(l.trim()).map_err(|e| Error::EdgeList {
                line: i + 1,
                reason: e.to_string(),
            })
        })
        .collect()
}
