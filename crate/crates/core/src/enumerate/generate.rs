use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{graph6_decode, Graph};

pub const MAX_ENUM_VERTICES: usize = 10;
pub const MAX_ENUM_EDGES: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumMode {
    ByVertices(usize),
    ByEdges(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub connected: bool,
    pub no_isolated: bool,
    pub trees_only: bool,
    pub cycle_dim: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub mode: EnumMode,
    pub filters: Filters,
}

impl EnumSpec {
    pub fn vertices(n: usize) -> Self {
        EnumSpec { mode: EnumMode::ByVertices(n), filters: Filters::default() }
    }

    /// Edge-indexed classes never contain isolated vertices.
    pub fn edges(m: usize) -> Self {
        EnumSpec { mode: EnumMode::ByEdges(m), filters: Filters { no_isolated: true, ..Filters::default() } }
    }

    pub fn connected(mut self) -> Self {
        self.filters.connected = true;
        self
    }

    pub fn trees(mut self) -> Self {
        self.filters.trees_only = true;
        self
    }

    pub fn no_isolated(mut self) -> Self {
        self.filters.no_isolated = true;
        self
    }

    pub fn cycle_dim(mut self, c: usize) -> Self {
        self.filters.cycle_dim = Some(c);
        self
    }

    pub fn validate(&self) -> Result<()> {
        match self.mode {
            EnumMode::ByVertices(n) if n > MAX_ENUM_VERTICES => {
                Err(Error::Infeasible(format!("n = {n} exceeds the enumeration limit {MAX_ENUM_VERTICES}")))
            }
            EnumMode::ByEdges(m) if m > MAX_ENUM_EDGES => {
                Err(Error::Infeasible(format!("m = {m} exceeds the enumeration limit {MAX_ENUM_EDGES}")))
            }
            EnumMode::ByEdges(_) if !self.filters.no_isolated => Err(Error::Infeasible(
                "edge-indexed enumeration requires excluding isolated vertices".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let f = &self.filters;
        (!f.connected || g.is_connected())
            && (!f.no_isolated || g.isolated_count() == 0)
            && (!f.trees_only || g.is_tree())
            && f.cycle_dim.is_none_or(|c| g.cycle_space_dim() == c)
    }

    /// Connected and tree filters survive the augmentation steps below, so
    /// they may prune intermediate layers.
    fn hereditary(&self) -> Growth {
        if self.filters.trees_only {
            Growth::Trees
        } else if self.filters.connected {
            Growth::Connected
        } else {
            Growth::All
        }
    }
}

impl fmt::Display for EnumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            EnumMode::ByVertices(n) => write!(f, "n={n}")?,
            EnumMode::ByEdges(m) => write!(f, "m={m}")?,
        }
        let flt = &self.filters;
        for (on, name) in [(flt.connected, "connected"), (flt.no_isolated, "no-isolated"), (flt.trees_only, "trees")] {
            if on {
                write!(f, ",{name}")?;
            }
        }
        if let Some(c) = flt.cycle_dim {
            write!(f, ",c={c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
enum Growth {
    All,
    Connected,
    Trees,
}

/// One member of an isomorphism class together with its canonical string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRep {
    pub canonical: String,
    pub graph: Graph,
}

type Layer = BTreeMap<String, Graph>;

fn collect_layer(candidates: Vec<Graph>) -> Result<Layer> {
    let keyed: Vec<(String, Graph)> = candidates
        .into_par_iter()
        .map(|g| canonical_form(&g).map(|c| (c, g)))
        .collect::<Result<_>>()?;
    Ok(keyed.into_iter().collect())
}

/// Adds a vertex joined to each admissible neighbour set.
fn grow_vertex(layer: &Layer, growth: Growth) -> Result<Layer> {
    let parents: Vec<&Graph> = layer.values().collect();
    let candidates: Vec<Graph> = parents
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.n();
            let subsets: Box<dyn Iterator<Item = u64>> = match growth {
                Growth::All => Box::new(0..1u64 << n),
                Growth::Connected if n == 0 => Box::new(std::iter::once(0)),
                Growth::Connected => Box::new(1..1u64 << n),
                Growth::Trees if n == 0 => Box::new(std::iter::once(0)),
                Growth::Trees => Box::new((0..n).map(|v| 1u64 << v)),
            };
            subsets.map(move |mask| {
                let mut h = g.with_isolated(1).expect("within vertex limit");
                for v in 0..n {
                    if mask >> v & 1 == 1 {
                        h = h.with_edge(v, n).expect("fresh edge");
                    }
                }
                h
            })
        })
        .collect();
    collect_layer(candidates)
}

/// Adds one edge: between two present vertices, from a present vertex to a
/// new one, or as a new two-vertex component.
fn grow_edge(layer: &Layer, growth: Growth) -> Result<Layer> {
    let parents: Vec<&Graph> = layer.values().collect();
    let candidates: Vec<Graph> = parents
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.n();
            let mut out = Vec::new();
            if !matches!(growth, Growth::Trees) {
                for u in 0..n {
                    for v in u + 1..n {
                        if !g.has_edge(u, v) {
                            out.push(g.with_edge(u, v).expect("fresh edge"));
                        }
                    }
                }
            }
            for u in 0..n {
                out.push(g.with_isolated(1).and_then(|h| h.with_edge(u, n)).expect("within vertex limit"));
            }
            if n == 0 || matches!(growth, Growth::All) {
                out.push(g.with_isolated(2).and_then(|h| h.with_edge(n, n + 1)).expect("within vertex limit"));
            }
            out
        })
        .collect();
    collect_layer(candidates)
}

/// One representative per isomorphism class satisfying the filters, in
/// ascending order of canonical string.
pub fn enumerate_graphs(spec: &EnumSpec) -> Result<Vec<ClassRep>> {
    spec.validate()?;
    let growth = spec.hereditary();
    let mut layer: Layer = BTreeMap::new();
    layer.insert(canonical_form(&Graph::empty(0)?)?, Graph::empty(0)?);
    match spec.mode {
        EnumMode::ByVertices(n) => {
            for _ in 0..n {
                layer = grow_vertex(&layer, growth)?;
            }
        }
        EnumMode::ByEdges(m) => {
            for _ in 0..m {
                layer = grow_edge(&layer, growth)?;
            }
        }
    }
    Ok(layer
        .into_iter()
        .filter(|(_, g)| spec.accepts(g))
        .map(|(canonical, graph)| ClassRep { canonical, graph })
        .collect())
}

/// Canonicalizes and deduplicates an external graph stream.
pub fn classes_of(graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<ClassRep>> {
    let layer = collect_layer(graphs.into_iter().collect())?;
    Ok(layer.into_iter().map(|(canonical, graph)| ClassRep { canonical, graph }).collect())
}

/// Parses graph6 lines (blank lines skipped) into class representatives.
pub fn classes_from_graph6(text: &str) -> Result<Vec<ClassRep>> {
    let graphs = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(graph6_decode)
        .collect::<Result<Vec<_>>>()?;
    classes_of(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, star};
    use std::collections::BTreeSet;

    fn count(spec: EnumSpec) -> usize {
        enumerate_graphs(&spec).unwrap().len()
    }

    #[test]
    fn vertex_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| count(EnumSpec::vertices(n))).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        assert_eq!(count(EnumSpec::vertices(7)), 1044);
    }

    #[test]
    fn connected_and_tree_counts() {
        let connected: Vec<usize> = (1..=7).map(|n| count(EnumSpec::vertices(n).connected())).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
        let trees: Vec<usize> = (1..=10).map(|n| count(EnumSpec::vertices(n).trees())).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn edge_counts() {
        let counts: Vec<usize> = (0..=7).map(|m| count(EnumSpec::edges(m))).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 11, 26, 68, 177]);
        let connected: Vec<usize> = (1..=6).map(|m| count(EnumSpec::edges(m).connected())).collect();
        assert_eq!(connected, vec![1, 1, 3, 5, 12, 30]);
    }

    #[test]
    fn three_edge_graphs() {
        let got: BTreeSet<String> = enumerate_graphs(&EnumSpec::edges(3)).unwrap().into_iter().map(|c| c.canonical).collect();
        let k2 = complete(2).unwrap();
        let want: BTreeSet<String> = [
            complete(3).unwrap(),
            path(4).unwrap(),
            star(3).unwrap(),
            path(3).unwrap().disjoint_union(&k2).unwrap(),
            k2.disjoint_union(&k2).unwrap().disjoint_union(&k2).unwrap(),
        ]
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn filters_and_order() {
        let reps = enumerate_graphs(&EnumSpec::vertices(6).connected().cycle_dim(1)).unwrap();
        assert!(reps.iter().all(|r| r.graph.is_connected() && r.graph.cycle_space_dim() == 1));
        assert!(reps.windows(2).all(|w| w[0].canonical < w[1].canonical));
        assert_eq!(reps.len(), 13);
        let again = enumerate_graphs(&EnumSpec::vertices(6).connected().cycle_dim(1)).unwrap();
        assert_eq!(reps, again);
    }

    #[test]
    fn infeasible_specs() {
        assert!(enumerate_graphs(&EnumSpec::vertices(11)).is_err());
        assert!(enumerate_graphs(&EnumSpec::edges(10)).is_err());
        let mut spec = EnumSpec::edges(3);
        spec.filters.no_isolated = false;
        assert!(matches!(enumerate_graphs(&spec), Err(Error::Infeasible(_))));
    }

    #[test]
    fn external_streams_dedup() {
        let reps = classes_from_graph6("Ch\nCY\n\nBw\n").unwrap();
        // "Ch" and "CY" are both P4
        assert_eq!(reps.len(), 2);
    }
}
