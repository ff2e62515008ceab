//! Canonical labeling by individualization and equitable refinement.
//!
//! The search tree is explored depth first. Automorphisms discovered at the
//! leaves prune sibling branches that lie in a common orbit of the pointwise
//! stabilizer of the current prefix.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{graph6_encode, Graph};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 24;

type Cells = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Coarsest equitable refinement of `cells`, splitting by neighbour counts.
/// Fragments keep the ascending-count order, so the result depends only on
/// the graph up to the labels already fixed.
fn refine(adj: &[u64], cells: &mut Cells) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cell_mask(&cells[s]);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: usize| (adj[v] & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut fragments: Cells = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        fragments.push(Vec::new());
                        last = Some(k);
                    }
                    fragments.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, fragments);
                continue 'outer;
            }
        }
        return;
    }
}

fn individualize(cells: &Cells, target: usize, v: usize) -> Cells {
    let mut next = Vec::with_capacity(cells.len() + 1);
    next.extend_from_slice(&cells[..target]);
    next.push(vec![v]);
    next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
    next.extend_from_slice(&cells[target + 1..]);
    next
}

/// Adjacency rows of the graph relabelled by the discrete partition.
fn certificate(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let mut position = vec![0usize; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            let mut m = adj[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                row |= 1 << position[w];
                m &= m - 1;
            }
            row
        })
        .collect()
}

struct Leaf {
    order: Vec<usize>,
    cert: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    /// Vertices individualized along the first path, by level.
    first_path: Vec<usize>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut y = x;
    while parent[y] != root {
        let next = parent[y];
        parent[y] = root;
        y = next;
    }
    root
}

impl Search<'_> {
    /// Orbit representatives under the generators fixing `prefix` pointwise.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for g in &self.generators {
            if prefix.iter().all(|&p| g[p] == p) {
                for (v, &image) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut g = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            g[a] = b;
        }
        if g.iter().enumerate().any(|(i, &x)| i != x) {
            self.generators.push(g);
        }
    }

    /// Explores the subtree under `cells`; returns `Some(level)` when the
    /// search should unwind to `level`.
    fn explore(&mut self, cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(cells.into_iter().map(|c| c[0]).collect(), prefix);
        };
        let level = prefix.len();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            let orbits = self.orbits(prefix);
            if tried.iter().any(|&t| orbits[t] == orbits[v]) {
                continue;
            }
            tried.push(v);
            let mut child = individualize(&cells, target, v);
            refine(self.adj, &mut child);
            if self.first.is_none() {
                self.first_path.push(v);
            }
            prefix.push(v);
            let jump = self.explore(child, prefix);
            prefix.pop();
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<usize>, prefix: &[usize]) -> Option<usize> {
        let cert = certificate(self.adj, &order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf { order: order.clone(), cert: cert.clone() });
            self.best = Some(Leaf { order, cert });
            return None;
        };
        if first.cert == cert {
            let from = first.order.clone();
            self.record_automorphism(&from, &order);
            // Unwind to the deepest level shared with the first path.
            let common = prefix.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let best = self.best.as_ref().unwrap();
        match cert.cmp(&best.cert) {
            Ordering::Greater => self.best = Some(Leaf { order, cert }),
            Ordering::Equal => {
                let from = best.order.clone();
                self.record_automorphism(&from, &order);
            }
            Ordering::Less => {}
        }
        None
    }
}

/// Canonical relabeling: `result[i]` is the original vertex placed at position `i`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::TooManyVertices { n, limit: CANON_MAX_VERTICES });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(&adj, &mut cells);
    let mut search = Search { adj: &adj, first: None, best: None, generators: Vec::new(), first_path: Vec::new() };
    search.explore(cells, &mut Vec::new());
    Ok(search.best.expect("the search reaches at least one leaf").order)
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    Ok(g.relabel(&perm))
}

/// Graph6 string of the canonical representative; equal strings exactly
/// when the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String> {
    graph6_encode(&canonical_graph(g)?)
}
