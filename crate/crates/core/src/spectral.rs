//! Graph matrices, eigenvalue sums `S_k`, the deficiency `f`, equitable
//! quotients, and the closed forms attached to the star-plus family.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, ExactSpectrum, IntMatrix, IntPolynomial, charpoly_int};
use crate::graph::Graph;
use crate::linalg::{eig_sym, Matrix, Spectrum, SymMatrix};

/// Float margin under which orderings and bounds are handed to the exact certifier.
pub const NEAR_TIE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    /// `L = D - A`
    Laplacian,
    /// `Q = D + A`
    Signless,
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" | "laplacian" => Ok(MatrixKind::Laplacian),
            "Q" | "q" | "signless" => Ok(MatrixKind::Signless),
            _ => Err(Error::InvalidParameter(format!("unknown matrix kind `{s}` (use L or Q)"))),
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::Laplacian => "L",
            MatrixKind::Signless => "Q",
        })
    }
}

pub fn matrix_of(g: &Graph, kind: MatrixKind) -> SymMatrix {
    let sign = match kind {
        MatrixKind::Laplacian => -1.0,
        MatrixKind::Signless => 1.0,
    };
    let n = g.n();
    let mut m = Matrix::zeros(n, n);
    for v in 0..n {
        m[(v, v)] = g.degree(v) as f64;
    }
    for &(u, v) in g.edges() {
        m[(u, v)] = sign;
        m[(v, u)] = sign;
    }
    SymMatrix::new(m).expect("graph matrices are symmetric")
}

/// Matrix of the graph on `0..n` with the given edges, for orders beyond
/// the [`Graph`] vertex limit. Duplicate pairs are dropped.
pub fn matrix_from_edges(n: usize, edges: &[(usize, usize)], kind: MatrixKind) -> Result<SymMatrix> {
    let sign = match kind {
        MatrixKind::Laplacian => -1.0,
        MatrixKind::Signless => 1.0,
    };
    let mut m = Matrix::zeros(n, n);
    for &(u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { u, v, vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if m[(u, v)] != 0.0 {
            continue;
        }
        m[(u, v)] = sign;
        m[(v, u)] = sign;
        m[(u, u)] += 1.0;
        m[(v, v)] += 1.0;
    }
    SymMatrix::new(m)
}

pub fn int_matrix_of(g: &Graph, kind: MatrixKind) -> IntMatrix {
    IntMatrix::from_matrix(matrix_of(g, kind).as_matrix()).expect("graph matrices are integral")
}

pub fn spectrum(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    if g.n() == 0 {
        return Ok(Spectrum { values: Vec::new() });
    }
    eig_sym(&matrix_of(g, kind))
}

/// Sum of the `k` largest eigenvalues of the chosen matrix.
pub fn s_k(g: &Graph, k: usize, kind: MatrixKind) -> Result<f64> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={}", g.n())));
    }
    Ok(spectrum(g, kind)?.top_sum(k))
}

/// `f(G) = e(G) + 3 - S2(G)` with `S2` taken from the signless Laplacian.
pub fn f_value(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter(format!("f needs n >= 2, got {}", g.n())));
    }
    Ok(g.edge_count() as f64 + 3.0 - s_k(g, 2, MatrixKind::Signless)?)
}

/// `f` from an already computed signless spectrum.
pub fn f_from_spectrum(edges: usize, q_spectrum: &Spectrum) -> f64 {
    edges as f64 + 3.0 - q_spectrum.top_sum(2)
}

/// Ordered vertex partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        VertexPartition { blocks }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for (b, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(())
    }

    /// Block-to-block neighbour counts, or the first violating vertex pair.
    fn neighbour_counts(&self, g: &Graph) -> Result<Vec<Vec<usize>>> {
        self.validate(g.n())?;
        let masks: Vec<u64> = self
            .blocks
            .iter()
            .map(|b| b.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut counts = vec![vec![0; self.blocks.len()]; self.blocks.len()];
        for (i, block) in self.blocks.iter().enumerate() {
            for (j, &mask) in masks.iter().enumerate() {
                let rep = block[0];
                let c = (g.neighbor_mask(rep) & mask).count_ones() as usize;
                if let Some(&v) = block.iter().find(|&&v| (g.neighbor_mask(v) & mask).count_ones() as usize != c) {
                    return Err(Error::NotEquitable {
                        u: rep,
                        v,
                        block: i,
                        target: j,
                        count_u: c,
                        count_v: (g.neighbor_mask(v) & mask).count_ones() as usize,
                    });
                }
                counts[i][j] = c;
            }
        }
        Ok(counts)
    }

    pub fn is_equitable(&self, g: &Graph) -> bool {
        self.neighbour_counts(g).is_ok()
    }

    /// Block sums of a square matrix: entry `(i, j)` is the sum of row `v`
    /// over block `j`, required to be the same for every `v` in block `i`.
    /// On `Q(G)` this agrees with [`quotient_matrix`].
    pub fn matrix_quotient(&self, m: &Matrix) -> Result<Matrix> {
        self.validate(m.rows())?;
        let k = self.blocks.len();
        let mut out = Matrix::zeros(k, k);
        for (i, block) in self.blocks.iter().enumerate() {
            for (j, target) in self.blocks.iter().enumerate() {
                let sum = |v: usize| target.iter().map(|&w| m[(v, w)]).sum::<f64>();
                let rep = sum(block[0]);
                if let Some(&v) = block.iter().find(|&&v| sum(v) != rep) {
                    return Err(Error::InvalidPartition(format!(
                        "rows {} and {v} of block {i} have different sums over block {j}",
                        block[0]
                    )));
                }
                out[(i, j)] = rep;
            }
        }
        Ok(out)
    }
}

/// Quotient of `Q(G)` over an equitable partition: entry `(i, j)` counts the
/// neighbours in block `j` of any vertex of block `i`, and the diagonal also
/// carries the common degree of block `i`.
pub fn quotient_matrix(g: &Graph, p: &VertexPartition) -> Result<Matrix> {
    let counts = p.neighbour_counts(g)?;
    let k = counts.len();
    Ok(Matrix::from_fn(k, k, |i, j| {
        let degree = if i == j { g.degree(p.blocks[i][0]) } else { 0 };
        (counts[i][j] + degree) as f64
    }))
}

fn check_a(a: usize) -> Result<()> {
    if a < 3 {
        return Err(Error::InvalidParameter(format!("a = {a} must be at least 3")));
    }
    Ok(())
}

/// Quotient of `Q(K⁺_{1,a})` over {degree-2 pair}, {center}, {a - 2 leaves}.
pub fn q_a_pi(a: usize) -> Result<Matrix> {
    check_a(a)?;
    let a = a as f64;
    Matrix::from_rows(&[vec![3.0, 1.0, 0.0], vec![2.0, a, a - 2.0], vec![0.0, 1.0, 1.0]])
}

/// Characteristic polynomial of [`q_a_pi`].
pub fn p_qapi(a: usize) -> Result<IntPolynomial> {
    Ok(charpoly_int(&IntMatrix::from_matrix(&q_a_pi(a)?)?))
}

/// `x^3 + (a+4)x^2 + 3(a+1)x + 4`.
pub fn p_a(a: usize) -> Result<IntPolynomial> {
    check_a(a)?;
    let a = a as i64;
    Ok(IntPolynomial::from_i64(&[4, 3 * (a + 1), a + 4, 1]))
}

/// `q1(G) <= e(G) + 1`, with near-ties settled exactly.
pub fn q1_upper_bound_check(g: &Graph) -> Result<bool> {
    let e = g.edge_count();
    if e == 0 {
        return Err(Error::InvalidParameter("graph has no edges".into()));
    }
    let q1 = spectrum(g, MatrixKind::Signless)?.largest();
    let bound = e as f64 + 1.0;
    if q1 < bound - NEAR_TIE {
        return Ok(true);
    }
    if q1 > bound + NEAR_TIE {
        return Ok(false);
    }
    let exact = ExactSpectrum::of_graph(g, MatrixKind::Signless)?;
    let mut top = exact.eigenvalue(0).expect("non-empty spectrum");
    Ok(top.compare_rational(&int(e as i64 + 1)) != Ordering::Greater)
}

/// Where the two largest signless eigenvalues of a graph live.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopTwoAttribution {
    /// Component (index into `Graph::components().blocks`) holding `q1`.
    pub first: usize,
    /// Component holding `q2`.
    pub second: usize,
    /// `q2` can be taken as the largest eigenvalue of a second component,
    /// i.e. `S2 = q1(G1) + q1(G2)` for two distinct components.
    pub different_components: bool,
    /// Whether exact arithmetic was needed to decide the attribution.
    pub settled_exactly: bool,
}

/// Decides whether `S2` splits across two components. When the second
/// eigenvalue of the leading component ties with the top eigenvalue of
/// another component, both readings give the same `S2`; the split reading is
/// reported.
pub fn top_two_attribution(g: &Graph) -> Result<TopTwoAttribution> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("need n >= 2".into()));
    }
    let comps = g.components().blocks;
    let spectra: Vec<Spectrum> = comps
        .iter()
        .map(|c| spectrum(&g.induced_subgraph(c), MatrixKind::Signless))
        .collect::<Result<_>>()?;
    let first = (0..comps.len())
        .max_by(|&a, &b| spectra[a].largest().total_cmp(&spectra[b].largest()).then(b.cmp(&a)))
        .unwrap();
    let inner_second = spectra[first].values.get(1).copied();
    let other = (0..comps.len())
        .filter(|&c| c != first)
        .max_by(|&a, &b| spectra[a].largest().total_cmp(&spectra[b].largest()).then(b.cmp(&a)));
    let (Some(other), Some(inner)) = (other, inner_second) else {
        // One component, or the top component is a single vertex.
        return Ok(match (other, inner_second) {
            (Some(o), None) => TopTwoAttribution { first, second: o, different_components: true, settled_exactly: false },
            _ => TopTwoAttribution { first, second: first, different_components: false, settled_exactly: false },
        });
    };
    let outer = spectra[other].largest();
    if (outer - inner).abs() > NEAR_TIE {
        let split = outer > inner;
        return Ok(TopTwoAttribution {
            first,
            second: if split { other } else { first },
            different_components: split,
            settled_exactly: false,
        });
    }
    let sub = |c: usize| g.induced_subgraph(&comps[c]);
    let mut inner_exact = ExactSpectrum::of_graph(&sub(first), MatrixKind::Signless)?
        .eigenvalue(1)
        .expect("component has two vertices");
    let mut outer_exact = ExactSpectrum::of_graph(&sub(other), MatrixKind::Signless)?
        .eigenvalue(0)
        .expect("component is non-empty");
    let split = outer_exact.compare(&mut inner_exact) != Ordering::Less;
    Ok(TopTwoAttribution {
        first,
        second: if split { other } else { first },
        different_components: split,
        settled_exactly: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star_plus};

    fn rows(m: &Matrix) -> Vec<Vec<f64>> {
        m.to_rows()
    }

    #[test]
    fn graph_matrices() {
        let k2 = complete(2).unwrap();
        assert_eq!(rows(matrix_of(&k2, MatrixKind::Signless).as_matrix()), vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert_eq!(rows(matrix_of(&k2, MatrixKind::Laplacian).as_matrix()), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
        let q3 = matrix_of(&complete(3).unwrap(), MatrixKind::Signless);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q3.get(i, j), if i == j { 2.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn eigenvalue_sums() {
        let k3 = complete(3).unwrap();
        assert!((s_k(&k3, 2, MatrixKind::Signless).unwrap() - 5.0).abs() < 1e-12);
        let c5 = cycle(5).unwrap();
        assert!((s_k(&c5, 5, MatrixKind::Signless).unwrap() - 10.0).abs() < 1e-12);
        // path spectrum 4 sin^2(jπ/2n), j = 1..n-1 and 0
        let p5 = path(5).unwrap();
        let want = 4.0 * (2.0 * std::f64::consts::PI / 5.0).sin().powi(2)
            + 4.0 * (3.0 * std::f64::consts::PI / 10.0).sin().powi(2);
        assert!((s_k(&p5, 2, MatrixKind::Laplacian).unwrap() - want).abs() < 1e-12);
        assert!(s_k(&k3, 4, MatrixKind::Signless).is_err());
        assert!(s_k(&k3, 0, MatrixKind::Signless).is_err());
    }

    #[test]
    fn f_values() {
        assert!((f_value(&complete(3).unwrap()).unwrap() - 1.0).abs() < 1e-12);
        let want = (5.0 - 17f64.sqrt()) / 2.0;
        assert!((f_value(&star_plus(3).unwrap()).unwrap() - want).abs() < 1e-12);
        // P5 is bipartite, so the Q spectrum equals the path Laplacian spectrum.
        let s2 = 4.0 * (2.0 * std::f64::consts::PI / 5.0).sin().powi(2)
            + 4.0 * (3.0 * std::f64::consts::PI / 10.0).sin().powi(2);
        assert!((f_value(&path(5).unwrap()).unwrap() - (7.0 - s2)).abs() < 1e-12);
        assert!((f_value(&path(5).unwrap()).unwrap() - 0.763932).abs() < 1e-6);
        assert!(f_value(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn quotient_matrices() {
        for a in 3..=8 {
            let g = star_plus(a).unwrap();
            let p = VertexPartition::new(vec![vec![1, 2], vec![0], (3..=a).collect()]);
            assert_eq!(quotient_matrix(&g, &p).unwrap(), q_a_pi(a).unwrap());
        }
        let k3 = VertexPartition::new(vec![vec![0, 1, 2]]);
        assert_eq!(rows(&quotient_matrix(&complete(3).unwrap(), &k3).unwrap()), vec![vec![4.0]]);
        let p4 = VertexPartition::new(vec![vec![0, 3], vec![1, 2]]);
        assert_eq!(
            rows(&quotient_matrix(&path(4).unwrap(), &p4).unwrap()),
            vec![vec![1.0, 1.0], vec![1.0, 3.0]]
        );
    }

    #[test]
    fn quotient_rejects_bad_partitions() {
        let p5 = path(5).unwrap();
        let uneven = VertexPartition::new(vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(matches!(quotient_matrix(&p5, &uneven), Err(Error::NotEquitable { .. })));
        let missing = VertexPartition::new(vec![vec![0, 1]]);
        assert!(matches!(quotient_matrix(&p5, &missing), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            rows(&q_a_pi(3).unwrap()),
            vec![vec![3.0, 1.0, 0.0], vec![2.0, 3.0, 1.0], vec![0.0, 1.0, 1.0]]
        );
        assert_eq!(p_qapi(3).unwrap(), IntPolynomial::from_i64(&[-4, 12, -7, 1]));
        assert_eq!(p_a(3).unwrap(), IntPolynomial::from_i64(&[4, 12, 7, 1]));
        assert!(q_a_pi(2).is_err() && p_a(2).is_err());
    }

    #[test]
    fn q1_bound() {
        assert!(q1_upper_bound_check(&complete(2).unwrap()).unwrap());
        assert!(q1_upper_bound_check(&complete(3).unwrap()).unwrap());
        assert!(q1_upper_bound_check(&path(5).unwrap()).unwrap());
        assert!(q1_upper_bound_check(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn attribution() {
        let k3 = complete(3).unwrap();
        let a = top_two_attribution(&k3).unwrap();
        assert!(!a.different_components);
        // K3 ∪ K2: Q spectra (4,1,1) and (2,0): q2 = 2 from K2
        let g = k3.disjoint_union(&complete(2).unwrap()).unwrap();
        assert!(top_two_attribution(&g).unwrap().different_components);
        // K2 ∪ K2: exact tie across components
        let two = complete(2).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
        assert!(top_two_attribution(&two).unwrap().different_components);
        // K4 ∪ K2: Q(K4) = (6,2,2,2) ties with q1(K2) = 2, decided exactly
        let tie = complete(4).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
        let a = top_two_attribution(&tie).unwrap();
        assert!(a.settled_exactly && a.different_components);
        // K1,3 ∪ K1: second eigenvalue stays inside the star
        let star_iso = crate::graph::star(3).unwrap().with_isolated(1).unwrap();
        assert!(!top_two_attribution(&star_iso).unwrap().different_components);
    }
}
