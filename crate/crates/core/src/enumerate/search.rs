use std::cmp::Ordering;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{classes_from_graph6, enumerate_graphs, ClassRep, EnumMode, EnumSpec};
use crate::error::{Error, Result};
use crate::exact::{int, pow10_inv, rational_serde, CertifiedF, ExactSpectrum, RationalInterval};
use crate::spectral::{f_value, spectrum, MatrixKind};

/// Float gap under which candidates are ordered by exact certificates.
pub const EXACT_MARGIN: f64 = 1e-7;

/// Bracket width used for reported values.
const REPORT_DIGITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Objective {
    /// Minimize `f`.
    MinF,
    /// Maximize `S2`; within a class of fixed edge count this is `MinF`.
    MaxS2,
    /// Members of the Laplacian equality class `μ1 + μ2 = e + 3`.
    LaplacianEquality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunnerUp {
    pub graph6: String,
    pub value: RationalInterval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub objective: String,
    pub argext: Vec<String>,
    pub ext_value: RationalInterval,
    pub runner_up: Option<RunnerUp>,
    pub examined: usize,
    #[serde(with = "rational_serde")]
    pub tolerance: BigRational,
    pub unique: bool,
    pub notes: Vec<String>,
}

impl SearchReport {
    pub fn contains(&self, graph6: &str) -> bool {
        self.argext.iter().any(|g| g == graph6)
    }
}

fn value_interval(cf: &mut CertifiedF, objective: Objective) -> RationalInterval {
    let iv = cf.refine(&pow10_inv(REPORT_DIGITS)).clone();
    match objective {
        Objective::MaxS2 => cf.s2_interval(),
        _ => iv,
    }
}

/// Exact argmin of `f` over the given classes. Floats rank the graphs; every
/// graph within [`EXACT_MARGIN`] of the minimum or of the runner-up is then
/// ordered exactly.
fn extremize(reps: &[ClassRep], objective: Objective, label: String) -> Result<SearchReport> {
    let usable: Vec<&ClassRep> = reps.iter().filter(|r| r.graph.n() >= 2).collect();
    if usable.is_empty() {
        return Err(Error::Infeasible(format!("{label}: no graph with at least two vertices")));
    }
    let floats: Vec<f64> = usable.par_iter().map(|r| f_value(&r.graph)).collect::<Result<_>>()?;
    let mut order: Vec<usize> = (0..usable.len()).collect();
    order.sort_by(|&a, &b| floats[a].total_cmp(&floats[b]).then_with(|| usable[a].canonical.cmp(&usable[b].canonical)));

    let fmin = floats[order[0]];
    let near_min: Vec<usize> = order.iter().copied().take_while(|&i| floats[i] <= fmin + EXACT_MARGIN).collect();
    let mut certs: Vec<(usize, CertifiedF)> =
        near_min.iter().map(|&i| CertifiedF::new(&usable[i].graph).map(|c| (i, c))).collect::<Result<_>>()?;

    // Exact minimum among the near candidates.
    let mut best = 0;
    for k in 1..certs.len() {
        let (head, tail) = certs.split_at_mut(k);
        if tail[0].1.compare(&mut head[best].1)? == Ordering::Less {
            best = k;
        }
    }
    let mut argext_idx = Vec::new();
    let mut rest = Vec::new();
    for k in 0..certs.len() {
        let ord = if k == best {
            Ordering::Equal
        } else {
            let (a, b) = if k < best {
                let (h, t) = certs.split_at_mut(best);
                (&mut h[k].1, &mut t[0].1)
            } else {
                let (h, t) = certs.split_at_mut(k);
                (&mut t[0].1, &mut h[best].1)
            };
            a.compare(b)?
        };
        match ord {
            Ordering::Equal => argext_idx.push(k),
            _ => rest.push(k),
        }
    }

    // Runner-up: exact minimum over everything within the margin of the
    // smallest float outside the extremal set.
    let in_argext: Vec<usize> = argext_idx.iter().map(|&k| certs[k].0).collect();
    let f_second = order.iter().copied().find(|i| !in_argext.contains(i)).map(|i| floats[i]);
    let mut runner_up = None;
    if let Some(f2) = f_second {
        let mut pool: Vec<(usize, CertifiedF)> = rest.iter().map(|&k| (certs[k].0, certs[k].1.clone())).collect();
        for &i in order.iter().skip(near_min.len()) {
            if floats[i] > f2 + EXACT_MARGIN {
                break;
            }
            pool.push((i, CertifiedF::new(&usable[i].graph)?));
        }
        let mut second = 0;
        for k in 1..pool.len() {
            let (head, tail) = pool.split_at_mut(k);
            let ord = tail[0].1.compare(&mut head[second].1)?;
            let earlier_name = usable[tail[0].0].canonical < usable[head[second].0].canonical;
            if ord == Ordering::Less || (ord == Ordering::Equal && earlier_name) {
                second = k;
            }
        }
        let (idx, cf) = &mut pool[second];
        // The runner-up must be exactly separated from the extremum.
        if cf.compare(&mut certs[best].1)? != Ordering::Greater {
            return Err(Error::Infeasible(format!("{label}: runner-up not separated from the extremum")));
        }
        runner_up = Some(RunnerUp { graph6: usable[*idx].canonical.clone(), value: value_interval(cf, objective) });
    }

    let mut argext: Vec<String> = argext_idx.iter().map(|&k| usable[certs[k].0].canonical.clone()).collect();
    argext.sort();
    let ext_value = value_interval(&mut certs[best].1, objective);
    Ok(SearchReport {
        objective: label,
        unique: argext.len() == 1,
        argext,
        ext_value,
        runner_up,
        examined: usable.len(),
        tolerance: BigRational::new(1.into(), 10_000_000.into()),
        notes: Vec::new(),
    })
}

fn check_range(what: &str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::Infeasible(format!("{what} = {value} must lie in {lo}..={hi}")));
    }
    Ok(())
}

/// Minimum of `f` over graphs with `m` edges and no isolated vertices.
pub fn min_f_by_edges(m: usize) -> Result<SearchReport> {
    check_range("m", m, 4, 8)?;
    let reps = enumerate_graphs(&EnumSpec::edges(m))?;
    extremize(&reps, Objective::MinF, format!("min-f-edges m={m}"))
}

/// Minimum of `f` over all graphs on `n` vertices.
pub fn min_f_by_vertices(n: usize) -> Result<SearchReport> {
    check_range("n", n, 4, 8)?;
    let reps = enumerate_graphs(&EnumSpec::vertices(n))?;
    extremize(&reps, Objective::MinF, format!("min-f-vertices n={n}"))
}

/// Maximum of `S2` over connected graphs on `n` vertices with cycle space
/// dimension `c`. Those graphs share `e = n - 1 + c`, so the maximizer of
/// `S2` is the minimizer of `f`.
pub fn max_s2_by_cycle_dim(n: usize, c: usize) -> Result<SearchReport> {
    check_range("n", n, 3, 8)?;
    check_range("c", c, 1, n - 2)?;
    let reps = enumerate_graphs(&EnumSpec::vertices(n).connected().cycle_dim(c))?;
    extremize(&reps, Objective::MaxS2, format!("max-s2-cycledim n={n} c={c}"))
}

/// Maximum of `S2` over trees on `n` vertices.
pub fn max_s2_trees(n: usize) -> Result<SearchReport> {
    check_range("n", n, 2, 10)?;
    let reps = enumerate_graphs(&EnumSpec::vertices(n).trees())?;
    extremize(&reps, Objective::MaxS2, format!("max-s2-trees n={n}"))
}

/// Extremum over an external graph6 stream, one graph per line.
pub fn search_graph6_stream(text: &str, objective: Objective) -> Result<SearchReport> {
    let reps = classes_from_graph6(text)?;
    match objective {
        Objective::LaplacianEquality => laplacian_class_of(&reps, "laplacian-equality stream".into()),
        _ => extremize(&reps, objective, format!("{} stream", objective_name(objective))),
    }
}

pub fn objective_name(objective: Objective) -> &'static str {
    match objective {
        Objective::MinF => "min-f",
        Objective::MaxS2 => "max-s2",
        Objective::LaplacianEquality => "laplacian-equality",
    }
}

/// Graphs with `μ1 + μ2 = e + 3` exactly. The reported value is the
/// deficiency `e + 3 - μ1 - μ2`, which is zero on the class; the runner-up is
/// the non-member of smallest deficiency.
pub fn laplacian_equality_class(spec: &EnumSpec) -> Result<SearchReport> {
    match spec.mode {
        EnumMode::ByVertices(n) => check_range("n", n, 2, 8)?,
        EnumMode::ByEdges(m) => check_range("m", m, 1, 8)?,
    }
    let reps = enumerate_graphs(spec)?;
    laplacian_class_of(&reps, format!("laplacian-equality {spec}"))
}

fn laplacian_class_of(reps: &[ClassRep], label: String) -> Result<SearchReport> {
    let usable: Vec<&ClassRep> = reps.iter().filter(|r| r.graph.n() >= 2).collect();
    let deficits: Vec<f64> = usable
        .par_iter()
        .map(|r| {
            let s = spectrum(&r.graph, MatrixKind::Laplacian)?;
            Ok(r.graph.edge_count() as f64 + 3.0 - s.top_sum(2))
        })
        .collect::<Result<_>>()?;
    // (index, exact sign of μ1 + μ2 - (e + 3)) for every near-tie
    let decided: Vec<(usize, Ordering)> = (0..usable.len())
        .into_par_iter()
        .filter(|&i| deficits[i] < EXACT_MARGIN)
        .map(|i| {
            let g = &usable[i].graph;
            let mut ex = ExactSpectrum::of_graph(g, MatrixKind::Laplacian)?;
            Ok((i, ex.compare_top_two_sum(&int(g.edge_count() as i64 + 3))?))
        })
        .collect::<Result<_>>()?;
    let mut notes = Vec::new();
    let mut argext = Vec::new();
    for &(i, ord) in &decided {
        match ord {
            Ordering::Equal => argext.push(usable[i].canonical.clone()),
            Ordering::Greater => notes.push(format!("{} exceeds e + 3", usable[i].canonical)),
            Ordering::Less => {}
        }
    }
    argext.sort();
    let runner_up = (0..usable.len())
        .filter(|i| !decided.iter().any(|(j, o)| j == i && *o != Ordering::Less))
        .min_by(|&a, &b| deficits[a].total_cmp(&deficits[b]).then_with(|| usable[a].canonical.cmp(&usable[b].canonical)))
        .map(|i| -> Result<RunnerUp> {
            let g = &usable[i].graph;
            let mut ex = ExactSpectrum::of_graph(g, MatrixKind::Laplacian)?;
            let s2 = ex.top_sum_interval(2, &pow10_inv(REPORT_DIGITS))?;
            Ok(RunnerUp { graph6: usable[i].canonical.clone(), value: s2.reflect(&int(g.edge_count() as i64 + 3)) })
        })
        .transpose()?;
    Ok(SearchReport {
        objective: label,
        unique: argext.len() == 1,
        argext,
        ext_value: RationalInterval::from_integer(0),
        runner_up,
        examined: usable.len(),
        tolerance: BigRational::new(1.into(), 10_000_000.into()),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::canonical_form;
    use crate::exact::ratio;
    use crate::graph::{family_g, star_plus, Graph};

    fn canon(g: &Graph) -> String {
        canonical_form(g).unwrap()
    }

    #[test]
    fn edge_indexed_minimum() {
        let r = min_f_by_edges(4).unwrap();
        assert!(r.unique);
        assert_eq!(r.argext, vec![canon(&star_plus(3).unwrap())]);
        assert!(r.runner_up.is_some());
        let r = min_f_by_edges(5).unwrap();
        assert_eq!(r.argext, vec![canon(&star_plus(4).unwrap())]);
        assert!(r.ext_value.hi() < &ratio(2, 6));
    }

    #[test]
    fn vertex_indexed_minimum() {
        let r = min_f_by_vertices(5).unwrap();
        assert!(r.unique);
        assert_eq!(r.argext, vec![canon(&star_plus(4).unwrap())]);
        assert_eq!(r.examined, 34);
    }

    #[test]
    fn cycle_dimension_maximum() {
        let r = max_s2_by_cycle_dim(5, 1).unwrap();
        assert!(r.unique);
        assert_eq!(r.argext, vec![canon(&family_g(2, 1).unwrap())]);
        assert!(max_s2_by_cycle_dim(5, 4).is_err());
        assert!(max_s2_by_cycle_dim(5, 0).is_err());
    }

    #[test]
    fn laplacian_classes() {
        let r = laplacian_equality_class(&EnumSpec::vertices(5).connected()).unwrap();
        let mut want: Vec<String> = (0..=2).map(|s| canon(&family_g(s, 3 - s).unwrap())).collect();
        want.sort();
        assert_eq!(r.argext, want);
        let r = laplacian_equality_class(&EnumSpec::edges(4)).unwrap();
        assert_eq!(r.argext, vec![canon(&family_g(1, 1).unwrap())]);
        let r = laplacian_equality_class(&EnumSpec::edges(5)).unwrap();
        let mut want = vec![canon(&family_g(0, 2).unwrap()), canon(&family_g(2, 1).unwrap())];
        want.sort();
        assert_eq!(r.argext, want);
        assert!(r.notes.is_empty());
        let ru = r.runner_up.unwrap();
        assert!(ru.value.lo() > &int(0));
    }

    #[test]
    fn stream_search_matches_enumeration() {
        let text: String = enumerate_graphs(&EnumSpec::edges(4)).unwrap().iter().map(|r| r.canonical.clone() + "\n").collect();
        let r = search_graph6_stream(&text, Objective::MinF).unwrap();
        assert_eq!(r.argext, min_f_by_edges(4).unwrap().argext);
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = min_f_by_edges(4).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: SearchReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
