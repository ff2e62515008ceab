use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;

use super::report::{Counterexample, ReportBuilder, VerificationReport};
use super::{f_vs, s2_vs, star_plus_spectrum};
use crate::enumerate::{
    canonical_form, enumerate_graphs, laplacian_equality_class, max_s2_by_cycle_dim, max_s2_trees, min_f_by_edges,
    min_f_by_vertices, EnumSpec,
};
use crate::error::{Error, Result};
use crate::exact::{int, ratio, CertifiedF, ExactSpectrum};
use crate::graph::{double_star, family_g, star_plus, Graph};
use crate::spectral::{q1_upper_bound_check, top_two_attribution, MatrixKind};

/// Whether `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return false;
    }
    // Place high-degree pattern vertices first, each next to placed ones.
    let mut order: Vec<usize> = Vec::with_capacity(h.n());
    let mut placed = vec![false; h.n()];
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (order.iter().filter(|&&u| h.has_edge(u, v)).count(), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    fn extend(g: &Graph, h: &Graph, order: &[usize], image: &mut Vec<usize>, used: u64) -> bool {
        let i = image.len();
        if i == order.len() {
            return true;
        }
        let hv = order[i];
        for gv in 0..g.n() {
            if used >> gv & 1 == 1 || g.degree(gv) < h.degree(hv) {
                continue;
            }
            if (0..i).all(|j| !h.has_edge(order[j], hv) || g.has_edge(image[j], gv)) {
                image.push(gv);
                if extend(g, h, order, image, used | 1 << gv) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    extend(g, h, &order, &mut Vec::new(), 0)
}

/// Exact sign of `S2(G) - c` for the signless Laplacian.
fn s2_sign(g: &Graph, c: i64) -> Result<Ordering> {
    ExactSpectrum::of_graph(g, MatrixKind::Signless)?.compare_top_two_sum(&int(c))
}

/// If some nonempty subgraph `H` has `S2(H) <= e(H)`, then `S2(G) < e(G)`
/// and `f(G) > 3`. Witnesses are searched among graphs on at most six
/// vertices without isolated vertices.
pub fn verify_subgraph_lemma(n_max: usize, timing: bool) -> Result<VerificationReport> {
    if !(2..=8).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("subgraph lemma needs 2 <= n_max <= 8, got {n_max}")));
    }
    const WITNESS_MAX: usize = 6;
    let mut rb = ReportBuilder::new("subgraph-lemma", timing);
    rb.param("n_max", n_max).param("witness_max_vertices", WITNESS_MAX);
    let mut witnesses = Vec::new();
    for k in 2..=WITNESS_MAX.min(n_max) {
        for rep in enumerate_graphs(&EnumSpec::vertices(k).no_isolated())? {
            let sign = s2_sign(&rep.graph, rep.graph.edge_count() as i64)?;
            if sign != Ordering::Greater {
                witnesses.push((rep, sign == Ordering::Less));
            }
        }
    }
    // Sparser patterns embed more often; try them first.
    witnesses.sort_by_key(|(w, _)| (w.graph.edge_count(), w.graph.n()));
    rb.param("witness_patterns", witnesses.len());
    let graphs: Vec<_> = (2..=n_max)
        .map(|n| enumerate_graphs(&EnumSpec::vertices(n)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    // (graph, first witness, sign of S2 - e, strict witness if the check failed)
    type Outcome = Option<(String, String, Ordering, Option<String>)>;
    let outcomes: Vec<Outcome> = graphs
        .par_iter()
        .map(|rep| -> Result<_> {
            let Some((w, _)) = witnesses.iter().find(|(w, _)| contains_subgraph(&rep.graph, &w.graph)) else {
                return Ok(None);
            };
            let sign = s2_sign(&rep.graph, rep.graph.edge_count() as i64)?;
            let strict = if sign == Ordering::Less {
                None
            } else {
                witnesses
                    .iter()
                    .find(|(h, strict)| *strict && contains_subgraph(&rep.graph, &h.graph))
                    .map(|(h, _)| h.canonical.clone())
            };
            Ok(Some((rep.canonical.clone(), w.canonical.clone(), sign, strict)))
        })
        .collect::<Result<_>>()?;
    let mut skipped = 0;
    let mut strict_failures = 0;
    for outcome in outcomes {
        match outcome {
            None => skipped += 1,
            Some((g, h, sign, strict)) => {
                rb.trial();
                // S2 < e is the same statement as f > 3
                if sign != Ordering::Less {
                    let relation = if sign == Ordering::Equal { "=" } else { ">" };
                    let mut observed = format!("witness {h}, but S2(G) {relation} e(G)");
                    if let Some(s) = strict {
                        strict_failures += 1;
                        observed.push_str(&format!("; also contains {s} with S2 < e"));
                    }
                    rb.fail(Counterexample::graph(g, observed));
                }
            }
        }
    }
    rb.note(format!("{skipped} graphs without a witness were skipped"));
    rb.note(format!("{strict_failures} failures also contain a witness with S2(H) < e(H)"));
    Ok(rb.finish())
}

/// Trees satisfy `f > 2/n`; the trees with four edges beat `K⁺_{1,3}`; the
/// chain `2/(e+1) > 1.5/e > f(K⁺_{1,e-1})` holds for `e >= 7`.
pub fn verify_tree_bound(n_max: usize, timing: bool) -> Result<VerificationReport> {
    if !(2..=9).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("tree bound needs 2 <= n_max <= 9, got {n_max}")));
    }
    const CHAIN_MAX: usize = 100;
    let mut rb = ReportBuilder::new("tree-bound", timing);
    rb.param("n_max", n_max).param("chain_e_max", CHAIN_MAX);
    for n in 2..=n_max {
        let trees = enumerate_graphs(&EnumSpec::vertices(n).trees())?;
        for t in &trees {
            rb.trial();
            let mut cf = match CertifiedF::new(&t.graph) {
                Ok(cf) => cf,
                Err(e) => {
                    rb.undecided(format!("{}: certification failed: {e}", t.canonical));
                    continue;
                }
            };
            if !f_vs(&mut cf, &ratio(2, n as i64), Ordering::Greater)? {
                rb.fail(Counterexample::graph(t.canonical.clone(), format!("f in {} is not above 2/{n}", cf.interval())));
            }
        }
        if n <= 3 {
            rb.note(format!("n = {n}: {} tree(s) checked, below the order where the bound is usually stated", trees.len()));
        }
    }
    if n_max >= 5 {
        let mut kp = CertifiedF::new(&star_plus(3)?)?;
        for t in enumerate_graphs(&EnumSpec::vertices(5).trees())? {
            rb.trial();
            if CertifiedF::new(&t.graph)?.compare(&mut kp)? != Ordering::Greater {
                rb.fail(Counterexample::graph(t.canonical, "f(T) is not above f(K+_1,3)".to_string()));
            }
        }
    }
    for e in 7..=CHAIN_MAX {
        rb.trial();
        let ei = e as i64;
        if ratio(2, ei + 1) <= ratio(3, 2 * ei) {
            rb.fail(Counterexample::claim(format!("2/(e+1) <= 1.5/e at e = {e}")));
        }
        // f(K⁺_{1,e-1}) < 1.5/e ⇔ S2 > e + 3 - 1.5/e
        let mut sp = star_plus_spectrum(e - 1)?;
        if !s2_vs(&mut sp, &(int(ei + 3) - ratio(3, 2 * ei)), Ordering::Greater)? {
            rb.fail(Counterexample::claim(format!("f(K+_1,{}) is not below 1.5/{e}", e - 1)));
        }
    }
    // Does the balanced double star maximize S2 among trees? Reported only.
    for n in 4..=n_max {
        let r = max_s2_trees(n)?;
        let ds = canonical_form(&double_star(n.div_ceil(2) - 1, (n - 2) / 2)?)?;
        let verdict = match (r.unique, r.contains(&ds)) {
            (true, true) => "is the unique maximizer",
            (false, true) => "ties for the maximum",
            _ => "is not a maximizer",
        };
        rb.note(format!("double star on {n} vertices {verdict} of S2 among trees (argmax {:?})", r.argext));
    }
    Ok(rb.finish())
}

/// Disconnected graphs whose two largest signless eigenvalues come from
/// different components satisfy `S2 <= e + 2`, hence `f >= 1`.
pub fn verify_disconnected_split(m_max: usize, timing: bool) -> Result<VerificationReport> {
    if !(2..=8).contains(&m_max) {
        return Err(Error::InvalidParameter(format!("disconnected-split suite needs 2 <= m_max <= 8, got {m_max}")));
    }
    let mut rb = ReportBuilder::new("disconnected-split", timing);
    rb.param("m_max", m_max);
    let mut disconnected = 0;
    for m in 2..=m_max {
        let reps = enumerate_graphs(&EnumSpec::edges(m))?;
        let kp = if m >= 4 { Some(CertifiedF::new(&star_plus(m - 1)?)?) } else { None };
        for rep in reps.iter().filter(|r| !r.graph.is_connected()) {
            disconnected += 1;
            let g = &rep.graph;
            if !top_two_attribution(g)?.different_components {
                continue;
            }
            rb.trial();
            let e = g.edge_count() as i64;
            if s2_sign(g, e + 2)? == Ordering::Greater {
                rb.fail(Counterexample::graph(rep.canonical.clone(), "S2 exceeds e + 2".to_string()));
            }
            for comp in g.components().blocks.iter().filter(|c| c.len() > 1) {
                if !q1_upper_bound_check(&g.induced_subgraph(comp))? {
                    rb.fail(Counterexample::graph(rep.canonical.clone(), format!("component {comp:?} has q1 > e + 1")));
                }
            }
            if let Some(kp) = &kp {
                if CertifiedF::new(g)?.compare(&mut kp.clone())? != Ordering::Greater {
                    rb.fail(Counterexample::graph(rep.canonical.clone(), format!("f not above f(K+_1,{})", m - 1)));
                }
            }
        }
    }
    rb.note(format!("{disconnected} disconnected graphs enumerated"));
    Ok(rb.finish())
}

fn compare_sets(rb: &mut ReportBuilder, label: &str, got: &[String], want: &BTreeSet<String>) {
    let got: BTreeSet<String> = got.iter().cloned().collect();
    for g in got.difference(want) {
        rb.fail(Counterexample::graph(g.clone(), format!("{label}: unexpected member")));
    }
    for g in want.difference(&got) {
        rb.fail(Counterexample::graph(g.clone(), format!("{label}: predicted member missing")));
    }
}

/// Connected `n`-vertex graphs with `μ1 + μ2 = e + 3` are exactly `G(s, n-2-s)`, `0 <= s <= n-3`.
pub fn verify_t1(n_lo: usize, n_hi: usize, timing: bool) -> Result<VerificationReport> {
    if n_lo < 3 || n_hi < n_lo || n_hi > 8 {
        return Err(Error::Infeasible(format!("T1 needs 3 <= n_lo <= n_hi <= 8, got {n_lo}..{n_hi}")));
    }
    let mut rb = ReportBuilder::new("T1", timing);
    rb.param("n_lo", n_lo).param("n_hi", n_hi).param("connected", true);
    for n in n_lo..=n_hi {
        let r = laplacian_equality_class(&EnumSpec::vertices(n).connected())?;
        for _ in 0..r.examined {
            rb.trial();
        }
        let want = (0..=n - 3).map(|s| canonical_form(&family_g(s, n - 2 - s)?)).collect::<Result<_>>()?;
        compare_sets(&mut rb, &format!("n = {n}"), &r.argext, &want);
        for note in r.notes {
            rb.fail(Counterexample::claim(note));
        }
    }
    Ok(rb.finish())
}

/// Graphs with `m` edges and `μ1 + μ2 = e + 3` are exactly `G(s, (m-1-s)/2)`
/// with `0 <= s <= m-3` and `s`, `m` of different parity.
pub fn verify_t2(m_lo: usize, m_hi: usize, timing: bool) -> Result<VerificationReport> {
    if m_lo < 3 || m_hi < m_lo || m_hi > 8 {
        return Err(Error::Infeasible(format!("T2 needs 3 <= m_lo <= m_hi <= 8, got {m_lo}..{m_hi}")));
    }
    let mut rb = ReportBuilder::new("T2", timing);
    rb.param("m_lo", m_lo).param("m_hi", m_hi);
    for m in m_lo..=m_hi {
        let r = laplacian_equality_class(&EnumSpec::edges(m))?;
        for _ in 0..r.examined {
            rb.trial();
        }
        let want = (0..=m - 3)
            .filter(|s| (s + m) % 2 == 1)
            .map(|s| canonical_form(&family_g(s, (m - 1 - s) / 2)?))
            .collect::<Result<_>>()?;
        compare_sets(&mut rb, &format!("m = {m}"), &r.argext, &want);
        for note in r.notes {
            rb.fail(Counterexample::claim(note));
        }
    }
    Ok(rb.finish())
}

fn check_unique_min(rb: &mut ReportBuilder, label: &str, r: &crate::enumerate::SearchReport, want: &str) {
    for _ in 0..r.examined {
        rb.trial();
    }
    if !(r.unique && r.argext.len() == 1 && r.argext[0] == want) {
        let g = r.argext.first().cloned().unwrap_or_default();
        rb.fail(Counterexample::graph(g, format!("{label}: argmin {:?} (unique: {}), predicted {want}", r.argext, r.unique)));
    }
}

/// Unique minimizer of `f` on `n` vertices is `K⁺_{1,n-1}`.
pub fn verify_t3(n_lo: usize, n_hi: usize, timing: bool) -> Result<VerificationReport> {
    if n_lo < 4 || n_hi < n_lo || n_hi > 8 {
        return Err(Error::Infeasible(format!("T3 needs 4 <= n_lo <= n_hi <= 8, got {n_lo}..{n_hi}")));
    }
    let mut rb = ReportBuilder::new("T3", timing);
    rb.param("n_lo", n_lo).param("n_hi", n_hi);
    for n in n_lo..=n_hi {
        let r = min_f_by_vertices(n)?;
        check_unique_min(&mut rb, &format!("n = {n}"), &r, &canonical_form(&star_plus(n - 1)?)?);
    }
    Ok(rb.finish())
}

/// Unique minimizer of `f` with `m` edges is `K⁺_{1,m-1}`.
pub fn verify_t4(m_lo: usize, m_hi: usize, timing: bool) -> Result<VerificationReport> {
    if m_lo < 4 || m_hi < m_lo || m_hi > 8 {
        return Err(Error::Infeasible(format!("T4 needs 4 <= m_lo <= m_hi <= 8, got {m_lo}..{m_hi}")));
    }
    let mut rb = ReportBuilder::new("T4", timing);
    rb.param("m_lo", m_lo).param("m_hi", m_hi);
    for m in m_lo..=m_hi {
        let r = min_f_by_edges(m)?;
        check_unique_min(&mut rb, &format!("m = {m}"), &r, &canonical_form(&star_plus(m - 1)?)?);
        if m >= 7 {
            // 1.3/m < f < 1.5/m at the minimizer
            rb.trial();
            let mut cf = CertifiedF::new(&star_plus(m - 1)?)?;
            let lo = f_vs(&mut cf, &ratio(13, 10 * m as i64), Ordering::Greater)?;
            let hi = f_vs(&mut cf, &ratio(15, 10 * m as i64), Ordering::Less)?;
            if !(lo && hi) {
                rb.fail(Counterexample::graph(r.argext[0].clone(), format!("f in {} outside (1.3/{m}, 1.5/{m})", cf.interval())));
            }
        }
    }
    Ok(rb.finish())
}

/// Maximizers of `S2` among connected graphs with cycle space dimension `c`
/// against `G(n-2-c, c)`. Only `c = 1` may fail; other mismatches are flagged.
pub fn verify_conj1(n_lo: usize, n_hi: usize, timing: bool) -> Result<VerificationReport> {
    if n_lo < 3 || n_hi < n_lo || n_hi > 8 {
        return Err(Error::Infeasible(format!("CONJ1 needs 3 <= n_lo <= n_hi <= 8, got {n_lo}..{n_hi}")));
    }
    let mut rb = ReportBuilder::new("CONJ1", timing);
    rb.param("n_lo", n_lo).param("n_hi", n_hi).param("c", "1..=n-2");
    let mut flags = 0;
    for n in n_lo..=n_hi {
        for c in 1..=n - 2 {
            rb.trial();
            let r = max_s2_by_cycle_dim(n, c)?;
            let predicted = canonical_form(&family_g(n - 2 - c, c)?)?;
            let matches = r.unique && r.argext == [predicted.clone()];
            if matches {
                continue;
            }
            let finding = format!(
                "n = {n}, c = {c}: argmax {:?} (unique: {}), predicted {predicted}, S2 in {}",
                r.argext, r.unique, r.ext_value
            );
            if c == 1 {
                rb.fail(Counterexample::graph(r.argext.first().cloned().unwrap_or_default(), finding));
            } else {
                flags += 1;
                rb.note(format!("FLAG conjecture violated: {finding}"));
            }
        }
    }
    rb.param("flagged", flags);
    Ok(rb.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use crate::verify::Status;

    #[test]
    fn subgraph_containment() {
        let k4 = complete(4).unwrap();
        assert!(contains_subgraph(&k4, &cycle(4).unwrap()));
        assert!(contains_subgraph(&k4, &complete(3).unwrap()));
        assert!(!contains_subgraph(&cycle(5).unwrap(), &complete(3).unwrap()));
        assert!(contains_subgraph(&cycle(5).unwrap(), &path(5).unwrap()));
        let two_k2 = complete(2).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
        assert!(contains_subgraph(&path(4).unwrap(), &two_k2));
        assert!(!contains_subgraph(&crate::graph::star(3).unwrap(), &two_k2));
    }

    #[test]
    fn suites_pass_on_small_ranges() {
        assert_eq!(verify_tree_bound(7, false).unwrap().status, Status::Pass);
        assert_eq!(verify_disconnected_split(5, false).unwrap().status, Status::Pass);
        assert_eq!(verify_t1(4, 5, false).unwrap().status, Status::Pass);
        assert_eq!(verify_t2(4, 5, false).unwrap().status, Status::Pass);
        assert_eq!(verify_t3(4, 5, false).unwrap().status, Status::Pass);
        assert_eq!(verify_t4(4, 5, false).unwrap().status, Status::Pass);
        assert_eq!(verify_conj1(5, 6, false).unwrap().status, Status::Pass);
    }

    #[test]
    fn bipartite_k33_breaks_the_subgraph_implication() {
        // K_{3,3}: Q spectrum 6, 3, 3, 3, 3, 0, so S2 = 9 = e and G is its own witness
        let k33 = crate::graph::graph6_decode("EFz_").unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(s2_sign(&k33, 9).unwrap(), Ordering::Equal);
        let mut plus = k33.clone();
        let extra = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).find(|&(u, v)| !k33.has_edge(u, v)).unwrap();
        plus = plus.with_edge(extra.0, extra.1).unwrap();
        assert_eq!(s2_sign(&plus, 10).unwrap(), Ordering::Greater);
        let r = verify_subgraph_lemma(6, false).unwrap();
        assert_eq!(r.status, Status::Fail);
        let ids: BTreeSet<_> = r.counterexamples.iter().filter_map(|c| c.graph6.clone()).collect();
        assert!(ids.contains(&canonical_form(&k33).unwrap()));
        assert!(ids.contains(&canonical_form(&plus).unwrap()));
    }

    #[test]
    fn star_plus_has_no_witness() {
        // K⁺_{1,3}: no subgraph with S2 <= e, so the implication is vacuous
        let g = star_plus(3).unwrap();
        for k in 2..=4 {
            for rep in enumerate_graphs(&EnumSpec::vertices(k).no_isolated()).unwrap() {
                if contains_subgraph(&g, &rep.graph) {
                    assert_eq!(s2_sign(&rep.graph, rep.graph.edge_count() as i64).unwrap(), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn witnesses_exist_in_dense_graphs() {
        // K6: S2 = 10 + 4 = 14 <= 15
        let k6 = complete(6).unwrap();
        assert_ne!(s2_sign(&k6, 15).unwrap(), Ordering::Greater);
        assert_eq!(s2_sign(&complete(7).unwrap(), 21).unwrap(), Ordering::Less);
    }
}
