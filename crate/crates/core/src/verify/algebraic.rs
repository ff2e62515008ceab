use std::cmp::Ordering;

use num_bigint::BigInt;

use super::random::{random_graph, random_symmetric, rng};
use super::report::{Counterexample, ReportBuilder, VerificationReport};
use super::{g6, s2_vs, star_plus_id, star_plus_spectrum};
use crate::error::{Error, Result};
use crate::exact::{charpoly_exact, charpoly_int, int, ratio, IntMatrix, IntPolynomial, RealRoots};
use crate::graph::{graph6_encode, star_plus, star_plus_edges, Graph};
use crate::linalg::{additive_compound, eig_sym, Matrix, SymMatrix};
use crate::spectral::{matrix_from_edges, matrix_of, p_a, p_qapi, q_a_pi, spectrum, MatrixKind};

const INTERLACE_TOL: f64 = 1e-9;
const SUBADDITIVE_TOL: f64 = 1e-9;
const DELTA_TOL: f64 = 1e-8;

/// `1.3/n < f(K⁺_{1,n-1}) < 1.5/n` for every `n` in range.
pub fn verify_star_plus_bounds(n_lo: usize, n_hi: usize, timing: bool) -> Result<VerificationReport> {
    if n_lo < 7 || n_hi < n_lo {
        return Err(Error::InvalidParameter(format!("star-plus bounds need 7 <= n_lo <= n_hi, got {n_lo}..{n_hi}")));
    }
    let mut rb = ReportBuilder::new("star-plus-bounds", timing);
    rb.param("n_lo", n_lo).param("n_hi", n_hi).param("lower", "13/10n").param("upper", "15/10n");
    for n in n_lo..=n_hi {
        rb.trial();
        let a = n - 1;
        let id = star_plus_id(a);
        let mut sp = match star_plus_spectrum(a) {
            Ok(sp) => sp,
            Err(e) => {
                rb.fail(Counterexample::graph(id, format!("spectral reduction failed: {e}")));
                continue;
            }
        };
        let e3 = int(n as i64 + 3);
        let lower = ratio(13, 10 * n as i64);
        let upper = ratio(15, 10 * n as i64);
        // f > lower ⇔ S2 < e + 3 - lower
        let above = s2_vs(&mut sp, &(&e3 - &lower), Ordering::Less)?;
        let below = s2_vs(&mut sp, &(&e3 - &upper), Ordering::Greater)?;
        let f_iv = sp.top_sum_interval(2, &crate::exact::pow10_inv(15))?.reflect(&e3);
        let q = matrix_from_edges(n, &star_plus_edges(a)?, MatrixKind::Signless)?;
        let float_f = n as f64 + 3.0 - eig_sym(&q)?.top_sum(2);
        if !(above && below) {
            rb.fail(Counterexample::graph(id, format!("f in {f_iv}, bounds ({lower}, {upper})")));
        } else if (float_f - f_iv.mid_f64()).abs() > 1e-8 {
            rb.fail(Counterexample::graph(id, format!("dense f {float_f} disagrees with certified {f_iv}")));
        }
    }
    Ok(rb.finish())
}

/// `f(K⁺_{1,a}) > f(K⁺_{1,a+1})`, read off the largest roots of `P_a`.
pub fn verify_monotone_f(a_lo: usize, a_hi: usize, timing: bool) -> Result<VerificationReport> {
    if a_lo < 3 || a_hi <= a_lo {
        return Err(Error::InvalidParameter(format!("monotonicity needs 3 <= a_lo < a_hi, got {a_lo}..{a_hi}")));
    }
    let mut rb = ReportBuilder::new("monotone-f", timing);
    rb.param("a_lo", a_lo).param("a_hi", a_hi);
    // f(K⁺_{1,a}) = -(largest root of P_a)
    let mut tops = Vec::new();
    for a in a_lo..=a_hi {
        let roots = RealRoots::isolate(&p_a(a)?)?;
        let top = roots.into_roots().into_iter().next().ok_or(Error::NotEnoughRoots { requested: 1, available: 0 })?;
        let mut r = top.value;
        // consistency with the quotient route
        let mut sp = star_plus_spectrum(a)?;
        let f_iv = sp.top_sum_interval(2, &crate::exact::pow10_inv(20))?.reflect(&int(a as i64 + 4));
        r.refine(&crate::exact::pow10_inv(20));
        if !f_iv.overlaps(&r.interval().reflect(&int(0))) {
            rb.fail(Counterexample::graph(
                star_plus_id(a),
                format!("largest root of P_a {} does not match -f {f_iv}", r.interval()),
            ));
        }
        tops.push((a, r));
    }
    for w in 0..tops.len() - 1 {
        rb.trial();
        let (left, right) = tops.split_at_mut(w + 1);
        let (a, ra) = &mut left[w];
        let rb_next = &mut right[0].1;
        if rb_next.compare(ra) != Ordering::Greater {
            rb.fail(Counterexample::graph(
                star_plus_id(*a),
                format!("f(K+_1,{a}) <= f(K+_1,{}): roots {} vs {}", *a + 1, ra.interval(), rb_next.interval()),
            ));
        }
    }
    // f(K⁺_{1,4}) < 2/6 and f(K⁺_{1,5}) < 2/7
    for (a, bound) in [(4usize, ratio(2, 6)), (5, ratio(2, 7))] {
        if let Some((_, r)) = tops.iter_mut().find(|(b, _)| *b == a) {
            rb.trial();
            // f < bound ⇔ root > -bound
            if r.compare_rational(&-bound.clone()) != Ordering::Greater {
                rb.fail(Counterexample::graph(star_plus_id(a), format!("f not below {bound}")));
            }
        }
    }
    Ok(rb.finish())
}

/// Polynomial and integer identities around the star-plus quotient.
pub fn verify_star_plus_identities(a_lo: usize, a_hi: usize, timing: bool) -> Result<VerificationReport> {
    if a_lo < 3 || a_hi < a_lo {
        return Err(Error::InvalidParameter(format!("identities need 3 <= a_lo <= a_hi, got {a_lo}..{a_hi}")));
    }
    let mut rb = ReportBuilder::new("star-plus-identities", timing);
    rb.param("a_lo", a_lo).param("a_hi", a_hi);
    let x_minus_1 = IntPolynomial::from_i64(&[-1, 1]);
    for a in a_lo..=a_hi {
        let ai = a as i64;
        let g = star_plus(a)?;
        let id = g6(&g);
        let cubic = p_qapi(a)?;
        let mut check = |ok: bool, what: String| {
            rb.trial();
            if !ok {
                rb.fail(Counterexample::graph(id.clone(), what));
            }
        };
        let full = charpoly_exact(matrix_of(&g, MatrixKind::Signless).as_matrix())?;
        let product = &cubic * &x_minus_1.pow(a as u32 - 2);
        check(full == product, format!("P_Q = {full}, cubic·(x-1)^(a-2) = {product}"));
        let closed = IntPolynomial::from_i64(&[-4, 3 * (ai + 1), -(ai + 4), 1]);
        check(cubic == closed, format!("quotient polynomial {cubic} differs from {closed}"));
        let at1 = cubic.eval(&BigInt::from(1));
        check(at1 == BigInt::from(2 * (ai - 2)), format!("P(Q_a,1) = {at1}"));
        let at3 = cubic.eval(&BigInt::from(3));
        check(at3 == BigInt::from(-4), format!("P(Q_a,3) = {at3}"));
        let delta = additive_compound(&q_a_pi(a)?, 2)?;
        let af = a as f64;
        let want = Matrix::from_rows(&[vec![af + 3.0, af - 2.0, 0.0], vec![1.0, 4.0, 1.0], vec![0.0, 2.0, af + 1.0]])?;
        check(delta == want, format!("Δ2(Q_a) = {delta}"));
        let shifted = charpoly_int(&IntMatrix::from_matrix(&delta)?).taylor_shift(&BigInt::from(ai + 4));
        let pa = p_a(a)?;
        check(shifted == pa, format!("P(Δ2, x+a+4) = {shifted}, P_a = {pa}"));
        let diff = &p_a(a + 1)? - &pa;
        check(diff == IntPolynomial::from_i64(&[0, 3, 1]), format!("P_(a+1) - P_a = {diff}"));
        let at_m1 = pa.eval(&BigInt::from(-1));
        check(at_m1 == BigInt::from(-2 * (ai - 2)), format!("P_a(-1) = {at_m1}"));
        check(pa.coeffs().iter().all(|c| c > &BigInt::from(0)), format!("P_a = {pa} has a non-positive coefficient"));
    }
    Ok(rb.finish())
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn k_sums(values: &[f64], k: usize) -> Vec<f64> {
    fn rec(values: &[f64], k: usize, start: usize, acc: f64, out: &mut Vec<f64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=values.len() - k {
            rec(values, k - 1, i + 1, acc + values[i], out);
        }
    }
    let mut out = Vec::new();
    rec(values, k, 0, 0.0, &mut out);
    sorted_desc(out)
}

/// Eigenvalues of `Δ_k(A)` against the `k`-fold sums of eigenvalues of `A`.
pub fn verify_delta_spectrum(trials: usize, seed: u64, timing: bool) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("delta-spectrum", timing);
    rb.param("trials", trials).param("seed", seed).param("n_max", 6).param("k", [2, 3]).param("tolerance", DELTA_TOL);
    let mut rng = rng(seed);
    use rand::Rng;
    for _ in 0..trials {
        rb.trial();
        let n = rng.random_range(2..=6usize);
        let k = if n == 2 { 2 } else { rng.random_range(2..=3usize) };
        let a = random_symmetric(&mut rng, n, true);
        let base = eig_sym(&SymMatrix::new(a.clone())?)?;
        let delta = additive_compound(&a, k)?;
        let got = eig_sym(&SymMatrix::new(delta)?)?.values;
        let want = k_sums(&base.values, k);
        let err = got.iter().zip(&want).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        if got.len() != want.len() || err > DELTA_TOL {
            rb.fail(Counterexample::matrices(&[&a], format!("k = {k}, max deviation {err:e}")));
        }
    }
    // diag(1, 2, 3), k = 2 → {5, 4, 3}
    rb.trial();
    let d = Matrix::from_diagonal(&[1.0, 2.0, 3.0]);
    let got = eig_sym(&SymMatrix::new(additive_compound(&d, 2)?)?)?.values;
    if got.iter().zip([5.0, 4.0, 3.0]).any(|(x, y)| (x - y).abs() > DELTA_TOL) {
        rb.fail(Counterexample::matrices(&[&d], format!("Δ2 spectrum {got:?}")));
    }
    for a in 3..=12usize {
        rb.trial();
        let q = q_a_pi(a)?;
        let delta = additive_compound(&q, 2)?;
        let af = a as f64;
        let want = Matrix::from_rows(&[vec![af + 3.0, af - 2.0, 0.0], vec![1.0, 4.0, 1.0], vec![0.0, 2.0, af + 1.0]])?;
        if delta != want {
            rb.fail(Counterexample::matrices(&[&q], format!("Δ2 = {delta}")));
        }
        if a > 10 {
            continue;
        }
        // λ1(Δ2) = q1 + q2 = tr - q3, decided exactly
        rb.trial();
        let top = RealRoots::isolate(&charpoly_exact(&delta)?)?.into_roots().into_iter().next();
        let q_roots = RealRoots::isolate(&p_qapi(a)?)?.into_roots();
        match (top, q_roots.last()) {
            (Some(top), Some(q3)) if q_roots.len() == 3 => {
                let mut lambda = top.value;
                let mut sum = q3.value.reflect(&int(a as i64 + 4));
                if lambda.compare(&mut sum) != Ordering::Equal {
                    rb.fail(Counterexample::matrices(&[&q], "largest eigenvalue of Δ2 differs from q1 + q2".to_string()));
                }
            }
            _ => rb.fail(Counterexample::matrices(&[&q], "unexpected root structure".to_string())),
        }
    }
    Ok(rb.finish())
}

/// Adding an edge interlaces the signless spectra.
pub fn verify_interlacing(trials: usize, n_max: usize, seed: u64, timing: bool) -> Result<VerificationReport> {
    if !(2..=12).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("interlacing needs 2 <= n_max <= 12, got {n_max}")));
    }
    let mut rb = ReportBuilder::new("interlacing", timing);
    rb.param("trials", trials).param("n_max", n_max).param("seed", seed).param("tolerance", INTERLACE_TOL);
    let mut rng = rng(seed);
    use rand::Rng;
    for _ in 0..trials {
        // complete graphs admit no insertion; draw again
        let (n, g, non_edges) = loop {
            let n = rng.random_range(2..=n_max);
            let g = random_graph(&mut rng, n);
            let non_edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
            if !non_edges.is_empty() {
                break (n, g, non_edges);
            }
        };
        rb.trial();
        let (u, v) = non_edges[rng.random_range(0..non_edges.len())];
        let h = g.with_edge(u, v)?;
        let old = spectrum(&g, MatrixKind::Signless)?.values;
        let new = spectrum(&h, MatrixKind::Signless)?.values;
        let ok = (0..n).all(|i| new[i] >= old[i] - INTERLACE_TOL && (i + 1 == n || old[i] >= new[i + 1] - INTERLACE_TOL));
        if !ok {
            rb.fail(Counterexample::graph(
                graph6_encode(&g)?,
                format!("edge ({u},{v}): before {old:?}, after {new:?}"),
            ));
        }
    }
    Ok(rb.finish())
}

/// `S_k(G) <= Σ S_k(G_i)` over random edge-disjoint decompositions, and the
/// matrix form `Σ_{i<=k} λ_i(A+B) <= Σ λ_i(A) + Σ λ_i(B)`.
pub fn verify_subadditivity(
    graph_trials: usize,
    matrix_trials: usize,
    n_max: usize,
    k_max: usize,
    seed: u64,
    timing: bool,
) -> Result<VerificationReport> {
    if !(2..=12).contains(&n_max) || k_max == 0 {
        return Err(Error::InvalidParameter(format!("subadditivity needs 2 <= n_max <= 12 and k_max >= 1, got {n_max}, {k_max}")));
    }
    let mut rb = ReportBuilder::new("subadditivity", timing);
    rb.param("graph_trials", graph_trials)
        .param("matrix_trials", matrix_trials)
        .param("n_max", n_max)
        .param("k_max", k_max)
        .param("seed", seed)
        .param("tolerance", SUBADDITIVE_TOL);
    let mut rng = rng(seed);
    use rand::Rng;
    for _ in 0..graph_trials {
        rb.trial();
        let n = rng.random_range(2..=n_max);
        let g = random_graph(&mut rng, n);
        let r = rng.random_range(2..=3usize);
        let mut parts: Vec<Vec<(usize, usize)>> = vec![Vec::new(); r];
        for &e in g.edges() {
            parts[rng.random_range(0..r)].push(e);
        }
        let pieces: Vec<Graph> = parts.iter().map(|p| g.edge_subgraph(p)).collect::<Result<_>>()?;
        for kind in [MatrixKind::Signless, MatrixKind::Laplacian] {
            let whole = spectrum(&g, kind)?;
            let spectra: Vec<_> = pieces.iter().map(|p| spectrum(p, kind)).collect::<Result<_>>()?;
            for k in 1..=k_max.min(n) {
                let lhs = whole.top_sum(k);
                let rhs: f64 = spectra.iter().map(|s| s.top_sum(k)).sum();
                if lhs > rhs + SUBADDITIVE_TOL {
                    rb.fail(Counterexample::graph(
                        graph6_encode(&g)?,
                        format!("{kind}, k = {k}, parts {parts:?}: {lhs} > {rhs}"),
                    ));
                }
            }
        }
    }
    for _ in 0..matrix_trials {
        rb.trial();
        let n = rng.random_range(1..=n_max);
        let a = random_symmetric(&mut rng, n, false);
        let b = random_symmetric(&mut rng, n, false);
        let sa = eig_sym(&SymMatrix::new(a.clone())?)?;
        let sb = eig_sym(&SymMatrix::new(b.clone())?)?;
        let sab = eig_sym(&SymMatrix::new(&a + &b)?)?;
        for k in 1..=n {
            let (lhs, rhs) = (sab.top_sum(k), sa.top_sum(k) + sb.top_sum(k));
            if lhs > rhs + SUBADDITIVE_TOL {
                rb.fail(Counterexample::matrices(&[&a, &b], format!("k = {k}: {lhs} > {rhs}")));
            }
        }
    }
    Ok(rb.finish())
}
