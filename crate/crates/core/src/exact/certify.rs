//! Certified brackets for eigenvalue sums of graph matrices.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::charpoly::{charpoly_exact, charpoly_int, IntMatrix};
use super::interval::{int, RationalInterval};
use super::roots::{AlgebraicReal, IsolatedRoot, RealRoots};
use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{additive_compound, Matrix};
use crate::spectral::{matrix_of, MatrixKind};

/// Exact spectrum of an integer matrix with real eigenvalues: the
/// characteristic polynomial and its isolated distinct roots, largest first.
#[derive(Clone, Debug)]
pub struct ExactSpectrum {
    charpoly: IntPolynomial,
    roots: Vec<IsolatedRoot>,
}

impl ExactSpectrum {
    pub fn from_charpoly(charpoly: IntPolynomial) -> Result<Self> {
        let degree = charpoly.degree().ok_or(Error::ZeroPolynomial)?;
        let roots = RealRoots::isolate(&charpoly)?;
        if roots.total_multiplicity() != degree {
            return Err(Error::InvalidParameter(format!(
                "characteristic polynomial {charpoly} has non-real roots"
            )));
        }
        Ok(ExactSpectrum { charpoly, roots: roots.into_roots() })
    }

    pub fn of_matrix(m: &Matrix) -> Result<Self> {
        Self::from_charpoly(charpoly_exact(m)?)
    }

    pub fn of_graph(g: &Graph, kind: MatrixKind) -> Result<Self> {
        Self::of_matrix(matrix_of(g, kind).as_matrix())
    }

    pub fn charpoly(&self) -> &IntPolynomial {
        &self.charpoly
    }

    pub fn order(&self) -> usize {
        self.charpoly.degree().unwrap_or(0)
    }

    pub fn distinct(&self) -> &[IsolatedRoot] {
        &self.roots
    }

    /// Index into `distinct()` of the `i`-th largest eigenvalue (0-based,
    /// counted with multiplicity).
    pub fn distinct_index(&self, i: usize) -> Option<usize> {
        let mut seen = 0;
        for (idx, r) in self.roots.iter().enumerate() {
            seen += r.multiplicity;
            if i < seen {
                return Some(idx);
            }
        }
        None
    }

    /// The `i`-th largest eigenvalue (0-based, with multiplicity).
    pub fn eigenvalue(&self, i: usize) -> Option<AlgebraicReal> {
        self.distinct_index(i).map(|idx| self.roots[idx].value.clone())
    }

    /// Bracket for the sum of the `k` largest eigenvalues; every root involved
    /// is refined to `width`, so the result is at most `k * width` wide.
    pub fn top_sum_interval(&mut self, k: usize, width: &BigRational) -> Result<RationalInterval> {
        if k == 0 || k > self.order() {
            return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={}", self.order())));
        }
        let mut remaining = k;
        let mut sum = RationalInterval::point(int(0));
        for root in &mut self.roots {
            if remaining == 0 {
                break;
            }
            let take = root.multiplicity.min(remaining);
            root.value.refine(width);
            for _ in 0..take {
                sum = sum.add(root.value.interval());
            }
            remaining -= take;
        }
        Ok(sum)
    }

    /// Exact sign of `λ1 + λ2 - c`.
    pub fn compare_top_two_sum(&mut self, c: &BigRational) -> Result<Ordering> {
        if self.order() < 2 {
            return Err(Error::InvalidParameter("need at least two eigenvalues".into()));
        }
        let first = &self.roots[0];
        if first.multiplicity >= 2 {
            let mut r1 = first.value.clone();
            return Ok(r1.compare_rational(&(c / int(2))));
        }
        // λ1 + λ2 ⋛ c  ⇔  λ2 ⋛ c - λ1
        let mut r2 = self.roots[1].value.clone();
        let mut reflected = self.roots[0].value.reflect(c);
        Ok(r2.compare(&mut reflected))
    }
}

/// Bracket of `q1 + q2` of the signless Laplacian, at most `2 * width` wide.
pub fn certify_s2(g: &Graph, width: &BigRational) -> Result<RationalInterval> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter(format!("S2 needs n >= 2, got {}", g.n())));
    }
    ExactSpectrum::of_graph(g, MatrixKind::Signless)?.top_sum_interval(2, width)
}

/// Bracket of `f = e + 3 - S2`.
pub fn certify_f(g: &Graph, width: &BigRational) -> Result<RationalInterval> {
    let s2 = certify_s2(g, width)?;
    Ok(s2.reflect(&int(g.edge_count() as i64 + 3)))
}

/// Exact handle on `f(G)` that supports refinement and exact comparison
/// against rationals and against other graphs.
#[derive(Clone, Debug)]
pub struct CertifiedF {
    edges: i64,
    spectrum: ExactSpectrum,
    interval: RationalInterval,
    s2_root: Option<AlgebraicReal>,
    q: Matrix,
}

impl CertifiedF {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.n() < 2 {
            return Err(Error::InvalidParameter(format!("f needs n >= 2, got {}", g.n())));
        }
        let q = matrix_of(g, MatrixKind::Signless).into_matrix();
        let mut spectrum = ExactSpectrum::of_matrix(&q)?;
        let edges = g.edge_count() as i64;
        let interval = spectrum.top_sum_interval(2, &super::pow10_inv(12))?.reflect(&int(edges + 3));
        Ok(CertifiedF { edges, spectrum, interval, s2_root: None, q })
    }

    pub fn interval(&self) -> &RationalInterval {
        &self.interval
    }

    pub fn edges(&self) -> i64 {
        self.edges
    }

    pub fn refine(&mut self, width: &BigRational) -> &RationalInterval {
        let half = width / int(2);
        let s2 = self.spectrum.top_sum_interval(2, &half).expect("n >= 2 checked on construction");
        self.interval = s2.reflect(&int(self.edges + 3));
        &self.interval
    }

    pub fn s2_interval(&self) -> RationalInterval {
        self.interval.reflect(&int(self.edges + 3))
    }

    /// Exact sign of `f - c`.
    pub fn compare_rational(&mut self, c: &BigRational) -> Result<Ordering> {
        // f ⋛ c  ⇔  S2 ⋚ e + 3 - c
        let target = int(self.edges + 3) - c;
        Ok(self.spectrum.compare_top_two_sum(&target)?.reverse())
    }

    /// S2 as a single algebraic number: the largest eigenvalue of `Δ2(Q)`.
    fn s2_algebraic(&mut self) -> Result<AlgebraicReal> {
        if self.s2_root.is_none() {
            let delta = additive_compound(&self.q, 2)?;
            let poly = charpoly_int(&IntMatrix::from_matrix(&delta)?);
            let top = RealRoots::isolate(&poly)?.into_roots().into_iter().next().ok_or(Error::NotEnoughRoots {
                requested: 1,
                available: 0,
            })?;
            self.s2_root = Some(top.value);
        }
        Ok(self.s2_root.clone().unwrap())
    }

    /// Exact ordering of `f(self)` against `f(other)`. Brackets are refined
    /// first; persistent overlap is settled through the `Δ2` spectra.
    pub fn compare(&mut self, other: &mut CertifiedF) -> Result<Ordering> {
        let mut width = super::pow10_inv(12);
        for _ in 0..4 {
            if self.interval.is_point() && self.interval == other.interval {
                return Ok(Ordering::Equal);
            }
            if self.interval.strictly_below(&other.interval) {
                return Ok(Ordering::Less);
            }
            if other.interval.strictly_below(&self.interval) {
                return Ok(Ordering::Greater);
            }
            width *= super::pow10_inv(6);
            self.refine(&width);
            other.refine(&width);
        }
        // f_a ⋛ f_b  ⇔  S2_b - e_b ⋛ S2_a - e_a
        let mut a = self.s2_algebraic()?.shift(&BigInt::from(-self.edges));
        let mut b = other.s2_algebraic()?.shift(&BigInt::from(-other.edges));
        Ok(b.compare(&mut a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::interval::{ratio, to_f64};
    use crate::exact::pow10_inv;
    use crate::graph::{complete, path, star_plus};

    #[test]
    fn s2_of_small_graphs() {
        let w = pow10_inv(10);
        assert_eq!(certify_s2(&complete(2).unwrap(), &w).unwrap(), RationalInterval::from_integer(2));
        assert_eq!(certify_s2(&complete(3).unwrap(), &w).unwrap(), RationalInterval::from_integer(5));
        let kp = certify_s2(&star_plus(3).unwrap(), &w).unwrap();
        let want = 2.0 + (5.0 + 17f64.sqrt()) / 2.0;
        assert!(kp.width() <= &w * int(2));
        let (lo, hi) = kp.to_f64();
        assert!(lo - 1e-12 <= want && want <= hi + 1e-12);
        assert!(certify_s2(&Graph::empty(1).unwrap(), &w).is_err());
    }

    #[test]
    fn f_of_small_graphs() {
        let w = pow10_inv(10);
        assert_eq!(certify_f(&complete(3).unwrap(), &w).unwrap(), RationalInterval::from_integer(1));
        assert_eq!(certify_f(&complete(2).unwrap(), &w).unwrap(), RationalInterval::from_integer(2));
        let f = certify_f(&star_plus(3).unwrap(), &w).unwrap();
        let want = (5.0 - 17f64.sqrt()) / 2.0;
        assert!((to_f64(f.lo()) - want).abs() < 1e-9 && (to_f64(f.hi()) - want).abs() < 1e-9);
    }

    #[test]
    fn exact_top_two_sum_comparisons() {
        // Q(K3) spectrum (4, 1, 1): S2 = 5
        let mut s = ExactSpectrum::of_graph(&complete(3).unwrap(), MatrixKind::Signless).unwrap();
        assert_eq!(s.compare_top_two_sum(&int(5)).unwrap(), Ordering::Equal);
        assert_eq!(s.compare_top_two_sum(&ratio(51, 10)).unwrap(), Ordering::Less);
        // 2K2: (2, 2, 0, 0), double top root
        let two_k2 = complete(2).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
        let mut s = ExactSpectrum::of_graph(&two_k2, MatrixKind::Signless).unwrap();
        assert_eq!(s.compare_top_two_sum(&int(4)).unwrap(), Ordering::Equal);
        assert_eq!(s.compare_top_two_sum(&int(5)).unwrap(), Ordering::Less);
        // Laplacian of K3: (3, 3, 0), S2 = e + 3 = 6
        let mut s = ExactSpectrum::of_graph(&complete(3).unwrap(), MatrixKind::Laplacian).unwrap();
        assert_eq!(s.compare_top_two_sum(&int(6)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn certified_f_ordering() {
        let mut a = CertifiedF::new(&star_plus(3).unwrap()).unwrap();
        let mut b = CertifiedF::new(&path(5).unwrap()).unwrap();
        assert_eq!(a.compare(&mut b).unwrap(), Ordering::Less);
        let mut c = CertifiedF::new(&star_plus(3).unwrap().relabel(&[3, 1, 0, 2])).unwrap();
        assert_eq!(a.compare(&mut c).unwrap(), Ordering::Equal);
        assert_eq!(b.compare_rational(&ratio(2, 5)).unwrap(), Ordering::Greater);
    }
}
