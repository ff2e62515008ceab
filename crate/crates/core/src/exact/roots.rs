//! Real root isolation with Sturm sequences, and exact comparison of real
//! algebraic numbers given as (squarefree polynomial, isolating interval).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::interval::{int, ratio, RationalInterval};
use super::IntPolynomial;
use crate::error::{Error, Result};

/// Sturm sequence of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    polys: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = p.squarefree_part();
        let mut polys = vec![sf.clone()];
        if sf.degree() > Some(0) {
            polys.push(sf.derivative().primitive_part());
            loop {
                let len = polys.len();
                let (a, b) = (&polys[len - 2], &polys[len - 1]);
                if b.degree() == Some(0) {
                    break;
                }
                // prem = lc(b)^δ a mod b, so -rem has the sign of -sign(lc(b))^δ prem.
                let delta = a.degree().unwrap() - b.degree().unwrap() + 1;
                let prem = a.pseudo_rem(b);
                if prem.is_zero() {
                    break;
                }
                let flip = b.leading().unwrap().is_negative() && delta % 2 == 1;
                let next = if flip { prem } else { -&prem };
                polys.push(next.primitive_part());
            }
        }
        Ok(SturmSequence { polys })
    }

    pub fn squarefree(&self) -> &IntPolynomial {
        &self.polys[0]
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Distinct roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let at_lo = (self.squarefree().sign_at(lo) == Ordering::Equal) as usize;
        at_lo + self.count(lo, hi)
    }

    pub fn total_real_roots(&self) -> usize {
        let neg = Self::variations(self.polys.iter().map(IntPolynomial::sign_at_neg_inf));
        let pos = Self::variations(self.polys.iter().map(IntPolynomial::sign_at_pos_inf));
        neg.saturating_sub(pos)
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, iv: &RationalInterval) -> Result<usize> {
    Ok(SturmSequence::new(p)?.count(iv.lo(), iv.hi()))
}

/// `1 + max |c_i| / |lead|`: every root has absolute value strictly below it.
pub fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().map(Signed::abs).unwrap_or_else(|| BigInt::from(1));
    let d = p.degree().unwrap_or(0);
    let max = p.coeffs()[..d].iter().map(Signed::abs).max().unwrap_or_default();
    BigRational::new(max, lead) + int(1)
}

/// A real algebraic number: the unique root of a squarefree integer polynomial
/// inside `interval`. Either `interval` is a point (an exact rational root),
/// or its endpoints are not roots and the polynomial changes sign across it.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: IntPolynomial,
    interval: RationalInterval,
}

impl AlgebraicReal {
    pub fn from_rational(x: BigRational) -> Self {
        let poly = IntPolynomial::new(vec![-x.numer().clone(), x.denom().clone()]);
        AlgebraicReal { poly, interval: RationalInterval::point(x) }
    }

    /// Caller guarantees `poly` squarefree with exactly one root in `interval`
    /// and non-root endpoints (unless the interval is a point root).
    pub(crate) fn from_parts(poly: IntPolynomial, interval: RationalInterval) -> Self {
        AlgebraicReal { poly, interval }
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn interval(&self) -> &RationalInterval {
        &self.interval
    }

    pub fn is_rational(&self) -> bool {
        self.interval.is_point()
    }

    pub fn approx(&self) -> f64 {
        self.interval.mid_f64()
    }

    /// Halves the interval, or collapses it to the root if the midpoint is one.
    pub fn bisect(&mut self) {
        if self.interval.is_point() || self.snap_rational() {
            return;
        }
        let mid = self.interval.midpoint();
        let s_mid = self.poly.sign_at(&mid);
        if s_mid == Ordering::Equal {
            self.interval = RationalInterval::point(mid);
            return;
        }
        let s_lo = self.poly.sign_at(self.interval.lo());
        self.interval = if s_lo == s_mid {
            RationalInterval::new(mid, self.interval.hi().clone())
        } else {
            RationalInterval::new(self.interval.lo().clone(), mid)
        }
        .expect("midpoint lies inside the interval");
    }

    /// Rational roots have the form `k / lc`; once the bracket is narrower
    /// than `1 / |lc|` it holds at most one such candidate.
    fn snap_rational(&mut self) -> bool {
        let lc = self.poly.leading().expect("non-zero polynomial").abs();
        let lc_q = BigRational::from_integer(lc.clone());
        if self.interval.width() * &lc_q >= int(1) {
            return false;
        }
        let k = (self.interval.lo() * &lc_q).ceil();
        let candidate = k / lc_q;
        if &candidate <= self.interval.hi() && self.poly.sign_at(&candidate) == Ordering::Equal {
            self.interval = RationalInterval::point(candidate);
            return true;
        }
        false
    }

    pub fn refine(&mut self, width: &BigRational) {
        while &self.interval.width() > width {
            self.bisect();
        }
    }

    /// `c - self`.
    pub fn reflect(&self, c: &BigRational) -> Self {
        AlgebraicReal {
            poly: self.poly.reflect_about(c).normalized(),
            interval: self.interval.reflect(c),
        }
    }

    /// `self + d` for an integer shift.
    pub fn shift(&self, d: &BigInt) -> Self {
        AlgebraicReal {
            poly: self.poly.taylor_shift(&-d).normalized(),
            interval: self.interval.shift(&BigRational::from_integer(d.clone())),
        }
    }

    fn contains_root(&self, x: &BigRational) -> bool {
        self.interval.contains(x) && self.poly.sign_at(x) == Ordering::Equal
    }

    fn ordering_by_interval(&self, other: &Self) -> Option<Ordering> {
        let (a, b) = (&self.interval, &other.interval);
        if a.is_point() && b.is_point() {
            return Some(a.lo().cmp(b.lo()));
        }
        let below = |x: &RationalInterval, y: &RationalInterval| {
            x.hi() < y.lo() || (x.hi() == y.lo() && !(x.is_point() && y.is_point()))
        };
        if below(a, b) {
            Some(Ordering::Less)
        } else if below(b, a) {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    fn equals(&self, other: &Self) -> bool {
        if self.is_rational() {
            return other.contains_root(self.interval.lo());
        }
        if other.is_rational() {
            return self.contains_root(other.interval.lo());
        }
        let g = self.poly.gcd(&other.poly);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        let lo = self.interval.lo().max(other.interval.lo());
        let hi = self.interval.hi().min(other.interval.hi());
        if lo > hi {
            return false;
        }
        SturmSequence::new(&g).expect("non-zero gcd").count_closed(lo, hi) > 0
    }

    /// Exact comparison. Intervals of both operands may be refined.
    pub fn compare(&mut self, other: &mut Self) -> Ordering {
        let mut checked_equal = false;
        loop {
            if let Some(o) = self.ordering_by_interval(other) {
                return o;
            }
            if !checked_equal {
                checked_equal = true;
                if self.equals(other) {
                    return Ordering::Equal;
                }
            }
            if self.interval.width() >= other.interval.width() {
                self.bisect();
            } else {
                other.bisect();
            }
        }
    }

    pub fn compare_rational(&mut self, x: &BigRational) -> Ordering {
        self.compare(&mut AlgebraicReal::from_rational(x.clone()))
    }
}

/// A distinct real root with its multiplicity.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub value: AlgebraicReal,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn interval(&self) -> &RationalInterval {
        self.value.interval()
    }
}

/// All distinct real roots of a polynomial, largest first.
#[derive(Clone, Debug)]
pub struct RealRoots {
    roots: Vec<IsolatedRoot>,
}

impl RealRoots {
    pub fn isolate(p: &IntPolynomial) -> Result<Self> {
        let sturm = SturmSequence::new(p)?;
        let sf = sturm.squarefree().clone();
        let bound = cauchy_bound(&sf);
        let mut found: Vec<RationalInterval> = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            match sturm.count(&lo, &hi) {
                0 => {}
                1 => found.push(RationalInterval::new(lo, hi).unwrap()),
                _ => {
                    let mid = split_point(&sf, &lo, &hi);
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        found.sort_by(|a, b| b.lo().cmp(a.lo()));

        // Roots of gcd(p, p', ..., p^(j)) are exactly the roots of multiplicity > j.
        let mut chain = Vec::new();
        let mut g = p.normalized();
        while g.degree().unwrap_or(0) > 0 {
            chain.push(SturmSequence::new(&g)?);
            g = g.gcd(&g.derivative());
        }
        let roots = found
            .into_iter()
            .map(|iv| {
                let multiplicity = chain
                    .iter()
                    .filter(|s| s.count_closed(iv.lo(), iv.hi()) > 0)
                    .count();
                IsolatedRoot { value: AlgebraicReal::from_parts(sf.clone(), iv), multiplicity }
            })
            .collect();
        Ok(RealRoots { roots })
    }

    pub fn roots(&self) -> &[IsolatedRoot] {
        &self.roots
    }

    pub fn roots_mut(&mut self) -> &mut [IsolatedRoot] {
        &mut self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn into_roots(self) -> Vec<IsolatedRoot> {
        self.roots
    }
}

/// A non-root split point strictly inside `(lo, hi)`.
fn split_point(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> BigRational {
    let width = hi - lo;
    for denom in 2i64.. {
        for num in 1..denom {
            let candidate = lo + &width * ratio(num, denom);
            if p.sign_at(&candidate) != Ordering::Equal {
                return candidate;
            }
        }
    }
    unreachable!()
}

/// The `count` largest distinct real roots, each bracketed to at most `width`.
pub fn isolate_top_roots(
    p: &IntPolynomial,
    count: usize,
    width: &BigRational,
) -> Result<Vec<IsolatedRoot>> {
    let all = RealRoots::isolate(p)?;
    if all.len() < count {
        return Err(Error::NotEnoughRoots { requested: count, available: all.len() });
    }
    let mut top: Vec<_> = all.into_roots().into_iter().take(count).collect();
    for r in &mut top {
        r.value.refine(width);
    }
    Ok(top)
}
