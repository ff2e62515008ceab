use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
/// Trailing zero coefficients are always trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - r`
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)` for rational `x`, computed without leaving the integers.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let (a, b) = (x.numer(), x.denom());
        // b^d p(a/b) = Σ c_i a^i b^(d-i); the denominator is kept positive.
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc.sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn sign_at_pos_inf(&self) -> Ordering {
        self.leading().map_or(Ordering::Equal, |c| c.cmp(&BigInt::zero()))
    }

    pub fn sign_at_neg_inf(&self) -> Ordering {
        let s = self.sign_at_pos_inf();
        if self.degree().is_some_and(|d| d % 2 == 1) {
            s.reverse()
        } else {
            s
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Primitive with a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        if p.leading().is_some_and(Signed::is_negative) {
            -&p
        } else {
            p
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) a mod d` (exactly that power,
    /// so the sign relation to the true remainder is known).
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by the zero polynomial");
        let lc = d.leading().unwrap();
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < dd {
            return self.clone();
        }
        let mut r = self.coeffs.clone();
        for shift in (0..=da - dd).rev() {
            let top = r[shift + dd].clone();
            for c in r.iter_mut().take(shift + dd + 1) {
                *c *= lc;
            }
            if !top.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[i + shift] -= &top * dc;
                }
            }
        }
        Self::new(r)
    }

    /// Exact quotient over the integers, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return Some(Self::zero());
        };
        if dr < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr - dd + 1];
        for shift in (0..=dr - dd).rev() {
            let top = &r[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[i + shift] -= &quot * dc;
            }
            q[shift] = quot;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Normalized gcd (primitive, positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.normalized(), other.normalized());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).normalized();
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// `p / gcd(p, p')`, normalized.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        self.normalized().div_exact(&g).expect("gcd divides its argument").normalized()
    }

    /// `γ^d p((α + βx) / γ)` with `d = deg p`; integer coefficients for any
    /// integer `α, β` and non-zero `γ`.
    pub fn compose_affine(&self, alpha: &BigInt, beta: &BigInt, gamma: &BigInt) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let inner = Self::new(vec![alpha.clone(), beta.clone()]);
        let mut out = Self::zero();
        let mut inner_pow = Self::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            let gpow = num_traits::pow(gamma.clone(), d - i);
            out = &out + &inner_pow.scale(&(c * gpow));
            inner_pow = &inner_pow * &inner;
        }
        out
    }

    /// `p(x + a)`.
    pub fn taylor_shift(&self, a: &BigInt) -> Self {
        self.compose_affine(a, &BigInt::one(), &BigInt::one())
    }

    /// Integer polynomial whose roots are `c - r` for every root `r` of `self`.
    pub fn reflect_about(&self, c: &BigRational) -> Self {
        self.compose_affine(c.numer(), &-c.denom(), c.denom())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
