use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntervalRepr", into = "IntervalRepr")]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidParameter(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn from_integer(x: i64) -> Self {
        Self::point(int(x))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn strictly_below(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn shift(&self, d: &BigRational) -> Self {
        RationalInterval { lo: &self.lo + d, hi: &self.hi + d }
    }

    /// `{ c - x : x ∈ self }`
    pub fn reflect(&self, c: &BigRational) -> Self {
        RationalInterval { lo: c - &self.hi, hi: c - &self.lo }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.lo), to_f64(&self.hi))
    }

    pub fn mid_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `10^-digits` as an exact rational.
pub fn pow10_inv(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize))
}

/// Exact binary value of a finite `f64`.
pub fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x)
        .ok_or_else(|| Error::InvalidParameter(format!("{x} is not a finite number")))
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_f64();
        let digits = f.precision().unwrap_or(6);
        if self.is_point() {
            write!(f, "{lo:.digits$} (exact {})", self.lo)
        } else {
            write!(f, "[{lo:.digits$}, {hi:.digits$}]")
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Exact {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    lo: Exact,
    hi: Exact,
    lo_approx: f64,
    hi_approx: f64,
}

impl From<RationalInterval> for IntervalRepr {
    fn from(iv: RationalInterval) -> Self {
        let exact = |x: &BigRational| Exact { num: x.numer().to_string(), den: x.denom().to_string() };
        IntervalRepr {
            lo: exact(&iv.lo),
            hi: exact(&iv.hi),
            lo_approx: to_f64(&iv.lo),
            hi_approx: to_f64(&iv.hi),
        }
    }
}

impl TryFrom<IntervalRepr> for RationalInterval {
    type Error = Error;

    fn try_from(r: IntervalRepr) -> Result<Self> {
        RationalInterval::new(parse_exact(&r.lo)?, parse_exact(&r.hi)?)
    }
}

/// Serde adapter writing a rational as `{num, den}` decimal strings.
pub mod rational_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        Exact { num: x.numer().to_string(), den: x.denom().to_string() }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let e = Exact::deserialize(d)?;
        parse_exact(&e).map_err(serde::de::Error::custom)
    }
}

fn parse_exact(e: &Exact) -> Result<BigRational> {
    let num: BigInt = e.num.parse().map_err(|_| Error::InvalidParameter(format!("bad numerator {}", e.num)))?;
    let den: BigInt = e.den.parse().map_err(|_| Error::InvalidParameter(format!("bad denominator {}", e.den)))?;
    if den == BigInt::from(0) {
        return Err(Error::InvalidParameter("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}
