//! Exact integers and rationals: the scalar substrate for every other
//! module. Slopes, stability parameters and critical values are all reduced
//! fractions of arbitrary-precision integers, and every inequality between
//! them is decided by exact cross-multiplication.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("bezout requires (a, b) != (0, 0)")]
    BezoutUndefined,
    #[error("modulus must be >= 1")]
    InvalidModulus,
    #[error("{a} is not invertible mod {m}")]
    NotInvertible { a: BigInt, m: BigInt },
    #[error("cannot parse `{0}` as a rational")]
    Parse(String),
}

/// An exact rational number, stored reduced with positive denominator.
///
/// The total order agrees with cross-multiplication: `a/b < c/d` iff
/// `a*d < c*b` for positive denominators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Canonical form of `p/q`. Fails only when `q = 0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, ArithError> {
        let q = q.into();
        if q.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(p.into(), q)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Exact halving, handy for picking points strictly inside an interval.
    pub fn half(&self) -> Self {
        Rational(&self.0 / BigRational::from_integer(BigInt::from(2)))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    /// Parses `p/q` or a bare integer `p`, in the same format [`Rational`]
    /// prints.
    fn from_str(s: &str) -> Result<Self, ArithError> {
        let parse_int = |t: &str| -> Result<BigInt, ArithError> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| ArithError::Parse(s.to_string()))
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((p, q)) => Rational::new(parse_int(p)?, parse_int(q)?),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// A rational extended by a single point at positive infinity, which
/// compares greater than every finite value. Used for parameter ranges that
/// are unbounded above.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    PositiveInfinity,
}

impl ExtendedRational {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::PositiveInfinity)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            ExtendedRational::PositiveInfinity => None,
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(r: Rational) -> Self {
        ExtendedRational::Finite(r)
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), PositiveInfinity) => Ordering::Less,
            (PositiveInfinity, Finite(_)) => Ordering::Greater,
            (PositiveInfinity, PositiveInfinity) => Ordering::Equal,
        }
    }
}

impl PartialEq<Rational> for ExtendedRational {
    fn eq(&self, other: &Rational) -> bool {
        matches!(self, ExtendedRational::Finite(r) if r == other)
    }
}

impl PartialOrd<Rational> for ExtendedRational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        match self {
            ExtendedRational::Finite(r) => r.partial_cmp(other),
            ExtendedRational::PositiveInfinity => Some(Ordering::Greater),
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) => r.fmt(f),
            ExtendedRational::PositiveInfinity => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Non-negative gcd on machine integers; `gcd(0, 0) = 0` and `gcd(n, 0) = |n|`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

/// Canonical residue of `x` mod `m`, in `[0, m)`. Requires `m >= 1`.
pub fn mod_residue(x: i64, m: i64) -> i64 {
    debug_assert!(m >= 1);
    ((x % m) + m) % m
}

/// Extended Euclid: `(g, x, y)` with `g = gcd(a, b) > 0` and `a*x + b*y = g`.
pub fn bezout(
    a: impl Into<BigInt>,
    b: impl Into<BigInt>,
) -> Result<(BigInt, BigInt, BigInt), ArithError> {
    let (a, b) = (a.into(), b.into());
    if a.is_zero() && b.is_zero() {
        return Err(ArithError::BezoutUndefined);
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_x, mut x) = (BigInt::one(), BigInt::zero());
    let (mut old_y, mut y) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next);
        let next = &old_x - &q * &x;
        old_x = std::mem::replace(&mut x, next);
        let next = &old_y - &q * &y;
        old_y = std::mem::replace(&mut y, next);
    }
    if old_r.is_negative() {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    debug_assert_eq!(&a * &old_x + &b * &old_y, old_r);
    Ok((old_r, old_x, old_y))
}

/// The unique `x` in `[0, m)` with `a*x = 1 (mod m)`. Requires `m >= 1` and
/// `gcd(a, m) = 1`.
pub fn mod_inverse(a: impl Into<BigInt>, m: impl Into<BigInt>) -> Result<BigInt, ArithError> {
    let (a, m) = (a.into(), m.into());
    if m < BigInt::one() {
        return Err(ArithError::InvalidModulus);
    }
    let (g, x, _) = bezout(a.clone(), m.clone())?;
    if !g.is_one() {
        return Err(ArithError::NotInvertible { a, m });
    }
    let r = x % &m;
    Ok(if r.is_negative() { r + &m } else { r })
}
