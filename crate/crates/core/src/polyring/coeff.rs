//! Exact rational coefficients.
//!
//! Values that are integers fitting in an `i64` are kept unboxed; everything
//! else falls back to `BigRational`. The representation is normalized so that
//! equality and hashing are structural.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug)]
enum Repr {
    Int(i64),
    Big(BigRational),
}

/// An exact rational number.
#[derive(Clone, Debug)]
pub struct Coeff(Repr);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational literal {0:?}")]
pub struct ParseCoeffError(pub String);

impl Coeff {
    pub fn from_big(r: BigRational) -> Coeff {
        if r.denom().is_one() {
            if let Some(i) = r.numer().to_i64() {
                return Coeff(Repr::Int(i));
            }
        }
        Coeff(Repr::Big(r))
    }

    pub fn from_bigint(i: BigInt) -> Coeff {
        match i.to_i64() {
            Some(v) => Coeff(Repr::Int(v)),
            None => Coeff(Repr::Big(BigRational::from_integer(i))),
        }
    }

    pub fn ratio(num: i64, den: i64) -> Coeff {
        assert!(den != 0, "zero denominator");
        Coeff::from_big(BigRational::new(num.into(), den.into()))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Int(i) => BigRational::from_integer((*i).into()),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Int(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Int(1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Int(_) => true,
            Repr::Big(r) => r.denom().is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Int(i) => *i < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Int(i) => Some(*i),
            Repr::Big(_) => None,
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Int(i) => (*i).into(),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Int(_) => BigInt::one(),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Coeff {
        let mut acc = Coeff::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn recip(&self) -> Coeff {
        assert!(!self.is_zero(), "reciprocal of zero");
        Coeff::from_big(self.to_big().recip())
    }

    pub fn one() -> Coeff {
        Coeff(Repr::Int(1))
    }

    pub fn zero() -> Coeff {
        Coeff(Repr::Int(0))
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff(Repr::Int(v))
    }
}

impl From<i32> for Coeff {
    fn from(v: i32) -> Self {
        Coeff(Repr::Int(v as i64))
    }
}

impl From<BigRational> for Coeff {
    fn from(r: BigRational) -> Self {
        Coeff::from_big(r)
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => a == b,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Coeff {}

impl Hash for Coeff {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Int(i) => {
                0u8.hash(state);
                i.hash(state)
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state)
            }
        }
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        if let (Repr::Int(a), Repr::Int(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_add(*b) {
                return Coeff(Repr::Int(s));
            }
        }
        Coeff::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        if let (Repr::Int(a), Repr::Int(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_sub(*b) {
                return Coeff(Repr::Int(s));
            }
        }
        Coeff::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        if let (Repr::Int(a), Repr::Int(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_mul(*b) {
                return Coeff(Repr::Int(s));
            }
        }
        Coeff::from_big(self.to_big() * rhs.to_big())
    }
}

impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        assert!(!rhs.is_zero(), "division by zero");
        if let (Repr::Int(a), Repr::Int(b)) = (&self.0, &rhs.0) {
            if a.checked_rem(*b) == Some(0) {
                if let Some(q) = a.checked_div(*b) {
                    return Coeff(Repr::Int(q));
                }
            }
        }
        Coeff::from_big(self.to_big() / rhs.to_big())
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match &self.0 {
            Repr::Int(i) => match i.checked_neg() {
                Some(v) => Coeff(Repr::Int(v)),
                None => Coeff::from_big(-self.to_big()),
            },
            Repr::Big(r) => Coeff::from_big(-r),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: &Coeff) -> Coeff { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        if let (Repr::Int(a), Repr::Int(b)) = (&mut self.0, &rhs.0) {
            if let Some(s) = a.checked_add(*b) {
                *a = s;
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        if let (Repr::Int(a), Repr::Int(b)) = (&mut self.0, &rhs.0) {
            if let Some(s) = a.checked_sub(*b) {
                *a = s;
                return;
            }
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Coeff> for Coeff {
    fn mul_assign(&mut self, rhs: &Coeff) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Int(i) => write!(f, "{i}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for Coeff {
    type Err = ParseCoeffError;

    /// Accepts `"p"` or `"p/q"` with optional leading `-` on `p`; no decimals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCoeffError(s.to_string());
        let digits = |t: &str| {
            let body = t.strip_prefix('-').unwrap_or(t);
            !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
        };
        match s.split_once('/') {
            None => {
                if !digits(s) {
                    return Err(err());
                }
                Ok(Coeff::from_bigint(s.parse::<BigInt>().map_err(|_| err())?))
            }
            Some((p, q)) => {
                if !digits(p) || q.is_empty() || !q.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err());
                }
                let num: BigInt = p.parse().map_err(|_| err())?;
                let den: BigInt = q.parse().map_err(|_| err())?;
                if den.is_zero() {
                    return Err(err());
                }
                Ok(Coeff::from_big(BigRational::new(num, den)))
            }
        }
    }
}

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
