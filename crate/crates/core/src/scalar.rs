//! Exact rational scalars in canonical reduced form.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An arbitrary-precision rational number.
///
/// The denominator is always positive and coprime to the numerator, and zero
/// is stored as `0/1`, so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(value: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom`, reduced. Returns `None` for a zero denominator.
    pub fn from_ratio(numer: i64, denom: i64) -> Option<Self> {
        Self::from_big_ratio(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn from_big_ratio(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        Some(Scalar(BigRational::new(numer, denom)))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Scalar(&self.0 * &self.0)
    }

    /// Exact division; `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        if rhs.is_zero() {
            None
        } else {
            Some(Scalar(&self.0 / &rhs.0))
        }
    }

    /// `(-1)^exponent` as a scalar.
    pub fn sign_of_power(exponent: usize) -> Scalar {
        if exponent.is_multiple_of(2) {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }
}

/// Parses the scalar text form: an optionally signed run of decimal digits,
/// optionally followed by `/` and an optionally signed, nonzero run of digits.
/// No whitespace is allowed anywhere.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    fn signed_digits(part: &str, whole: &str) -> Result<BigInt> {
        let digits = part
            .strip_prefix('-')
            .or_else(|| part.strip_prefix('+'))
            .unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("malformed scalar {whole:?}")));
        }
        let magnitude = BigInt::parse_bytes(digits.as_bytes(), 10)
            .ok_or_else(|| Error::Parse(format!("malformed scalar {whole:?}")))?;
        Ok(if part.starts_with('-') { -magnitude } else { magnitude })
    }

    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (signed_digits(n, text)?, signed_digits(d, text)?),
        None => (signed_digits(text, text)?, BigInt::one()),
    };
    Scalar::from_big_ratio(numer, denom)
        .ok_or_else(|| Error::Parse(format!("zero denominator in {text:?}")))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::from_int(value)
    }
}

impl From<BigInt> for Scalar {
    fn from(value: BigInt) -> Self {
        Scalar(BigRational::from_integer(value))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like integer division; use `checked_div` otherwise.
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}
