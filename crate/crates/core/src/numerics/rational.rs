//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! The moment-ratio scans decide strict signs of quantities that can sit very
//! close to zero, so everything threshold-shaped is kept exact and converted
//! to floating point only at the boundary.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (maintained by the backing [`BigRational`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numerator), BigInt::from(denominator)))
    }

    pub fn from_int(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Parses a decimal literal such as `-0.05` or `3` exactly.
    pub fn from_decimal_str(s: &str) -> Option<Self> {
        let s = s.trim();
        let (sign, digits) = match s.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let mut num = BigInt::zero();
        for c in int_part.chars().chain(frac_part.chars()) {
            let d = c.to_digit(10)?;
            num = num * BigInt::from(10) + BigInt::from(d);
        }
        let mut den = BigInt::one();
        for _ in 0..frac_part.len() {
            den *= BigInt::from(10);
        }
        Some(Rational(BigRational::new(BigInt::from(sign) * num, den)))
    }

    pub fn pow(&self, exp: i32) -> Self {
        Rational(self.0.pow(exp))
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("rational convertible to f64")
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(-6, -8);
        assert_eq!(r, Rational::new(3, 4));
        assert_eq!(r.to_string(), "3/4");
        let s = Rational::new(2, -4);
        assert!(s.is_negative());
        assert_eq!(s.to_string(), "-1/2");
    }

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(Rational::from_decimal_str("0.05").unwrap(), Rational::new(1, 20));
        assert_eq!(Rational::from_decimal_str("-3.25").unwrap(), Rational::new(-13, 4));
        assert_eq!(Rational::from_decimal_str("7").unwrap(), Rational::from_int(7));
        assert!(Rational::from_decimal_str("x").is_none());
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(2, 5);
        let b = Rational::new(3, 7);
        assert_eq!(&a + &b, Rational::new(29, 35));
        assert_eq!(&a * &b, Rational::new(6, 35));
        assert_eq!(&a - &b, Rational::new(-1, 35));
        assert_eq!(&a / &b, Rational::new(14, 15));
        assert_eq!(a.pow(2), Rational::new(4, 25));
    }
}
