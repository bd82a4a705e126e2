//! Arbitrary-precision rationals kept in lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ArithOp, ArithmeticError};

/// A reduced fraction `numerator / denominator` with `denominator >= 1`.
///
/// Every constructor normalizes, so two equal values always share one
/// representation and `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, ArithmeticError> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self(BigRational::new(numerator.into(), denominator)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> Ordering {
        match self.0.numer().sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        if rhs.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self, ArithmeticError> {
        Self::one().checked_div(self)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, exp: i32) -> Result<Self, ArithmeticError> {
        if exp < 0 && self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self(num_traits::Pow::pow(&self.0, exp)))
    }

    pub fn apply(&self, op: ArithOp, rhs: &Self) -> Result<Self, ArithmeticError> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.numerator().div_floor(self.denominator())
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        -((-self.numerator()).div_floor(self.denominator()))
    }

    /// Rounds `self * 10^digits` to the nearest integer, ties to even.
    pub(crate) fn round_scaled_half_even(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = self.numerator() * scale;
        let den = self.denominator();
        let (q, r) = scaled.div_mod_floor(den);
        let twice = &r * 2u32;
        match twice.cmp(den) {
            Ordering::Less => q,
            Ordering::Greater => q + 1u32,
            Ordering::Equal => {
                if q.is_even() {
                    q
                } else {
                    q + 1u32
                }
            }
        }
    }

    /// Renders with exactly `digits` fractional digits, round-half-even.
    pub fn to_decimal(&self, digits: u32) -> String {
        let negative = self.signum() == Ordering::Less;
        let magnitude = self.abs().round_scaled_half_even(digits);
        format_scaled(negative, magnitude.magnitude(), digits)
    }

    /// A short scientific rendering that never understates the value:
    /// the mantissa is rounded away from zero. Used for printing bounds.
    pub fn to_sci_upper(&self, significant: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let significant = significant.max(1);
        let negative = self.signum() == Ordering::Less;
        let value = self.abs();
        // exponent e with 10^e <= value < 10^(e+1)
        let mut exp = decimal_exponent_estimate(&value);
        let ten = Rational::from_integer(10);
        loop {
            let lower = ten.pow(exp).expect("nonzero base");
            let upper = ten.pow(exp + 1).expect("nonzero base");
            if value < lower {
                exp -= 1;
            } else if value >= upper {
                exp += 1;
            } else {
                break;
            }
        }
        let shift = significant as i32 - 1 - exp;
        let scaled = &value * &ten.pow(shift).expect("nonzero base");
        let mut mantissa = scaled.ceil();
        let limit = BigInt::from(10u32).pow(significant);
        if mantissa >= limit {
            mantissa /= 10u32;
            exp += 1;
        }
        let digits = mantissa.to_string();
        let (head, tail) = digits.split_at(1);
        let sign = if negative { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    }

    pub(crate) fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

fn decimal_exponent_estimate(value: &Rational) -> i32 {
    let num_bits = value.numerator().bits() as f64;
    let den_bits = value.denominator().bits() as f64;
    ((num_bits - den_bits) * std::f64::consts::LOG10_2).floor() as i32
}

/// `magnitude / 10^digits` as a fixed-point string.
pub(crate) fn format_scaled(negative: bool, magnitude: &BigUint, digits: u32) -> String {
    let mut s = magnitude.to_string();
    let width = digits as usize + 1;
    if s.len() < width {
        s = format!("{}{}", "0".repeat(width - s.len()), s);
    }
    let split = s.len() - digits as usize;
    let mut out = String::with_capacity(s.len() + 2);
    if negative {
        out.push('-');
    }
    out.push_str(&s[..split]);
    if digits > 0 {
        out.push('.');
        out.push_str(&s[split..]);
    }
    out
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ArithmeticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| ArithmeticError::Parse(s.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::from_integer(parse(s)?)),
        }
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Self::from_integer(value)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

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

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn add_halves_and_thirds() {
        assert_eq!(r(1, 2).apply(ArithOp::Add, &r(1, 3)).unwrap(), r(5, 6));
    }

    #[test]
    fn construction_normalizes() {
        let x = r(2, 4);
        assert_eq!(x.numerator(), &BigInt::from(1));
        assert_eq!(x.denominator(), &BigInt::from(2));
        let y = r(3, -6);
        assert_eq!(y.numerator(), &BigInt::from(-1));
        assert_eq!(y.denominator(), &BigInt::from(2));
    }

    #[test]
    fn zero_divisor_is_an_error() {
        assert_eq!(
            Rational::one().apply(ArithOp::Div, &Rational::zero()),
            Err(ArithmeticError::DivisionByZero)
        );
        assert_eq!(Rational::new(1, 0), Err(ArithmeticError::DivisionByZero));
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(r(-7, 2).floor(), BigInt::from(-4));
        assert_eq!(r(-7, 2).ceil(), BigInt::from(-3));
        assert_eq!(r(7, 2).floor(), BigInt::from(3));
        assert_eq!(r(6, 2).ceil(), BigInt::from(3));
    }

    #[test]
    fn decimal_rounds_half_even() {
        assert_eq!(r(-1, 2).to_decimal(4), "-0.5000");
        assert_eq!(r(1, 8).to_decimal(2), "0.12");
        assert_eq!(r(3, 8).to_decimal(2), "0.38");
        assert_eq!(r(99, 35).to_decimal(10), "2.8285714286");
        assert_eq!(r(3, 1).to_decimal(0), "3");
    }

    #[test]
    fn scientific_rounds_up() {
        assert_eq!(r(1, 3).to_sci_upper(3), "3.34e-1");
        assert_eq!(r(12345, 1).to_sci_upper(2), "1.3e4");
        assert_eq!(r(1, 1000).to_sci_upper(2), "1.0e-3");
        assert_eq!(r(999, 1).to_sci_upper(2), "1.0e3");
    }

    #[test]
    fn parses_fractions() {
        assert_eq!("6/8".parse::<Rational>().unwrap(), r(3, 4));
        assert_eq!("-5".parse::<Rational>().unwrap(), r(-5, 1));
        assert!("x/2".parse::<Rational>().is_err());
    }
}
