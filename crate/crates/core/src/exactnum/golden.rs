//! Exact arithmetic in the real quadratic field Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use super::rational::format_scaled;
use super::{ArithOp, ArithmeticError, Rational};

/// The number `a + b·√5` with rational `a`, `b`.
///
/// Since √5 is irrational the pair `(a, b)` is unique for each value, so
/// derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenExt {
    a: Rational,
    b: Rational,
}

impl GoldenExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self { a, b: Rational::zero() }
    }

    pub fn from_integer(a: impl Into<BigInt>) -> Self {
        Self::from_rational(Rational::from_integer(a))
    }

    /// `(a + b√5) / den` for integers; used for Binet-style values.
    pub fn from_integers(a: impl Into<BigInt>, b: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, ArithmeticError> {
        let den = den.into();
        Ok(Self {
            a: Rational::new(a, den.clone())?,
            b: Rational::new(b, den)?,
        })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn sqrt5() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio `1/2 + √5/2`.
    pub fn phi() -> Self {
        let half = Rational::new(1, 2).expect("nonzero denominator");
        Self::new(half.clone(), half)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a - b√5`.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b)
    }

    /// `x · conj(x) = a² - 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(5) * (&self.b * &self.b)
    }

    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        let norm = self.norm();
        // norm is zero only for zero, since √5 is irrational
        let inv = norm.recip()?;
        let c = self.conj();
        Ok(Self::new(&c.a * &inv, &c.b * &inv))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        if rhs.is_rational() {
            let d = rhs.a.recip()?;
            return Ok(Self::new(&self.a * &d, &self.b * &d));
        }
        Ok(self * &rhs.inverse()?)
    }

    pub fn apply(&self, op: ArithOp, rhs: &Self) -> Result<Self, ArithmeticError> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(&self.a * factor, &self.b * factor)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self, ArithmeticError> {
        let mut base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        Ok(acc)
    }

    /// Integers `(A, B, D)` with `self = (A + B√5) / D` and `D > 0`.
    pub fn to_common_denominator(&self) -> (BigInt, BigInt, BigInt) {
        let da = self.a.denominator();
        let db = self.b.denominator();
        let d = num_integer::lcm(da.clone(), db.clone());
        let big_a = self.a.numerator() * (&d / da);
        let big_b = self.b.numerator() * (&d / db);
        (big_a, big_b, d)
    }

    /// Exact sign, decided by integer comparison of `A²` against `5B²`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.signum();
        let sb = self.b.signum();
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            _ => {
                // opposite signs: the larger magnitude wins
                let a2 = &self.a * &self.a;
                let b2 = Rational::from_integer(5) * (&self.b * &self.b);
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("a² = 5b² with b ≠ 0 has no rational solution"),
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Rational bounds `lo <= self <= hi`, with `hi - lo <= |b|·2^-precision_bits`.
    pub fn enclose(&self, precision_bits: u64) -> (Rational, Rational) {
        if self.is_rational() {
            return (self.a.clone(), self.a.clone());
        }
        let (s_lo, s_hi) = sqrt5_bounds(precision_bits);
        let (lo_factor, hi_factor) = if self.b.signum() == Ordering::Greater {
            (s_lo, s_hi)
        } else {
            (s_hi, s_lo)
        };
        (&self.a + &(&self.b * &lo_factor), &self.a + &(&self.b * &hi_factor))
    }

    /// A rational `u >= |self|` within a relative slack of `2^-rel_bits`.
    pub fn abs_upper_bound(&self, rel_bits: u64) -> Rational {
        if self.is_rational() {
            return self.a.abs();
        }
        let x = self.abs();
        // start with enough bits to resolve |b|, then refine until the
        // enclosure width is small relative to the lower end
        let mag = x.b.numerator().bits() as i64 - x.b.denominator().bits() as i64;
        let mut prec = (mag.max(0) as u64) + rel_bits + 64;
        loop {
            let (lo, hi) = x.enclose(prec);
            if lo.signum() == Ordering::Greater {
                let width = &hi - &lo;
                let slack = lo.as_big_rational() / BigInt::from(2u32).pow(rel_bits as u32);
                if width.as_big_rational() <= &slack {
                    return hi;
                }
            }
            prec *= 2;
        }
    }

    /// Correctly rounded (round-half-even) decimal with exactly `digits`
    /// fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.is_rational() {
            return self.a.to_decimal(digits);
        }
        let negative = self.signum() == Ordering::Less;
        let x = self.abs();
        let (big_a, big_b, den) = x.to_common_denominator();
        let scale = BigInt::from(10u32).pow(digits);
        let mut guard = 10u32;
        loop {
            let g = BigInt::from(10u32).pow(guard);
            // floor(B·√5·S·G) via integer square root of 5·B²·S²·G²
            let bsg = big_b.abs() * &scale * &g;
            let root = BigInt::from((BigUint::from(5u32) * bsg.magnitude() * bsg.magnitude()).sqrt());
            let (t_lo, t_hi) = if big_b.is_negative() {
                (-(&root + 1u32), -&root)
            } else {
                (root.clone(), &root + 1u32)
            };
            let base = &big_a * &scale * &g;
            let y_lo = Rational::new(&base + t_lo, den.clone()).expect("den > 0");
            let y_hi = Rational::new(&base + t_hi, den.clone()).expect("den > 0");
            let g_rat = Rational::from_integer(g.clone());
            let half = Rational::new(1, 2).expect("nonzero");
            let r_lo = (y_lo.checked_div(&g_rat).expect("g > 0") + &half).floor();
            let r_hi = (y_hi.checked_div(&g_rat).expect("g > 0") + &half).floor();
            // the value is irrational, so it never sits on a rounding tie
            if r_lo == r_hi {
                return format_scaled(negative, r_lo.magnitude(), digits);
            }
            guard += 10;
        }
    }
}

/// `lo <= √5 <= hi` with `hi - lo = 2^-bits`.
fn sqrt5_bounds(bits: u64) -> (Rational, Rational) {
    let two_k = BigUint::one() << bits;
    let root = (BigUint::from(5u32) * &two_k * &two_k).sqrt();
    let den = BigInt::from(two_k);
    let lo = Rational::new(BigInt::from(root.clone()), den.clone()).expect("den > 0");
    let hi = Rational::new(BigInt::from(root + 1u32), den).expect("den > 0");
    (lo, hi)
}

impl PartialOrd for GoldenExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The order of the real numbers.
impl Ord for GoldenExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl fmt::Display for GoldenExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√5", self.b),
            (false, false) => {
                if self.b.signum() == Ordering::Less {
                    write!(f, "{} - {}√5", self.a, self.b.abs())
                } else {
                    write!(f, "{} + {}√5", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for GoldenExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenExt({})", self)
    }
}

impl From<Rational> for GoldenExt {
    fn from(value: Rational) -> Self {
        Self::from_rational(value)
    }
}

impl From<i64> for GoldenExt {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl Add<&GoldenExt> for &GoldenExt {
    type Output = GoldenExt;
    fn add(self, rhs: &GoldenExt) -> GoldenExt {
        GoldenExt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&GoldenExt> for &GoldenExt {
    type Output = GoldenExt;
    fn sub(self, rhs: &GoldenExt) -> GoldenExt {
        GoldenExt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&GoldenExt> for &GoldenExt {
    type Output = GoldenExt;
    fn mul(self, rhs: &GoldenExt) -> GoldenExt {
        if self.is_rational() {
            return rhs.scale(&self.a);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.a);
        }
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let five = Rational::from_integer(5);
        let a = &self.a * &rhs.a + five * (&self.b * &rhs.b);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        GoldenExt::new(a, b)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GoldenExt> for GoldenExt {
            type Output = GoldenExt;
            fn $method(self, rhs: GoldenExt) -> GoldenExt {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&GoldenExt> for GoldenExt {
            type Output = GoldenExt;
            fn $method(self, rhs: &GoldenExt) -> GoldenExt {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &GoldenExt {
    type Output = GoldenExt;
    fn neg(self) -> GoldenExt {
        GoldenExt::new(-&self.a, -&self.b)
    }
}

impl Neg for GoldenExt {
    type Output = GoldenExt;
    fn neg(self) -> GoldenExt {
        -&self
    }
}

impl std::iter::Product for GoldenExt {
    fn product<I: Iterator<Item = GoldenExt>>(iter: I) -> Self {
        iter.fold(GoldenExt::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn g(a: (i64, i64), b: (i64, i64)) -> GoldenExt {
        GoldenExt::new(r(a.0, a.1), r(b.0, b.1))
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = GoldenExt::phi();
        let sq = phi.apply(ArithOp::Mul, &phi).unwrap();
        assert_eq!(sq, &phi + &GoldenExt::one());
        assert_eq!(sq, g((3, 2), (1, 2)));
    }

    #[test]
    fn phi_times_phi_minus_one_is_one() {
        let phi = GoldenExt::phi();
        let prod = &phi * &(&phi - &GoldenExt::one());
        assert_eq!(prod, GoldenExt::one());
    }

    #[test]
    fn sqrt5_is_two_phi_minus_one() {
        let phi = GoldenExt::phi();
        assert_eq!(GoldenExt::sqrt5(), &(&phi + &phi) - &GoldenExt::one());
    }

    #[test]
    fn componentwise_addition() {
        let x = g((1, 3), (2, 1));
        let y = g((1, 6), (-5, 4));
        assert_eq!(x.apply(ArithOp::Add, &y).unwrap(), g((1, 2), (3, 4)));
    }

    #[test]
    fn conjugate_and_norm() {
        assert_eq!(g((1, 1), (2, 1)).conj(), g((1, 1), (-2, 1)));
        assert_eq!(GoldenExt::phi().norm(), r(-1, 1));
        assert_eq!(GoldenExt::sqrt5().norm(), r(-5, 1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            GoldenExt::phi().apply(ArithOp::Div, &GoldenExt::zero()),
            Err(ArithmeticError::DivisionByZero)
        );
        assert!(GoldenExt::zero().inverse().is_err());
        assert!(GoldenExt::zero().pow(-1).is_err());
    }

    #[test]
    fn rationalizes_by_conjugate() {
        // (4 + √5)/(4 - √5) = (21 + 8√5)/11
        let x = g((4, 1), (1, 1)).checked_div(&g((4, 1), (-1, 1))).unwrap();
        assert_eq!(x, g((21, 11), (8, 11)));
    }

    #[test]
    fn signs() {
        assert_eq!(g((3, 1), (-1, 1)).signum(), Ordering::Greater);
        assert_eq!(g((2, 1), (-1, 1)).signum(), Ordering::Less);
        assert_eq!(GoldenExt::zero().signum(), Ordering::Equal);
        assert_eq!(g((-3, 1), (1, 1)).signum(), Ordering::Less);
        assert_eq!(g((-2, 1), (1, 1)).signum(), Ordering::Greater);
        assert_eq!(g((0, 1), (-1, 7)).signum(), Ordering::Less);
        assert!(GoldenExt::phi() > GoldenExt::one());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let phi = GoldenExt::phi();
        let mut acc = GoldenExt::one();
        for e in 0..20 {
            assert_eq!(phi.pow(e).unwrap(), acc);
            assert_eq!(phi.pow(-e).unwrap(), acc.inverse().unwrap());
            acc = &acc * &phi;
        }
    }

    #[test]
    fn enclosure_contains_value() {
        let x = g((7, 2), (3, 2)); // φ⁴
        let (lo, hi) = x.enclose(80);
        assert!(GoldenExt::from(lo) < x && x < GoldenExt::from(hi));
        let u = (&GoldenExt::one() - &x).abs_upper_bound(40);
        assert!(GoldenExt::from(u) > (&GoldenExt::one() - &x).abs());
    }

    #[test]
    fn decimals() {
        assert_eq!(GoldenExt::phi().to_decimal(10), "1.6180339887");
        assert_eq!(GoldenExt::from(r(-1, 2)).to_decimal(4), "-0.5000");
        assert_eq!(g((7, 2), (3, 2)).to_decimal(10), "6.8541019662");
        assert_eq!(g((2, 1), (-1, 1)).to_decimal(6), "-0.236068");
        assert_eq!(GoldenExt::sqrt5().to_decimal(0), "2");
    }

    #[test]
    fn display() {
        assert_eq!(g((7, 2), (3, 2)).to_string(), "7/2 + 3/2√5");
        assert_eq!(g((2, 1), (-1, 1)).to_string(), "2 - 1√5");
        assert_eq!(GoldenExt::sqrt5().to_string(), "1√5");
    }
}
