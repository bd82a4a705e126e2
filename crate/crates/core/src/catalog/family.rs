//! The four telescoping families, in exponentiated form.
//!
//! With `f(k) = artanh(φ^-e(k))` and `g(k) = exp(2 f(k)) = (φ^e(k) + 1)/(φ^e(k) - 1)`,
//! the plain telescoping sum
//!
//! ```text
//!   Σ_{k=1..N} [f(k) - f(k+m)] = Σ_{k=1..m} f(k) - Σ_{k=1..m} f(k+N)
//! ```
//!
//! becomes `P_N = ∏_{k=1..m} g(k) · ∏_{k=1..m} g(k+N)^-1`, and the alternating one
//! becomes `P_N = ∏ g(k)^((-1)^(k-1)) · (∏ g(k+N)^((-1)^(k-1)))^((-1)^(N-1))`.
//! Every value here is built from `φ^e` through [`crate::fiblucas::phi_power`],
//! never from the displayed Fibonacci/Lucas formulas of the catalog.

use serde::Serialize;

use crate::error::Error;
use crate::exactnum::GoldenExt;
use crate::fiblucas;

/// Exponent pattern of `f(k) = artanh(φ^-e(k))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shift {
    /// `e(k) = 2pk`
    Even,
    /// `e(k) = p(2k-1)`
    Odd,
}

impl Shift {
    pub fn label(self) -> &'static str {
        match self {
            Shift::Even => "even-shift",
            Shift::Odd => "odd-shift",
        }
    }
}

/// A family member fixed by `(p, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Family {
    pub shift: Shift,
    pub alternating: bool,
    pub p: i64,
    pub m: i64,
}

/// `∏_{k=1..m} f(k)` split as `∏_{k=1..⌈m/2⌉} f(2k-1) · ∏_{k=1..⌊m/2⌋} f(2k)`.
pub fn split_product<F>(m: i64, mut f: F) -> Result<GoldenExt, Error>
where
    F: FnMut(i64) -> Result<GoldenExt, Error>,
{
    let mut acc = GoldenExt::one();
    for k in 1..=(m + 1) / 2 {
        acc = &acc * &f(2 * k - 1)?;
    }
    for k in 1..=m / 2 {
        acc = &acc * &f(2 * k)?;
    }
    Ok(acc)
}

impl Family {
    pub fn exponent(&self, k: i64) -> i64 {
        match self.shift {
            Shift::Even => 2 * self.p * k,
            Shift::Odd => self.p * (2 * k - 1),
        }
    }

    /// `(φ^e + 1, φ^e - 1)` at `e = e(k)`.
    fn g_parts(&self, k: i64) -> Result<(GoldenExt, GoldenExt), Error> {
        let pe = fiblucas::phi_power(self.exponent(k))?;
        let one = GoldenExt::one();
        Ok((&pe + &one, &pe - &one))
    }

    /// `g(k) = (φ^e(k) + 1)/(φ^e(k) - 1)`.
    pub fn g(&self, k: i64) -> Result<GoldenExt, Error> {
        let (num, den) = self.g_parts(k)?;
        Ok(num.checked_div(&den)?)
    }

    /// Weight of `g(k)` in the boundary and closed-form products.
    fn weight(&self, k: i64) -> bool {
        !self.alternating || k % 2 == 1
    }

    /// `∏_{j=1..m} g(j+offset)^(±1)` with the family weights, all flipped by `invert_all`.
    fn weighted_product(&self, offset: i64, invert_all: bool) -> Result<GoldenExt, Error> {
        let mut num = GoldenExt::one();
        let mut den = GoldenExt::one();
        for j in 1..=self.m {
            let (a, b) = self.g_parts(j + offset)?;
            let up = self.weight(j) != invert_all;
            if up {
                num = &num * &a;
                den = &den * &b;
            } else {
                num = &num * &b;
                den = &den * &a;
            }
        }
        Ok(num.checked_div(&den)?)
    }

    /// `B(N)`: `∏ g(j+N)^-1` for plain families and `∏ g(j+N)^((-1)^(j-1))`
    /// for alternating ones, so that `P_N = RHS · B(N)^σ`.
    pub fn boundary_factor(&self, big_n: i64) -> Result<GoldenExt, Error> {
        self.weighted_product(big_n, !self.alternating)
    }

    /// The family's limit value `∏_{k=1..m} g(k)^(±1)`, assembled with
    /// the odd/even split.
    pub fn limit_value(&self) -> Result<GoldenExt, Error> {
        split_product(self.m, |k| {
            let g = self.g(k)?;
            if self.weight(k) {
                Ok(g)
            } else {
                Ok(g.inverse()?)
            }
        })
    }

    /// The k-th product factor `exp(2 (±)[f(k) ∓ f(k+m)])` from the family alone.
    pub fn term(&self, k: i64) -> Result<GoldenExt, Error> {
        let gk = self.g(k)?;
        let gkm = self.g(k + self.m)?;
        if !self.alternating {
            return Ok(gk.checked_div(&gkm)?);
        }
        // (-1)^(k-1) [f(k) + (-1)^(m-1) f(k+m)]
        let inner = if self.m % 2 == 1 { &gk * &gkm } else { gk.checked_div(&gkm)? };
        if k % 2 == 1 {
            Ok(inner)
        } else {
            Ok(inner.inverse()?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn split_product_matches_plain_product() {
        for m in 0..9 {
            let plain: GoldenExt = (1..=m).map(|k| GoldenExt::from_integer(k * k + 1)).product();
            let split = split_product(m, |k| Ok(GoldenExt::from_integer(k * k + 1))).unwrap();
            assert_eq!(plain, split, "m={m}");
        }
        assert_eq!(split_product(0, |_| unreachable!()).unwrap(), GoldenExt::one());
    }

    #[test]
    fn g_closed_forms_by_parity() {
        // (φⁿ+1)/(φⁿ-1) = (Fₙ√5 + 2)/Lₙ for odd n, Fₙ√5/(Lₙ - 2) for even n
        let fam = Family { shift: Shift::Odd, alternating: false, p: 1, m: 1 };
        for k in 1..12 {
            let e = fam.exponent(k);
            let f = fiblucas::fib(e).unwrap();
            let l = fiblucas::lucas(e).unwrap();
            let expected = GoldenExt::new(Rational::from_integer(2), f.into())
                .checked_div(&GoldenExt::from_integer(l))
                .unwrap();
            assert_eq!(fam.g(k).unwrap(), expected);
        }
        let fam = Family { shift: Shift::Even, alternating: false, p: 1, m: 1 };
        for k in 1..12 {
            let e = fam.exponent(k);
            let f = fiblucas::fib(e).unwrap();
            let l = fiblucas::lucas(e).unwrap();
            let expected = GoldenExt::new(Rational::zero(), f.into())
                .checked_div(&GoldenExt::from_integer(l - 2))
                .unwrap();
            assert_eq!(fam.g(k).unwrap(), expected);
        }
    }

    #[test]
    fn finite_telescoping_in_family_form() {
        for shift in [Shift::Even, Shift::Odd] {
            for alternating in [false, true] {
                for (p, m) in [(1, 1), (1, 2), (2, 3), (3, 4)] {
                    let fam = Family { shift, alternating, p, m };
                    let rhs = fam.limit_value().unwrap();
                    let mut partial = GoldenExt::one();
                    for big_n in 0..12 {
                        if big_n > 0 {
                            partial = &partial * &fam.term(big_n).unwrap();
                        }
                        let b = fam.boundary_factor(big_n).unwrap();
                        let sigma = if alternating && big_n % 2 == 0 { -1 } else { 1 };
                        assert_eq!(partial, &rhs * &b.pow(sigma).unwrap(), "{fam:?} N={big_n}");
                    }
                }
            }
        }
    }
}
