//! Fibonacci and Lucas numbers at arbitrary integer index.
//!
//! Everything goes through one fast-doubling pass producing `(Fₙ, Fₙ₊₁)`;
//! Lucas numbers are `Lₙ = 2Fₙ₊₁ − Fₙ`, and `φⁿ = (Lₙ + Fₙ√5)/2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::GoldenExt;

/// Largest `|n|` accepted by default.
pub const DEFAULT_INDEX_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("index {index} exceeds the cap of {cap}")]
pub struct IndexError {
    pub index: i64,
    pub cap: u64,
}

/// Consecutive Fibonacci numbers `(Fₙ, Fₙ₊₁)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibPair {
    pub index: i64,
    pub f_n: BigInt,
    pub f_n_plus_1: BigInt,
}

impl FibPair {
    /// The pair at `index + 1`.
    pub fn step(&self) -> FibPair {
        FibPair {
            index: self.index + 1,
            f_n: self.f_n_plus_1.clone(),
            f_n_plus_1: &self.f_n + &self.f_n_plus_1,
        }
    }

    /// The pair at `index - 1`.
    pub fn step_back(&self) -> FibPair {
        FibPair {
            index: self.index - 1,
            f_n: &self.f_n_plus_1 - &self.f_n,
            f_n_plus_1: self.f_n.clone(),
        }
    }

    /// `Lₙ = 2Fₙ₊₁ − Fₙ`.
    pub fn lucas(&self) -> BigInt {
        (&self.f_n_plus_1 << 1u32) - &self.f_n
    }
}

/// Index-capped access to the two sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sequences {
    cap: u64,
}

impl Default for Sequences {
    fn default() -> Self {
        Self { cap: DEFAULT_INDEX_CAP }
    }
}

impl Sequences {
    pub fn with_cap(cap: u64) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn check(&self, n: i64) -> Result<(), IndexError> {
        if n.unsigned_abs() > self.cap {
            Err(IndexError { index: n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn fib_pair(&self, n: i64) -> Result<FibPair, IndexError> {
        self.check(n)?;
        if n >= 0 {
            let (f_n, f_n_plus_1) = fast_doubling(n.unsigned_abs());
            return Ok(FibPair { index: n, f_n, f_n_plus_1 });
        }
        // F₋ₘ = (−1)^(m+1) Fₘ, applied to m = -n and m = -n - 1
        let m = n.unsigned_abs();
        let (f_m_minus_1, f_m) = fast_doubling(m - 1);
        let f_n = if m.is_multiple_of(2) { -f_m } else { f_m };
        let f_n_plus_1 = if (m - 1).is_multiple_of(2) { -f_m_minus_1 } else { f_m_minus_1 };
        Ok(FibPair { index: n, f_n, f_n_plus_1 })
    }

    pub fn fib(&self, n: i64) -> Result<BigInt, IndexError> {
        Ok(self.fib_pair(n)?.f_n)
    }

    pub fn lucas(&self, n: i64) -> Result<BigInt, IndexError> {
        Ok(self.fib_pair(n)?.lucas())
    }

    /// `φⁿ` exactly, as `(Lₙ + Fₙ√5)/2`.
    pub fn phi_power(&self, n: i64) -> Result<GoldenExt, IndexError> {
        let pair = self.fib_pair(n)?;
        let l = pair.lucas();
        Ok(GoldenExt::from_integers(l, pair.f_n, 2).expect("denominator is 2"))
    }
}

/// `(F_k, F_{k+1})` for `k >= 0`, scanning the bits of `k` from the top.
fn fast_doubling(k: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if k == 0 {
        return (a, b);
    }
    for bit in (0..64 - k.leading_zeros()).rev() {
        // F₂ⱼ = Fⱼ(2Fⱼ₊₁ − Fⱼ), F₂ⱼ₊₁ = Fⱼ² + Fⱼ₊₁²
        let c = &a * ((&b << 1u32) - &a);
        let d = &a * &a + &b * &b;
        if (k >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

pub fn fib(n: i64) -> Result<BigInt, IndexError> {
    Sequences::default().fib(n)
}

pub fn lucas(n: i64) -> Result<BigInt, IndexError> {
    Sequences::default().lucas(n)
}

pub fn phi_power(n: i64) -> Result<GoldenExt, IndexError> {
    Sequences::default().phi_power(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    /// Recurrence run forwards from (F₀, F₁) or backwards via Fₖ₋₁ = Fₖ₊₁ − Fₖ.
    fn naive(n: i64, seed: (i64, i64)) -> BigInt {
        let (mut x, mut y) = (BigInt::from(seed.0), BigInt::from(seed.1));
        if n >= 0 {
            for _ in 0..n {
                let z = &x + &y;
                x = std::mem::replace(&mut y, z);
            }
            x
        } else {
            for _ in 0..n.unsigned_abs() {
                let prev = &y - &x;
                y = std::mem::replace(&mut x, prev);
            }
            x
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(fib(0).unwrap(), BigInt::from(0));
        assert_eq!(fib(1).unwrap(), BigInt::from(1));
        assert_eq!(fib(10).unwrap(), BigInt::from(55));
        assert_eq!(fib(-5).unwrap(), BigInt::from(5));
        assert_eq!(fib(-6).unwrap(), BigInt::from(-8));
        assert_eq!(lucas(0).unwrap(), BigInt::from(2));
        assert_eq!(lucas(1).unwrap(), BigInt::from(1));
        assert_eq!(lucas(10).unwrap(), BigInt::from(123));
        assert_eq!(lucas(-3).unwrap(), BigInt::from(-4));
    }

    #[test]
    fn fast_doubling_matches_recurrence() {
        for n in -500..=500 {
            assert_eq!(fib(n).unwrap(), naive(n, (0, 1)), "F({n})");
            assert_eq!(lucas(n).unwrap(), naive(n, (2, 1)), "L({n})");
        }
    }

    #[test]
    fn pair_steps_agree_with_direct_evaluation() {
        let seqs = Sequences::default();
        for n in -40..40 {
            let pair = seqs.fib_pair(n).unwrap();
            assert_eq!(pair.step(), seqs.fib_pair(n + 1).unwrap());
            assert_eq!(pair.step_back(), seqs.fib_pair(n - 1).unwrap());
            // Cassini: Fₙ₊₁Fₙ₋₁ − Fₙ² = (−1)ⁿ
            let f_n_minus_1 = &pair.f_n_plus_1 - &pair.f_n;
            let cassini = &pair.f_n_plus_1 * f_n_minus_1 - &pair.f_n * &pair.f_n;
            let expected = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            assert_eq!(cassini, BigInt::from(expected));
        }
    }

    #[test]
    fn phi_powers() {
        assert_eq!(phi_power(0).unwrap(), GoldenExt::one());
        assert_eq!(phi_power(1).unwrap(), GoldenExt::phi());
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(phi_power(-1).unwrap(), GoldenExt::new(-half.clone(), half));
        assert_eq!(
            phi_power(10).unwrap(),
            GoldenExt::from_integers(123, 55, 2).unwrap()
        );
    }

    #[test]
    fn cap_is_enforced() {
        let seqs = Sequences::with_cap(100);
        assert!(seqs.fib(100).is_ok());
        assert!(seqs.fib(-100).is_ok());
        assert_eq!(seqs.fib(101), Err(IndexError { index: 101, cap: 100 }));
        assert!(seqs.lucas(-101).is_err());
        assert!(seqs.phi_power(1000).is_err());
        assert!(fib(1_000_001).is_err());
    }
}
