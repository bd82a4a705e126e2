use crate::error::Error;
use crate::exactnum::{GoldenExt, Rational};
use crate::fiblucas;

use super::{IdentityDescriptor, Params, Seq};

/// Geometric growth certificate for the factors of one identity instance.
///
/// The k-th factor is `(X_k ± c)/(X_k ∓ c)` with `X_k` drawn from `growing`
/// at index `alpha·k + offset`. The lower bounds `F_j >= φ^(j-2)` and
/// `L_j, √5 F_j >= φ^(j-1)` give `X_k >= φ^(alpha·k + beta)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailModel {
    pub c: GoldenExt,
    pub alpha: i64,
    pub beta: i64,
    pub growing: Seq,
    pub offset: i64,
}

impl TailModel {
    pub(super) fn for_identity(d: &IdentityDescriptor, params: Params) -> Result<Self, Error> {
        let i0 = d.growing_index(params, 0)?;
        let i1 = d.growing_index(params, 1)?;
        let i2 = d.growing_index(params, 2)?;
        let alpha = i1 - i0;
        debug_assert_eq!(i2 - i1, alpha, "{} index is not linear in k", d.id);
        debug_assert!(alpha > 0);
        Ok(Self {
            c: d.constant_value(params)?,
            alpha,
            beta: i0 - d.growing.seq.lower_bound_shift(),
            growing: d.growing.seq,
            offset: i0,
        })
    }

    /// `φ^(alpha·k + beta)`, a lower bound on `X_k`.
    pub fn x_lower(&self, k: u64) -> Result<GoldenExt, Error> {
        Ok(fiblucas::phi_power(self.alpha * k as i64 + self.beta)?)
    }

    /// Whether `c / X_k <= 1/2` is certified for every `k > big_n`.
    pub fn ratio_certified_after(&self, big_n: u64) -> Result<bool, Error> {
        let twice_c = &self.c + &self.c;
        Ok(twice_c <= self.x_lower(big_n + 1)?)
    }

    /// `4c · Σ_{k>N} φ^-(alpha·k + beta) = 4c φ^-(alpha(N+1) + beta) / (1 - φ^-alpha)`,
    /// an upper bound on `Σ_{k>N} |log factor_k|` once the ratio is certified.
    pub fn log_tail_sum(&self, big_n: u64) -> Result<GoldenExt, Error> {
        let first = fiblucas::phi_power(-(self.alpha * (big_n as i64 + 1) + self.beta))?;
        let ratio = fiblucas::phi_power(-self.alpha)?;
        let denom = &GoldenExt::one() - &ratio;
        let four_c = self.c.scale(&Rational::from_integer(4));
        Ok((&four_c * &first).checked_div(&denom)?)
    }

    /// `X_k = F[2k+2] >= φ^(2k+0)`-style summary.
    pub fn describe(&self) -> String {
        let x = match self.growing {
            Seq::Fib => "F",
            Seq::Lucas => "L",
            Seq::Sqrt5Fib => "√5 F",
        };
        format!(
            "X_k = {x}[{}k{:+}] >= φ^({}k{:+}), c = {}",
            self.alpha, self.offset, self.alpha, self.beta, self.c
        )
    }
}
