use std::fmt;
use std::time::Duration;

use crate::catalog::{IdentityId, Params};
use crate::exactnum::{GoldenExt, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Finite-N telescoping identity, checked with zero tolerance.
    Exact,
    /// `|P_N/RHS - 1|` against the certified tail bound.
    Limit,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Limit => "limit",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one exact or limit check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: IdentityId,
    pub params: Params,
    /// Truncation point `N`.
    pub n_terms: u64,
    pub mode: Mode,
    pub partial_product: GoldenExt,
    pub rhs: GoldenExt,
    /// `B(N)`, exact mode only.
    pub boundary: Option<GoldenExt>,
    /// Rational upper bound on `|P_N/RHS - 1|`, limit mode only.
    pub deviation: Option<Rational>,
    /// Certified bound on `|P_∞/P_N - 1|`, when `N` is in the certified range.
    pub tail_bound: Option<Rational>,
    pub passed: bool,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn elapsed_ms(&self) -> u128 {
        self.elapsed.as_millis()
    }
}
