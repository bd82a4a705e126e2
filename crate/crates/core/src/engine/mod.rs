//! Verification of catalog identities.
//!
//! Exact mode checks the finite telescoping identity `P_N = RHS · B(N)^σ`
//! in Q(√5) with zero tolerance. Limit mode bounds `|P_N/RHS - 1|` from above
//! by a rational and compares it with a certified tail bound: with
//! `c/X_k <= 1/2` for all `k > N`, each factor satisfies
//! `|log factor_k| = 2 artanh(c/X_k) <= 4c/X_k`, so
//! `|log(P_∞/P_N)| <= T = 4c Σ_{k>N} φ^-(αk+β)` and, for `T <= 1/2`,
//! `|P_∞/P_N - 1| <= e^T - 1 <= 2T`. Alternating signs only shrink the true
//! tail, so the same bound covers both kinds.

mod report;

use std::time::Instant;

use rayon::prelude::*;

use crate::catalog::{self, IdentityDescriptor, IdentityId, Params};
use crate::error::Error;
use crate::exactnum::{GoldenExt, Rational};

pub use report::{Mode, VerificationReport};

/// Largest `N` for exact partial products.
pub const DEFAULT_EXACT_CAP: u64 = 200;

/// Truncation used by [`Engine::special_evaluations`].
pub const SPECIAL_TERMS: u64 = 40;

/// Relative slack allowed when rounding exact quantities up to rationals.
const BOUND_SLACK_BITS: u64 = 32;

/// Search ceiling for the smallest certifiable `N`.
const CERTIFICATE_SEARCH_LIMIT: u64 = 100_000;

/// The named constants: `(identity, φ exponent)`, where `None` stands for 3.
pub const SPECIAL_EVALUATIONS: [(&str, Option<i64>); 5] = [
    ("T1.4", None),
    ("T2.3", Some(4)),
    ("T2.4", Some(3)),
    ("T4.3", Some(2)),
    ("T4.6", Some(3)),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Engine {
    exact_cap: u64,
}

impl Default for Engine {
    fn default() -> Self {
        Self { exact_cap: DEFAULT_EXACT_CAP }
    }
}

/// One cell of a verification grid. Ordering is `(id, n, q, N, mode)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GridJob {
    pub id: IdentityId,
    pub params: Params,
    pub n_terms: u64,
    pub mode: Mode,
}

#[derive(Debug, Clone)]
pub struct GridOutcome {
    pub job: GridJob,
    pub result: Result<VerificationReport, Error>,
}

impl GridOutcome {
    pub fn passed(&self) -> bool {
        matches!(&self.result, Ok(r) if r.passed)
    }
}

impl Engine {
    pub fn with_exact_cap(exact_cap: u64) -> Self {
        Self { exact_cap }
    }

    pub fn exact_cap(&self) -> u64 {
        self.exact_cap
    }

    /// `∏_{k=1..N} factor_k` exactly; `N = 0` gives 1.
    pub fn partial_product(&self, id: IdentityId, params: Params, big_n: u64) -> Result<GoldenExt, Error> {
        if big_n > self.exact_cap {
            return Err(Error::ExactCapExceeded { requested: big_n, cap: self.exact_cap });
        }
        let d = catalog::descriptor(id);
        // numerators and denominators accumulate separately and are divided once
        let mut num = GoldenExt::one();
        let mut den = GoldenExt::one();
        for k in 1..=big_n {
            let (a, b) = d.lhs_term_parts(params, k)?;
            num = &num * &a;
            den = &den * &b;
        }
        Ok(num.checked_div(&den)?)
    }

    pub fn verify_exact(&self, id: IdentityId, params: Params, big_n: u64) -> Result<VerificationReport, Error> {
        let start = Instant::now();
        let partial = self.partial_product(id, params, big_n)?;
        self.finish_exact(id, params, big_n, partial, start)
    }

    /// Exact check of a caller-supplied partial product against `RHS · B(N)^σ`.
    pub fn check_exact(
        &self,
        id: IdentityId,
        params: Params,
        big_n: u64,
        partial: GoldenExt,
    ) -> Result<VerificationReport, Error> {
        self.finish_exact(id, params, big_n, partial, Instant::now())
    }

    fn finish_exact(
        &self,
        id: IdentityId,
        params: Params,
        big_n: u64,
        partial: GoldenExt,
        start: Instant,
    ) -> Result<VerificationReport, Error> {
        let d = catalog::descriptor(id);
        let rhs = d.rhs_closed_form(params)?;
        let boundary = d.boundary_factor(params, big_n)?;
        let expected = if d.boundary_sign(big_n) > 0 {
            &rhs * &boundary
        } else {
            rhs.checked_div(&boundary)?
        };
        let passed = partial == expected;
        let tail_bound = if big_n >= 1 {
            self.tail_bound(id, params, big_n).ok()
        } else {
            None
        };
        Ok(VerificationReport {
            id,
            params,
            n_terms: big_n,
            mode: Mode::Exact,
            partial_product: partial,
            rhs,
            boundary: Some(boundary),
            deviation: None,
            tail_bound,
            passed,
            elapsed: start.elapsed(),
        })
    }

    fn certificate(d: &IdentityDescriptor, params: Params, big_n: u64) -> Result<Option<GoldenExt>, Error> {
        let model = d.tail_model(params)?;
        if !model.ratio_certified_after(big_n)? {
            return Ok(None);
        }
        let t = model.log_tail_sum(big_n)?;
        let half = GoldenExt::from(Rational::new(1, 2)?);
        if t > half {
            return Ok(None);
        }
        Ok(Some(&t + &t))
    }

    /// Smallest `N >= 1` at which [`Engine::tail_bound`] certifies.
    pub fn minimal_certified_n(&self, id: IdentityId, params: Params) -> Result<u64, Error> {
        let d = catalog::descriptor(id);
        for big_n in 1..=CERTIFICATE_SEARCH_LIMIT {
            if Self::certificate(d, params, big_n)?.is_some() {
                return Ok(big_n);
            }
        }
        Err(Error::InvalidParams(format!(
            "no tail certificate for {id} at {params} below N = {CERTIFICATE_SEARCH_LIMIT}"
        )))
    }

    /// A proven rational upper bound on `|P_∞/P_N - 1|`.
    pub fn tail_bound(&self, id: IdentityId, params: Params, big_n: u64) -> Result<Rational, Error> {
        let d = catalog::descriptor(id);
        let certificate = if big_n == 0 { None } else { Self::certificate(d, params, big_n)? };
        match certificate {
            Some(bound) => Ok(bound.abs_upper_bound(BOUND_SLACK_BITS)),
            None => Err(Error::NoCertificate {
                id,
                params,
                requested: big_n,
                minimal: self.minimal_certified_n(id, params)?,
            }),
        }
    }

    pub fn verify_limit(&self, id: IdentityId, params: Params, big_n: u64) -> Result<VerificationReport, Error> {
        let start = Instant::now();
        let tail = self.tail_bound(id, params, big_n)?;
        let partial = self.partial_product(id, params, big_n)?;
        let rhs = catalog::rhs_closed_form(id, params)?;
        let gap = &partial.checked_div(&rhs)? - &GoldenExt::one();
        let deviation = gap.abs_upper_bound(BOUND_SLACK_BITS);
        let passed = deviation <= tail;
        Ok(VerificationReport {
            id,
            params,
            n_terms: big_n,
            mode: Mode::Limit,
            partial_product: partial,
            rhs,
            boundary: None,
            deviation: Some(deviation),
            tail_bound: Some(tail),
            passed,
            elapsed: start.elapsed(),
        })
    }

    pub fn verify(&self, job: GridJob) -> Result<VerificationReport, Error> {
        match job.mode {
            Mode::Exact => self.verify_exact(job.id, job.params, job.n_terms),
            Mode::Limit => self.verify_limit(job.id, job.params, job.n_terms),
        }
    }

    /// Limit checks at `N = 40` for the five named constants.
    pub fn special_evaluations(&self) -> Result<Vec<VerificationReport>, Error> {
        let params = Params::new(1, 1)?;
        SPECIAL_EVALUATIONS
            .iter()
            .map(|(label, _)| self.verify_limit(label.parse()?, params, SPECIAL_TERMS))
            .collect()
    }

    /// Runs the jobs in parallel; the result is sorted by job regardless of
    /// scheduling.
    pub fn run_grid(&self, mut jobs: Vec<GridJob>) -> Vec<GridOutcome> {
        jobs.sort();
        jobs.dedup();
        jobs.into_par_iter()
            .map(|job| GridOutcome { job, result: self.verify(job) })
            .collect()
    }

    /// Both sides of an identity at `q = 0`, where every factor and the
    /// closed form collapse to 1. Only defined when `m(0) = 0`; outside the
    /// certified catalog.
    pub fn q_zero_demo(&self, id: IdentityId, n: u32, big_n: u64) -> Option<(GoldenExt, GoldenExt)> {
        let d = catalog::descriptor(id);
        if n == 0 || (d.m_of)(0) != 0 || big_n > self.exact_cap {
            return None;
        }
        let n = i64::from(n);
        let c = d.constant.seq.eval((d.constant.index)(n, 0)).ok()?;
        let mut partial = GoldenExt::one();
        for k in 1..=big_n as i64 {
            let x = d.growing.seq.eval((d.growing.index)(n, 0, k)).ok()?;
            partial = &partial * &(&x + &c).checked_div(&(&x - &c)).ok()?;
        }
        let rhs = (d.rhs)(n, 0).ok()?;
        Some((partial, rhs))
    }
}

/// Every `(id, n, q)` with `1 <= n <= n_max`, `1 <= q <= q_max`, at one `N`.
pub fn grid_jobs(n_max: u32, q_max: u32, n_terms: u64, modes: &[Mode]) -> Result<Vec<GridJob>, Error> {
    let mut jobs = Vec::new();
    for id in IdentityId::all() {
        for n in 1..=n_max {
            for q in 1..=q_max {
                let params = Params::new(n, q)?;
                for &mode in modes {
                    jobs.push(GridJob { id, params, n_terms, mode });
                }
            }
        }
    }
    jobs.sort();
    Ok(jobs)
}
