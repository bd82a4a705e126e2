use thiserror::Error;

use crate::catalog::{IdentityId, Params};
use crate::exactnum::ArithmeticError;
use crate::fiblucas::IndexError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("unknown identity label {0:?} (expected T1.1-T1.4, T2.1-T2.4, T3.1-T3.4 or T4.1-T4.6)")]
    UnknownIdentity(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{id} at {params}: factor {k} has a zero denominator")]
    ZeroDenominator { id: IdentityId, params: Params, k: u64 },
    #[error("exact partial products are limited to N <= {cap} (requested {requested}); use a smaller N or decimal evaluation")]
    ExactCapExceeded { requested: u64, cap: u64 },
    #[error("no tail certificate for {id} at {params} with N = {requested}; the smallest certifiable N is {minimal}")]
    NoCertificate {
        id: IdentityId,
        params: Params,
        requested: u64,
        minimal: u64,
    },
}
