//! Exact scalars: reduced rationals and the quadratic field Q(√5).
//!
//! Nothing in here touches floating point. Signs are decided with integer
//! comparisons and decimal output is produced from integer square roots.

mod golden;
mod rational;

pub use golden::GoldenExt;
pub use rational::Rational;

use thiserror::Error;

/// The four field operations, for callers that pick one at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}
