//! Exact verification of Fibonacci/Lucas infinite product identities.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactnum`]: reduced rationals and exact arithmetic in Q(√5).
//! * [`fiblucas`]: big-integer Fibonacci and Lucas numbers, and `φⁿ` in Q(√5).
//! * [`catalog`]: the eighteen product identities with their closed forms,
//!   finite-N boundary factors and tail models.
//! * [`engine`]: exact telescoping checks, certified tail bounds and limit checks.

pub mod catalog;
pub mod engine;
mod error;
pub mod exactnum;
pub mod fiblucas;

pub use catalog::{IdentityDescriptor, IdentityId, Params, TailModel};
pub use engine::{Mode, VerificationReport};
pub use error::Error;
pub use exactnum::{ArithOp, ArithmeticError, GoldenExt, Rational};
