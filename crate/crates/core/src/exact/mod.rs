//! Exact arithmetic: big rationals and degree-2 jets over them.
//!
//! Everything downstream (harmonic numbers, binomials, hypergeometric terms,
//! p-adic reduction) starts from these two carriers.

mod jet;
mod rational;

pub use jet::Jet2;
pub use rational::{int, rat, rat_arith, recip, BigInt, BigRational, RatOp};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("jet divisor has zero constant term")]
    NonInvertibleJet,
}
