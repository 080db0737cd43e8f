//! Supercongruences modulo `p^m`: a registry of truncated sums and their
//! closed-form right-hand sides, evaluated in [`PadicValue`] arithmetic.
//!
//! [`PadicValue`]: crate::modular::PadicValue

mod engine;
mod env;
mod recipe;
mod registry;

pub use engine::{eval_rhs, eval_truncated_sum, verify, verify_range, verify_with, RangeEntry, VerificationReport};
pub use env::{special_numbers, working_digits, GammaArg, PrimeEnv, GUARD_DIGITS};
pub use recipe::{SumRecipe, Weight};
pub use registry::{find, registry, CongruenceCase, FamilyFn, Lhs, ResidueClass, Shape, SideFn};

use crate::modular::PadicError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error("unknown congruence id `{0}`")]
    UnknownCase(String),
    #[error("{case} is not stated for p = {p} (residue class)")]
    WrongClass { case: String, p: u64 },
    #[error("{0} is a pointwise family, not a single sum")]
    NotSingle(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

/// Look up a case by id.
pub fn case(id: &str) -> Result<&'static CongruenceCase, CongruenceError> {
    find(id).ok_or_else(|| CongruenceError::UnknownCase(id.to_string()))
}

#[cfg(test)]
mod tests;
