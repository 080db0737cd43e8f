//! Residues modulo `p^m` and valuation-aware reduction of rationals.

mod ctx;
mod padic;

pub use ctx::{inv_mod, is_prime, mul_mod, pow_mod, PrimePowerCtx, MAX_EXPONENT};
pub use padic::{padic_compare, padic_reduce, PadicValue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is below 5")]
    PrimeTooSmall(u64),
    #[error("exponent {0} outside 1..={max}", max = MAX_EXPONENT)]
    ExponentOutOfRange(u32),
    #[error("p^{digits} does not fit in 64 bits for p = {p}")]
    ModulusTooLarge { p: u64, digits: u32 },
    #[error("value has negative valuation {0}")]
    NegativeValuation(i64),
    #[error("{0} is not invertible modulo p")]
    NotInvertible(String),
    #[error("value known only modulo p^{have}, comparison needs p^{need}")]
    InsufficientPrecision { need: i64, have: i64 },
    #[error("argument is not a p-adic integer")]
    NotPadicInteger,
    #[error("prime {0} is in the wrong residue class mod 4 for this statement")]
    WrongResidueClass(u64),
}
