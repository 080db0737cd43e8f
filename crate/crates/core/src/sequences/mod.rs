//! Exact generators for the combinatorial sequences the formulas consume.

mod binomial;
mod harmonic;
mod primes;
mod special;

pub use binomial::{binomial, c_m, central_binomial, factorial, pochhammer};
pub use harmonic::{harmonic, odd_harmonic, shifted_harmonic, HarmonicTable};
pub use primes::primes_in;
pub use special::{bernoulli, euler_number, fermat_quotient, SpecialNumbers};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("pole: x + {0} = 0")]
    Pole(u64),
    #[error("{p} divides {a}")]
    NotCoprime { a: i64, p: u64 },
}
