//! High-precision numerics for the infinite series and their closed forms.

mod bigfloat;
mod constants;
mod eval;
mod psi;
mod registry;

pub use bigfloat::BigFloat;
pub use eval::{asymptotic_tail, evaluate_case, evaluate_many, evaluate_series, SeriesReport, MIN_TERMS};
pub use psi::{psi_checks, psi_value_checks, PsiCheck};
pub use registry::{find_series, series_registry, SeriesCase, SeriesWeight, TailModel};
pub use constants::{catalan, constants, euler_gamma, gamma_quarter, ln, ln2, pi, Constants, MIN_BITS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("precision {bits} bits is below the minimum of {min}")]
    PrecisionTooLow { bits: u32, min: u32 },
    #[error("unknown series id `{0}`")]
    UnknownCase(String),
    #[error("need at least {min} terms, got {got}")]
    TooFewTerms { got: u64, min: u64 },
}
