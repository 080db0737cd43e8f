//! Exact verification of the finite binomial–harmonic identities, the WZ
//! certificate behind the `CD7` family, and the per-term parameter
//! derivatives of the `₃F₂(1)` series.

mod jets;
mod registry;
mod wz;

pub use jets::{term_jet, term_jet_check, JetSeries};
pub use registry::{check_identity, find, registry, Domain, IdentityCase, IdentityCheck, Parity};
pub use wz::{wz_certificate_check, wz_f, wz_g, wz_s, wz_telescope_check};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity id `{0}`")]
    UnknownId(String),
    #[error("n = {n} is outside the domain of `{id}`")]
    OutOfDomain { id: String, n: u64 },
}
