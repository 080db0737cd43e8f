pub mod exact;
pub mod modular;
pub mod sequences;
pub mod padic_gamma;
pub mod identities;
pub mod congruences;
pub mod series;
pub mod cli;
