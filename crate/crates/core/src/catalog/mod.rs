//! Concrete systems and the direct generators they are checked against.

mod kappa;
mod systems;

pub use kappa::{kappa, kappa_language, CrossingSequence, LatticePoint};
pub use systems::{
    a_language_contains, a_language_words, crossing_sequence_system, doubling_system,
    finite_language_system, grigorchuk_coword_system, intermediate_growth_system,
    k_phi_u_words, star_system, z2_semidirect_combing_system, BUILTINS,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("lattice point out of domain: m = {m}, n = {n} (need m > 0, n >= 0)")]
    Domain { m: i64, n: i64 },
    #[error("token {0:?} clashes with the crossing-sequence alphabet")]
    TokenClash(String),
    #[error(transparent)]
    System(#[from] crate::lsystem::LsysError),
}
