//! Grigorchuk's group: reduction, the word problem, the action on the binary tree, and
//! derivations of nontrivial words in the co-word grammar.

mod equivalence;
mod tree;
mod witness;
mod word;
mod wp;

pub use equivalence::{coword_language_equivalence, soundness_sample, EquivalenceReport, SoundnessReport};
pub use tree::TreeAction;
pub use witness::{derive_witness, derive_witness_in};
pub use word::{is_reduced, reduce, reduce_with_trace, GrigWord, Letter, ReducedGrigWord, ReductionStep};
pub use wp::{
    contraction_check, is_trivial, nontrivial_chain, phi, phi_side, syllables, ChainLevel, Side,
    Syllable,
};

use crate::lsystem::LsysError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrigError {
    #[error("'{0}' is not a generator (expected a, b, c or d)")]
    BadLetter(char),
    #[error("'{0}' is not reduced")]
    NotReduced(String),
    #[error("'{0}' has an odd number of a and is not in the first-level stabilizer")]
    NotInG1(String),
    #[error("'{0}' is too short for the contraction bound")]
    TooShort(String),
    #[error("the word is trivial in the group")]
    Trivial,
    #[error("unreduction at level {level} exceeded {cap} steps")]
    WitnessCap { level: usize, cap: usize },
    #[error(transparent)]
    System(#[from] LsysError),
}
