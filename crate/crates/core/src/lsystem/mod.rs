//! ET0L and EDT0L systems: parallel table rewriting under rational control.

mod alphabet;
mod combinators;
mod control;
mod error;
mod format;
mod random;
mod search;
mod system;
mod table;
mod witness;

pub use alphabet::{validate_token, Alphabet, SymbolId, Word, RESERVED};
pub use combinators::{concat, union};
pub use control::{ControlAutomaton, Regex};
pub use error::LsysError;
pub use format::{parse_grammar, print_grammar};
pub use random::random_derivation;
pub use search::{Enumeration, Membership, SearchCaps};
pub use system::{LSystem, LSystemBuilder};
pub use table::Table;
pub use witness::{DerivationWitness, WitnessRejection, WitnessStep};
