//! Segment graphs over a free group and a primitive-set recognizer built from folds and
//! pinches, with classical oracles to check it against.

mod graph;
mod oracles;
mod pinch;
mod search;
mod word;

pub use graph::{Edge, EdgeEnd, FoldCase, NormalizeReport, SegmentGraph, VertexId};
pub use oracles::{abelianization_minor_gcd, is_basis_f2, whitehead_primitive};
pub use pinch::{PinchMove, PinchOptions};
pub use search::{is_primitive_set, PrimitiveSearch, SearchStats, SearchTrace};
pub use word::{parse_word_set, FreeWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StallingsError {
    #[error("empty word")]
    EmptyWord,
    #[error("empty word set")]
    EmptySet,
    #[error("'{0}' is not freely reduced")]
    NotReduced(String),
    #[error("cannot parse '{0}' as a free-group word")]
    Parse(String),
    #[error("'{word}' uses a generator beyond x{k}")]
    OutOfRank { word: String, k: u32 },
    #[error("invalid pinch: {0}")]
    InvalidPinch(String),
}
