use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LsysError {
    #[error("invalid symbol token {token:?}: {reason}")]
    InvalidToken { token: String, reason: &'static str },
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("symbol {0:?} is not in the extended alphabet")]
    UnknownSymbol(String),
    #[error("symbol {0:?} is not a terminal")]
    NonTerminal(String),
    #[error("symbol id {0} is outside the alphabet")]
    SymbolOutOfRange(usize),
    #[error("cannot split {0:?} into alphabet symbols")]
    Untokenizable(String),
    #[error("table {0:?} is not defined")]
    UnknownTable(String),
    #[error("duplicate table name {0:?}")]
    DuplicateTable(String),
    #[error("table {0:?} is not deterministic")]
    Nondeterministic(String),
    #[error("system has no axiom")]
    NoAxiom,
    #[error("control expression: {0}")]
    Control(String),
    #[error("grammar file line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = LsysError> = std::result::Result<T, E>;
