use thiserror::Error;

use crate::cover::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no terms")]
    EmptyHamiltonian,

    #[error("terms {first} and {second} do not commute")]
    NotCommuting { first: usize, second: usize },

    #[error("invalid tau/sigma basis: {0}")]
    InvalidBasis(String),

    #[error("term {term} is not in the span of the tau basis")]
    TermOutsideSpan { term: String },

    #[error("{what} exceeds limit {limit} (got {got})")]
    SizeBound { what: &'static str, limit: usize, got: usize },

    #[error("invalid clique cover: {} violation(s)", .0.len())]
    InvalidCover(Vec<Violation>),

    #[error("{0}")]
    Unsupported(String),

    #[error("internal defect: {0}")]
    Defect(String),

    #[error("group {group}: {source}")]
    InGroup { group: usize, source: Box<Error> },
}

impl Error {
    /// Short machine-readable category, used as the CLI error prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::QubitMismatch { .. } => "qubits",
            Error::Parse { .. } => "parse",
            Error::EmptyHamiltonian => "empty",
            Error::NotCommuting { .. } => "commute",
            Error::InvalidBasis(_) => "basis",
            Error::TermOutsideSpan { .. } => "span",
            Error::SizeBound { .. } => "cap",
            Error::InvalidCover(_) => "cover",
            Error::Unsupported(_) => "usage",
            Error::Defect(_) => "defect",
            Error::InGroup { source, .. } => source.kind(),
        }
    }
}
