use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid valences: {0}")]
    InvalidValences(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("size mismatch: shape has {shape} boxes but content sums to {content}")]
    SizeMismatch { shape: usize, content: usize },
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("repeated variable index {0}")]
    RepeatedIndex(usize),
    #[error("division is not exact; remainder has {terms} terms, leading term {witness}")]
    NotDivisible { terms: usize, witness: String },
    #[error("partition {partition} has more than {vars} parts")]
    TooManyParts { partition: String, vars: usize },
    #[error("expected a {expected} filling")]
    WrongClass { expected: &'static str },
    #[error("exponent parity mismatch on pair ({0}, {1})")]
    ParityMismatch(usize, usize),
    #[error("Möbius map {0}")]
    BadMap(String),
    #[error("recursion denominator vanishes at k = {0}")]
    Resonance(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
