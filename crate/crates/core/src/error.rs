use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("partition {partition} has more than {n} rows")]
    TooManyRows { partition: String, n: usize },
    #[error("sequence has charge {0}, expected 0")]
    NonzeroCharge(i64),
    #[error("generator index {i} out of range for a shape of size {n}")]
    GeneratorOutOfRange { i: usize, n: usize },
    #[error("{0} is not an edge of Young's lattice")]
    InvalidEdge(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("not a square: {0}")]
    NotASquare(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
