use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a pole at t = {0}")]
    Pole(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition of length {len} does not fit in {n} variables")]
    TooLong { len: usize, n: usize },
    #[error("cell ({0},{1}) lies outside the diagram")]
    CellOutside(usize, usize),
    #[error("invalid reverse tableau: {0}")]
    InvalidTableau(String),
    #[error("unsupported range: {0}")]
    UnsupportedRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular interpolation system (internal invariant violated)")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
