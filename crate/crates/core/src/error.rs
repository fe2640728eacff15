use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("empty point set")]
    EmptyInput,
    #[error("matrix [[{0}, {1}], [{2}, {3}]] is not unimodular")]
    NotUnimodular(i64, i64, i64, i64),
    #[error("integer overflow")]
    Overflow,
    #[error("({0}, {1}) is not a vertex of the polygon")]
    NotAVertex(i64, i64),
    #[error("{0}")]
    OutOfRange(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("coordinate {0} exceeds the limit of {limit}", limit = crate::io::COORDINATE_LIMIT)]
    CoordinateLimit(i64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
