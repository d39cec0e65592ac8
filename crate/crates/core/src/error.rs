use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("signature is not weakly decreasing: {0}")]
    NonMonotone(String),
    #[error("partition is not weakly decreasing: {0}")]
    InvalidPartition(String),
    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { inner: String, outer: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("shape has {cells} cells, brute-force enumeration is capped at {cap}")]
    CellCapExceeded { cells: usize, cap: usize },
    #[error("signature does not match group: {0}")]
    IncompatibleSignature(String),
    #[error("empty search domain")]
    EmptySearch,
    #[error("refused: {0}")]
    Refused(String),
}
