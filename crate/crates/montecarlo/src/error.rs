#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum McError {
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("refused: {0}")]
    Refused(String),
}

pub type McResult<T> = Result<T, McError>;
