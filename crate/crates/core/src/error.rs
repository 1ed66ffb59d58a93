use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("division error: {0}")]
    Division(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("not in module: {0}")]
    NotInModule(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("context error: {0}")]
    Context(String),
    #[error("parse error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
