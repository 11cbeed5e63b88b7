use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("inconsistent coefficient system: {0}")]
    PathDependence(String),
    #[error("specialization pole: {0}")]
    Pole(String),
    #[error("unsupported root symbol: {0}")]
    UnsupportedRoot(String),
    #[error("invalid token: {0}")]
    InvalidToken(String),
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
