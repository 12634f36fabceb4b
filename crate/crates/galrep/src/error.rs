use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not nilpotent: power {power} of a {dim}x{dim} matrix is nonzero")]
    NotNilpotent { dim: usize, power: usize },
    #[error("contraction undefined: entry ({row},{col}) has a pole of order {order} at the contraction point")]
    ContractionUndefined { row: usize, col: usize, order: i64 },
    #[error("unknown representation label `{0}`")]
    UnknownLabel(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("boost matrices do not have the expected block structure: {0}")]
    Structure(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("matrix is not invertible")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
