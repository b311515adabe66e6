use thiserror::Error;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("mesh audit failed: {0}")]
    Audit(String),
    #[error("mesh parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
