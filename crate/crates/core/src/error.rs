use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("index {index} out of range 1..={bound}")]
    Bounds { index: usize, bound: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("shape error: {0}")]
    Shape(String),
    /// A matrix that should be antisymmetric is not; `(row, col)` is the
    /// first offending 1-based position in row-major order.
    #[error("matrix is not antisymmetric at ({row},{col})")]
    NotAntisymmetric { row: usize, col: usize },
}
