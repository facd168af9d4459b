//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("invalid schema: {0}")]
    Schema(String),

    #[error("missing column {0}")]
    MissingColumn(String),

    #[error("row {row}, column {column}: {reason}")]
    Cell {
        row: usize,
        column: String,
        reason: String,
    },

    #[error("invalid generator config: {0}")]
    Generator(String),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("{0}")]
    Domain(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("degenerate conditional: constant coefficient is numerically zero")]
    DegenerateConditional,

    #[error("degenerate column {0}: all values equal")]
    DegenerateColumn(String),

    #[error("split leaves an empty train or test set")]
    EmptySplit,

    #[error("model file: {0}")]
    ModelFormat(String),

    #[error("{0}")]
    Config(String),
}
