//! Crate-wide error type.
//!
//! Every fallible operation reports through [`Error`]. Verdicts that are
//! data rather than failures (infeasibility certificates, inconclusive
//! shortcuts) are encoded in each module's outcome enums instead.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    Empty,

    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("{context}: expected dimension {expected}, found {found}")]
    Dim {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("invalid rational '{text}': {reason}")]
    ParseRational { text: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
