//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: expected {expected}, got {got}")]
    ShapeMismatch {
        op: &'static str,
        expected: String,
        got: String,
    },

    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("SVD did not converge for a {rows}x{cols} matrix")]
    SvdNoConvergence { rows: usize, cols: usize },

    #[error("Newton iteration for Gauss-Legendre node {index} did not converge")]
    NewtonNoConvergence { index: usize },

    #[error("leading triangular block is singular at diagonal index {index}")]
    SingularLeadingBlock { index: usize },

    #[error("refusing to materialize an operator with {cols} columns (cap {cap}); reduce N")]
    MaterializeCap { cols: usize, cap: usize },

    #[error("grid sizing failed: domain yields {achieved} points, need at least {required}")]
    Sizing { achieved: usize, required: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("weight {index} is {value}, weights must be strictly positive")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("no dual frame: w1(x)^2 + w2(x)^2 = 0 at grid point {index} (x = {x})")]
    DualExistence { index: usize, x: f64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn shape(op: &'static str, expected: impl ToString, got: impl ToString) -> Self {
        Error::ShapeMismatch {
            op,
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
