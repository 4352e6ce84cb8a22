use std::fmt;

use crate::hurwitz::HurwitzMove;

/// Library-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two values live over different genera.
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),

    /// A vector or matrix has the wrong shape.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// An argument is outside the stated domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A structural invariant was violated (e.g. a non-skew intersection matrix).
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// A Hurwitz move index is out of bounds for the tuple it is applied to.
    /// `position` is the 0-based position of the offending move in its sequence.
    #[error("move {mv} at sequence position {position} out of bounds for length {len}")]
    MoveOutOfBounds {
        mv: HurwitzMove,
        position: usize,
        len: usize,
    },

    /// Text input (word, tuple, moves or matrix file) failed to parse.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl fmt::Display) -> Self {
        Error::Parse {
            line,
            msg: msg.to_string(),
        }
    }
}
