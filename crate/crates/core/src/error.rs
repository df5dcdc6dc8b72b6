use std::fmt;

use thiserror::Error;

/// Location and reason for a rejected word or morphism literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where parsing failed.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("run count overflowed 64 bits")]
    CountOverflow,
    #[error("word is not a prefix of the target")]
    NotAPrefix,
    #[error("morphism is not upper triangular: image of a contains b")]
    NotUpperTriangular,
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("omega word undefined: the tail after the first b of h(b) is empty")]
    OmegaUndefined,
    #[error("parse error {0}")]
    Parse(ParseError),
    #[error("relation search aborted at depth {depth}: run count overflow")]
    SearchAborted { depth: usize },
    #[error("relation search depth {depth} exceeds the limit {limit}")]
    DepthLimit { depth: usize, limit: usize },
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
