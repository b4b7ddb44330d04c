use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),

    #[error("a[{i},{j}] is not a positive root of rank {rank}")]
    InvalidRoot { rank: usize, i: usize, j: usize },

    /// Two objects living in root systems of different rank were combined.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("simple reflection s{index} out of range 1..={rank}")]
    WordIndexOutOfRange { index: usize, rank: usize },

    #[error("weight {weight} is not dominant")]
    NotDominant { weight: String },

    #[error("enumeration bound exceeded: n = {n}, limit is {limit}")]
    BoundExceeded { n: usize, limit: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An internal consistency check failed. Seeing this is a bug.
    #[error("postcondition failed: {0}")]
    Postcondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn postcondition(msg: impl Into<String>) -> Self {
        Error::Postcondition(msg.into())
    }
}
