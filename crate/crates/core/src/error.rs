use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not orthogonal")]
    NotOrthogonal,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid tensor rank {0} (expected 1, 2 or 4)")]
    InvalidRank(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group larger than cap ({cap} elements)")]
    CapExceeded { cap: usize },

    #[error("vectors do not span the full space (rank {rank} < {dim})")]
    RankDeficient { rank: usize, dim: usize },

    #[error("not an automorphism of the minimal shell: {0}")]
    NotShellAutomorphism(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unknown {0}")]
    UnknownName(String),

    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
