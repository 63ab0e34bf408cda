use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid coordinate change: {0}")]
    InvalidChange(String),

    #[error("generator {0} is not homogeneous")]
    Grading(String),

    #[error("generic initial ideal not certified after {rounds} rounds")]
    NotCertified { rounds: u32 },

    #[error("generic initial ideals are only supported in characteristic zero")]
    CharZeroOnly,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input too large: {0}")]
    Size(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("algebra is not sequentially Cohen-Macaulay")]
    NotScm,

    #[error("parse error: {0}")]
    Parse(String),

    /// Internal consistency check failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
