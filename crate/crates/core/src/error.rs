use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank parameter must be positive")]
    ZeroRank,

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: &'static str },

    #[error("cannot parse partition from {0:?}")]
    PartitionSyntax(String),

    #[error("{divisor} does not divide every part of {partition}")]
    NotDivisible { partition: String, divisor: usize },

    #[error("{divisor} does not divide {n}")]
    DivisorOfRank { n: usize, divisor: usize },

    #[error("{what} = {value} is outside {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("partition of {size} exceeds the tableau enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
}
