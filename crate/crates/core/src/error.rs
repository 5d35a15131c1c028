use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input must be a positive integer, got 0")]
    ZeroInput,

    #[error("step budget of {budget} exceeded for N={n} (last odd value {last}); raise the budget or inspect N")]
    BudgetExceeded {
        n: BigUint,
        last: BigUint,
        budget: u64,
    },

    #[error("residue triple is not canonical: n_odd={0} is even")]
    NonCanonical(BigUint),

    #[error("log ratio requires num >= den")]
    RatioBelowOne,

    #[error("inconsistent step counts: D={total} but O+E={odd}+{even}")]
    InconsistentCounts { total: u64, odd: u64, even: u64 },

    #[error("argument {value} outside supported range [{min}, {max}]")]
    OutOfRange { value: u64, min: u64, max: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("cannot merge overlapping ranges [{0}] and [{1}]")]
    OverlappingRanges(String, String),

    #[error("checkpoint line {line}: {reason}")]
    Checkpoint { line: usize, reason: String },

    #[error("invalid integer literal {0:?}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
