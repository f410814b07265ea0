use thiserror::Error;

use crate::harness::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree must be positive")]
    EmptyPermutation,

    #[error("not a permutation of [{n}]: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("code entry c_{position} = {value} outside {range}")]
    CodeOutOfRange {
        position: usize,
        value: i64,
        range: &'static str,
    },

    #[error("signed permutation has {negatives} minus signs; type D requires an even number")]
    NotInD { negatives: usize },

    #[error("invalid transposition ({a}, {j}) for degree {n}")]
    InvalidTransposition { a: i64, j: usize, n: usize },

    #[error("{family}_{n} is not supported here (limit n <= {max})")]
    UnsupportedSize {
        family: Family,
        n: usize,
        max: usize,
    },

    #[error("{family}_{n} is too large for breadth-first search ({order} elements)")]
    TooLargeForSearch {
        family: Family,
        n: usize,
        order: u64,
    },

    #[error("statistic {statistic} is not defined on family {family}")]
    StatisticFamilyMismatch { statistic: String, family: Family },

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },

    #[error("cannot parse '{token}' as a nonzero integer")]
    Parse { token: String },

    #[error("degree {n} is below the minimum {min} for this operation")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("{element} is not an element of {family}_{n}")]
    NotInGroup {
        family: Family,
        n: usize,
        element: String,
    },

    #[error("missing required option --{0}")]
    MissingOption(&'static str),

    #[error("q-integer [0]_q is undefined")]
    QIntZero,

    #[error("coefficient overflow in polynomial arithmetic")]
    Overflow,
}
