use thiserror::Error;

use crate::model::{AirplaneId, InstanceClass};

pub type Result<T> = std::result::Result<T, ArpError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArpError {
    #[error("cannot parse `{0}` as an exact decimal or rational")]
    InvalidScalar(String),

    #[error("airplane {id}: {field} must be strictly positive")]
    NonPositive { id: AirplaneId, field: &'static str },

    #[error("duplicate airplane id {0}")]
    DuplicateId(AirplaneId),

    #[error("an instance needs at least one airplane")]
    EmptyInstance,

    #[error("not a permutation of the instance ids: {0}")]
    NotAPermutation(String),

    #[error("consumption context must be non-negative")]
    NegativeContext,

    #[error("brute force refuses n = {n} (guard is {guard}); raise the guard to override")]
    GuardExceeded { n: usize, guard: usize },

    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        expected: String,
    },

    #[error("instance is not a complete reverse order sequence (classified as {0})")]
    NotCompleteReverseOrder(InstanceClass),

    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),
}

impl ArpError {
    pub(crate) fn out_of_range(what: &'static str, value: usize, expected: impl Into<String>) -> Self {
        ArpError::OutOfRange {
            what,
            value,
            expected: expected.into(),
        }
    }
}
