use crate::BigCount;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Index lies outside the domain where a sequence is defined. Indices
    /// below the base are rejected rather than zero-extended so that
    /// off-by-one mistakes surface instead of silently counting nothing.
    #[error("{kind} is not defined at index {index}; smallest valid index is {min_index}")]
    IndexOutOfDomain {
        kind: &'static str,
        index: i64,
        min_index: i64,
    },

    #[error("invalid range {from}..{to}: start must not exceed end")]
    InvalidRange { from: i64, to: i64 },

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("projected search size {projected} exceeds the allowed budget of {allowed} nodes")]
    BudgetExceeded {
        projected: BigCount,
        allowed: BigCount,
    },

    #[error("member listing exceeds the cap of {cap} members; rerun without listing")]
    ListingCapExceeded { cap: usize },
}
