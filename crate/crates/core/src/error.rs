use thiserror::Error;

/// Errors surfaced by instance validation, evaluation, and the oracle guards.
#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient bound must be at least 1")]
    ZeroCoefficientBound,

    #[error("coefficient bound {0} exceeds the supported maximum {max}", max = crate::model::MAX_COEFFICIENT_BOUND)]
    CoefficientBoundTooLarge(u32),

    #[error("type {index} (profit {profit}, weight {weight}) violates 1 <= profit, weight <= {bound}")]
    CoefficientOutOfRange {
        index: usize,
        profit: u32,
        weight: u32,
        bound: u32,
    },

    #[error("instance has no types")]
    EmptyTypes,

    #[error("malformed capacity {0:?}: expected a canonical decimal string")]
    MalformedCapacity(String),

    #[error("counts length {got} does not match type count {expected}")]
    CountsLength { got: usize, expected: usize },

    #[error("infeasible selection: total weight {weight} exceeds capacity {capacity}")]
    Infeasible { weight: String, capacity: String },

    #[error("instance too large for the enumeration oracle: {size} count vectors exceed the {limit} guard")]
    InstanceTooLarge { size: String, limit: u64 },

    #[error("capacity {capacity} too large for the full-table DP oracle (limit {limit})")]
    CapacityTooLarge { capacity: String, limit: u64 },

    #[error("unknown instance family {0:?}")]
    UnknownFamily(String),

    #[error("malformed capacity spec {0:?}: expected a decimal string or 10^k")]
    MalformedCapacitySpec(String),

    #[error("invalid instance file: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
