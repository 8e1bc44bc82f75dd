use thiserror::Error;

use crate::intervals::BranchId;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter `{name}` must be strictly positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("root x = {x} is not below the well strength P = {strength}; the state is unbound")]
    UnboundRoot { x: f64, strength: f64 },

    #[error("index n = {0} is not supported here (need n >= 2)")]
    UnsupportedIndex(u32),

    #[error("{branch} has no root at p = {p}: the existence bound is {bound}")]
    BranchNotBound { branch: BranchId, p: f64, bound: f64 },

    #[error("invalid inverse strength p = {0}")]
    InvalidP(f64),

    #[error("p = {p} is outside the definition interval [0, {limit}] of this approximation")]
    OutOfDefinitionInterval { p: f64, limit: f64 },

    #[error("{0} is not covered by this approximation")]
    UnsupportedBranch(BranchId),

    #[error("series order {requested} unavailable (table holds up to {available})")]
    OrderUnavailable { requested: usize, available: usize },

    #[error("local order {requested} is below the minimum {minimum}")]
    LocalOrderTooLow { requested: usize, minimum: usize },

    #[error("step size underflow at x = {x}: approaching the end of the branch")]
    StepUnderflow { x: f64 },

    #[error("not a bound state: {0}")]
    NotABoundState(String),

    #[error("corrugation period must be positive, got {0}")]
    NonPositivePeriod(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
