//! Bound states of the one-dimensional finite square well.

// `!(x > 0.0)` is how NaN gets rejected along with the rest
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod apps;
pub mod cli;
pub mod error;
pub mod exactsolve;
pub mod format;
pub mod intervals;
pub mod quadrature;
mod rootfind;
pub mod series;
pub mod states;
pub mod wellcore;

pub use error::{Error, Result};
