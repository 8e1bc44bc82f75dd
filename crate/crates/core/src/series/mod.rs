//! Exact Taylor solution of the root functions about the infinite-well limit.
//!
//! Every root `X(p)` obeys `dX/dp = -X / (sqrt(1 - p^2 X^2) + p)` with
//! `X(0) = N pi / 2`. Expanding in `p` gives `X = b sum q_m(b) p^m` where
//! `b = X(0)` and each `q_m` is a polynomial in `b` with rational
//! coefficients.

mod formal;
mod ode;
mod poly;
mod published;
mod table;

pub use formal::{Coefficient, FormalSeries};
pub use ode::{local_taylor, ode_continue, OdeState, DEFAULT_LOCAL_ORDER, DEFAULT_TOLERANCE, MIN_LOCAL_ORDER};
pub use poly::{ratio, rational_to_f64, Rational, RationalPoly};
pub use published::{
    implicit_equation_defect, published_table, verify_against_published, CoefficientMismatch, PolyCheck, VerifyReport,
};
pub use table::{default_table, evaluate_series_at, generate_q_table, NumericTable, SeriesTable, DEFAULT_MAX_ORDER};
