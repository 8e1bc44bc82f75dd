//! Machine-precision roots `xi_n(p)` and `zeta_n(p)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::intervals::{admitted_branches, bracket_for, BranchId, CountMode, Family};
use crate::rootfind::newton_bisect;
use crate::wellcore::DimensionlessStrength;

/// How a root value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    ParabolicSimple,
    ParabolicImproved,
    Cubic,
    Barker,
    /// Truncated series of the given order, or local re-expansion of that order.
    SeriesN(u32),
    Garrett,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Exact => f.write_str("exact"),
            Method::ParabolicSimple => f.write_str("sp"),
            Method::ParabolicImproved => f.write_str("ip"),
            Method::Cubic => f.write_str("cubic"),
            Method::Barker => f.write_str("barker"),
            Method::SeriesN(n) => write!(f, "series{n}"),
            Method::Garrett => f.write_str("garrett"),
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s.trim() {
            "exact" => Method::Exact,
            "sp" => Method::ParabolicSimple,
            "ip" => Method::ParabolicImproved,
            "cubic" => Method::Cubic,
            "barker" => Method::Barker,
            "garrett" => Method::Garrett,
            other => match other.strip_prefix("series") {
                Some(order) => Method::SeriesN(order.parse().map_err(|_| format!("bad series order in `{other}`"))?),
                None => return Err(format!("unknown method `{other}`")),
            },
        })
    }
}

/// A root value together with how well it satisfies its equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub branch: BranchId,
    pub p: f64,
    pub x: f64,
    /// `lhs(x) - sign * p`.
    pub residual: f64,
    pub method: Method,
    /// Set when the method is outside its recommended range (Barker on the
    /// two lowest levels).
    pub warning: bool,
}

impl RootResult {
    pub fn new(branch: BranchId, p: f64, x: f64, method: Method) -> Self {
        Self { branch, p, x, residual: branch.residual(x, p), method, warning: false }
    }
}

/// Absolute margin a root must keep from the ends of its bracket.
const INTERIOR_MARGIN: f64 = 1e-15;

/// Unique root of the branch equation on its monotony interval.
///
/// At `p = 0` the infinite-well value `N pi / 2` is returned.
pub fn solve_branch(branch: BranchId, p: f64) -> Result<RootResult> {
    if !(p >= 0.0) || !p.is_finite() {
        return Err(Error::InvalidP(p));
    }
    let bracket = bracket_for(branch);
    if p >= bracket.existence_bound {
        return Err(Error::BranchNotBound { branch, p, bound: bracket.existence_bound });
    }
    if p == 0.0 {
        return Ok(RootResult::new(branch, p, branch.infinite_well_root(), Method::Exact));
    }
    let target = bracket.sign * p;
    let x = match branch.family {
        Family::Xi => newton_bisect(
            |x| x.cos() / x - target,
            |x| -(x * x.sin() + x.cos()) / (x * x),
            bracket.lo,
            bracket.hi,
        ),
        Family::Zeta => newton_bisect(
            |x| sinc(x) - target,
            |x| if x == 0.0 { 0.0 } else { (x * x.cos() - x.sin()) / (x * x) },
            bracket.lo,
            bracket.hi,
        ),
    }
    .map_err(|_| Error::BranchNotBound { branch, p, bound: bracket.existence_bound })?;
    if x - bracket.lo < INTERIOR_MARGIN || bracket.hi - x < INTERIOR_MARGIN {
        return Err(Error::BranchNotBound { branch, p, bound: bracket.existence_bound });
    }
    Ok(RootResult::new(branch, p, x, Method::Exact))
}

fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// All bound-state roots of a well, ordered by level.
///
/// Only roots that are genuine bound states are returned (see
/// [`BranchId::physical_threshold`]); every `x` is strictly below `P`.
pub fn solve_spectrum(dimless: &DimensionlessStrength) -> Vec<RootResult> {
    let p = dimless.inverse();
    admitted_branches(dimless, CountMode::Physical)
        .into_iter()
        .filter_map(|branch| solve_branch(branch, p).ok())
        .filter(|root| root.x < dimless.strength())
        .collect()
}
