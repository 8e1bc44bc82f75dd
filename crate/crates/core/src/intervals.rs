//! Monotony intervals of `cos x / x` and `sin x / x`, their extrema, and
//! bound-state counting.
//!
//! The even-parity roots `xi_n` solve `cos x / x = ±p` and the odd-parity
//! roots `zeta_n` solve `sin x / x = ±p`, each on an interval where the
//! left-hand side is strictly monotone. The interval ends at an extremum
//! `r_cn` (root of `x tan x = -1`) or `r_sn` (root of `tan x = x`) whose value
//! `M` bounds the values of `p` for which the branch has a root at all.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::rootfind::newton_bisect;
use crate::wellcore::DimensionlessStrength;

/// Parity family of a branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Even states, `cos x / x = ±p`.
    Xi,
    /// Odd states, `sin x / x = ±p`.
    Zeta,
}

/// One root function `xi_n` or `zeta_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchId {
    pub family: Family,
    pub n: u32,
}

impl BranchId {
    pub const fn xi(n: u32) -> Self {
        Self { family: Family::Xi, n }
    }

    pub const fn zeta(n: u32) -> Self {
        Self { family: Family::Zeta, n }
    }

    /// Branch of the `index`-th level (1-based): odd indices are even states.
    pub fn from_global(index: u32) -> Self {
        assert!(index >= 1, "level indices start at 1");
        if index % 2 == 1 {
            Self::xi(index.div_ceil(2))
        } else {
            Self::zeta(index / 2)
        }
    }

    /// `xi_n -> 2n - 1`, `zeta_n -> 2n`.
    pub fn global_index(&self) -> u32 {
        match self.family {
            Family::Xi => 2 * self.n - 1,
            Family::Zeta => 2 * self.n,
        }
    }

    /// `b = N pi / 2`: the root at `p = 0`, i.e. the infinite-well value.
    pub fn infinite_well_root(&self) -> f64 {
        f64::from(self.global_index()) * FRAC_PI_2
    }

    /// `(-1)^(n+1)`: the right-hand side is `sign * p`.
    pub fn sign(&self) -> f64 {
        if self.n % 2 == 1 {
            1.0
        } else {
            -1.0
        }
    }

    /// `cos x / x` or `sin x / x`.
    pub fn lhs(&self, x: f64) -> f64 {
        match self.family {
            Family::Xi => x.cos() / x,
            Family::Zeta if x == 0.0 => 1.0,
            Family::Zeta => x.sin() / x,
        }
    }

    /// `lhs(x) - sign * p`.
    pub fn residual(&self, x: f64, p: f64) -> f64 {
        self.lhs(x) - self.sign() * p
    }

    /// Largest `p` for which the root is a genuine bound state.
    ///
    /// A branch root is a bound state only when the log-derivative matching
    /// at the wall has the right sign, which holds for
    /// `x >= (N - 1) pi / 2` with `N` the global index. The root reaches that
    /// point at `p = 2 / ((N - 1) pi)`, where the binding energy vanishes.
    pub fn physical_threshold(&self) -> f64 {
        let index = self.global_index();
        if index == 1 {
            f64::INFINITY
        } else {
            2.0 / (f64::from(index - 1) * PI)
        }
    }
}

impl fmt::Display for BranchId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Xi => write!(f, "xi:{}", self.n),
            Family::Zeta => write!(f, "zeta:{}", self.n),
        }
    }
}

impl std::str::FromStr for BranchId {
    type Err = String;

    /// Parses `xi:N` or `zeta:N`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (family, n) = s.split_once(':').ok_or_else(|| format!("expected xi:N or zeta:N, got `{s}`"))?;
        let n: u32 = n.trim().parse().map_err(|_| format!("bad branch index in `{s}`"))?;
        if n == 0 {
            return Err(format!("branch index must be >= 1 in `{s}`"));
        }
        match family.trim() {
            "xi" => Ok(Self::xi(n)),
            "zeta" => Ok(Self::zeta(n)),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

/// How extremum points are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumMode {
    /// Root of `x tan x = -1` / `tan x = x` to machine precision.
    Numeric,
    /// Leading-order asymptotic formulas in `1/n`.
    Asymptotic,
    /// Extrema of `cos x`, `sin x`: `r_cn = (n-1) pi`, `r_sn = (n-1/2) pi`.
    Crude,
}

/// Monotony interval of one branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub branch: BranchId,
    pub lo: f64,
    pub hi: f64,
    /// `(-1)^(n+1)`.
    pub sign: f64,
    /// `|M|`: the branch has a root only for `p` below this.
    pub existence_bound: f64,
}

const MEMO_MAX: u32 = 64;

struct ExtremumTable {
    xi: Vec<f64>,
    zeta: Vec<f64>,
}

fn memo() -> &'static ExtremumTable {
    static TABLE: OnceLock<ExtremumTable> = OnceLock::new();
    TABLE.get_or_init(|| ExtremumTable {
        xi: (2..=MEMO_MAX).map(|n| numeric_extremum(Family::Xi, n)).collect(),
        zeta: (2..=MEMO_MAX).map(|n| numeric_extremum(Family::Zeta, n)).collect(),
    })
}

fn numeric_extremum(family: Family, n: u32) -> f64 {
    let m = f64::from(n);
    let root = match family {
        // x sin x + cos x = 0 on ((n - 3/2) pi, (n - 1) pi)
        Family::Xi => newton_bisect(
            |x| x * x.sin() + x.cos(),
            |x| x * x.cos(),
            (m - 1.5) * PI,
            (m - 1.0) * PI,
        ),
        // sin x - x cos x = 0 on ((n - 1) pi, (n - 1/2) pi)
        Family::Zeta => newton_bisect(
            |x| x.sin() - x * x.cos(),
            |x| x * x.sin(),
            (m - 1.0) * PI,
            (m - 0.5) * PI,
        ),
    };
    root.expect("extremum equations change sign on their brackets")
}

/// Extremum point `r_cn` (Xi) or `r_sn` (Zeta), for `n >= 2`.
pub fn extremum_root(family: Family, n: u32, mode: ExtremumMode) -> Result<f64> {
    if n < 2 {
        return Err(Error::UnsupportedIndex(n));
    }
    let m = f64::from(n);
    Ok(match (mode, family) {
        (ExtremumMode::Numeric, _) if n <= MEMO_MAX => {
            let table = memo();
            let column = if family == Family::Xi { &table.xi } else { &table.zeta };
            column[(n - 2) as usize]
        }
        (ExtremumMode::Numeric, _) => numeric_extremum(family, n),
        (ExtremumMode::Asymptotic, Family::Xi) => {
            let c = (m - 1.0) * PI;
            c - c / (c * c - 1.0)
        }
        (ExtremumMode::Asymptotic, Family::Zeta) => {
            let c = (m - 0.5) * PI;
            c - 1.0 / c
        }
        (ExtremumMode::Crude, Family::Xi) => (m - 1.0) * PI,
        (ExtremumMode::Crude, Family::Zeta) => (m - 0.5) * PI,
    })
}

/// Signed extremum value `M_cn` / `M_sn`. `M_s1 = 1`; `M_c1` does not exist.
pub fn extremum_value(family: Family, n: u32, mode: ExtremumMode) -> Result<f64> {
    if family == Family::Zeta && n == 1 {
        return Ok(1.0);
    }
    let r = extremum_root(family, n, mode)?;
    let m = f64::from(n);
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(match (mode, family) {
        (ExtremumMode::Numeric, Family::Xi) => r.cos() / r,
        (ExtremumMode::Numeric, Family::Zeta) => r.sin() / r,
        (_, Family::Xi) => sign / ((m - 1.0) * PI),
        (_, Family::Zeta) => sign / ((m - 0.5) * PI),
    })
}

/// Monotony interval of `branch`, with Numeric extremum endpoints.
pub fn bracket_for(branch: BranchId) -> Bracket {
    bracket_with(branch, ExtremumMode::Numeric)
}

/// Monotony interval with extrema from `mode`.
pub fn bracket_with(branch: BranchId, mode: ExtremumMode) -> Bracket {
    let n = branch.n;
    let m = f64::from(n);
    let sign = branch.sign();
    let (lo, hi, existence_bound) = match (branch.family, n) {
        (Family::Xi, 1) => (0.0, FRAC_PI_2, f64::INFINITY),
        (Family::Zeta, 1) => (0.0, PI, 1.0),
        (Family::Xi, _) => (
            extremum_root(Family::Xi, n, mode).expect("n >= 2"),
            (m - 0.5) * PI,
            extremum_value(Family::Xi, n, mode).expect("n >= 2").abs(),
        ),
        (Family::Zeta, _) => (
            extremum_root(Family::Zeta, n, mode).expect("n >= 2"),
            m * PI,
            extremum_value(Family::Zeta, n, mode).expect("n >= 2").abs(),
        ),
    };
    Bracket { branch, lo, hi, sign, existence_bound }
}

/// Counting rule for [`count_bound_states`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// `int(P / (pi/2)) + 1`.
    Approximate,
    /// Number of branches with a root on their monotony interval:
    /// `p <= |M|` for each branch (a root sitting on the extremum counts).
    Refined,
    /// Number of roots that are genuine bound states: `p < 2 / ((N-1) pi)`.
    Physical,
}

/// Number of states supported by a well of the given strength.
pub fn count_bound_states(dimless: &DimensionlessStrength, mode: CountMode) -> usize {
    let p = dimless.inverse();
    match mode {
        CountMode::Approximate => (dimless.strength() / FRAC_PI_2) as usize + 1,
        CountMode::Refined => {
            let mut count = 1;
            if p <= 1.0 {
                count += 1;
            }
            for family in [Family::Xi, Family::Zeta] {
                let mut n = 2;
                while p <= extremum_value(family, n, ExtremumMode::Numeric).expect("n >= 2").abs() {
                    count += 1;
                    n += 1;
                }
            }
            count
        }
        CountMode::Physical => {
            let mut count = 1;
            while p < BranchId::from_global(count + 1).physical_threshold() {
                count += 1;
            }
            count as usize
        }
    }
}

/// Branches with a root at this `p` under `mode` (Approximate is not a branch rule).
pub fn admitted_branches(dimless: &DimensionlessStrength, mode: CountMode) -> Vec<BranchId> {
    let count = count_bound_states(dimless, mode) as u32;
    match mode {
        CountMode::Refined => {
            let p = dimless.inverse();
            let mut out: Vec<BranchId> = (1..)
                .map(BranchId::from_global)
                .take_while(|b| b.global_index() <= 2 * count + 2)
                .filter(|b| p <= bracket_for(*b).existence_bound)
                .collect();
            out.truncate(count as usize);
            out
        }
        _ => (1..=count).map(BranchId::from_global).collect(),
    }
}
