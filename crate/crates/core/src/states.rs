//! Bound-state wavefunctions and first-order energy shifts.
//!
//! Inside the well the even states are `A cos(kx)` and the odd ones
//! `A sin(kx)`; outside they decay as `T exp(-kappa (|x| - a/2))`, with the
//! odd tail carrying `sign(x)`. `T` follows from continuity at `a/2` and `A`
//! from normalization in closed form.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactsolve::{Method, RootResult};
use crate::intervals::Family;
use crate::quadrature::integrate_line;
use crate::wellcore::{dimensionless_from_well, energy_from_root, LevelEnergy, WellSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Ratio above which a perturbation is flagged as too large for first order.
pub const PERTURBATION_WARNING_RATIO: f64 = 0.2;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub level: LevelEnergy,
    pub parity: Parity,
    pub inside_amplitude: f64,
    pub tail_amplitude: f64,
    pub k: f64,
    pub kappa: f64,
    well: WellSpec,
}

/// Wavefunction for an exactly solved root of `well`.
pub fn build_state(well: &WellSpec, root: &RootResult) -> Result<BoundState> {
    if root.method != Method::Exact {
        return Err(Error::NotABoundState(format!("root computed with {}, not exact", root.method)));
    }
    let dimless = dimensionless_from_well(well);
    if (root.p - dimless.inverse()).abs() > 1e-12 * dimless.inverse() {
        return Err(Error::NotABoundState(format!("root solved at p = {} for a well with p = {}", root.p, dimless.inverse())));
    }
    if root.p >= root.branch.physical_threshold() {
        return Err(Error::NotABoundState(format!("{} has no bound state at p = {}", root.branch, root.p)));
    }
    let level = energy_from_root(well, root.branch.global_index(), root.x).map_err(|e| Error::NotABoundState(e.to_string()))?;
    let (k, kappa) = (level.k, level.kappa);
    if !(kappa > 0.0) {
        return Err(Error::NotABoundState(format!("kappa = {kappa}")));
    }
    let half = 0.5 * well.width();
    let (parity, edge, sign) = match root.branch.family {
        Family::Xi => (Parity::Even, (k * half).cos(), 1.0),
        Family::Zeta => (Parity::Odd, (k * half).sin(), -1.0),
    };
    let norm = half + sign * (k * well.width()).sin() / (2.0 * k) + edge * edge / kappa;
    let inside_amplitude = norm.sqrt().recip();
    Ok(BoundState { level, parity, inside_amplitude, tail_amplitude: inside_amplitude * edge, k, kappa, well: *well })
}

impl BoundState {
    pub fn well(&self) -> &WellSpec {
        &self.well
    }

    fn half(&self) -> f64 {
        0.5 * self.well.width()
    }

    pub fn psi(&self, x: f64) -> f64 {
        let half = self.half();
        if x.abs() <= half {
            match self.parity {
                Parity::Even => self.inside_amplitude * (self.k * x).cos(),
                Parity::Odd => self.inside_amplitude * (self.k * x).sin(),
            }
        } else {
            let tail = self.tail_amplitude * (-self.kappa * (x.abs() - half)).exp();
            match self.parity {
                Parity::Even => tail,
                Parity::Odd => tail * x.signum(),
            }
        }
    }

    pub fn dpsi(&self, x: f64) -> f64 {
        let half = self.half();
        if x.abs() <= half {
            match self.parity {
                Parity::Even => -self.inside_amplitude * self.k * (self.k * x).sin(),
                Parity::Odd => self.inside_amplitude * self.k * (self.k * x).cos(),
            }
        } else {
            // d/dx of T e^{-kappa(|x| - h)} s(x), with s = 1 (even) or sign(x) (odd)
            let tail = -self.kappa * self.tail_amplitude * (-self.kappa * (x.abs() - half)).exp();
            match self.parity {
                Parity::Even => tail * x.signum(),
                Parity::Odd => tail,
            }
        }
    }

    /// Relative mismatch of `psi` and `psi'` across `x = a/2`.
    pub fn continuity_mismatch(&self) -> f64 {
        let half = self.half();
        let scale = self.inside_amplitude;
        let (in_psi, in_d) = match self.parity {
            Parity::Even => (scale * (self.k * half).cos(), -scale * self.k * (self.k * half).sin()),
            Parity::Odd => (scale * (self.k * half).sin(), scale * self.k * (self.k * half).cos()),
        };
        let (out_psi, out_d) = (self.tail_amplitude, -self.kappa * self.tail_amplitude);
        let dpsi_scale = scale * self.k.max(self.kappa);
        ((in_psi - out_psi).abs() / scale).max((in_d - out_d).abs() / dpsi_scale)
    }

    /// `int |psi|^2` inside the well, closed form.
    pub fn interior_probability(&self) -> f64 {
        let half = self.half();
        let sign = if self.parity == Parity::Even { 1.0 } else { -1.0 };
        self.inside_amplitude.powi(2) * (half + sign * (self.k * self.well.width()).sin() / (2.0 * self.k))
    }

    /// `int |psi|^2` over `x > a/2`, closed form.
    pub fn right_tail_probability(&self) -> f64 {
        self.tail_amplitude.powi(2) / (2.0 * self.kappa)
    }

    /// Energy under the well's own zero convention.
    pub fn energy(&self) -> f64 {
        self.level.energy(self.well.zero_convention())
    }

    /// `int f |psi|^2` over the real line, by quadrature.
    pub fn expectation(&self, f: impl Fn(f64) -> f64) -> f64 {
        integrate_line(|x| f(x) * self.psi(x).powi(2), self.half(), 2.0 * self.kappa, 2.0 * self.k)
    }

    /// `<self|other>` by quadrature. Both states must belong to the same well.
    pub fn overlap(&self, other: &BoundState) -> f64 {
        integrate_line(
            |x| self.psi(x) * other.psi(x),
            self.half(),
            self.kappa + other.kappa,
            self.k + other.k,
        )
    }

    /// `x,psi` rows at the given points, with a header.
    pub fn sample_csv(&self, xs: &[f64]) -> String {
        let mut out = String::from("x,psi\n");
        for &x in xs {
            writeln!(out, "{},{}", crate::format::fmt_float(x), crate::format::fmt_float(self.psi(x))).expect("writing to a String");
        }
        out
    }
}

/// A first-order shift and whether the perturbation is uncomfortably large.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftEstimate {
    pub shift: f64,
    pub warning: bool,
}

/// Shift when the right barrier moves from `v1` to `v2`; the left barrier
/// stays at `v1`.
pub fn perturbation_shift_step(state: &BoundState, v1: f64, v2: f64) -> Result<ShiftEstimate> {
    let smaller = v1.min(v2);
    let warning = !(smaller > 0.0) || (v1 - v2).abs() / smaller > PERTURBATION_WARNING_RATIO;
    Ok(ShiftEstimate { shift: (v2 - v1) * state.right_tail_probability(), warning })
}

/// `int_{-h}^{h} cos(w z) dz / 2`, smooth at `w = 0`.
fn half_cos_integral(w: f64, h: f64) -> f64 {
    if (w * h).abs() < 1e-8 {
        h
    } else {
        (w * h).sin() / w
    }
}

/// Shift from `v cos(2 pi z / d0)` acting inside the well.
pub fn perturbation_shift_corrugated(state: &BoundState, v: f64, d0: f64) -> Result<ShiftEstimate> {
    if !(d0 > 0.0) {
        return Err(Error::NonPositivePeriod(d0));
    }
    let h = 0.5 * state.well.width();
    let q = 2.0 * std::f64::consts::PI / d0;
    let k2 = 2.0 * state.k;
    // cos^2 = (1 + cos 2kz) / 2, sin^2 = (1 - cos 2kz) / 2
    let sign = if state.parity == Parity::Even { 1.0 } else { -1.0 };
    let mixed = 0.5 * (half_cos_integral(q + k2, h) + half_cos_integral(q - k2, h));
    let integral = half_cos_integral(q, h) + sign * mixed;
    let warning = v.abs() / state.well.depth() > PERTURBATION_WARNING_RATIO;
    Ok(ShiftEstimate { shift: v * state.inside_amplitude.powi(2) * integral, warning })
}
