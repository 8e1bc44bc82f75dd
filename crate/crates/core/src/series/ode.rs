//! Numerical continuation of `X' = -X / (sqrt(1 - x^2 X^2) + x)` by repeated
//! local Taylor expansion.

use crate::error::{Error, Result};
use crate::exactsolve::{Method, RootResult};
use crate::intervals::BranchId;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_LOCAL_ORDER: usize = 8;
pub const MIN_LOCAL_ORDER: usize = 4;
const MIN_STEP: f64 = 1e-12;
const MAX_STEPS: usize = 1_000_000;

/// Taylor expansion of the solution about `x0`: `X(x0 + t) = sum c_k t^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeState {
    pub x0: f64,
    pub big_x0: f64,
    coeffs: Vec<f64>,
}

impl OdeState {
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    pub fn derivative(&self, t: f64) -> f64 {
        self.coeffs.iter().enumerate().skip(1).rev().fold(0.0, |acc, (k, c)| acc * t + k as f64 * c)
    }

    /// `X' + X / (sqrt(1 - x^2 X^2) + x)` at `x0 + t`.
    pub fn ode_residual(&self, t: f64) -> f64 {
        let x = self.x0 + t;
        let big_x = self.eval(t);
        self.derivative(t) + big_x / ((1.0 - x * x * big_x * big_x).sqrt() + x)
    }
}

/// Local expansion of order `order` about `(x0, big_x0)`.
///
/// All series are built coefficient by coefficient: `U = (x0 + t) X`,
/// `A = 1 - U^2`, `W = sqrt(A)`, `D = W + x0 + t`, `X' = -X / D`.
/// Requires `x0 * big_x0 < 1`.
pub fn local_taylor(x0: f64, big_x0: f64, order: usize) -> OdeState {
    let n = order + 1;
    let mut c = vec![0.0; n];
    let mut u = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut q = vec![0.0; n];
    c[0] = big_x0;
    for k in 0..n {
        u[k] = x0 * c[k] + if k > 0 { c[k - 1] } else { 0.0 };
        let square: f64 = (0..=k).map(|i| u[i] * u[k - i]).sum();
        let a_k = if k == 0 { 1.0 - square } else { -square };
        w[k] = if k == 0 {
            a_k.sqrt()
        } else {
            let cross: f64 = (1..k).map(|i| w[i] * w[k - i]).sum();
            (a_k - cross) / (2.0 * w[0])
        };
        d[k] = w[k]
            + match k {
                0 => x0,
                1 => 1.0,
                _ => 0.0,
            };
        let conv: f64 = (1..=k).map(|i| d[i] * q[k - i]).sum();
        q[k] = (c[k] - conv) / d[0];
        if k + 1 < n {
            c[k + 1] = -q[k] / (k as f64 + 1.0);
        }
    }
    OdeState { x0, big_x0, coeffs: c }
}

/// Integrates from `(0, N pi / 2)` to `p_target` with steps chosen so that
/// the last retained Taylor term stays below `tolerance * |X|`.
pub fn ode_continue(branch: BranchId, p_target: f64, local_order: usize, tolerance: f64) -> Result<RootResult> {
    if !(p_target >= 0.0) || !p_target.is_finite() {
        return Err(Error::InvalidP(p_target));
    }
    if local_order < MIN_LOCAL_ORDER {
        return Err(Error::LocalOrderTooLow { requested: local_order, minimum: MIN_LOCAL_ORDER });
    }
    let threshold = branch.physical_threshold();
    if p_target >= threshold {
        return Err(Error::BranchNotBound { branch, p: p_target, bound: threshold });
    }
    let method = Method::SeriesN(local_order as u32);
    let mut x = 0.0;
    let mut big_x = branch.infinite_well_root();
    for _ in 0..MAX_STEPS {
        if x >= p_target {
            return Ok(RootResult::new(branch, p_target, big_x, method));
        }
        if x * big_x >= 1.0 {
            return Err(Error::StepUnderflow { x });
        }
        let state = local_taylor(x, big_x, local_order);
        let tail = state.coeffs[local_order].abs().max(state.coeffs[local_order - 1].abs());
        let remaining = p_target - x;
        let h = if tail == 0.0 { remaining } else { (tolerance * big_x.abs() / tail).powf(1.0 / local_order as f64) };
        if !(h >= MIN_STEP) {
            return Err(Error::StepUnderflow { x });
        }
        if h >= remaining {
            big_x = state.eval(remaining);
            x = p_target;
        } else {
            big_x = state.eval(h);
            x += h;
        }
    }
    Err(Error::StepUnderflow { x })
}
