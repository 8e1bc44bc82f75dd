//! Safeguarded Newton iteration on a sign-changing bracket.
//!
//! Bisection narrows the bracket to `BISECT_WIDTH`, then Newton steps finish
//! the job. Any Newton step that leaves the current bracket is replaced by a
//! bisection step, so convergence is guaranteed for continuous functions.

const BISECT_WIDTH: f64 = 1e-6;
/// Absolute tolerance on the root.
pub(crate) const X_TOL: f64 = 1e-13;
const MAX_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum RootError {
    /// `f(lo)` and `f(hi)` have the same strict sign.
    NoSignChange,
}

/// Finds a root of `f` in `[lo, hi]`. `df` is the derivative of `f`.
pub(crate) fn newton_bisect<F, D>(f: F, df: D, lo: f64, hi: f64) -> Result<f64, RootError>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(RootError::NoSignChange);
    }

    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }

    let mut x = 0.5 * (lo + hi);
    let mut converged = false;
    for _ in 0..MAX_ITER {
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }
        let slope = df(x);
        let newton = x - fx / slope;
        let next = if slope != 0.0 && newton >= lo && newton <= hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - x).abs();
        x = next;
        if converged || hi - lo <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        // one extra Newton step after the tolerance is reached
        converged = step <= X_TOL;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = newton_bisect(|x| x * x - 2.0, |x| 2.0 * x, 0.0, 2.0).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_missing_sign_change() {
        assert_eq!(newton_bisect(|x| x * x + 1.0, |x| 2.0 * x, -1.0, 1.0), Err(RootError::NoSignChange));
    }

    #[test]
    fn survives_flat_derivative() {
        // cube root: derivative vanishes at the root
        let r = newton_bisect(|x: f64| x.powi(3), |x| 3.0 * x * x, -0.3, 1.0).unwrap();
        assert!(r.abs() < 1e-5);
    }

    #[test]
    fn endpoint_root() {
        assert_eq!(newton_bisect(|x| x - 1.0, |_| 1.0, 1.0, 2.0), Ok(1.0));
    }
}
