//! Truncated formal power series in `x` over a coefficient ring.
//!
//! Inversion and square roots use Newton iteration, doubling the number of
//! correct terms per pass.

use super::poly::{ratio, RationalPoly};

/// Operations a series coefficient needs.
pub trait Coefficient: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Scales by a small integer ratio.
    fn scale_ratio(&self, num: i64, den: i64) -> Self;
}

impl Coefficient for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self * num as f64 / den as f64
    }
}

impl Coefficient for RationalPoly {
    fn zero() -> Self {
        RationalPoly::zero()
    }
    fn one() -> Self {
        RationalPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        RationalPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalPoly::mul(self, other)
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.scale(&ratio(num, den))
    }
}

/// `sum c_k x^k` for `k < len`; higher terms are discarded.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> FormalSeries<T> {
    /// Pads or truncates `coeffs` to `len` terms.
    pub fn new(mut coeffs: Vec<T>, len: usize) -> Self {
        coeffs.resize(len, T::zero());
        Self { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        Self::new(Vec::new(), len)
    }

    pub fn one(len: usize) -> Self {
        Self::new(vec![T::one()], len)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coeffs.clone(), len)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, num: i64, den: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.scale_ratio(num, den)).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let len = self.len();
        let mut coeffs = vec![T::zero(); k.min(len)];
        coeffs.extend(self.coeffs.iter().take(len.saturating_sub(k)).cloned());
        Self { coeffs }
    }

    /// Product truncated to `self.len()` terms.
    pub fn mul(&self, other: &Self) -> Self {
        let len = self.len();
        let mut out = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == T::zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs: out }
    }

    /// `1 / self` for a series with constant term one.
    pub fn inverse_unit(&self) -> Self {
        assert!(self.coeff(0) == T::one(), "inverse_unit needs constant term one");
        let target = self.len();
        let mut y = Self::one(1);
        let mut n = 1;
        while n < target {
            n = (2 * n).min(target);
            let f = self.truncate(n);
            y = y.truncate(n);
            // y <- y (2 - f y)
            let two = Self::one(n).scale(2, 1);
            y = y.mul(&two.sub(&f.mul(&y)));
        }
        y.truncate(target)
    }

    /// `sqrt(self)` for a series with constant term one.
    pub fn sqrt_unit(&self) -> Self {
        assert!(self.coeff(0) == T::one(), "sqrt_unit needs constant term one");
        let target = self.len();
        let mut w = Self::one(1);
        let mut n = 1;
        while n < target {
            n = (2 * n).min(target);
            let a = self.truncate(n);
            w = w.truncate(n);
            // w <- (w + a / w) / 2
            w = w.add(&a.mul(&w.inverse_unit())).scale(1, 2);
        }
        w.truncate(target)
    }

    /// `sin(self)` for a series without constant term.
    pub fn sin_nilpotent(&self) -> Self {
        assert!(self.coeff(0) == T::zero(), "sin_nilpotent needs zero constant term");
        let len = self.len();
        let square = self.mul(self);
        let mut term = self.clone();
        let mut sum = self.clone();
        let mut k: i64 = 1;
        // the k-th term starts at x^(2k+1)
        while 2 * (k as usize) + 1 < len {
            term = term.mul(&square).scale(-1, (2 * k) * (2 * k + 1));
            sum = sum.add(&term);
            k += 1;
        }
        sum
    }
}

impl FormalSeries<RationalPoly> {
    /// True if every coefficient is exactly zero.
    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.iter().all(RationalPoly::is_zero)
    }
}
