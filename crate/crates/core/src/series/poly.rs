//! Polynomials in `b` with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduced fraction of unbounded integers.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`].
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c * b^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `b^power` (zero past the end).
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True if it is a nonzero constant.
    pub fn as_constant(&self) -> Option<&Rational> {
        match self.coeffs.as_slice() {
            [c] => Some(c),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Value at `b`, by Horner's scheme on the rounded coefficients.
    pub fn eval_f64(&self, b: f64) -> f64 {
        self.to_f64_coeffs().iter().rev().fold(0.0, |acc, c| acc * b + c)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    /// Sign shared by every nonzero coefficient, if there is one.
    pub fn common_sign(&self) -> Option<i8> {
        let mut signs = self.coeffs.iter().filter(|c| !c.is_zero()).map(|c| if c.is_positive() { 1 } else { -1 });
        let first = signs.next()?;
        signs.all(|s| s == first).then_some(first)
    }

    /// Whitespace-separated `num/den` coefficients, constant term first.
    pub fn to_line(&self) -> String {
        if self.coeffs.is_empty() {
            return "0/1".to_owned();
        }
        self.coeffs.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect::<Vec<_>>().join(" ")
    }

    /// Inverse of [`RationalPoly::to_line`].
    pub fn parse_line(line: &str) -> Result<Self, String> {
        line.split_whitespace()
            .map(|tok| {
                let (n, d) = tok.split_once('/').ok_or_else(|| format!("expected num/den, got `{tok}`"))?;
                let n: BigInt = n.parse().map_err(|_| format!("bad numerator in `{tok}`"))?;
                let d: BigInt = d.parse().map_err(|_| format!("bad denominator in `{tok}`"))?;
                if d.is_zero() {
                    return Err(format!("zero denominator in `{tok}`"));
                }
                Ok(Rational::new(n, d))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// Nearest-ish `f64`; exact for every coefficient the tables produce.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fallback for values outside the direct conversion range
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly[{}]", self.to_line())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*b"),
                _ => format!("({c})*b^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}
