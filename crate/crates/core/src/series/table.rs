//! Exact generation of the coefficient polynomials `q_m(b)` and their
//! floating-point evaluation.

use std::fmt::Write as _;
use std::sync::OnceLock;

use super::formal::FormalSeries;
use super::poly::{ratio, Rational, RationalPoly};
use crate::error::{Error, Result};
use crate::intervals::BranchId;

/// Order of the default table.
pub const DEFAULT_MAX_ORDER: usize = 16;

/// `q_0 .. q_max_order` as exact polynomials in `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTable {
    polys: Vec<RationalPoly>,
}

impl SeriesTable {
    pub fn from_polys(polys: Vec<RationalPoly>) -> Self {
        assert!(!polys.is_empty(), "a table holds at least q_0");
        Self { polys }
    }

    pub fn max_order(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn polys(&self) -> &[RationalPoly] {
        &self.polys
    }

    pub fn q(&self, m: usize) -> Option<&RationalPoly> {
        self.polys.get(m)
    }

    /// One line per `q_m`: `qM: c0 c1 ...` with `num/den` coefficients of
    /// ascending powers of `b`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, q) in self.polys.iter().enumerate() {
            writeln!(out, "q{m}: {}", q.to_line()).expect("writing to a String");
        }
        out
    }

    /// Inverse of [`SeriesTable::to_text`]. Lines must appear in order.
    pub fn from_text(text: &str) -> std::result::Result<Self, String> {
        let mut polys = Vec::new();
        for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
            let (label, body) = line.split_once(':').ok_or_else(|| format!("missing `:` in line {}", i + 1))?;
            if label.trim() != format!("q{i}") {
                return Err(format!("expected q{i}, found `{}`", label.trim()));
            }
            polys.push(RationalPoly::parse_line(body)?);
        }
        if polys.is_empty() {
            return Err("empty table".to_owned());
        }
        Ok(Self { polys })
    }

    /// Violations of the degree and sign laws, one message each.
    ///
    /// `q_{2k-1}` and `q_{2k}` have degree `2k - 2` (that is, `2k - 1`
    /// coefficients), only even powers of `b` occur, and all coefficients of
    /// `q_m` carry the sign `(-1)^m`.
    pub fn law_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (m, q) in self.polys.iter().enumerate() {
            let expected_degree = if m == 0 { 0 } else { 2 * m.div_ceil(2) - 2 };
            if q.degree() != Some(expected_degree) {
                out.push(format!("q{m}: degree {:?}, expected {expected_degree}", q.degree()));
            }
            if q.coeffs().iter().skip(1).step_by(2).any(|c| *c != Rational::from_integer(0.into())) {
                out.push(format!("q{m}: odd power of b present"));
            }
            let sign = if m % 2 == 0 { 1 } else { -1 };
            if q.common_sign() != Some(sign) {
                out.push(format!("q{m}: coefficients do not all have sign {sign:+}"));
            }
        }
        out
    }

    /// Rounded coefficients for fast evaluation.
    pub fn numeric(&self) -> NumericTable {
        NumericTable { coeffs: self.polys.iter().map(RationalPoly::to_f64_coeffs).collect() }
    }
}

/// Generates `q_0 .. q_max_order` by solving `X' = -X / (sqrt(1 - x^2 X^2) + x)`,
/// `X(0) = b`, order by order in exact formal power series.
pub fn generate_q_table(max_order: usize) -> SeriesTable {
    let b = RationalPoly::monomial(ratio(1, 1), 1);
    let x = |len| FormalSeries::new(vec![RationalPoly::zero(), RationalPoly::one()], len);
    // Taylor coefficients of X
    let mut c = vec![b];
    for m in 0..max_order {
        let len = m + 1;
        let s = FormalSeries::new(c.clone(), len);
        let xs = s.shift(1);
        let w = FormalSeries::one(len).sub(&xs.mul(&xs)).sqrt_unit();
        let quotient = s.mul(&w.add(&x(len)).inverse_unit());
        c.push(quotient.coeff(m).scale(&ratio(-1, m as i64 + 1)));
    }
    let polys = c
        .into_iter()
        .map(|cm| {
            debug_assert!(cm.coeff(0) == Rational::from_integer(0.into()));
            RationalPoly::new(cm.coeffs().iter().skip(1).cloned().collect())
        })
        .collect();
    let table = SeriesTable { polys };
    let checked = SeriesTable { polys: table.polys[..=max_order.min(DEFAULT_MAX_ORDER)].to_vec() };
    let violations = checked.law_violations();
    assert!(violations.is_empty(), "coefficient laws broken: {violations:?}");
    table
}

/// The table of order [`DEFAULT_MAX_ORDER`], built once.
pub fn default_table() -> &'static SeriesTable {
    static TABLE: OnceLock<SeriesTable> = OnceLock::new();
    TABLE.get_or_init(|| generate_q_table(DEFAULT_MAX_ORDER))
}

fn default_numeric() -> &'static NumericTable {
    static TABLE: OnceLock<NumericTable> = OnceLock::new();
    TABLE.get_or_init(|| default_table().numeric())
}

/// Floating coefficients of each `q_m`, constant term first.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericTable {
    coeffs: Vec<Vec<f64>>,
}

impl NumericTable {
    pub fn max_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `q_m(b)`.
    pub fn q_at(&self, m: usize, b: f64) -> f64 {
        self.coeffs[m].iter().rev().fold(0.0, |acc, c| acc * b + c)
    }

    /// `b * sum_{m <= order} q_m(b) p^m`, Horner in `p`.
    pub fn evaluate(&self, b: f64, p: f64, order: usize) -> Result<f64> {
        if order > self.max_order() {
            return Err(Error::OrderUnavailable { requested: order, available: self.max_order() });
        }
        Ok(b * (0..=order).rev().fold(0.0, |acc, m| acc * p + self.q_at(m, b)))
    }

    /// `d/dp` of [`NumericTable::evaluate`].
    pub fn evaluate_derivative(&self, b: f64, p: f64, order: usize) -> Result<f64> {
        if order > self.max_order() {
            return Err(Error::OrderUnavailable { requested: order, available: self.max_order() });
        }
        Ok(b * (1..=order).rev().fold(0.0, |acc, m| acc * p + m as f64 * self.q_at(m, b)))
    }
}

/// Truncated series `X^(N)(p)` for `branch`, from the default table.
pub fn evaluate_series_at(branch: BranchId, p: f64, order: usize) -> Result<f64> {
    if !(p >= 0.0) {
        return Err(Error::InvalidP(p));
    }
    default_numeric().evaluate(branch.infinite_well_root(), p, order)
}
