//! Published values of `q_0 .. q_16` and a coefficient-by-coefficient check
//! of a generated table against them.
//!
//! Each polynomial is stored as the magnitudes of its even-power
//! coefficients, kept in the factored form they were printed in; the overall
//! sign `(-1)^m` is applied on construction.

use std::fmt;

use super::formal::FormalSeries;
use super::poly::{ratio, Rational, RationalPoly};
use super::table::SeriesTable;

const P2: i64 = 2;
const P3: i64 = 3;

fn pw(base: i64, e: u32) -> i64 {
    base.pow(e)
}

/// Magnitudes of the coefficients of `b^0, b^2, b^4, ...`.
fn published_magnitudes() -> Vec<Vec<(i64, i64)>> {
    vec![
        vec![(1, 1)],
        vec![(1, 1)],
        vec![(1, 1)],
        vec![(1, 1), (1, 2 * 3)],
        vec![(1, 1), (2, 3)],
        vec![(1, 1), (5, 3), (3, pw(P2, 3) * 5)],
        vec![(1, 1), (2 * 5, 3), (pw(P2, 3), 3 * 5)],
        // q7
        vec![(1, 1), (5 * 7, 2 * 3), (7 * 37, pw(P2, 3) * 3 * 5), (5, pw(P2, 7) * 7)],
        // q8
        vec![(1, 1), (pw(P2, 2) * 7, 3), (2 * pw(7, 2), 3 * 5), (pw(P2, 4), 5 * 7)],
        // q9
        vec![(1, 1), (14, 1), (7 * 47, 20), (3229, pw(P2, 2) * pw(P3, 2) * 5 * 7), (5 * 7, pw(P2, 7) * pw(P3, 2))],
        // q10
        vec![(1, 1), (20, 1), (2 * 7 * 13, 5), (pw(P2, 4) * 41, pw(P3, 2) * 7), (pw(P2, 7), pw(P3, 2) * 5 * 7)],
        // q11
        vec![
            (1, 1),
            (55, 2),
            (7 * 11 * 19, 20),
            (11 * 1571, pw(P2, 3) * pw(P3, 2) * 7),
            (11 * 59 * 181, pw(P2, 7) * pw(P3, 2) * 5 * 7),
            (pw(P3, 2) * 7, pw(P2, 8) * 11),
        ],
        // q12
        vec![
            (1, 1),
            (2 * 5 * 11, 3),
            (2 * 11 * 31, 5),
            (pw(P2, 2) * 11 * 139, pw(P3, 2) * 7),
            (pw(P2, 3) * 11 * 479, pw(P3, 4) * 5 * 7),
            (pw(P2, 8), pw(P3, 2) * 7 * 11),
        ],
        // q13
        vec![
            (1, 1),
            (11 * 13, 3),
            (11 * 13 * 67, pw(P2, 5) * 5),
            (11 * 13 * 17 * 127, pw(P2, 2) * pw(P3, 2) * 5 * 7),
            (11 * 13 * 23 * 6679, pw(P2, 7) * pw(P3, 4) * 5 * 7),
            (13 * 211 * 2609, pw(P2, 7) * pw(P3, 2) * pw(5, 2) * 7 * 11),
            (3 * 7 * 11, pw(P2, 10) * 13),
        ],
        // q14
        vec![
            (1, 1),
            (2 * 7 * 13, 3),
            (2 * 7 * 11 * 13, 5),
            (pw(P2, 2) * 11 * 13 * 311, pw(P3, 2) * 5 * 7),
            (pw(P2, 4) * 11 * 13 * 37, pw(P3, 4) * 5),
            (pw(P2, 6) * 13 * 59, pw(P3, 2) * pw(5, 2) * 11),
            (pw(P2, 10), 3 * 7 * 11 * 13),
        ],
        // q15
        vec![
            (1, 1),
            (5 * 7 * 13, 2 * 3),
            (pw(7, 2) * pw(11, 2) * 13, pw(P2, 3) * 3 * 5),
            (11 * 13 * 8521, pw(P2, 4) * pw(P3, 2) * 7),
            (11 * 13 * 79 * 2917, pw(P2, 7) * pw(P3, 4) * 5),
            (7 * 13 * 1_206_053, pw(P2, 8) * pw(P3, 4) * 5 * 11),
            (17911 * 135_721, pw(P2, 10) * pw(P3, 3) * pw(5, 2) * 7 * 11 * 13),
            (11 * 13, pw(P2, 11) * 5),
        ],
        // q16
        vec![
            (1, 1),
            (pw(P2, 3) * 5 * 7, 3),
            (pw(P2, 2) * 7 * 13 * 41, 3 * 5),
            (pw(P2, 4) * 11 * 13 * 67, pw(P3, 2) * 5 * 7),
            (2 * 11 * 13 * 2473, pw(P3, 4) * 5),
            (pw(P2, 5) * 13 * 4201, pw(P3, 4) * 5 * 11),
            (pw(P2, 6) * 266_681, pw(P3, 3) * pw(5, 2) * 7 * 11 * 13),
            (pw(P2, 11), pw(P3, 2) * 5 * 11 * 13),
        ],
    ]
}

/// The published `q_0 .. q_16`, as printed.
pub fn published_table() -> SeriesTable {
    let polys = published_magnitudes()
        .into_iter()
        .enumerate()
        .map(|(m, mags)| {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let mut coeffs = Vec::new();
            for (i, (n, d)) in mags.into_iter().enumerate() {
                if i > 0 {
                    coeffs.push(ratio(0, 1));
                }
                coeffs.push(ratio(sign * n, d));
            }
            RationalPoly::new(coeffs)
        })
        .collect();
    SeriesTable::from_polys(polys)
}

/// One coefficient where the generated and published values differ.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMismatch {
    pub power: usize,
    pub generated: Rational,
    pub published: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyCheck {
    pub m: usize,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl PolyCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Outcome of [`verify_against_published`].
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<PolyCheck>,
    /// Orders generated beyond the published range; nothing to compare.
    pub unverifiable: Vec<usize>,
    /// Lowest order in `x` at which the generated table fails the implicit
    /// equation (`None`: it holds through the table order).
    pub generated_defect: Option<usize>,
    /// Same for the published table.
    pub published_defect: Option<usize>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(PolyCheck::passed)
    }

    pub fn mismatch_count(&self) -> usize {
        self.checks.iter().map(|c| c.mismatches.len()).sum()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "q{:<3} {}", check.m, if check.passed() { "PASS" } else { "FAIL" })?;
            for mm in &check.mismatches {
                writeln!(f, "       b^{}: generated {} published {}", mm.power, mm.generated, mm.published)?;
            }
        }
        for m in &self.unverifiable {
            writeln!(f, "q{m:<3} UNVERIFIED (no published value)")?;
        }
        let describe = |d: Option<usize>| match d {
            None => "holds".to_owned(),
            Some(k) => format!("fails at x^{k}"),
        };
        writeln!(f, "implicit equation, generated table: {}", describe(self.generated_defect))?;
        write!(f, "implicit equation, published table: {}", describe(self.published_defect))
    }
}

/// Compares `table` with the published values, coefficient by coefficient.
pub fn verify_against_published(table: &SeriesTable) -> VerifyReport {
    let published = published_table();
    let common = table.max_order().min(published.max_order());
    let checks = (0..=common)
        .map(|m| {
            let (g, p) = (table.q(m).expect("m <= order"), published.q(m).expect("m <= 16"));
            let len = g.coeffs().len().max(p.coeffs().len());
            let mismatches = (0..len)
                .filter(|&i| g.coeff(i) != p.coeff(i))
                .map(|power| CoefficientMismatch { power, generated: g.coeff(power), published: p.coeff(power) })
                .collect();
            PolyCheck { m, mismatches }
        })
        .collect();
    VerifyReport {
        checks,
        unverifiable: (common + 1..=table.max_order()).collect(),
        generated_defect: implicit_equation_defect(table),
        published_defect: implicit_equation_defect(&published),
    }
}

/// Checks `-sin(d) = x (b + d)` with `d = b sum_{m>=1} q_m x^m`.
///
/// Every root branch `X = N pi/2 + d` satisfies this identity, so it is a
/// test of the table that does not go through the differential equation.
/// Returns the lowest power of `x` whose coefficient fails to cancel.
pub fn implicit_equation_defect(table: &SeriesTable) -> Option<usize> {
    let len = table.max_order() + 1;
    let b = RationalPoly::monomial(ratio(1, 1), 1);
    let mut delta = vec![RationalPoly::zero()];
    delta.extend(table.polys().iter().skip(1).map(|q| q.mul(&b)));
    let delta = FormalSeries::new(delta, len);
    let lhs = delta.sin_nilpotent().scale(-1, 1);
    let rhs = FormalSeries::new(vec![b], len).add(&delta).shift(1);
    let diff = lhs.sub(&rhs);
    diff.coeffs().iter().position(|c| !c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::table::generate_q_table;

    #[test]
    fn published_low_orders_match() {
        let report = verify_against_published(&generate_q_table(6));
        assert!(report.all_passed());
        assert_eq!(report.generated_defect, None);
    }

    #[test]
    fn published_transcription_spot_checks() {
        let t = published_table();
        assert_eq!(t.max_order(), 16);
        assert_eq!(t.q(7).unwrap().coeff(6), ratio(-5, 896));
        assert_eq!(t.q(16).unwrap().coeff(14), ratio(2048, 6435));
        assert_eq!(t.q(13).unwrap().coeff(2), ratio(-143, 3));
    }

    #[test]
    fn defect_locates_perturbed_coefficient() {
        let good = generate_q_table(10);
        assert_eq!(implicit_equation_defect(&good), None);
        let mut polys = good.polys().to_vec();
        polys[8] = polys[8].add(&RationalPoly::monomial(ratio(1, 1000), 4));
        // q_8 first enters at x^8 through d
        assert_eq!(implicit_equation_defect(&SeriesTable::from_polys(polys)), Some(8));
    }

    #[test]
    fn beyond_published_range_is_reported() {
        let report = verify_against_published(&generate_q_table(18));
        assert_eq!(report.unverifiable, vec![17, 18]);
        assert_eq!(report.checks.len(), 17);
    }
}
