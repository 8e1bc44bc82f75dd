//! Subband spectra of thin metal films and method comparison tables.
//!
//! A freestanding film of thickness `a` is modelled as a square well whose
//! barrier is the work function plus the Fermi energy, measured from the band
//! bottom.

use crate::approx::{approximate, garrett_energy};
use crate::error::{Error, Result};
use crate::exactsolve::{solve_spectrum, Method};
use crate::intervals::{BranchId, Family};
use crate::states::Parity;
use crate::wellcore::{
    dimensionless_from_well, energy_from_root, infinite_well_levels, DimensionlessStrength, LevelEnergy, UnitSystem,
    WellSpec, ZeroConvention,
};

/// Film parameters in eV, nm and electron masses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilmSpec {
    pub work_function: f64,
    pub fermi_energy: f64,
    pub thickness: f64,
    pub effective_mass: f64,
}

impl FilmSpec {
    /// Film of bare electrons.
    pub fn new(work_function: f64, fermi_energy: f64, thickness: f64) -> Result<Self> {
        Self::with_mass(work_function, fermi_energy, thickness, 1.0)
    }

    pub fn with_mass(work_function: f64, fermi_energy: f64, thickness: f64, effective_mass: f64) -> Result<Self> {
        if !(work_function >= 0.0) || !work_function.is_finite() {
            return Err(Error::NonPositiveParameter { name: "work function", value: work_function });
        }
        for (name, value) in [("Fermi energy", fermi_energy), ("thickness", thickness), ("effective mass", effective_mass)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::NonPositiveParameter { name, value });
            }
        }
        Ok(Self { work_function, fermi_energy, thickness, effective_mass })
    }

    /// Barrier height `W + E_F`.
    pub fn barrier(&self) -> f64 {
        self.work_function + self.fermi_energy
    }
}

/// The square well seen by the film's electrons.
pub fn freestanding_well(film: &FilmSpec) -> Result<WellSpec> {
    WellSpec::new(film.barrier(), film.thickness, film.effective_mass, ZeroConvention::BottomAtZero, UnitSystem::ElectronNmEv)
}

/// One method's estimate for one level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodCell {
    pub method: Method,
    /// False when the method is undefined for this level and strength.
    pub exists: bool,
    pub x: Option<f64>,
    pub e_bottom: Option<f64>,
    pub abs_deviation: Option<f64>,
    pub rel_deviation: Option<f64>,
}

/// One bound level with its reference values.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelRow {
    pub branch: BranchId,
    pub parity: Parity,
    pub exact: LevelEnergy,
    /// Same-width infinite well, from the bottom.
    pub infinite_well: f64,
    /// Garrett's formula, from the bottom.
    pub garrett: f64,
    pub cells: Vec<MethodCell>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub well: WellSpec,
    pub dimless: DimensionlessStrength,
    pub rows: Vec<LevelRow>,
}

/// Every bound level of `well`, with one comparison cell per requested
/// method (exact values are always included as the reference).
pub fn spectrum_report(well: &WellSpec, methods: &[Method]) -> Result<SpectrumReport> {
    let dimless = dimensionless_from_well(well);
    let p = dimless.inverse();
    let roots = solve_spectrum(&dimless);
    let count = roots.len() as u32;
    let infinite = infinite_well_levels(well, count.max(1));
    let scale = well.energy_scale();
    let rows = roots
        .iter()
        .map(|root| {
            let index = root.branch.global_index();
            let exact = energy_from_root(well, index, root.x)?;
            let cells = methods
                .iter()
                .map(|&method| match approximate(root.branch, p, method) {
                    Ok(r) if r.x.is_finite() => {
                        let e = scale * r.x * r.x;
                        MethodCell {
                            method,
                            exists: true,
                            x: Some(r.x),
                            e_bottom: Some(e),
                            abs_deviation: Some(e - exact.e_bottom),
                            rel_deviation: Some((e - exact.e_bottom) / exact.e_bottom),
                        }
                    }
                    _ => MethodCell { method, exists: false, x: None, e_bottom: None, abs_deviation: None, rel_deviation: None },
                })
                .collect();
            Ok(LevelRow {
                branch: root.branch,
                parity: if root.branch.family == Family::Xi { Parity::Even } else { Parity::Odd },
                exact,
                infinite_well: infinite[index as usize - 1],
                garrett: garrett_energy(well, index),
                cells,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumReport { well: *well, dimless, rows })
}

/// Subbands of a freestanding film.
pub fn film_subbands(film: &FilmSpec, methods: &[Method]) -> Result<SpectrumReport> {
    spectrum_report(&freestanding_well(film)?, methods)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::{count_bound_states, CountMode};
    use approx::assert_relative_eq;

    const ALL: [Method; 6] =
        [Method::ParabolicSimple, Method::ParabolicImproved, Method::Cubic, Method::Barker, Method::SeriesN(10), Method::Garrett];

    #[test]
    fn well_from_film() {
        let film = FilmSpec::new(0.0, 5.0, 1.0).unwrap();
        assert_eq!(freestanding_well(&film).unwrap().depth(), 5.0);
        let thin = dimensionless_from_well(&freestanding_well(&FilmSpec::new(4.0, 5.0, 1.0).unwrap()).unwrap());
        let thick = dimensionless_from_well(&freestanding_well(&FilmSpec::new(4.0, 5.0, 2.0).unwrap()).unwrap());
        assert_relative_eq!(thick.strength(), 2.0 * thin.strength(), max_relative = 1e-15);
        assert!(FilmSpec::new(-1.0, 5.0, 1.0).is_err());
        assert!(FilmSpec::new(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn reference_film() {
        let film = FilmSpec::new(4.0, 5.0, 1.0).unwrap();
        let report = film_subbands(&film, &ALL).unwrap();
        assert_relative_eq!(report.dimless.strength(), 7.684_752_963_660_154, max_relative = 1e-14);
        assert_eq!(report.rows.len(), 5);
        assert_eq!(count_bound_states(&report.dimless, CountMode::Refined), 5);
        for row in &report.rows {
            assert!(row.infinite_well >= row.exact.e_bottom);
            assert_eq!(row.cells.len(), ALL.len());
        }
    }

    #[test]
    fn thick_film_methods_agree() {
        let film = FilmSpec::new(4.0, 5.0, 200.0).unwrap();
        let report = film_subbands(&film, &ALL).unwrap();
        for row in report.rows.iter().take(3) {
            for cell in &row.cells {
                // only xi_1 lacks the parabolic and cubic forms
                if !cell.exists {
                    assert_eq!(row.branch, BranchId::xi(1));
                    continue;
                }
                assert!(cell.rel_deviation.unwrap().abs() < 1e-3, "{} {}", row.branch, cell.method);
            }
        }
    }

    #[test]
    fn shallow_film_has_few_states() {
        let film = FilmSpec::new(0.0, 0.3, 0.25).unwrap();
        let report = film_subbands(&film, &[]).unwrap();
        assert!(report.dimless.strength() < std::f64::consts::PI);
        assert!((1..=2).contains(&report.rows.len()));
    }

    #[test]
    fn cells_flag_missing_levels() {
        let well = WellSpec::with_strength(3.0).unwrap();
        let report = spectrum_report(&well, &[Method::Cubic]).unwrap();
        // xi_1 has no cubic form
        assert!(!report.rows[0].cells[0].exists);
        assert!(report.rows[1].cells[0].exists);
    }

    #[test]
    fn count_grows_with_thickness() {
        let mut last = 0;
        for i in 1..200 {
            let film = FilmSpec::new(4.0, 5.0, 0.02 * f64::from(i)).unwrap();
            let n = film_subbands(&film, &[]).unwrap().rows.len();
            assert!(n >= last);
            last = n;
        }
    }
}
