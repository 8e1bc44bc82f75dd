//! Physical description of the square well and the conversions to the
//! dimensionless strength `P = sqrt(2 m U) a / (2 hbar)` used everywhere else.
//!
//! Everything downstream of this module works with the dimensionless pair
//! `(p, x)` where `p = 1/P` and `x = k a / 2`. Physical units only appear in
//! [`WellSpec`] and in the energies of [`LevelEnergy`].

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Reduced Planck constant in J s (CODATA 2018).
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Electron rest mass in kg (CODATA 2018).
pub const ELECTRON_MASS_SI: f64 = 9.109_383_701_5e-31;
/// Elementary charge in C, i.e. joules per electronvolt.
pub const ELECTRONVOLT_SI: f64 = 1.602_176_634e-19;
/// `hbar^2 / (2 m_e)` in eV nm^2, pinned for the electron/nm/eV preset.
///
/// CODATA 2018 gives 0.038099821 eV nm^2; the preset keeps the customary
/// six significant digits so that desk-scale tables are reproducible.
pub const HBAR2_OVER_2ME_EV_NM2: f64 = 0.038_099_8;

/// Where the zero of energy sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroConvention {
    /// `V(x) = -U` inside, `0` outside; bound energies are negative.
    TopAtZero,
    /// `V(x) = 0` inside, `U` outside; bound energies lie in `(0, U)`.
    #[default]
    BottomAtZero,
}

/// Unit system used to interpret depth, width and mass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnitSystem {
    /// Joules, metres, kilograms.
    Si,
    /// Electronvolts, nanometres, mass in units of the electron mass.
    #[default]
    ElectronNmEv,
    /// `hbar^2 / 2 = 1`: with width 2 and mass 1 the energy scale is 1 and
    /// positions are measured in units of the half width.
    Natural,
}

impl UnitSystem {
    /// `hbar^2 / (2 m)` expressed in `energy * length^2` of this system.
    pub fn hbar2_over_2m(self, mass: f64) -> f64 {
        match self {
            UnitSystem::Si => HBAR_SI * HBAR_SI / (2.0 * mass),
            UnitSystem::ElectronNmEv => HBAR2_OVER_2ME_EV_NM2 / mass,
            UnitSystem::Natural => 1.0 / mass,
        }
    }
}

/// A symmetric finite square well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellSpec {
    depth: f64,
    width: f64,
    mass: f64,
    zero: ZeroConvention,
    units: UnitSystem,
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositiveParameter { name, value })
    }
}

impl WellSpec {
    pub fn new(
        depth: f64,
        width: f64,
        mass: f64,
        zero: ZeroConvention,
        units: UnitSystem,
    ) -> Result<Self> {
        Ok(Self {
            depth: positive("depth", depth)?,
            width: positive("width", width)?,
            mass: positive("mass", mass)?,
            zero,
            units,
        })
    }

    /// Electron in a well given in eV and nm.
    pub fn electron(depth_ev: f64, width_nm: f64) -> Result<Self> {
        Self::new(depth_ev, width_nm, 1.0, ZeroConvention::BottomAtZero, UnitSystem::ElectronNmEv)
    }

    /// A well of given strength `P` in natural units (width 2, energy scale 1).
    pub fn with_strength(strength: f64) -> Result<Self> {
        let strength = positive("strength", strength)?;
        Self::new(strength * strength, 2.0, 1.0, ZeroConvention::BottomAtZero, UnitSystem::Natural)
    }

    pub fn depth(&self) -> f64 {
        self.depth
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn zero_convention(&self) -> ZeroConvention {
        self.zero
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }

    pub fn with_zero_convention(mut self, zero: ZeroConvention) -> Self {
        self.zero = zero;
        self
    }

    /// `hbar^2 / (2 m)` in the well's units.
    pub fn hbar2_over_2m(&self) -> f64 {
        self.units.hbar2_over_2m(self.mass)
    }

    /// `2 hbar^2 / (m a^2)`, equal to `U / P^2`.
    pub fn energy_scale(&self) -> f64 {
        4.0 * self.hbar2_over_2m() / (self.width * self.width)
    }

    /// Wave vector at the top of the well, `k0 = 2P / a`. This is not a level.
    pub fn k0(&self) -> f64 {
        (self.depth / self.hbar2_over_2m()).sqrt()
    }

    /// Potential at position `x` (well centred at the origin).
    pub fn potential(&self, x: f64) -> f64 {
        let inside = x.abs() < 0.5 * self.width;
        match (self.zero, inside) {
            (ZeroConvention::TopAtZero, true) => -self.depth,
            (ZeroConvention::TopAtZero, false) => 0.0,
            (ZeroConvention::BottomAtZero, true) => 0.0,
            (ZeroConvention::BottomAtZero, false) => self.depth,
        }
    }
}

/// Dimensionless strength of a well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessStrength {
    strength: f64,
    inverse: f64,
    energy_scale: f64,
}

impl DimensionlessStrength {
    /// `P`.
    pub fn strength(&self) -> f64 {
        self.strength
    }

    /// `p = 1/P`, the expansion variable of the series solution.
    pub fn inverse(&self) -> f64 {
        self.inverse
    }

    /// `U / P^2 = 2 hbar^2 / (m a^2)`.
    pub fn energy_scale(&self) -> f64 {
        self.energy_scale
    }

    /// Strength alone, with unit energy scale.
    pub fn from_strength(strength: f64) -> Result<Self> {
        let strength = positive("strength", strength)?;
        Ok(Self { strength, inverse: 1.0 / strength, energy_scale: 1.0 })
    }

    /// Strength from `p`, with unit energy scale.
    pub fn from_inverse(inverse: f64) -> Result<Self> {
        let inverse = positive("p", inverse)?;
        Ok(Self { strength: 1.0 / inverse, inverse, energy_scale: 1.0 })
    }
}

pub fn dimensionless_from_well(well: &WellSpec) -> DimensionlessStrength {
    let energy_scale = well.energy_scale();
    let strength = (well.depth / energy_scale).sqrt();
    DimensionlessStrength { strength, inverse: 1.0 / strength, energy_scale }
}

/// Energy of one level, under both zero conventions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelEnergy {
    /// Global level index: odd for even-parity states, even for odd-parity.
    pub n: u32,
    /// `k_n a / 2`.
    pub x_root: f64,
    /// Measured from the top of the well, in `(-U, 0)`.
    pub e_top: f64,
    /// Measured from the bottom of the well, in `(0, U)`.
    pub e_bottom: f64,
    pub k: f64,
    pub kappa: f64,
}

impl LevelEnergy {
    pub fn energy(&self, zero: ZeroConvention) -> f64 {
        match zero {
            ZeroConvention::TopAtZero => self.e_top,
            ZeroConvention::BottomAtZero => self.e_bottom,
        }
    }
}

/// Converts a dimensionless root `x = k a / 2` into energies and wave vectors.
pub fn energy_from_root(well: &WellSpec, n: u32, x_root: f64) -> Result<LevelEnergy> {
    let dimless = dimensionless_from_well(well);
    let strength = dimless.strength;
    if !(x_root > 0.0) || x_root >= strength {
        return Err(Error::UnboundRoot { x: x_root, strength });
    }
    let e_bottom = dimless.energy_scale * x_root * x_root;
    let half = 0.5 * well.width;
    let kappa = ((strength - x_root) * (strength + x_root)).sqrt() / half;
    Ok(LevelEnergy {
        n,
        x_root,
        e_top: e_bottom - well.depth,
        e_bottom,
        k: x_root / half,
        kappa,
    })
}

/// Levels of the infinite well of the same width, `pi^2 hbar^2 n^2 / (2 m a^2)`,
/// for `n = 1..=n_max`, measured from the bottom.
pub fn infinite_well_levels(well: &WellSpec, n_max: u32) -> Vec<f64> {
    let scale = well.energy_scale();
    (1..=n_max)
        .map(|n| {
            let b = f64::from(n) * PI / 2.0;
            scale * b * b
        })
        .collect()
}

/// Levels of the semi-infinite well, `2 hbar^2 pi^2 (n - 1/2)^2 / (m a^2)`.
pub fn semi_infinite_levels(well: &WellSpec, n_max: u32) -> Vec<f64> {
    let scale = well.energy_scale();
    (1..=n_max)
        .map(|n| {
            let b = f64::from(2 * n - 1) * PI / 2.0;
            scale * b * b
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn unit_strength_well() {
        let hb = UnitSystem::ElectronNmEv.hbar2_over_2m(1.0);
        let a = 0.7;
        let well = WellSpec::electron(4.0 * hb / (a * a), a).unwrap();
        let d = dimensionless_from_well(&well);
        assert_relative_eq!(d.strength(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(d.energy_scale(), well.depth(), max_relative = 1e-15);
    }

    #[test]
    fn electron_nm_ev_strength() {
        // sqrt(2 m U) a / (2 hbar) evaluated in SI for m_e, 1 nm, 1 eV.
        let si = WellSpec::new(
            ELECTRONVOLT_SI,
            1e-9,
            ELECTRON_MASS_SI,
            ZeroConvention::BottomAtZero,
            UnitSystem::Si,
        )
        .unwrap();
        assert_relative_eq!(dimensionless_from_well(&si).strength(), 2.561_583_611_406_997, max_relative = 1e-13);
        let preset = WellSpec::electron(1.0, 1.0).unwrap();
        assert_relative_eq!(dimensionless_from_well(&preset).strength(), 2.561_584_321_220_051, max_relative = 1e-13);
    }

    #[test]
    fn quadrupled_depth_doubles_strength() {
        let a = dimensionless_from_well(&WellSpec::electron(0.3, 1.4).unwrap());
        let b = dimensionless_from_well(&WellSpec::electron(1.2, 1.4).unwrap());
        assert_relative_eq!(b.strength(), 2.0 * a.strength(), max_relative = 1e-15);
        assert_relative_eq!(b.inverse(), 0.5 * a.inverse(), max_relative = 1e-15);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(matches!(
            WellSpec::electron(0.0, 1.0),
            Err(Error::NonPositiveParameter { name: "depth", .. })
        ));
        assert!(WellSpec::electron(1.0, -1.0).is_err());
        assert!(WellSpec::new(1.0, 1.0, f64::NAN, ZeroConvention::TopAtZero, UnitSystem::Si).is_err());
    }

    #[test]
    fn depth_round_trip() {
        for (u, a) in [(0.1, 0.3), (5.0, 2.0), (37.0, 0.05)] {
            let well = WellSpec::electron(u, a).unwrap();
            let d = dimensionless_from_well(&well);
            assert_relative_eq!(d.energy_scale() * d.strength().powi(2), u, max_relative = 1e-14);
            assert_relative_eq!(well.k0(), 2.0 * d.strength() / a, max_relative = 1e-14);
        }
    }

    #[test]
    fn energies_from_roots() {
        let well = WellSpec::with_strength(10.0).unwrap();
        let near_top = energy_from_root(&well, 1, 10.0 * (1.0 - 1e-9)).unwrap();
        assert!(near_top.e_top < 0.0 && near_top.e_top > -1e-6 * well.depth());
        let near_bottom = energy_from_root(&well, 1, 1e-6).unwrap();
        assert_relative_eq!(near_bottom.e_top, -well.depth(), max_relative = 1e-12);
        assert!(near_bottom.e_bottom > 0.0);
        assert!(matches!(energy_from_root(&well, 1, 10.0), Err(Error::UnboundRoot { .. })));
        assert!(energy_from_root(&well, 1, 0.0).is_err());
    }

    #[test]
    fn infinite_well_ground_level() {
        let well = WellSpec::electron(1.0, 1.0).unwrap();
        let levels = infinite_well_levels(&well, 4);
        // pi^2 * 0.0380998 eV
        assert_relative_eq!(levels[0], 0.376_029_953_760_624_4, max_relative = 1e-14);
        for (i, e) in levels.iter().enumerate() {
            let n = (i + 1) as f64;
            assert_relative_eq!(e / levels[0], n * n, max_relative = 1e-14);
            let direct = PI * PI * well.hbar2_over_2m() * n * n / (well.width() * well.width());
            assert_relative_eq!(*e, direct, max_relative = 1e-14);
        }
    }

    #[test]
    fn semi_infinite_matches_odd_infinite_levels() {
        let well = WellSpec::electron(2.0, 0.8).unwrap();
        let doubled = WellSpec::electron(2.0, 1.6).unwrap();
        let semi = semi_infinite_levels(&well, 5);
        let inf = infinite_well_levels(&well, 9);
        let inf_doubled = infinite_well_levels(&doubled, 9);
        let scale = well.energy_scale();
        assert_relative_eq!(semi[0], scale * (PI / 2.0).powi(2), max_relative = 1e-15);
        for n in 1..=5usize {
            let odd = (2 * n - 1) as f64;
            assert_relative_eq!(semi[n - 1] / semi[0], odd * odd, max_relative = 1e-14);
            assert_relative_eq!(semi[n - 1], inf[2 * n - 2], max_relative = 1e-14);
            // a width-2a well has the same level at a quarter of the energy
            assert_relative_eq!(semi[n - 1], 4.0 * inf_doubled[2 * n - 2], max_relative = 1e-14);
        }
    }

    #[test]
    fn potential_conventions() {
        let well = WellSpec::electron(3.0, 1.0).unwrap();
        assert_eq!(well.potential(0.0), 0.0);
        assert_eq!(well.potential(0.6), 3.0);
        let top = well.with_zero_convention(ZeroConvention::TopAtZero);
        assert_eq!(top.potential(0.0), -3.0);
        assert_eq!(top.potential(-0.6), 0.0);
    }
}
