//! Normalised states, an expectation value and a CSV sample.

use squarewell::exactsolve::solve_spectrum;
use squarewell::states::{build_state, perturbation_shift_corrugated, perturbation_shift_step};
use squarewell::wellcore::{dimensionless_from_well, WellSpec};

fn main() -> squarewell::Result<()> {
    let well = WellSpec::with_strength(3.0)?;
    let roots = solve_spectrum(&dimensionless_from_well(&well));
    let states = roots.iter().map(|r| build_state(&well, r)).collect::<squarewell::Result<Vec<_>>>()?;

    for s in &states {
        println!(
            "n = {}  E = {:.6}  inside {:.4}  <x^2> = {:.5}  jump {:.1e}",
            s.level.n,
            s.energy(),
            s.interior_probability(),
            s.expectation(|x| x * x),
            s.continuity_mismatch()
        );
    }
    println!("<1|2> = {:.1e}", states[0].overlap(&states[1]));

    let step = perturbation_shift_step(&states[0], well.depth(), 1.1 * well.depth())?;
    let ripple = perturbation_shift_corrugated(&states[0], 0.05 * well.depth(), 0.5)?;
    println!("raised right barrier: dE = {:.5} (warn {})", step.shift, step.warning);
    println!("corrugated floor:     dE = {:.5} (warn {})", ripple.shift, ripple.warning);

    let xs: Vec<f64> = (-6..=6).map(|i| 0.5 * f64::from(i)).collect();
    print!("{}", states[0].sample_csv(&xs));
    Ok(())
}
