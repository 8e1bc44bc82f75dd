//! How many levels a well holds, by each counting rule.

use squarewell::intervals::{count_bound_states, extremum_value, CountMode, ExtremumMode, Family};
use squarewell::wellcore::DimensionlessStrength;

fn main() -> squarewell::Result<()> {
    println!("{:>6} {:>6} {:>8} {:>9}", "P", "quick", "refined", "physical");
    for strength in [0.5, 1.0, 1.6, 3.0, 3.2, 4.7, 6.3, 10.0, 25.0] {
        let d = DimensionlessStrength::from_strength(strength)?;
        println!(
            "{:>6} {:>6} {:>8} {:>9}",
            strength,
            count_bound_states(&d, CountMode::Approximate),
            count_bound_states(&d, CountMode::Refined),
            count_bound_states(&d, CountMode::Physical)
        );
    }
    println!();
    for n in 2..=5 {
        println!(
            "n = {n}: extremum values {:.6} (cos x / x), {:.6} (sin x / x)",
            extremum_value(Family::Xi, n, ExtremumMode::Numeric)?,
            extremum_value(Family::Zeta, n, ExtremumMode::Numeric)?
        );
    }
    Ok(())
}
