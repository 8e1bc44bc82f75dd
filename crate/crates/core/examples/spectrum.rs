//! Levels of an electron in a 10 eV, 0.5 nm well, both energy zeros.

use squarewell::exactsolve::solve_spectrum;
use squarewell::wellcore::{dimensionless_from_well, energy_from_root, infinite_well_levels, WellSpec, ZeroConvention};

fn main() -> squarewell::Result<()> {
    let well = WellSpec::electron(10.0, 0.5)?;
    let d = dimensionless_from_well(&well);
    println!("P = {:.6}  p = {:.6}", d.strength(), d.inverse());

    let roots = solve_spectrum(&d);
    let inf = infinite_well_levels(&well, roots.len() as u32);
    println!("{:>3} {:>8} {:>12} {:>12} {:>12}", "n", "branch", "E bottom", "E top", "E inf");
    for (root, e_inf) in roots.iter().zip(inf) {
        let level = energy_from_root(&well, root.branch.global_index(), root.x)?;
        println!(
            "{:>3} {:>8} {:>12.6} {:>12.6} {:>12.6}",
            level.n,
            root.branch.to_string(),
            level.energy(ZeroConvention::BottomAtZero),
            level.energy(ZeroConvention::TopAtZero),
            e_inf
        );
    }
    Ok(())
}
