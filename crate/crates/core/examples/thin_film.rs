//! Subband ladder of a freestanding metal film as it thickens.

use squarewell::apps::{film_subbands, FilmSpec};
use squarewell::exactsolve::Method;

fn main() -> squarewell::Result<()> {
    // roughly aluminium
    let (work_function, fermi) = (4.2, 11.7);
    for thickness in [0.3, 0.6, 1.0, 2.0] {
        let film = FilmSpec::new(work_function, fermi, thickness)?;
        let report = film_subbands(&film, &[Method::Cubic, Method::Barker, Method::Garrett])?;
        println!("a = {thickness} nm: P = {:.3}, {} subbands", report.dimless.strength(), report.rows.len());
        for row in report.rows.iter().take(3) {
            let errs: Vec<String> = row
                .cells
                .iter()
                .map(|c| match c.rel_deviation {
                    Some(e) => format!("{}={e:+.1e}", c.method),
                    None => format!("{}=-", c.method),
                })
                .collect();
            println!("  E{} = {:8.4} eV (infinite well {:8.4})  {}", row.exact.n, row.exact.e_bottom, row.infinite_well, errs.join(" "));
        }
    }
    Ok(())
}
