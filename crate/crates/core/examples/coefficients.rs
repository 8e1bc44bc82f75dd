//! Exact series coefficients and the check against the printed table.

use squarewell::series::{default_table, rational_to_f64, verify_against_published};

fn main() {
    let table = default_table();
    for (m, q) in table.polys().iter().enumerate().take(8) {
        let terms: Vec<String> = q
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| *c.numer() != 0.into())
            .map(|(k, c)| if k == 0 { c.to_string() } else { format!("{c} b^{k}") })
            .collect();
        println!("q{m} = {}", terms.join(" + "));
    }
    let q16 = table.q(16).expect("order 16");
    println!("q16 has degree {:?}, leading {:.6e}", q16.degree(), rational_to_f64(q16.coeffs().last().unwrap()));

    println!();
    print!("{}", verify_against_published(table));
    println!();
}
