//! Every closed form against the exact root, over a few strengths.

use squarewell::approx::approximate;
use squarewell::exactsolve::{solve_branch, Method};
use squarewell::intervals::BranchId;

fn main() {
    let methods = [
        Method::ParabolicSimple,
        Method::ParabolicImproved,
        Method::Cubic,
        Method::Barker,
        Method::SeriesN(16),
        Method::Garrett,
    ];
    let branches = [BranchId::xi(1), BranchId::zeta(1), BranchId::xi(2), BranchId::zeta(2)];
    print!("{:>8} {:>5} {:>12}", "branch", "p", "exact");
    for m in methods {
        print!(" {:>10}", m.to_string());
    }
    println!();
    for b in branches {
        for p in [0.05, 0.1, 0.2, 0.3] {
            // xi_2 and zeta_2 stop being roots past their extremum values
            let Ok(exact) = solve_branch(b, p) else { continue };
            print!("{:>8} {:>5} {:>12.8}", b.to_string(), p, exact.x);
            for m in methods {
                match approximate(b, p, m) {
                    Ok(r) => print!(" {:>10.2e}", r.x - exact.x),
                    Err(_) => print!(" {:>10}", "-"),
                }
            }
            println!();
        }
    }
}
