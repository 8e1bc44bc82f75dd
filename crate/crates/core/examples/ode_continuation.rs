//! Following a root from the infinite well by local Taylor steps.

use squarewell::exactsolve::solve_branch;
use squarewell::intervals::BranchId;
use squarewell::series::{local_taylor, ode_continue, DEFAULT_TOLERANCE};

fn main() -> squarewell::Result<()> {
    let branch = BranchId::zeta(3);
    for order in [4, 8, 12] {
        let r = ode_continue(branch, 0.1, order, DEFAULT_TOLERANCE)?;
        let exact = solve_branch(branch, 0.1)?;
        println!("order {order:>2}: X = {:.15}  error {:.1e}", r.x, r.x - exact.x);
    }

    // the expansion itself
    let state = local_taylor(0.05, solve_branch(branch, 0.05)?.x, 6);
    println!("coefficients at p = 0.05: {:?}", state.coeffs());
    println!("ode residual 0.01 away: {:.1e}", state.ode_residual(0.01));
    Ok(())
}
