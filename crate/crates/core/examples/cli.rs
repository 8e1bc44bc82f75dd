//! The command line front end, driven in process.
//!
//! Same as `squarewell residuals --branch zeta:2 ...` from a shell.

fn main() {
    let args = ["squarewell", "residuals", "--branch", "zeta:2", "--method", "sp,cubic,barker", "--p-max", "0.2", "--p-step", "0.05"];
    let code = squarewell::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
