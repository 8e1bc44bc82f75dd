//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Tolerances are pinned here, not taken from the library.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::float::Constant;
use rug::Float;

use squarewell::approx::{approximate, regenerate_cubic_constants, CheckStatus};
use squarewell::exactsolve::{solve_branch, solve_spectrum, Method};
use squarewell::intervals::{count_bound_states, BranchId, CountMode, Family};
use squarewell::quadrature::integrate_line;
use squarewell::series::{
    default_table, generate_q_table, ode_continue, verify_against_published, SeriesTable, DEFAULT_LOCAL_ORDER,
    DEFAULT_TOLERANCE,
};
use squarewell::states::build_state;
use squarewell::wellcore::{dimensionless_from_well, infinite_well_levels, WellSpec};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

// ---------------------------------------------------------------------------
// independent oracles

/// Plain bisection on a sign change, to bracket collapse.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn branch_fn(family: Family, x: f64) -> f64 {
    match family {
        Family::Xi => x.cos() / x,
        Family::Zeta if x == 0.0 => 1.0,
        Family::Zeta => x.sin() / x,
    }
}

fn sign(n: u32) -> f64 {
    if n % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

/// Stationary point bounding the monotone stretch of branch `(family, n)`,
/// found from the derivative alone, and the value there.
fn oracle_extremum(family: Family, n: u32) -> (f64, f64) {
    let nf = f64::from(n);
    let r = match (family, n) {
        (Family::Xi, 1) => return (0.0, f64::INFINITY),
        (Family::Zeta, 1) => return (0.0, 1.0),
        // d/dx cos x / x = 0  <=>  x sin x + cos x = 0
        (Family::Xi, _) => bisect(|x| x * x.sin() + x.cos(), (nf - 1.5) * PI, (nf - 1.0) * PI),
        // d/dx sin x / x = 0  <=>  x cos x - sin x = 0
        (Family::Zeta, _) => bisect(|x| x * x.cos() - x.sin(), (nf - 1.0) * PI, (nf - 0.5) * PI),
    };
    (r, branch_fn(family, r).abs())
}

/// Monotone bracket of a branch: from its stationary point to its
/// infinite-well root.
fn oracle_bracket(branch: BranchId) -> (f64, f64, f64) {
    let (r, bound) = oracle_extremum(branch.family, branch.n);
    (r, branch.infinite_well_root(), bound)
}

fn oracle_root(branch: BranchId, p: f64) -> f64 {
    let (lo, hi, _) = oracle_bracket(branch);
    let s = sign(branch.n);
    // keep lo off zero for xi_1
    bisect(|x| branch_fn(branch.family, x) - s * p, lo.max(1e-300), hi)
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let table = generate_q_table(16);
    let elapsed = start.elapsed();
    let report = verify_against_published(&table);
    let failed: Vec<String> = report.checks.iter().filter(|c| !c.passed()).map(|c| format!("q{}", c.m)).collect();
    let pass = report.all_passed() && elapsed < Duration::from_secs(10);
    outcome(
        pass,
        format!(
            "{} of 17 polynomials equal exactly, {} mismatching coefficients [{}], generation {:.2} s (limit 10 s)",
            17 - failed.len(),
            report.mismatch_count(),
            failed.join(" "),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let checks = regenerate_cubic_constants();
    let elapsed = start.elapsed();
    let mut parts = Vec::new();
    let mut pass = elapsed < Duration::from_secs(1);
    for c in &checks {
        let within = c.max_deviation() <= 2e-4;
        if c.branch == BranchId::zeta(5) {
            // reported with computed values, WARN allowed
            parts.push(format!("{} {} computed {:?}", c.branch, c.status, c.computed));
            continue;
        }
        pass &= within && c.status == CheckStatus::Pass;
        if !within {
            parts.push(format!("{} off by {:.2e}", c.branch, c.max_deviation()));
        }
    }
    outcome(pass, format!("tolerance 2e-4, {:.3} s (limit 1 s); {}", elapsed.as_secs_f64(), parts.join("; ")))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut worst_res: f64 = 0.0;
    let mut worst_dx: f64 = 0.0;
    for _ in 0..1000 {
        let family = if rng.gen_bool(0.5) { Family::Xi } else { Family::Zeta };
        let n = rng.gen_range(1..=10u32);
        let branch = if family == Family::Xi { BranchId::xi(n) } else { BranchId::zeta(n) };
        let (_, _, bound) = oracle_bracket(branch);
        let top = bound.min(5.0);
        let p = rng.gen_range(0.0..top);
        let root = match solve_branch(branch, p) {
            Ok(r) => r,
            Err(e) => return outcome(false, format!("{branch} at p = {p}: {e}")),
        };
        let res = (branch_fn(family, root.x) - sign(n) * p).abs();
        worst_res = worst_res.max(res);
        worst_dx = worst_dx.max((root.x - oracle_root(branch, p)).abs());
    }
    outcome(
        worst_res < 1e-12 && worst_dx < 1e-11,
        format!("1000 pairs, max residual {worst_res:.2e} (limit 1e-12), max distance to bisection {worst_dx:.2e} (limit 1e-11)"),
    )
}

/// `|sin X / X - s p|` for the order-`order` truncated series, all in
/// `prec`-bit arithmetic.
fn hp_series_residual(table: &SeriesTable, n: u32, order: usize, p: f64, prec: u32) -> Float {
    let b = Float::with_val(prec, Constant::Pi) * n;
    let pf = Float::with_val(prec, p);
    let mut sum = Float::with_val(prec, 0);
    let mut pm = Float::with_val(prec, 1);
    for m in 0..=order {
        let q = table.q(m).expect("order within table");
        let mut qb = Float::with_val(prec, 0);
        let mut bk = Float::with_val(prec, 1);
        for c in q.coeffs() {
            let num = Float::with_val(prec, Float::parse(c.numer().to_string()).expect("integer"));
            let den = Float::with_val(prec, Float::parse(c.denom().to_string()).expect("integer"));
            qb += Float::with_val(prec, &num / &den) * &bk;
            bk *= &b;
        }
        sum += qb * &pm;
        pm *= &pf;
    }
    let x = b * sum;
    let lhs = Float::with_val(prec, x.sin_ref()) / &x;
    let target = pf * sign(n);
    (lhs - target).abs()
}

fn criterion_4() -> Outcome {
    let table = default_table();
    let prec = 512;
    let (lo, hi) = (-3.0f64, -1.5f64);
    let points = 16;
    let mut worst = (f64::INFINITY, String::new());
    let mut pass = true;
    for n in 1..=4u32 {
        for order in [3usize, 6, 10] {
            let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
            for i in 0..points {
                let lp = lo + (hi - lo) * i as f64 / (points - 1) as f64;
                let res = hp_series_residual(table, n, order, 10f64.powf(lp), prec);
                let ly = res.log10().to_f64();
                sx += lp;
                sy += ly;
                sxx += lp * lp;
                sxy += lp * ly;
            }
            let k = points as f64;
            let slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
            let margin = slope - (order as f64 + 0.7);
            pass &= margin >= 0.0;
            if margin < worst.0 {
                worst = (margin, format!("zeta:{n} N={order} slope {slope:.3}"));
            }
        }
    }
    outcome(pass, format!("12 fits on p in [1e-3, 10^-1.5], tightest {} (need N + 0.7)", worst.1))
}

fn residual_of(branch: BranchId, p: f64, method: Method) -> f64 {
    let x = approximate(branch, p, method).expect("method defined").x;
    (branch_fn(branch.family, x) - sign(branch.n) * p).abs()
}

fn criterion_5() -> Outcome {
    let z2 = BranchId::zeta(2);
    let (_, bound) = oracle_extremum(Family::Zeta, 2);
    let max_over = |m: Method| (0..=400).map(|i| residual_of(z2, 0.5 * bound * f64::from(i) / 400.0, m)).fold(0.0, f64::max);
    let (cubic, barker, sp) = (max_over(Method::Cubic), max_over(Method::Barker), max_over(Method::ParabolicSimple));
    let z1 = BranchId::zeta(1);
    let ratio = residual_of(z1, 0.5, Method::Barker) / residual_of(z1, 0.5, Method::Cubic);
    outcome(
        cubic < barker && barker < sp && ratio >= 10.0,
        format!("zeta:2 on p <= |M|/2: cubic {cubic:.2e} < barker {barker:.2e} < sp {sp:.2e}; zeta:1 at p = 0.5 barker/cubic = {ratio:.1} (need >= 10)"),
    )
}

fn criterion_6() -> Outcome {
    let (p_lo, p_hi, points) = (0.01, 1.0, 10_000);
    let grid: Vec<f64> = (0..points).map(|i| p_lo + (p_hi - p_lo) * i as f64 / (points - 1) as f64).collect();
    // branches that can hold a root above p_lo: n pi ~ 1 / p
    let max_n = (1.0 / (p_lo * PI)).ceil() as u32 + 2;
    let mut branches = Vec::new();
    for n in 1..=max_n {
        for branch in [BranchId::xi(n), BranchId::zeta(n)] {
            branches.push((branch, oracle_bracket(branch)));
        }
    }
    let mut mismatches = 0;
    let mut disagreeing = Vec::new();
    for (i, &p) in grid.iter().enumerate() {
        // a monotone stretch holds a root iff the target lies between its ends
        let brute = branches
            .iter()
            .filter(|(b, (lo, hi, _))| {
                let s = sign(b.n) * p;
                let f_lo = if *lo == 0.0 { if b.family == Family::Xi { f64::INFINITY } else { 1.0 } } else { branch_fn(b.family, *lo) };
                let f_hi = branch_fn(b.family, *hi);
                (f_lo - s) * (f_hi - s) <= 0.0
            })
            .count();
        let d = squarewell::wellcore::DimensionlessStrength::from_inverse(p).expect("p > 0");
        if count_bound_states(&d, CountMode::Refined) != brute {
            mismatches += 1;
        }
        if count_bound_states(&d, CountMode::Approximate) != brute {
            disagreeing.push(i);
        }
    }
    // group disagreements into bands and check each holds an extremum value
    let extrema: Vec<f64> = branches.iter().map(|(_, (_, _, m))| *m).filter(|m| m.is_finite()).collect();
    let step = (p_hi - p_lo) / (points - 1) as f64;
    let mut bands: Vec<(usize, usize)> = Vec::new();
    for &i in &disagreeing {
        match bands.last_mut() {
            Some((_, end)) if *end + 1 == i => *end = i,
            _ => bands.push((i, i)),
        }
    }
    let mut widest: f64 = 0.0;
    let orphan = bands
        .iter()
        .filter(|(a, b)| {
            let (lo, hi) = (grid[*a] - step, grid[*b] + step);
            widest = widest.max(hi - lo);
            !extrema.iter().any(|m| (lo..=hi).contains(m))
        })
        .count();
    outcome(
        mismatches == 0 && orphan == 0,
        format!(
            "10^4 points on [0.01, 1]: refined vs enumeration {mismatches} mismatches; approximate differs in {} bands, {orphan} without an |M| (widest {widest:.3})",
            bands.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let deep = WellSpec::with_strength(1e3).expect("valid");
    let roots = solve_spectrum(&dimensionless_from_well(&deep));
    let inf = infinite_well_levels(&deep, 3);
    let scale = deep.energy_scale();
    let devs: Vec<f64> = (0..3).map(|i| (scale * roots[i].x * roots[i].x / inf[i] - 1.0).abs()).collect();
    let part1 = devs.iter().all(|d| *d < 1e-3);

    let mut part2 = true;
    let mut garrett_detail = Vec::new();
    for n in 1..=3u32 {
        let mut last = f64::INFINITY;
        let mut seq = Vec::new();
        for strength in [2.0, 5.0, 10.0, 50.0] {
            let well = WellSpec::with_strength(strength).expect("valid");
            let roots = solve_spectrum(&dimensionless_from_well(&well));
            let Some(root) = roots.get(n as usize - 1) else { continue };
            let exact = well.energy_scale() * root.x * root.x;
            let err = (squarewell::approx::garrett_energy(&well, n) / exact - 1.0).abs();
            part2 &= err < last;
            last = err;
            seq.push(format!("{err:.1e}"));
        }
        garrett_detail.push(format!("n={n} [{}]", seq.join(" > ")));
    }
    outcome(
        part1 && part2,
        format!(
            "P = 1e3 |E/E_inf - 1| = {:.2e} {:.2e} {:.2e} (limit 1e-3) {}; Garrett error decreasing {}: {}",
            devs[0],
            devs[1],
            devs[2],
            if part1 { "ok" } else { "FAIL" },
            if part2 { "ok" } else { "FAIL" },
            garrett_detail.join(", ")
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut worst = [0.0f64; 4];
    let mut node_errors = 0;
    let mut count = 0;
    for strength in [1.2, 3.0, 10.0] {
        let well = WellSpec::with_strength(strength).expect("valid");
        let roots = solve_spectrum(&dimensionless_from_well(&well));
        let states: Vec<_> = roots.iter().map(|r| build_state(&well, r).expect("bound")).collect();
        let half = 0.5 * well.width();
        for (i, s) in states.iter().enumerate() {
            count += 1;
            worst[0] = worst[0].max(s.continuity_mismatch());
            let norm = integrate_line(|x| s.psi(x).powi(2), half, 2.0 * s.kappa, 2.0 * s.k);
            worst[1] = worst[1].max((norm - 1.0).abs());
            for t in &states[..i] {
                let o = integrate_line(|x| s.psi(x) * t.psi(x), half, s.kappa + t.kappa, s.k + t.k);
                worst[2] = worst[2].max(o.abs());
            }
            // nodes: sign changes away from the tails' underflow
            let reach = half + 10.0 / s.kappa;
            let mut nodes = 0;
            let mut last = 0.0f64;
            for j in 0..=40_000 {
                let v = s.psi(-reach + 2.0 * reach * f64::from(j) / 40_000.0);
                if v.abs() < 1e-12 {
                    continue;
                }
                if last != 0.0 && (v > 0.0) != (last > 0.0) {
                    nodes += 1;
                }
                last = v;
            }
            if nodes != i {
                node_errors += 1;
            }
            // -psi'' + (V - E) psi, central differences, hbar^2/2m = 1
            let h = 1e-4;
            let e = s.energy();
            let scale = (e.abs() + well.depth()) * s.inside_amplitude;
            for j in 0..400 {
                let x = -reach + 2.0 * reach * (f64::from(j) + 0.5) / 400.0;
                if (x.abs() - half).abs() < 4.0 * h {
                    continue;
                }
                let d2 = (s.psi(x + h) - 2.0 * s.psi(x) + s.psi(x - h)) / (h * h);
                let r = (-d2 + (well.potential(x) - e) * s.psi(x)).abs() / scale;
                worst[3] = worst[3].max(r);
            }
        }
    }
    let pass = worst[0] < 1e-8 && worst[1] < 1e-8 && worst[2] < 1e-8 && node_errors == 0 && worst[3] < 1e-6;
    outcome(
        pass,
        format!(
            "{count} states: continuity {:.1e}, norm {:.1e}, overlap {:.1e} (limits 1e-8), node errors {node_errors}, Schroedinger residual {:.1e} (limit 1e-6)",
            worst[0], worst[1], worst[2], worst[3]
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=6u32);
        let branch = if rng.gen_bool(0.5) { BranchId::xi(n) } else { BranchId::zeta(n) };
        let top = branch.physical_threshold().min(5.0);
        let p = rng.gen_range(0.0..top);
        let r = match ode_continue(branch, p, DEFAULT_LOCAL_ORDER, DEFAULT_TOLERANCE) {
            Ok(r) => r,
            Err(e) => return outcome(false, format!("{branch} at p = {p}: {e}")),
        };
        worst = worst.max((r.x - solve_branch(branch, p).expect("in range").x).abs());
    }
    outcome(worst < 1e-9, format!("100 targets, max |ode - exact| {worst:.2e} (limit 1e-9)"))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = squarewell::cli::run(std::iter::once("squarewell").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

fn criterion_10() -> Outcome {
    let runs: [&[&str]; 6] = [
        &["roots", "--branch", "xi:1,zeta:1,xi:2", "--method", "exact,sp,ip,cubic,barker,series12,garrett", "--p-max", "0.3", "--p-step", "0.01"],
        &["residuals", "--branch", "zeta:1", "--method", "barker,sp,cubic", "--p-max", "1", "--p-step", "0.01"],
        &["residuals", "--branch", "zeta:2", "--method", "barker,sp,cubic", "--p-max", "0.2", "--p-step", "0.001", "--format", "json"],
        &["coeffs"],
        &["spectrum", "--P", "10", "--method", "cubic,barker,garrett"],
        &["film", "--work-function", "4", "--fermi-energy", "5", "--thickness", "1", "--format", "json"],
    ];
    let mut identical = true;
    for args in runs {
        let a = run_cli(args);
        let b = run_cli(args);
        identical &= a == b && a.0 == 0;
    }
    let (first, _) = run_cli(&["verify"]);
    let (second, _) = run_cli(&["verify"]);
    identical &= first == second;
    outcome(
        identical && first == 0,
        format!("6 commands byte-identical on rerun: {}; verify exit code {first} (need 0)", if identical { "yes" } else { "no" }),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("series coefficients exact", criterion_1),
        ("cubic constants regenerate", criterion_2),
        ("exact solver fidelity", criterion_3),
        ("series residual order", criterion_4),
        ("residual curve ordering", criterion_5),
        ("counting consistency", criterion_6),
        ("deep-well and Garrett limits", criterion_7),
        ("wavefunction suite", criterion_8),
        ("ode continuation", criterion_9),
        ("cli determinism and verify", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!("{} criterion {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
