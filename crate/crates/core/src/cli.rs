//! Command-line front end. Every command emits plot-ready data as CSV or
//! JSON; numbers go through [`crate::format`] so both encodings carry the
//! same digits.
//!
//! Exit codes: 0 ok, 1 internal error or failed verification, 2 usage or
//! domain error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::approx::{approximate, regenerate_cubic_constants, CheckStatus};
use crate::apps::{film_subbands, spectrum_report, FilmSpec, SpectrumReport};
use crate::error::Error;
use crate::exactsolve::Method;
use crate::format::{fmt_float, json_float};
use crate::intervals::{bracket_for, BranchId};
use crate::series::{default_table, generate_q_table, verify_against_published, DEFAULT_MAX_ORDER};
use crate::states::Parity;
use crate::wellcore::{UnitSystem, WellSpec, ZeroConvention};

#[derive(Debug, Parser)]
#[command(name = "squarewell", version, about = "Bound states of the finite square well")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Branches, e.g. `zeta:1,xi:2`.
    #[arg(long, global = true, value_delimiter = ',')]
    branch: Vec<BranchId>,
    /// Methods: exact, sp, ip, cubic, barker, seriesN, garrett.
    #[arg(long, global = true, value_delimiter = ',')]
    method: Vec<Method>,
    #[arg(long = "p-min", global = true)]
    p_min: Option<f64>,
    #[arg(long = "p-max", global = true)]
    p_max: Option<f64>,
    #[arg(long = "p-step", global = true)]
    p_step: Option<f64>,
    /// Well strength; selects units with hbar^2/2m = 1 and width 2.
    #[arg(long = "P", global = true)]
    strength: Option<f64>,
    /// Barrier height in eV.
    #[arg(long = "well-depth", global = true)]
    well_depth: Option<f64>,
    /// Width in nm.
    #[arg(long = "well-width", global = true)]
    well_width: Option<f64>,
    /// `electron` or an effective mass in electron masses.
    #[arg(long = "mass-preset", global = true)]
    mass_preset: Option<String>,
    /// Work function in eV (film).
    #[arg(long = "work-function", global = true)]
    work_function: Option<f64>,
    /// Fermi energy in eV (film).
    #[arg(long = "fermi-energy", global = true)]
    fermi_energy: Option<f64>,
    /// Film thickness in nm.
    #[arg(long, global = true)]
    thickness: Option<f64>,
    /// Highest coefficient order for `coeffs`.
    #[arg(long = "max-order", global = true)]
    max_order: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Flat `key=value` file; keys are the long flag names. Flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
enum Command {
    /// Root values on a p grid.
    Roots,
    /// Left-hand side of the root equation at each method's root.
    Residuals,
    /// Series coefficient polynomials, exact.
    Coeffs,
    /// Level table of one well.
    Spectrum,
    /// Level table of a freestanding film.
    Film,
    /// Regenerates the tabulated constants and compares.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::StepUnderflow { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

/// Runs the CLI on `args` (first item is the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(f) => {
            let (Failure::Usage(msg) | Failure::Internal(msg)) = &f;
            let _ = writeln!(stderr, "error: {msg}");
            f.code()
        }
    }
}

/// Config values by key.
struct Config(BTreeMap<String, String>);

const CONFIG_KEYS: [&str; 15] = [
    "branch",
    "method",
    "p-min",
    "p-max",
    "p-step",
    "P",
    "well-depth",
    "well-width",
    "mass-preset",
    "work-function",
    "fermi-energy",
    "thickness",
    "max-order",
    "format",
    "out",
];

impl Config {
    fn load(path: Option<&Path>) -> CmdResult<Self> {
        let mut map = BTreeMap::new();
        let Some(path) = path else { return Ok(Self(map)) };
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Failure::Usage(format!("{}:{}: expected key=value", path.display(), i + 1)))?;
            let key = key.trim();
            if !CONFIG_KEYS.contains(&key) {
                return Err(Failure::Usage(format!("{}:{}: unknown key `{key}`", path.display(), i + 1)));
            }
            map.insert(key.to_owned(), value.trim().to_owned());
        }
        Ok(Self(map))
    }

    fn get<T: std::str::FromStr>(&self, key: &str) -> CmdResult<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.0
            .get(key)
            .map(|v| v.parse::<T>().map_err(|e| Failure::Usage(format!("config `{key}`: {e}"))))
            .transpose()
    }

    fn list<T: std::str::FromStr>(&self, key: &str) -> CmdResult<Vec<T>>
    where
        T::Err: std::fmt::Display,
    {
        match self.0.get(key) {
            None => Ok(Vec::new()),
            Some(v) => v
                .split(',')
                .map(|s| s.trim().parse::<T>().map_err(|e| Failure::Usage(format!("config `{key}`: {e}"))))
                .collect(),
        }
    }
}

/// Flags merged over the config file.
struct Settings {
    branches: Vec<BranchId>,
    methods: Vec<Method>,
    p_min: Option<f64>,
    p_max: Option<f64>,
    p_step: Option<f64>,
    strength: Option<f64>,
    well_depth: Option<f64>,
    well_width: Option<f64>,
    mass_preset: Option<String>,
    work_function: Option<f64>,
    fermi_energy: Option<f64>,
    thickness: Option<f64>,
    max_order: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
}

impl Settings {
    fn merge(cli: Cli, cfg: &Config) -> CmdResult<Self> {
        let format = match cli.format {
            Some(f) => f,
            None => match cfg.0.get("format").map(String::as_str) {
                None | Some("csv") => Format::Csv,
                Some("json") => Format::Json,
                Some(other) => return Err(Failure::Usage(format!("config `format`: unknown format `{other}`"))),
            },
        };
        Ok(Self {
            branches: if cli.branch.is_empty() { cfg.list("branch")? } else { cli.branch },
            methods: if cli.method.is_empty() { cfg.list("method")? } else { cli.method },
            p_min: cli.p_min.map_or_else(|| cfg.get("p-min"), |v| Ok(Some(v)))?,
            p_max: cli.p_max.map_or_else(|| cfg.get("p-max"), |v| Ok(Some(v)))?,
            p_step: cli.p_step.map_or_else(|| cfg.get("p-step"), |v| Ok(Some(v)))?,
            strength: cli.strength.map_or_else(|| cfg.get("P"), |v| Ok(Some(v)))?,
            well_depth: cli.well_depth.map_or_else(|| cfg.get("well-depth"), |v| Ok(Some(v)))?,
            well_width: cli.well_width.map_or_else(|| cfg.get("well-width"), |v| Ok(Some(v)))?,
            mass_preset: cli.mass_preset.map_or_else(|| cfg.get("mass-preset"), |v| Ok(Some(v)))?,
            work_function: cli.work_function.map_or_else(|| cfg.get("work-function"), |v| Ok(Some(v)))?,
            fermi_energy: cli.fermi_energy.map_or_else(|| cfg.get("fermi-energy"), |v| Ok(Some(v)))?,
            thickness: cli.thickness.map_or_else(|| cfg.get("thickness"), |v| Ok(Some(v)))?,
            max_order: cli.max_order.map_or_else(|| cfg.get("max-order"), |v| Ok(Some(v)))?,
            format,
            out: cli.out.map_or_else(|| cfg.get("out"), |v| Ok(Some(v)))?,
        })
    }

    fn mass(&self) -> CmdResult<f64> {
        match self.mass_preset.as_deref() {
            None | Some("electron") => Ok(1.0),
            Some(other) => other
                .parse::<f64>()
                .ok()
                .filter(|m| *m > 0.0 && m.is_finite())
                .ok_or_else(|| Failure::Usage(format!("mass preset `{other}` is neither `electron` nor a positive number"))),
        }
    }

    /// Grid `p_min + i p_step` up to `p_max` inclusive.
    fn grid(&self) -> CmdResult<Vec<f64>> {
        let (lo, hi, step) = (self.p_min.unwrap_or(0.0), self.p_max, self.p_step);
        let (Some(hi), Some(step)) = (hi, step) else {
            return Err(Failure::Usage("--p-max and --p-step are required".into()));
        };
        if !(lo >= 0.0) || !(hi >= lo) || !(step > 0.0) || !hi.is_finite() {
            return Err(Failure::Usage(format!("invalid grid p-min={lo} p-max={hi} p-step={step}")));
        }
        let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
        if count > 10_000_000 {
            return Err(Failure::Usage(format!("grid of {count} points is too large")));
        }
        // the p_max end may touch a branch's existence bound, where the
        // root degenerates; values past every bound are rejected
        let bound = self.branches.iter().map(|b| bracket_for(*b).existence_bound).fold(0.0, f64::max);
        if hi > bound {
            return Err(Failure::Usage(format!("p-max {hi} exceeds the existence bound {bound}")));
        }
        Ok((0..count).map(|i| lo + step * i as f64).collect())
    }
}

/// One output cell.
#[derive(Debug, Clone, PartialEq)]
enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

/// Column-oriented output shared by CSV and JSON.
struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn render(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Csv => {
                s.push_str(&self.columns.join(","));
                s.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|c| match c {
                            Cell::Num(x) => fmt_float(*x),
                            Cell::Int(i) => i.to_string(),
                            Cell::Text(t) => t.clone(),
                            Cell::Empty => String::new(),
                        })
                        .collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
            }
            Format::Json => {
                let columns: Vec<String> = self.columns.iter().map(|c| json_string(c)).collect();
                let _ = write!(s, "{{\"columns\":[{}],\"rows\":[", columns.join(","));
                for (i, row) in self.rows.iter().enumerate() {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|c| match c {
                            Cell::Num(x) => json_float(*x),
                            Cell::Int(i) => i.to_string(),
                            Cell::Text(t) => json_string(t),
                            Cell::Empty => "null".to_owned(),
                        })
                        .collect();
                    let _ = write!(s, "{}\n[{}]", if i == 0 { "" } else { "," }, cells.join(","));
                }
                s.push_str("]}\n");
            }
        }
        s
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> CmdResult<i32> {
    let cfg = Config::load(cli.config.as_deref())?;
    let command = cli.command;
    let settings = Settings::merge(cli, &cfg)?;
    let (text, code) = match command {
        Command::Roots => (roots_table(&settings)?.render(settings.format), 0),
        Command::Residuals => (residuals_table(&settings)?.render(settings.format), 0),
        Command::Coeffs => (coeffs_table(&settings)?.render(settings.format), 0),
        Command::Spectrum => {
            let well = well_from(&settings)?;
            (level_table(&spectrum_report(&well, &settings.methods)?).render(settings.format), 0)
        }
        Command::Film => {
            let film = film_from(&settings)?;
            (level_table(&film_subbands(&film, &settings.methods)?).render(settings.format), 0)
        }
        Command::Verify => verify_text(),
    };
    emit(&text, settings.out.as_deref(), stdout)?;
    Ok(code)
}

/// Writes to `out` through a temporary file in the same directory, so a
/// failed run never leaves a partial file behind.
fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> CmdResult<()> {
    let io = |e: std::io::Error| Failure::Internal(e.to_string());
    match out {
        None => stdout.write_all(text.as_bytes()).map_err(io),
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
            tmp.write_all(text.as_bytes()).map_err(io)?;
            tmp.as_file().sync_all().map_err(io)?;
            tmp.persist(path).map_err(|e| io(e.error))?;
            Ok(())
        }
    }
}

fn require_branches(s: &Settings) -> CmdResult<()> {
    if s.branches.is_empty() {
        return Err(Failure::Usage("at least one --branch is required".into()));
    }
    Ok(())
}

fn methods_or_exact(s: &Settings) -> Vec<Method> {
    if s.methods.is_empty() {
        vec![Method::Exact]
    } else {
        s.methods.clone()
    }
}

fn roots_table(s: &Settings) -> CmdResult<Table> {
    require_branches(s)?;
    let methods = methods_or_exact(s);
    let grid = s.grid()?;
    let mut columns = vec!["p".to_owned()];
    for b in &s.branches {
        for m in &methods {
            columns.push(format!("{b}:{m}"));
        }
    }
    let rows = grid
        .iter()
        .map(|&p| {
            let mut row = vec![Cell::Num(p)];
            for &b in &s.branches {
                for &m in &methods {
                    row.push(approximate(b, p, m).map_or(Cell::Empty, |r| Cell::Num(r.x)));
                }
            }
            row
        })
        .collect();
    Ok(Table { columns, rows })
}

fn residuals_table(s: &Settings) -> CmdResult<Table> {
    require_branches(s)?;
    if s.branches.len() != 1 {
        return Err(Failure::Usage("residuals takes exactly one --branch".into()));
    }
    let branch = s.branches[0];
    let methods = methods_or_exact(s);
    let grid = s.grid()?;
    let mut columns = vec!["p".to_owned()];
    columns.extend(methods.iter().map(ToString::to_string));
    columns.push("target".to_owned());
    let rows = grid
        .iter()
        .map(|&p| {
            let mut row = vec![Cell::Num(p)];
            row.extend(methods.iter().map(|&m| approximate(branch, p, m).map_or(Cell::Empty, |r| Cell::Num(branch.lhs(r.x)))));
            row.push(Cell::Num(branch.sign() * p));
            row
        })
        .collect();
    Ok(Table { columns, rows })
}

fn coeffs_table(s: &Settings) -> CmdResult<Table> {
    let order = s.max_order.unwrap_or(DEFAULT_MAX_ORDER);
    let generated;
    let table = if order == DEFAULT_MAX_ORDER {
        default_table()
    } else {
        generated = generate_q_table(order);
        &generated
    };
    let columns = ["m", "power", "numerator", "denominator"].map(String::from).to_vec();
    let mut rows = Vec::new();
    for (m, poly) in table.polys().iter().enumerate() {
        for (power, c) in poly.coeffs().iter().enumerate() {
            if c.numer().sign() == num_bigint::Sign::NoSign {
                continue;
            }
            // big integers stay text in both encodings
            rows.push(vec![
                Cell::Int(m as i64),
                Cell::Int(power as i64),
                Cell::Text(c.numer().to_string()),
                Cell::Text(c.denom().to_string()),
            ]);
        }
    }
    Ok(Table { columns, rows })
}

fn well_from(s: &Settings) -> CmdResult<WellSpec> {
    match (s.strength, s.well_depth, s.well_width) {
        (Some(strength), None, None) => Ok(WellSpec::with_strength(strength)?),
        (None, Some(depth), Some(width)) => {
            Ok(WellSpec::new(depth, width, s.mass()?, ZeroConvention::BottomAtZero, UnitSystem::ElectronNmEv)?)
        }
        _ => Err(Failure::Usage("give either --P or both --well-depth and --well-width".into())),
    }
}

fn film_from(s: &Settings) -> CmdResult<FilmSpec> {
    match (s.work_function, s.fermi_energy, s.thickness) {
        (Some(w), Some(ef), Some(a)) => Ok(FilmSpec::with_mass(w, ef, a, s.mass()?)?),
        _ => Err(Failure::Usage("film needs --work-function, --fermi-energy and --thickness".into())),
    }
}

fn level_table(report: &SpectrumReport) -> Table {
    let mut columns = ["n", "parity", "x_root", "e_top", "e_bottom", "e_infinite", "e_garrett"].map(String::from).to_vec();
    if let Some(first) = report.rows.first() {
        columns.extend(first.cells.iter().map(|c| format!("relerr_{}", c.method)));
    }
    let rows = report
        .rows
        .iter()
        .map(|r| {
            let mut row = vec![
                Cell::Int(i64::from(r.exact.n)),
                Cell::Text(match r.parity {
                    Parity::Even => "even".into(),
                    Parity::Odd => "odd".into(),
                }),
                Cell::Num(r.exact.x_root),
                Cell::Num(r.exact.e_top),
                Cell::Num(r.exact.e_bottom),
                Cell::Num(r.infinite_well),
                Cell::Num(r.garrett),
            ];
            row.extend(r.cells.iter().map(|c| c.rel_deviation.map_or(Cell::Empty, Cell::Num)));
            row
        })
        .collect();
    Table { columns, rows }
}

/// The verification report and its exit code. Known doubtful constants
/// report WARN and do not fail the run.
fn verify_text() -> (String, i32) {
    let report = verify_against_published(default_table());
    let constants = regenerate_cubic_constants();
    let mut s = String::from("series coefficients\n");
    let _ = writeln!(s, "{report}");
    s.push_str("cubic display constants [c0, amp, d0, d1]\n");
    for c in &constants {
        let fmt = |v: &[f64; 4]| v.iter().map(|x| format!("{x:.6}")).collect::<Vec<_>>().join(", ");
        let _ = writeln!(
            s,
            "{:<8} {:<4} computed [{}] printed [{}] max dev {:.2e}",
            c.branch.to_string(),
            c.status.to_string(),
            fmt(&c.computed),
            fmt(&c.published),
            c.max_deviation()
        );
    }
    let ok = report.all_passed() && constants.iter().all(|c| c.status != CheckStatus::Fail);
    let _ = writeln!(s, "overall {}", if ok { "PASS" } else { "FAIL" });
    (s, if ok { 0 } else { 1 })
}
