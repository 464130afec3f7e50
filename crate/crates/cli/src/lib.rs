//! Command-line front end: spectra, kernels, eigenstates, pole scans and verification suites.

pub mod commands;
pub mod config;
pub mod output;
pub mod parse;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use config::{RunConfig, Settings};

/// Exit code of a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code of a computation failure (or a failed verification).
pub const EXIT_FAILURE: i32 = 1;
/// Exit code of a usage or configuration error.
pub const EXIT_USAGE: i32 = 2;

/// Error of a CLI run, mapped to an exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) => EXIT_FAILURE,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => m,
        }
    }
}

impl From<susy_dirac::Error> for CliError {
    fn from(e: susy_dirac::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

/// Result of a subcommand: the document to emit, its exit code and diagnostics for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub body: String,
    pub code: i32,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Parser)]
#[command(name = "susy-dirac", version, about = "Spectra, Green's functions and verification suites for supersymmetric Dirac Hamiltonians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Config file with one key=value per line ('#' comments); flags override it.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// free | free-broken | dirac-oscillator | linear | dirac-oscillator-1d
    #[arg(long, global = true)]
    model: Option<String>,
    /// Oscillator frequency ω.
    #[arg(long, global = true)]
    omega: Option<String>,
    /// Linear superpotential slope γ.
    #[arg(long, global = true)]
    gamma: Option<String>,
    /// Mass m.
    #[arg(long, global = true)]
    m: Option<String>,
    /// Rest mass m0 (rest energy m0 c²); defaults to m.
    #[arg(long, global = true)]
    m0: Option<String>,
    /// Speed of light c.
    #[arg(long, global = true)]
    c: Option<String>,
    /// Reduced Planck constant ħ.
    #[arg(long, global = true)]
    hbar: Option<String>,
    /// Largest j, as 1/2, 3/2, ... or a decimal.
    #[arg(long, global = true)]
    jmax: Option<String>,
    /// Largest radial quantum number.
    #[arg(long, global = true)]
    nmax: Option<String>,
    /// Grid point count.
    #[arg(long, global = true)]
    points: Option<String>,
    /// Grid extent.
    #[arg(long, global = true)]
    rmax: Option<String>,
    /// json | csv
    #[arg(long, global = true)]
    format: Option<String>,
    /// Output file (default: stdout).
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<String>,
    /// Factor applied to every numeric verification tolerance.
    #[arg(long = "tol-scale", global = true)]
    tol_scale: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Discrete Dirac levels sorted by energy, with SUSY partners and continuum thresholds.
    Spectrum,
    /// Radial sector kernel at (ζ, r'', r'), or the 4×4 Dirac Green's function at (z, x'', x').
    Greens(GreensArgs),
    /// Upper and lower radial components of a Dirac eigenstate on a grid.
    States(StatesArgs),
    /// Kernel poles of one channel inside a real ζ window.
    Poles(PolesArgs),
    /// Runs verification suites and writes the merged report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct GreensArgs {
    /// Channel, e.g. j=1/2,sigma=+1 (optional mj=...).
    #[arg(long)]
    channel: Option<String>,
    /// SUSY sector: + or -.
    #[arg(long)]
    sector: Option<String>,
    /// Kernel argument ζ as a+bi.
    #[arg(long)]
    zeta: Option<String>,
    /// Outer radius r''.
    #[arg(long)]
    r1: Option<String>,
    /// Inner radius r'.
    #[arg(long)]
    r2: Option<String>,
    /// Dirac energy z as a+bi (selects the 4×4 Green's function).
    #[arg(long)]
    z: Option<String>,
    /// Field point x'' as x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    p1: Option<String>,
    /// Source point x' as x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    p2: Option<String>,
    /// Largest j of the partial-wave sums (non-free models).
    #[arg(long = "pw-jmax")]
    pw_jmax: Option<String>,
}

#[derive(Debug, Args)]
struct StatesArgs {
    #[arg(long)]
    channel: Option<String>,
    #[arg(long)]
    sector: Option<String>,
    /// Radial quantum number.
    #[arg(long)]
    n: Option<String>,
    /// Energy branch: + or - (default: the sector).
    #[arg(long)]
    branch: Option<String>,
}

#[derive(Debug, Args)]
struct PolesArgs {
    #[arg(long)]
    channel: Option<String>,
    #[arg(long)]
    sector: Option<String>,
    /// Real ζ window as lo,hi.
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// algebra | spectra | kernels | intertwining | limits | all
    #[arg(long)]
    suite: Option<String>,
    /// Seed of the randomized checks.
    #[arg(long)]
    seed: Option<String>,
    /// Include per-report runtimes in the JSON.
    #[arg(long)]
    timing: bool,
}

fn settings(cli: &Cli) -> Result<Settings, CliError> {
    let c = &cli.common;
    let mut s = match &c.config {
        Some(path) => Settings::load(path)?,
        None => Settings::default(),
    };
    s.override_with([
        ("model", c.model.clone()),
        ("omega", c.omega.clone()),
        ("gamma", c.gamma.clone()),
        ("m", c.m.clone()),
        ("m0", c.m0.clone()),
        ("c", c.c.clone()),
        ("hbar", c.hbar.clone()),
        ("jmax", c.jmax.clone()),
        ("nmax", c.nmax.clone()),
        ("points", c.points.clone()),
        ("rmax", c.rmax.clone()),
        ("format", c.format.clone()),
        ("output", c.output.clone()),
        ("tol-scale", c.tol_scale.clone()),
    ]);
    match &cli.command {
        Command::Spectrum => {}
        Command::Greens(a) => s.override_with([
            ("channel", a.channel.clone()),
            ("sector", a.sector.clone()),
            ("zeta", a.zeta.clone()),
            ("r1", a.r1.clone()),
            ("r2", a.r2.clone()),
            ("z", a.z.clone()),
            ("p1", a.p1.clone()),
            ("p2", a.p2.clone()),
            ("pw-jmax", a.pw_jmax.clone()),
        ]),
        Command::States(a) => s.override_with([
            ("channel", a.channel.clone()),
            ("sector", a.sector.clone()),
            ("n", a.n.clone()),
            ("branch", a.branch.clone()),
        ]),
        Command::Poles(a) => s.override_with([
            ("channel", a.channel.clone()),
            ("sector", a.sector.clone()),
            ("window", a.window.clone()),
        ]),
        Command::Verify(a) => {
            s.override_with([("suite", a.suite.clone()), ("seed", a.seed.clone())]);
            if a.timing {
                s.set("timing", "true");
            }
        }
    }
    Ok(s)
}

fn execute(cli: &Cli) -> Result<(Outcome, Option<PathBuf>), CliError> {
    let s = settings(cli)?;
    let cfg = RunConfig::from_settings(&s)?;
    let outcome = match &cli.command {
        Command::Spectrum => commands::spectrum(&cfg)?,
        Command::Greens(_) => commands::greens(&cfg, &s)?,
        Command::States(_) => commands::states(&cfg, &s)?,
        Command::Poles(_) => commands::poles(&cfg, &s)?,
        Command::Verify(_) => commands::verify(&cfg, &s)?,
    };
    Ok((outcome, cfg.output.clone()))
}

/// Runs the CLI on `args` (including the program name), writing to `out` and `err`; returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((outcome, path)) => {
            for d in &outcome.diagnostics {
                let _ = writeln!(err, "{d}");
            }
            let written = match &path {
                Some(p) => std::fs::write(p, &outcome.body).map_err(|e| format!("cannot write {}: {e}", p.display())),
                None => out.write_all(outcome.body.as_bytes()).map_err(|e| format!("cannot write output: {e}")),
            };
            match written {
                Ok(()) => outcome.code,
                Err(m) => {
                    let _ = writeln!(err, "error: {m}");
                    EXIT_FAILURE
                }
            }
        }
        Err(e) => {
            let kind = if e.exit_code() == EXIT_USAGE { "usage error" } else { "error" };
            let _ = writeln!(err, "{kind}: {}", e.message());
            e.exit_code()
        }
    }
}
