//! Run configuration: `key=value` config files merged with command-line flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use susy_dirac::susy_core::{ModelSpec, PhysicalParams};

use crate::parse::parse_half_integer;
use crate::CliError;

/// Keys accepted in config files (the long flag names without `--`).
pub const KEYS: [&str; 29] = [
    "model", "omega", "gamma", "m", "m0", "c", "hbar", "jmax", "nmax", "points", "rmax", "format", "output",
    "tol-scale", "channel", "sector", "zeta", "z", "r1", "r2", "p1", "p2", "pw-jmax", "n", "branch", "window",
    "suite", "seed", "timing",
];

/// Raw string settings; later sources override earlier ones.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    /// Parses a config file body: one `key=value` per line, `#` starts a comment.
    pub fn parse_file(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value, got '{line}'", k + 1)))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(CliError::Usage(format!("config line {}: unknown key '{key}'", k + 1)));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config file {}: {e}", path.display())))?;
        Self::parse_file(&text)
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        self.values.insert(key.to_string(), value.into());
    }

    /// Applies flag values on top of the current settings.
    pub fn override_with<'a>(&mut self, flags: impl IntoIterator<Item = (&'a str, Option<String>)>) {
        for (k, v) in flags {
            if let Some(v) = v {
                self.set(k, v);
            }
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// Parses `key` with `f`; a parse failure is a usage error naming the key.
    pub fn parsed<T>(&self, key: &str, f: impl Fn(&str) -> Result<T, String>) -> Result<Option<T>, CliError> {
        self.get(key)
            .map(|v| f(v).map_err(|e| CliError::Usage(format!("--{key}: {e}"))))
            .transpose()
    }

    pub fn required<T>(&self, key: &str, f: impl Fn(&str) -> Result<T, String>) -> Result<T, CliError> {
        self.parsed(key, f)?.ok_or_else(|| CliError::Usage(format!("missing --{key}")))
    }
}

/// `f64` parser for settings.
pub fn number(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

pub fn positive(s: &str) -> Result<f64, String> {
    let x = number(s)?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err(format!("'{s}' must be positive"))
    }
}

pub fn count(s: &str) -> Result<u64, String> {
    s.trim().parse().map_err(|_| format!("'{s}' is not a non-negative integer"))
}

pub fn boolean(s: &str) -> Result<bool, String> {
    match s.trim() {
        "true" | "1" | "yes" | "on" => Ok(true),
        "false" | "0" | "no" | "off" => Ok(false),
        _ => Err(format!("'{s}' is not a boolean")),
    }
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Model names understood by the CLI.
pub const MODEL_NAMES: [&str; 5] = ["free", "free-broken", "dirac-oscillator", "linear", "dirac-oscillator-1d"];

/// Typed run configuration shared by all subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: ModelSpec,
    pub params: PhysicalParams,
    pub twice_j_max: u32,
    pub n_max: u32,
    /// Grid point count for exported states (default: the level's own grid).
    pub points: Option<usize>,
    /// Grid extent for exported states.
    pub r_max: Option<f64>,
    pub format: Format,
    pub output: Option<PathBuf>,
    /// Factor applied to every numeric verification tolerance.
    pub tol_scale: f64,
}

impl RunConfig {
    pub fn from_settings(s: &Settings) -> Result<Self, CliError> {
        let omega = s.parsed("omega", positive)?.unwrap_or(1.0);
        let gamma = s.parsed("gamma", positive)?.unwrap_or(1.0);
        let name = s.get("model").unwrap_or("dirac-oscillator");
        let model = match name {
            "free" => ModelSpec::FreeDirac,
            "free-broken" => ModelSpec::FreeDiracBrokenSusy,
            "dirac-oscillator" | "oscillator" => ModelSpec::DiracOscillator { omega },
            "linear" => ModelSpec::LinearSuperpotential { gamma },
            "dirac-oscillator-1d" => ModelSpec::DiracOscillator1D { omega },
            _ => {
                return Err(CliError::Usage(format!("--model: unknown model '{name}'; expected one of {MODEL_NAMES:?}")))
            }
        };
        let m = s.parsed("m", positive)?.unwrap_or(1.0);
        let m0 = s.parsed("m0", number)?.unwrap_or(m);
        let c = s.parsed("c", positive)?.unwrap_or(1.0);
        let hbar = s.parsed("hbar", positive)?.unwrap_or(1.0);
        let params = PhysicalParams::new(m, m0, c, hbar).map_err(|e| CliError::Usage(e.to_string()))?;
        let twice_j_max = s.parsed("jmax", parse_half_integer)?.unwrap_or(5);
        if twice_j_max % 2 != 1 {
            return Err(CliError::Usage("--jmax: j must be a positive odd half-integer (1/2, 3/2, ...)".into()));
        }
        let n_max = s.parsed("nmax", count)?.unwrap_or(3);
        let n_max = u32::try_from(n_max).map_err(|_| CliError::Usage("--nmax: too large".into()))?;
        let points = s.parsed("points", count)?.map(|n| n as usize);
        let r_max = s.parsed("rmax", positive)?;
        let format = match s.get("format").unwrap_or("json") {
            "json" => Format::Json,
            "csv" => Format::Csv,
            f => return Err(CliError::Usage(format!("--format: '{f}' is not json or csv"))),
        };
        let tol_scale = s.parsed("tol-scale", positive)?.unwrap_or(1.0);
        Ok(Self {
            model,
            params,
            twice_j_max,
            n_max,
            points,
            r_max,
            format,
            output: s.get("output").map(PathBuf::from),
            tol_scale,
        })
    }

    /// Coupling constants of the model as `(name, value)`.
    pub fn couplings(&self) -> Vec<(&'static str, f64)> {
        match &self.model {
            ModelSpec::DiracOscillator { omega } | ModelSpec::DiracOscillator1D { omega } => vec![("omega", *omega)],
            ModelSpec::LinearSuperpotential { gamma } => vec![("gamma", *gamma)],
            _ => Vec::new(),
        }
    }
}
