use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// Variants carry enough context to be printed directly as a diagnostic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("pole of {op} at {location}")]
    Pole { op: &'static str, location: String },

    #[error("pole proximity in {op}: within {distance:.3e} of pole n = {n}")]
    PoleProximity {
        op: &'static str,
        n: i64,
        distance: f64,
    },

    #[error("branch cut in {op}: {detail}")]
    BranchCut { op: &'static str, detail: String },

    #[error("{op} did not converge: {detail}")]
    NonConvergence { op: &'static str, detail: String },

    #[error("grid error in {op}: {detail}")]
    Grid { op: &'static str, detail: String },

    #[error("no discrete spectrum: {0}")]
    NoDiscreteSpectrum(String),

    #[error("purely discrete spectrum: {0}")]
    PurelyDiscrete(String),

    #[error("unpaired level: {0}")]
    UnpairedLevel(String),

    #[error("broken supersymmetry: {0}")]
    BrokenSusy(String),

    #[error("inconclusive classification: {0}")]
    Inconclusive(String),

    #[error("inconsistent SUSY partner pair: residual {residual:.3e} exceeds {tolerance:.1e}")]
    InconsistentPair { residual: f64, tolerance: f64 },

    #[error("coincident points: separation {0:.3e} is below the minimum")]
    CoincidentPoints(f64),

    #[error("discretization inconsistency in identity `{identity}`: {detail}")]
    Discretization { identity: String, detail: String },

    #[error("singular time in {op}: {detail}")]
    SingularTime { op: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}
