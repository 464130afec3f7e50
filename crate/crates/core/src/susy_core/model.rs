//! Model choices for the first-order operator `D`.

use std::fmt;

use super::params::{epsilon0, PhysicalParams};
use super::superpotential::{SampledSuperpotential, Superpotential};
use crate::error::{domain, Result};

/// Which supersymmetric Dirac operator is being studied.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelSpec {
    /// `D = cσ·p`, `M0 = mc²`.
    FreeDirac,
    /// `D = cσ·p − imc²`, `M0 = 0`.
    FreeDiracBrokenSusy,
    /// `D = cσ·(p + imωr)`.
    DiracOscillator { omega: f64 },
    /// `D = cσ·(p + iħγ e_r)`, i.e. `U = γr`.
    LinearSuperpotential { gamma: f64 },
    /// `D = cσ·(p + iħ∇U)` with tabulated radial `U`.
    RadialSuperpotential(SampledSuperpotential),
    /// One-dimensional `D = c(p + iħU')` with tabulated `U`.
    Witten1D(SampledSuperpotential),
    /// One-dimensional `D = c(p + imωx)`.
    DiracOscillator1D { omega: f64 },
}

impl ModelSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            ModelSpec::DiracOscillator { omega } | ModelSpec::DiracOscillator1D { omega }
                if !(*omega > 0.0 && omega.is_finite()) =>
            {
                Err(domain("ModelSpec", format!("ω must be positive, got {omega}")))
            }
            ModelSpec::LinearSuperpotential { gamma } if !(*gamma > 0.0 && gamma.is_finite()) => {
                Err(domain("ModelSpec", format!("γ must be positive, got {gamma}")))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ModelSpec::FreeDirac => "free",
            ModelSpec::FreeDiracBrokenSusy => "free-broken",
            ModelSpec::DiracOscillator { .. } => "dirac-oscillator",
            ModelSpec::LinearSuperpotential { .. } => "linear",
            ModelSpec::RadialSuperpotential(_) => "radial-superpotential",
            ModelSpec::Witten1D(_) => "witten-1d",
            ModelSpec::DiracOscillator1D { .. } => "dirac-oscillator-1d",
        }
    }

    pub fn is_spherical(&self) -> bool {
        !self.is_one_dimensional()
    }

    pub fn is_one_dimensional(&self) -> bool {
        matches!(self, ModelSpec::Witten1D(_) | ModelSpec::DiracOscillator1D { .. })
    }

    /// Rest energy entering `H_D`; zero for the broken free realization.
    pub fn rest_energy(&self, p: &PhysicalParams) -> f64 {
        match self {
            ModelSpec::FreeDiracBrokenSusy => 0.0,
            _ => p.rest_energy(),
        }
    }

    /// `ε0` for this model.
    pub fn epsilon0(&self, p: &PhysicalParams) -> f64 {
        match self {
            ModelSpec::FreeDiracBrokenSusy => 0.0,
            _ => epsilon0(p),
        }
    }

    /// Constant that `D` itself contributes to `aDD†` (the `mc²/2` of the broken free model).
    pub fn operator_constant(&self, p: &PhysicalParams) -> f64 {
        match self {
            ModelSpec::FreeDiracBrokenSusy => 0.5 * p.mc2(),
            _ => 0.0,
        }
    }

    /// The superpotential, if the model has one (`None` for the free models).
    pub fn superpotential(&self, p: &PhysicalParams) -> Option<Superpotential> {
        match self {
            ModelSpec::DiracOscillator { omega } | ModelSpec::DiracOscillator1D { omega } => {
                Some(Superpotential::Harmonic {
                    k: p.m * omega / p.hbar,
                })
            }
            ModelSpec::LinearSuperpotential { gamma } => Some(Superpotential::Linear { gamma: *gamma }),
            ModelSpec::RadialSuperpotential(s) | ModelSpec::Witten1D(s) => {
                Some(Superpotential::Sampled(s.clone()))
            }
            ModelSpec::FreeDirac | ModelSpec::FreeDiracBrokenSusy => None,
        }
    }

    /// Natural length: `sqrt(ħ/mω)`, `1/γ`, the Compton length for free models, or the
    /// sampled range for tabulated superpotentials.
    pub fn length_scale(&self, p: &PhysicalParams) -> f64 {
        match self {
            ModelSpec::DiracOscillator { omega } | ModelSpec::DiracOscillator1D { omega } => {
                (p.hbar / (p.m * omega)).sqrt()
            }
            ModelSpec::LinearSuperpotential { gamma } => 1.0 / gamma,
            ModelSpec::FreeDirac | ModelSpec::FreeDiracBrokenSusy => p.hbar / (p.m * p.c),
            ModelSpec::RadialSuperpotential(s) | ModelSpec::Witten1D(s) => {
                let (a, b) = s.range();
                (b - a) / crate::consts::DEFAULT_GRID_EXTENT
            }
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::DiracOscillator { omega } | ModelSpec::DiracOscillator1D { omega } => {
                write!(f, "{}(omega={omega})", self.name())
            }
            ModelSpec::LinearSuperpotential { gamma } => write!(f, "linear(gamma={gamma})"),
            _ => f.write_str(self.name()),
        }
    }
}
