//! Closed-form discrete and continuous spectra, SUSY partner indexing and level enumeration.
//!
//! A discrete level is labelled by a channel, a SUSY sector and a radial index `n`. Positive
//! Dirac energies come from `H+_SUSY` levels and negative ones from `H-_SUSY` levels; a level
//! above `ε0` supports both branches.

use std::cmp::Ordering;

use crate::angular::{Channel, Sign};
use crate::error::{domain, Error, Result};
use crate::scalar::Real;
use crate::susy_core::{at_threshold, dirac_energy_from_susy, ModelSpec, PhysicalParams};

fn model_epsilon0<T: Real>(ms: &ModelSpec, p: &PhysicalParams<T>) -> T {
    match ms {
        ModelSpec::FreeDiracBrokenSusy => T::zero(),
        _ => {
            let m0 = p.rest_energy();
            m0 * m0 / (T::two() * p.mc2())
        }
    }
}

/// Discrete eigenvalue of `H^{sector}_SUSY` in channel `ch` with radial index `n`
/// (including the constant `ε0`).
pub fn susy_spectrum_discrete<T: Real>(
    ms: &ModelSpec,
    ch: Channel,
    sector: Sign,
    n: u32,
    p: &PhysicalParams<T>,
) -> Result<T> {
    ms.validate()?;
    let eps0 = model_epsilon0(ms, p);
    let nf = T::int(n as i64);
    match ms {
        ModelSpec::FreeDirac | ModelSpec::FreeDiracBrokenSusy => Err(Error::NoDiscreteSpectrum(
            format!("{}: purely continuous spectrum", ms.name()),
        )),
        ModelSpec::DiracOscillator { omega } => {
            let hw = p.hbar * T::lit(*omega);
            let j = T::int(ch.twice_j as i64) / T::two();
            let s = T::int(ch.sigma.value() as i64);
            let level = match sector {
                Sign::Plus => T::two() * nf + j + T::one() - s * (j + T::one()),
                Sign::Minus => T::two() * (nf + T::one()) + j + s * j,
            };
            Ok(hw * level + eps0)
        }
        ModelSpec::LinearSuperpotential { gamma } => {
            let g = T::lit(*gamma);
            let scale = p.hbar * p.hbar * g * g / (T::two() * p.m);
            let l = T::int(ch.l() as i64);
            let ratio = match (sector, ch.sigma) {
                (Sign::Plus, Sign::Plus) => (l + T::one()) / (nf + l + T::one()),
                (Sign::Minus, Sign::Minus) => l / (nf + T::one() + l),
                _ => {
                    return Err(Error::NoDiscreteSpectrum(format!(
                        "linear: repulsive spin-orbit term in sector {sector} with σ = {}; \
                         continuous spectrum only",
                        ch.sigma
                    )))
                }
            };
            Ok(scale * (T::one() - ratio * ratio) + eps0)
        }
        ModelSpec::DiracOscillator1D { omega } => {
            let hw = p.hbar * T::lit(*omega);
            let level = match sector {
                Sign::Plus => nf,
                Sign::Minus => nf + T::one(),
            };
            Ok(hw * level + eps0)
        }
        ModelSpec::RadialSuperpotential(_) | ModelSpec::Witten1D(_) => Err(domain(
            "susy_spectrum_discrete",
            "no closed form for tabulated superpotentials; use the finite-difference oracle",
        )),
    }
}

/// Dirac eigenvalue `branch · sqrt(2mc² ε)` for the level `(ch, sector, n)`.
///
/// A zero mode (`ε = ε0`) only exists on the branch matching its sector; requesting the other
/// branch is an unpaired-level error.
pub fn dirac_spectrum_discrete<T: Real>(
    ms: &ModelSpec,
    ch: Channel,
    sector: Sign,
    n: u32,
    branch: Sign,
    p: &PhysicalParams<T>,
) -> Result<T> {
    let eps = susy_spectrum_discrete(ms, ch, sector, n, p)?;
    let eps0 = model_epsilon0(ms, p);
    if branch != sector && at_threshold(eps, eps0) {
        return Err(Error::UnpairedLevel(format!(
            "{}: level n={n} ({ch}) in sector {sector} is a zero mode at ε0 = {eps0}; \
             it has no branch {branch} counterpart",
            ms.name()
        )));
    }
    dirac_energy_from_susy(eps, p, branch.value())
}

/// A discrete level with its SUSY and Dirac eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralLine {
    pub model: ModelSpec,
    pub ch: Channel,
    pub sector: Sign,
    pub n: u32,
    pub branch: Sign,
    pub eps: f64,
    pub energy: f64,
}

impl SpectralLine {
    pub fn new(ms: &ModelSpec, ch: Channel, sector: Sign, n: u32, branch: Sign, p: &PhysicalParams) -> Result<Self> {
        let eps = susy_spectrum_discrete(ms, ch, sector, n, p)?;
        let energy = dirac_spectrum_discrete(ms, ch, sector, n, branch, p)?;
        Ok(Self {
            model: ms.clone(),
            ch,
            sector,
            n,
            branch,
            eps,
            energy,
        })
    }

    pub fn is_zero_mode(&self, p: &PhysicalParams) -> bool {
        at_threshold(self.eps, self.model.epsilon0(p))
    }
}

/// Continuum branch: threshold energy and dispersion `|k| ↦ E`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuumBranch {
    pub model_name: &'static str,
    /// Positive-energy threshold; the negative branch mirrors it.
    pub threshold: f64,
    /// SUSY-side threshold `E²/2mc²`.
    pub eps_threshold: f64,
    rest_sq: f64,
    c_hbar_sq: f64,
}

impl ContinuumBranch {
    /// Positive-branch energy at wave number `|k|`.
    pub fn dispersion(&self, k: f64) -> f64 {
        (self.rest_sq + self.c_hbar_sq * k * k).sqrt()
    }
}

/// Continuum of the model (error for purely discrete models).
pub fn continuum_branch(ms: &ModelSpec, p: &PhysicalParams) -> Result<ContinuumBranch> {
    ms.validate()?;
    let mc2 = p.mc2();
    let c_hbar_sq = (p.c * p.hbar).powi(2);
    let rest_sq = match ms {
        ModelSpec::FreeDirac | ModelSpec::FreeDiracBrokenSusy => mc2 * mc2,
        ModelSpec::LinearSuperpotential { gamma } => mc2 * mc2 + c_hbar_sq * gamma * gamma,
        ModelSpec::DiracOscillator { .. } | ModelSpec::DiracOscillator1D { .. } => {
            return Err(Error::PurelyDiscrete(format!(
                "{}: the oscillator has no continuum",
                ms.name()
            )))
        }
        ModelSpec::RadialSuperpotential(_) | ModelSpec::Witten1D(_) => {
            return Err(domain(
                "continuum_branch",
                "no closed form for tabulated superpotentials",
            ))
        }
    };
    Ok(ContinuumBranch {
        model_name: ms.name(),
        threshold: rest_sq.sqrt(),
        eps_threshold: rest_sq / (2.0 * mc2),
        rest_sq,
        c_hbar_sq,
    })
}

fn partner_label(ms: &ModelSpec, ch: Channel, sector: Sign, n: u32) -> Option<(Channel, Sign, u32)> {
    let tj = ch.twice_j;
    let mk = |twice_j: u32, sigma: Sign| Channel::new(twice_j, ch.twice_mj.clamp(-(twice_j as i32), twice_j as i32), sigma).ok();
    match (ms, sector) {
        (ModelSpec::DiracOscillator { .. }, Sign::Plus) => {
            if n >= 1 {
                // (n, j, σ) ↔ (n-1, j+1, -σ)
                Some((mk(tj + 2, ch.sigma.flip())?, Sign::Minus, n - 1))
            } else if ch.sigma == Sign::Minus {
                // D† partner (0, j, +1) of the σ = -1 ground line
                Some((mk(tj, Sign::Plus)?, Sign::Minus, 0))
            } else {
                None
            }
        }
        (ModelSpec::DiracOscillator { .. }, Sign::Minus) => {
            if tj >= 3 {
                Some((mk(tj - 2, ch.sigma.flip())?, Sign::Plus, n + 1))
            } else if ch.sigma == Sign::Minus {
                Some((mk(tj, Sign::Plus)?, Sign::Plus, n + 1))
            } else {
                Some((mk(tj, Sign::Minus)?, Sign::Plus, n))
            }
        }
        (ModelSpec::LinearSuperpotential { .. }, Sign::Plus) => {
            (n >= 1 && ch.sigma == Sign::Plus).then(|| (ch.flipped(), Sign::Minus, n - 1))
        }
        (ModelSpec::LinearSuperpotential { .. }, Sign::Minus) => {
            (ch.sigma == Sign::Minus).then(|| (ch.flipped(), Sign::Plus, n + 1))
        }
        (ModelSpec::DiracOscillator1D { .. }, Sign::Plus) => (n >= 1).then(|| (ch, Sign::Minus, n - 1)),
        (ModelSpec::DiracOscillator1D { .. }, Sign::Minus) => Some((ch, Sign::Plus, n + 1)),
        _ => None,
    }
}

/// SUSY partner of a discrete level (same `ε`, opposite sector and branch), or `None` for
/// unpaired zero modes and models without closed forms.
pub fn susy_partner_index(line: &SpectralLine, p: &PhysicalParams) -> Option<SpectralLine> {
    let (ch, sector, n) = partner_label(&line.model, line.ch, line.sector, line.n)?;
    let partner = SpectralLine::new(&line.model, ch, sector, n, line.branch.flip(), p).ok()?;
    let tol = 1e-12 * line.eps.abs().max(1.0);
    ((partner.eps - line.eps).abs() <= tol).then_some(partner)
}

/// One row of an enumerated spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelRow {
    pub line: SpectralLine,
    /// `2j + 1` (1 for one-dimensional models).
    pub mj_degeneracy: u32,
    pub partner: Option<SpectralLine>,
    pub zero_mode: bool,
}

/// All discrete Dirac levels with `j <= j_max` and `n <= n_max`: branch `+` from `H+` levels
/// and branch `-` from `H-` levels, sorted by energy. Zero modes appear once per `j` and are
/// flagged (their degeneracy in `j` is unbounded and capped by `j_max` here).
pub fn enumerate_levels(ms: &ModelSpec, twice_j_max: u32, n_max: u32, p: &PhysicalParams) -> Result<Vec<LevelRow>> {
    ms.validate()?;
    let channels: Vec<Channel> = if ms.is_one_dimensional() {
        vec![Channel::radial(1, Sign::Plus)?]
    } else {
        Channel::enumerate(twice_j_max, 1)
    };
    let mut rows = Vec::new();
    for ch in channels {
        for sector in [Sign::Plus, Sign::Minus] {
            for n in 0..=n_max {
                let line = match SpectralLine::new(ms, ch, sector, n, sector, p) {
                    Ok(l) => l,
                    Err(Error::NoDiscreteSpectrum(_)) => break,
                    Err(e) => return Err(e),
                };
                let zero_mode = line.is_zero_mode(p);
                rows.push(LevelRow {
                    partner: susy_partner_index(&line, p),
                    mj_degeneracy: if ms.is_one_dimensional() { 1 } else { ch.multiplicity() },
                    zero_mode,
                    line,
                });
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::NoDiscreteSpectrum(format!("{}: purely continuous spectrum", ms.name())));
    }
    rows.sort_by(|a, b| {
        a.line
            .energy
            .partial_cmp(&b.line.energy)
            .unwrap_or(Ordering::Equal)
            .then(a.line.ch.cmp(&b.line.ch))
            .then(a.line.n.cmp(&b.line.n))
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat() -> PhysicalParams {
        PhysicalParams::natural()
    }

    fn ch(twice_j: u32, s: Sign) -> Channel {
        Channel::radial(twice_j, s).unwrap()
    }

    const OSC: ModelSpec = ModelSpec::DiracOscillator { omega: 1.0 };
    const LIN: ModelSpec = ModelSpec::LinearSuperpotential { gamma: 1.0 };

    #[test]
    fn oscillator_values() {
        for tj in [1, 3, 5] {
            assert_eq!(susy_spectrum_discrete(&OSC, ch(tj, Sign::Plus), Sign::Plus, 0, &nat()).unwrap(), 0.5);
        }
        let a = susy_spectrum_discrete(&OSC, ch(1, Sign::Plus), Sign::Plus, 1, &nat()).unwrap();
        let b = susy_spectrum_discrete(&OSC, ch(3, Sign::Minus), Sign::Minus, 0, &nat()).unwrap();
        assert_eq!((a, b), (2.5, 2.5));
        let e = dirac_spectrum_discrete(&OSC, ch(1, Sign::Plus), Sign::Plus, 1, Sign::Plus, &nat()).unwrap();
        assert!((e - 5f64.sqrt()).abs() < 1e-15);
        let e0 = dirac_spectrum_discrete(&OSC, ch(1, Sign::Plus), Sign::Plus, 0, Sign::Plus, &nat()).unwrap();
        assert_eq!(e0, 1.0);
    }

    #[test]
    fn zero_mode_has_no_negative_branch() {
        let r = dirac_spectrum_discrete(&OSC, ch(1, Sign::Plus), Sign::Plus, 0, Sign::Minus, &nat());
        assert!(matches!(r, Err(Error::UnpairedLevel(_))));
    }

    #[test]
    fn linear_values() {
        let eps = susy_spectrum_discrete(&LIN, ch(1, Sign::Plus), Sign::Plus, 1, &nat()).unwrap();
        assert!((eps - 0.875).abs() < 1e-15);
        let e = dirac_spectrum_discrete(&LIN, ch(1, Sign::Plus), Sign::Plus, 1, Sign::Plus, &nat()).unwrap();
        assert!((e - 7f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(e < 2f64.sqrt());
        assert!(matches!(
            susy_spectrum_discrete(&LIN, ch(1, Sign::Minus), Sign::Plus, 0, &nat()),
            Err(Error::NoDiscreteSpectrum(_))
        ));
    }

    #[test]
    fn single_precision_spectrum() {
        let p = PhysicalParams::<f32>::natural();
        let e = dirac_spectrum_discrete(&OSC, ch(1, Sign::Plus), Sign::Plus, 1, Sign::Plus, &p).unwrap();
        assert!((e - 5f32.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn continua() {
        assert!(matches!(continuum_branch(&OSC, &nat()), Err(Error::PurelyDiscrete(_))));
        let c = continuum_branch(&LIN, &nat()).unwrap();
        assert!((c.threshold - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(c.dispersion(0.0), c.threshold);
        let f = continuum_branch(&ModelSpec::FreeDirac, &nat()).unwrap();
        assert_eq!(f.threshold, 1.0);
        assert!((f.dispersion(1.0) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn partners() {
        let zero = SpectralLine::new(&OSC, ch(1, Sign::Plus), Sign::Plus, 0, Sign::Plus, &nat()).unwrap();
        assert!(susy_partner_index(&zero, &nat()).is_none());
        let l = SpectralLine::new(&OSC, ch(1, Sign::Plus), Sign::Plus, 1, Sign::Plus, &nat()).unwrap();
        let q = susy_partner_index(&l, &nat()).unwrap();
        assert_eq!((q.ch.twice_j, q.ch.sigma, q.n, q.sector), (3, Sign::Minus, 0, Sign::Minus));
        assert_eq!(q.eps, 2.5);
        let l = SpectralLine::new(&LIN, ch(1, Sign::Plus), Sign::Plus, 1, Sign::Plus, &nat()).unwrap();
        let q = susy_partner_index(&l, &nat()).unwrap();
        assert_eq!((q.ch.l(), q.ch.sigma, q.n), (1, Sign::Minus, 0));
        assert!((q.eps - 0.875).abs() < 1e-15);
    }

    #[test]
    fn free_model_has_no_levels() {
        assert!(matches!(
            enumerate_levels(&ModelSpec::FreeDirac, 3, 2, &nat()),
            Err(Error::NoDiscreteSpectrum(_))
        ));
    }
}
