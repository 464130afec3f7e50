//! Unbroken/broken SUSY classification by normalizability of the would-be zero modes.

use super::model::ModelSpec;
use super::params::PhysicalParams;
use super::superpotential::Superpotential;
use crate::angular::Sign;
use crate::consts::{DEFAULT_GRID_EXTENT, GRID_TAIL_TOL};
use crate::error::{Error, Result};
use crate::numerics::quadrature::gauss_legendre;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SusyStatus {
    Unbroken,
    Broken,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SusyClassification {
    pub status: SusyStatus,
    pub zero_mode_sector: Option<Sign>,
    pub degeneracy_note: String,
}

impl SusyClassification {
    fn broken(note: impl Into<String>) -> Self {
        Self {
            status: SusyStatus::Broken,
            zero_mode_sector: None,
            degeneracy_note: note.into(),
        }
    }
}

const SHELLS: usize = 64;
const SHELL_NODES: usize = 16;
/// Geometric tail estimate accepted as negligible relative to the integral.
const TAIL_ACCEPT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tail {
    Convergent,
    Divergent,
    Unclear(f64),
}

/// Local power-law exponent `t d(log f)/dt` of the integrand.
fn local_exponent(log_f: &dyn Fn(f64) -> f64, t: f64) -> f64 {
    let d = 1e-4 * t.abs().max(1e-3);
    t * (log_f(t + d) - log_f(t - d)) / (2.0 * d)
}

/// Decides convergence of `∫ exp(log_f)` towards the open end at `t_end` (with `t_mid` an
/// interior reference point), from shell integrals ordered towards that end.
fn tail_verdict(shells: &[f64], log_f: &dyn Fn(f64) -> f64, t_mid: f64, t_end: f64) -> Tail {
    let total: f64 = shells.iter().sum();
    let n = shells.len();
    let (s1, s2) = (shells[n - 1], shells[n - 2]);
    if !total.is_finite() {
        return Tail::Divergent;
    }
    if s1 <= GRID_TAIL_TOL * total && s1 <= s2 {
        return Tail::Convergent;
    }
    // Extrapolate the power-law exponent six decades past the sampled range.
    let (p_mid, p_end) = (local_exponent(log_f, t_mid), local_exponent(log_f, t_end));
    let drop_rate = (p_mid - p_end).max(0.0) / (t_end / t_mid).ln();
    let p_far = p_end - drop_rate * 1e6f64.ln();
    if p_far > -1.0 {
        return Tail::Divergent;
    }
    let q = s1 / s2;
    if q < 1.0 {
        let tail = s1 * q / (1.0 - q);
        if tail <= TAIL_ACCEPT * total {
            return Tail::Convergent;
        }
        return Tail::Unclear(tail / total);
    }
    Tail::Unclear(q)
}

/// Shell integrals of `exp(log_f)` over `[a, b]`, scaled by a common factor.
fn shell_integrals(log_f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Vec<f64> {
    let (x, w) = gauss_legendre(SHELL_NODES);
    let h = (b - a) / SHELLS as f64;
    let mut logs = Vec::with_capacity(SHELLS * SHELL_NODES);
    for k in 0..SHELLS {
        let lo = a + k as f64 * h;
        for xi in &x {
            logs.push(log_f(lo + 0.5 * h * (xi + 1.0)));
        }
    }
    let peak = logs.iter().cloned().filter(|v| v.is_finite()).fold(f64::NEG_INFINITY, f64::max);
    (0..SHELLS)
        .map(|k| {
            (0..SHELL_NODES)
                .map(|i| w[i] * 0.5 * h * (logs[k * SHELL_NODES + i] - peak).exp())
                .sum()
        })
        .collect()
}

fn radial_normalizable(log_f: &dyn Fn(f64) -> f64, r_max: f64) -> Result<bool> {
    let shells = shell_integrals(log_f, 0.0, r_max);
    match tail_verdict(&shells, log_f, 0.75 * r_max, r_max) {
        Tail::Convergent => Ok(true),
        Tail::Divergent => Ok(false),
        Tail::Unclear(x) => Err(Error::Inconclusive(format!(
            "radial tail not settled within r <= {r_max} (indicator {x:.3e})"
        ))),
    }
}

fn line_normalizable(log_f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Result<bool> {
    let shells = shell_integrals(log_f, a, b);
    let right = tail_verdict(&shells, log_f, 0.75 * b, b);
    let mut rev = shells.clone();
    rev.reverse();
    let mirrored = |t: f64| log_f(-t);
    let left = tail_verdict(&rev, &mirrored, -0.75 * a, -a);
    match (left, right) {
        (Tail::Convergent, Tail::Convergent) => Ok(true),
        (Tail::Divergent, _) | (_, Tail::Divergent) => Ok(false),
        _ => Err(Error::Inconclusive(format!(
            "tails on [{a}, {b}] not settled"
        ))),
    }
}

/// Classifies SUSY as unbroken (with the sector carrying the zero mode) or broken.
///
/// Spherical models test `∫ r^{2l+2} e^{∓2U} dr` for the profiles annihilated by `D†`
/// (`r^l e^{-U}`, + sector) and by `D` (`r^l e^{+U}`, − sector), with `l = 0`.
pub fn classify_susy(ms: &ModelSpec, p: &PhysicalParams) -> Result<SusyClassification> {
    ms.validate()?;
    if let ModelSpec::FreeDiracBrokenSusy = ms {
        return Ok(SusyClassification::broken(
            "ε0 = 0 lies below the spectrum floor mc²/2",
        ));
    }
    let u = ms.superpotential(p);
    let extent = DEFAULT_GRID_EXTENT * ms.length_scale(p);
    let eval = |r: f64| u.as_ref().map_or(0.0, |u: &Superpotential| u.u(r));
    let (lo, hi) = match u.as_ref().and_then(|u| u.sampled_range()) {
        Some(range) => range,
        None if ms.is_one_dimensional() => (-extent, extent),
        None => (0.0, extent),
    };
    let mut sectors = Vec::new();
    for sector in [Sign::Plus, Sign::Minus] {
        let s = sector.as_f64();
        let ok = if ms.is_one_dimensional() {
            line_normalizable(&|x| -2.0 * s * eval(x), lo, hi)?
        } else {
            radial_normalizable(&|r| 2.0 * r.ln() - 2.0 * s * eval(r), hi)?
        };
        if ok {
            sectors.push(sector);
        }
    }
    match sectors.as_slice() {
        [] => Ok(SusyClassification::broken(match ms {
            ModelSpec::FreeDirac => "no normalizable zero mode; ε0 = mc²/2 is the continuum threshold",
            _ => "no normalizable zero mode in either sector",
        })),
        [sector, ..] => {
            let note = if ms.is_one_dimensional() {
                "zero mode is nondegenerate".to_string()
            } else {
                "zero mode infinitely degenerate in j (one level per j = l + 1/2)".to_string()
            };
            Ok(SusyClassification {
                status: SusyStatus::Unbroken,
                zero_mode_sector: Some(*sector),
                degeneracy_note: note,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::susy_core::SampledSuperpotential;

    fn natural() -> PhysicalParams {
        PhysicalParams::natural()
    }

    #[test]
    fn reference_models() {
        let c = classify_susy(&ModelSpec::DiracOscillator { omega: 1.0 }, &natural()).unwrap();
        assert_eq!(c.status, SusyStatus::Unbroken);
        assert_eq!(c.zero_mode_sector, Some(Sign::Plus));
        let c = classify_susy(&ModelSpec::LinearSuperpotential { gamma: 1.0 }, &natural()).unwrap();
        assert_eq!(c.zero_mode_sector, Some(Sign::Plus));
        let c = classify_susy(&ModelSpec::FreeDiracBrokenSusy, &natural()).unwrap();
        assert_eq!(c.status, SusyStatus::Broken);
        let c = classify_susy(&ModelSpec::FreeDirac, &natural()).unwrap();
        assert_eq!(c.status, SusyStatus::Broken);
        assert_eq!(c.zero_mode_sector, None);
    }

    #[test]
    fn one_dimensional_oscillator() {
        let c = classify_susy(&ModelSpec::DiracOscillator1D { omega: 2.0 }, &natural()).unwrap();
        assert_eq!(c.zero_mode_sector, Some(Sign::Plus));
    }

    #[test]
    fn decreasing_superpotential_moves_zero_mode_to_minus_sector() {
        let s = SampledSuperpotential::from_fns(0.0, 30.0, 301, |r| -r, |_| -1.0, |_| 0.0).unwrap();
        let c = classify_susy(&ModelSpec::RadialSuperpotential(s), &natural()).unwrap();
        assert_eq!(c.zero_mode_sector, Some(Sign::Minus));
    }

    #[test]
    fn logarithmic_superpotential_with_slow_tail_is_broken() {
        // U = ln(1 + r)/4: r² e^{-2U} ~ r^{3/2} grows
        let s = SampledSuperpotential::from_fns(
            0.0,
            50.0,
            501,
            |r| (1.0 + r).ln() / 4.0,
            |r| 0.25 / (1.0 + r),
            |r| -0.25 / ((1.0 + r) * (1.0 + r)),
        )
        .unwrap();
        let c = classify_susy(&ModelSpec::RadialSuperpotential(s), &natural()).unwrap();
        assert_eq!(c.status, SusyStatus::Broken);
    }

    #[test]
    fn truncated_tail_is_inconclusive() {
        // e^{-2U} with U = r/40 decays too slowly to settle on [0, 10]
        let s = SampledSuperpotential::from_fns(0.0, 10.0, 101, |r| r / 40.0, |_| 1.0 / 40.0, |_| 0.0)
            .unwrap();
        let r = classify_susy(&ModelSpec::RadialSuperpotential(s), &natural());
        assert!(matches!(r, Err(Error::Inconclusive(_))), "{r:?}");
    }
}
