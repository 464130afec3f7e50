//! Closed-form radial bases, SUSY zero modes, the first-order operators `D`, `D†` on radial
//! grids, and Dirac 4-spinors built from partner pairs.

use num_complex::Complex64;

use crate::angular::{Channel, Sign};
use crate::consts::{
    BOUNDARY_SUPPORT_TOL, DEFAULT_GRID_EXTENT, DEFAULT_GRID_POINTS, GRID_TAIL_TOL, MIN_POINTS_PER_OSCILLATION,
};
use crate::error::{domain, Error, Result};
use crate::numerics::stencil::derivative;
use crate::spectra::{susy_spectrum_discrete, SpectralLine};
use crate::specialfn::assoc_laguerre;
use crate::susy_core::{
    assemble_dirac_state, at_threshold, classify_susy, ModelSpec, PhysicalParams, SusyStatus,
};

pub use crate::fields::{DiracSpinor, RadialFunction, RadialGrid, SpinorField};

/// Grid points per natural length used by [`level_grid`].
const POINTS_PER_LENGTH: f64 = 200.0;

fn check_support(f: &RadialFunction, op: &'static str) -> Result<()> {
    let tail = f.tail_fraction();
    if tail > GRID_TAIL_TOL {
        return Err(Error::Grid {
            op,
            detail: format!("norm beyond r_max ≈ {tail:.2e} exceeds {GRID_TAIL_TOL:.0e}; extend the grid"),
        });
    }
    Ok(())
}

fn check_resolution(g: &RadialGrid, wavelength: f64, op: &'static str) -> Result<()> {
    let per = wavelength / g.spacing();
    if per < MIN_POINTS_PER_OSCILLATION {
        return Err(Error::Grid {
            op,
            detail: format!("{per:.1} points per oscillation, need {MIN_POINTS_PER_OSCILLATION}"),
        });
    }
    Ok(())
}

/// Normalizes `r^l e^{-x} poly` from log-magnitudes to avoid under/overflow.
fn from_log_profile(g: RadialGrid, log_mag: impl Fn(f64) -> f64, sign: impl Fn(f64) -> f64) -> Result<RadialFunction> {
    let pts = g.points();
    let logs: Vec<f64> = pts.iter().map(|&r| log_mag(r)).collect();
    let top = logs.iter().copied().filter(|v| v.is_finite()).fold(f64::NEG_INFINITY, f64::max);
    if !top.is_finite() {
        return Err(domain("radial profile", "vanishes on the whole grid"));
    }
    let vals = pts.iter().zip(&logs).map(|(&r, &lv)| sign(r) * (lv - top).exp()).collect();
    RadialFunction::from_real(g, vals)?.normalized()
}

fn signed_log(v: f64) -> f64 {
    if v == 0.0 {
        f64::NEG_INFINITY
    } else {
        v.abs().ln()
    }
}

fn l_power_log(r: f64, l: u32) -> f64 {
    if l == 0 {
        0.0
    } else if r == 0.0 {
        f64::NEG_INFINITY
    } else {
        l as f64 * r.ln()
    }
}

/// Normalized oscillator radial function `N r^l e^{-βr²/2} L_n^{l+1/2}(βr²)`, `β = mω/ħ`.
pub fn oscillator_radial(n: u32, l: u32, p: &PhysicalParams, omega: f64, g: &RadialGrid) -> Result<RadialFunction> {
    if !(omega > 0.0) {
        return Err(domain("oscillator_radial", format!("ω = {omega} must be positive")));
    }
    let beta = p.m * omega / p.hbar;
    let k_max = (beta * (4 * n + 2 * l + 3) as f64).sqrt();
    check_resolution(g, 2.0 * std::f64::consts::PI / k_max, "oscillator_radial")?;
    let alpha = l as f64 + 0.5;
    let lag = |r: f64| assoc_laguerre(n as usize, alpha, beta * r * r);
    let f = from_log_profile(
        *g,
        |r| l_power_log(r, l) - 0.5 * beta * r * r + signed_log(lag(r)),
        |r| lag(r).signum(),
    )?;
    check_support(&f, "oscillator_radial")?;
    Ok(f)
}

/// Normalized hydrogen-like radial function with principal number `N = n + l + 1` and
/// `e² = eff_charge_sq` (Bohr radius `ħ²/me²`).
pub fn coulomb_radial(n: u32, l: u32, eff_charge_sq: f64, p: &PhysicalParams, g: &RadialGrid) -> Result<RadialFunction> {
    if !(eff_charge_sq > 0.0) {
        return Err(domain("coulomb_radial", format!("e² = {eff_charge_sq} must be positive")));
    }
    let big_n = (n + l + 1) as f64;
    let a = p.hbar * p.hbar / (p.m * eff_charge_sq);
    let scale = 2.0 / (big_n * a);
    // shortest local wavelength ~ node spacing near the classical region
    check_resolution(g, std::f64::consts::PI * a * big_n / (n as f64 + 1.0), "coulomb_radial")?;
    let alpha = (2 * l + 1) as f64;
    let lag = |r: f64| assoc_laguerre(n as usize, alpha, scale * r);
    let f = from_log_profile(
        *g,
        |r| l_power_log(r, l) - 0.5 * scale * r + signed_log(lag(r)),
        |r| lag(r).signum(),
    )?;
    check_support(&f, "coulomb_radial")?;
    Ok(f)
}

/// Effective Coulomb charge `e²` of a linear-superpotential level, or `None` in the repulsive
/// sectors.
pub fn linear_effective_charge(gamma: f64, ch: Channel, sector: Sign, p: &PhysicalParams) -> Option<f64> {
    let l = ch.l() as f64;
    let h2m = p.hbar * p.hbar / p.m;
    match (sector, ch.sigma) {
        (Sign::Plus, Sign::Plus) => Some(h2m * gamma * (l + 1.0)),
        (Sign::Minus, Sign::Minus) => Some(h2m * gamma * l),
        _ => None,
    }
}

/// Grid adequate for the closed-form level `(ch, sector, n)` and its SUSY partner:
/// `[0, 20 L]` for the oscillator, wide enough for the slower Coulomb decay otherwise,
/// with at least 200 points per natural length.
pub fn level_grid(ms: &ModelSpec, ch: Channel, sector: Sign, n: u32, p: &PhysicalParams) -> Result<RadialGrid> {
    let len = ms.length_scale(p);
    let r_max = match ms {
        ModelSpec::LinearSuperpotential { gamma } => {
            let e2 = linear_effective_charge(*gamma, ch, sector, p).ok_or_else(|| {
                Error::NoDiscreteSpectrum(format!("linear: no bound states in sector {sector} with σ = {}", ch.sigma))
            })?;
            let big_n = (n + ch.l() + 1) as f64;
            let a_n = big_n * p.hbar * p.hbar / (p.m * e2);
            (a_n * (30.0 + 4.0 * big_n)).max(DEFAULT_GRID_EXTENT * len)
        }
        _ => DEFAULT_GRID_EXTENT * len,
    };
    let points = ((r_max / len * POINTS_PER_LENGTH) as usize + 1).max(DEFAULT_GRID_POINTS);
    RadialGrid::uniform(0.0, r_max, points)
}

/// Normalized `r^l e^{-U(r)}`, the `σ = +1` zero mode of `D†`.
pub fn susy_zero_mode(ms: &ModelSpec, ch: Channel, p: &PhysicalParams, g: &RadialGrid) -> Result<RadialFunction> {
    if !ms.is_spherical() {
        return Err(domain("susy_zero_mode", "spherical models only"));
    }
    let cls = classify_susy(ms, p)?;
    if cls.status != SusyStatus::Unbroken || cls.zero_mode_sector != Some(Sign::Plus) {
        return Err(Error::BrokenSusy(format!("{}: no normalizable zero mode in the +1 sector", ms.name())));
    }
    if ch.sigma != Sign::Plus {
        return Err(domain("susy_zero_mode", "σ = -1 zero-mode profiles are not normalizable"));
    }
    let sup = ms.superpotential(p).ok_or_else(|| Error::BrokenSusy(ms.name().into()))?;
    if let Some((a, b)) = sup.sampled_range() {
        if g.r_min() < a || g.r_max() > b {
            return Err(Error::Grid {
                op: "susy_zero_mode",
                detail: format!("grid exceeds the sampled range [{a}, {b}]"),
            });
        }
    }
    let l = ch.l();
    let f = from_log_profile(*g, |r| l_power_log(r, l) - sup.u(r), |_| 1.0)?;
    check_support(&f, "susy_zero_mode")?;
    Ok(f)
}

/// `D†` (`dagger`) or `D` applied to `f φ_ch`: returns the radial part of
/// `-iħc [∂_r ± U' - (κ-1)/r] f` and the σ-flipped channel.
pub fn apply_d_operator(
    f: &RadialFunction,
    ch: Channel,
    ms: &ModelSpec,
    p: &PhysicalParams,
    dagger: bool,
) -> Result<(RadialFunction, Channel)> {
    if !ms.is_spherical() {
        return Err(domain("apply_d_operator", "spherical models only"));
    }
    if matches!(ms, ModelSpec::FreeDiracBrokenSusy) {
        return Err(domain(
            "apply_d_operator",
            "the broken free model has a channel-diagonal mass term in D",
        ));
    }
    if f.boundary_ratio() > BOUNDARY_SUPPORT_TOL {
        return Err(Error::Grid {
            op: "apply_d_operator",
            detail: format!(
                "|f(r_max)| / max|f| = {:.2e} exceeds {BOUNDARY_SUPPORT_TOL:.0e}",
                f.boundary_ratio()
            ),
        });
    }
    let g = *f.grid();
    let sup = ms.superpotential(p);
    if let Some((a, b)) = sup.as_ref().and_then(|s| s.sampled_range()) {
        if g.r_min() < a || g.r_max() > b {
            return Err(Error::Grid {
                op: "apply_d_operator",
                detail: format!("grid exceeds the sampled range [{a}, {b}]"),
            });
        }
    }
    let sign = if dagger { 1.0 } else { -1.0 };
    let km1 = (ch.kappa() - 1) as f64;
    let vals = f.values();
    let df = derivative(vals, g.spacing());
    let pref = Complex64::new(0.0, -p.hbar * p.c);
    let mut out: Vec<Complex64> = (0..g.len())
        .map(|i| {
            let r = g.r(i);
            let du = sup.as_ref().map_or(0.0, |s| s.du(r));
            let centr = if r > 0.0 { km1 / r } else { 0.0 };
            pref * (df[i] + vals[i] * (sign * du - centr))
        })
        .collect();
    if g.r_min() == 0.0 && km1 != 0.0 {
        out[0] = out[1] * 4.0 - out[2] * 6.0 + out[3] * 4.0 - out[4];
    }
    Ok((RadialFunction::new(g, out)?, ch.flipped()))
}

/// Closed-form eigenfunction of `H^{sector}_SUSY` for level `(ch, n)`.
pub fn susy_eigenfunction(
    ms: &ModelSpec,
    ch: Channel,
    sector: Sign,
    n: u32,
    p: &PhysicalParams,
    g: &RadialGrid,
) -> Result<RadialFunction> {
    susy_spectrum_discrete(ms, ch, sector, n, p)?;
    match ms {
        ModelSpec::DiracOscillator { omega } => oscillator_radial(n, ch.l(), p, *omega, g),
        ModelSpec::LinearSuperpotential { gamma } => {
            let e2 = linear_effective_charge(*gamma, ch, sector, p)
                .ok_or_else(|| Error::NoDiscreteSpectrum("linear: repulsive sector".into()))?;
            coulomb_radial(n, ch.l(), e2, p, g)
        }
        _ => Err(domain("susy_eigenfunction", format!("no closed-form radial basis for {}", ms.name()))),
    }
}

/// Level of the opposite sector in the flipped channel with the same `ε` (the image under
/// `D†` or `D`).
fn intertwined_level(ms: &ModelSpec, ch: Channel, sector: Sign, n: u32, eps: f64, p: &PhysicalParams) -> Option<u32> {
    let lo = n.saturating_sub(1);
    (lo..=n + 1).find(|&k| {
        susy_spectrum_discrete(ms, ch.flipped(), sector.flip(), k, p)
            .map(|e| (e - eps).abs() <= 1e-12 * eps.abs().max(1.0))
            .unwrap_or(false)
    })
}

fn snap_quarter_turn(z: Complex64) -> Complex64 {
    let k = (z.arg() / std::f64::consts::FRAC_PI_2).round() as i32;
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Dirac 4-spinor of a discrete level: the closed-form eigenfunction of the line's sector,
/// its partner fixed by `D†ψ+ = sqrt(2mc²(ε-ε0)) ψ-` (phases `±i` from the intertwining
/// relations), assembled on the requested branch.
pub fn build_4spinor(line: &SpectralLine, p: &PhysicalParams, g: &RadialGrid) -> Result<DiracSpinor> {
    let ms = &line.model;
    let eps0 = ms.epsilon0(p);
    let own = susy_eigenfunction(ms, line.ch, line.sector, line.n, p, g)?;
    let own_field = SpinorField::new(own.clone(), line.ch);
    if at_threshold(line.eps, eps0) {
        let zero = SpinorField::new(RadialFunction::zeros(*g), line.ch.flipped());
        let (plus, minus) = match line.sector {
            Sign::Plus => (own_field, zero),
            Sign::Minus => (zero, own_field),
        };
        return assemble_dirac_state(&plus, &minus, line.eps, line.branch, p, None);
    }
    let k = intertwined_level(ms, line.ch, line.sector, line.n, line.eps, p)
        .ok_or_else(|| Error::UnpairedLevel(format!("no partner level for n={} ({})", line.n, line.ch)))?;
    let basis = susy_eigenfunction(ms, line.ch.flipped(), line.sector.flip(), k, p, g)?;
    let (image, _) = apply_d_operator(&own, line.ch, ms, p, line.sector == Sign::Plus)?;
    let phase = snap_quarter_turn(basis.inner(&image)?);
    let partner = SpinorField::new(basis.scaled(phase), line.ch.flipped());
    let (plus, minus) = match line.sector {
        Sign::Plus => (own_field, partner),
        Sign::Minus => (partner, own_field),
    };
    let (d_dagger_plus, _) = apply_d_operator(&plus.radial, plus.ch, ms, p, true)?;
    assemble_dirac_state(&plus, &minus, line.eps, line.branch, p, Some(&d_dagger_plus))
}

/// `H_D Ψ` on the grid: upper `M0 ψu + D ψl`, lower `D† ψu - M0 ψl`.
pub fn apply_dirac_hamiltonian(state: &DiracSpinor, ms: &ModelSpec, p: &PhysicalParams) -> Result<DiracSpinor> {
    let m0 = ms.rest_energy(p);
    let (d_lower, ch_u) = apply_d_operator(&state.lower.radial, state.lower.ch, ms, p, false)?;
    let (dd_upper, ch_l) = apply_d_operator(&state.upper.radial, state.upper.ch, ms, p, true)?;
    let upper = state.upper.radial.scaled(Complex64::new(m0, 0.0));
    let upper = RadialFunction::new(
        *upper.grid(),
        upper.values().iter().zip(d_lower.values()).map(|(a, b)| a + b).collect(),
    )?;
    let lower = dd_upper.sub(&state.lower.radial.scaled(Complex64::new(m0, 0.0)))?;
    DiracSpinor::new(SpinorField::new(upper, ch_u), SpinorField::new(lower, ch_l))
}

/// `‖(H_D - E)Ψ‖ / ‖Ψ‖` on the grid.
pub fn dirac_residual(state: &DiracSpinor, energy: f64, ms: &ModelSpec, p: &PhysicalParams) -> Result<f64> {
    let h = apply_dirac_hamiltonian(state, ms, p)?;
    let e = Complex64::new(energy, 0.0);
    let ru = h.upper.radial.sub(&state.upper.radial.scaled(e))?;
    let rl = h.lower.radial.sub(&state.lower.radial.scaled(e))?;
    Ok((ru.norm_sqr() + rl.norm_sqr()).sqrt() / state.norm_sqr().sqrt())
}
