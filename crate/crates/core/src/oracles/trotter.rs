//! Euclidean-time Trotter propagation of a channel Hamiltonian, checked against the
//! closed-form radial promotor.
//!
//! Strang splitting `e^{−dτV/2ħ} e^{−dτT/ħ} e^{−dτV/2ħ}` with the kinetic step diagonal in the
//! sine basis of the Dirichlet interval `[0, r_max]` (eigenvalues `ħ²k²/2m`, `k = π(j+1)/r_max`).

use num_complex::Complex64;

use super::promotor::promotor_closed_form;
use super::report::{Check, VerificationReport};
use crate::angular::{Channel, Sign};
use crate::consts::{TROTTER_DEFAULT_STEPS, TROTTER_FREE_TOL, TROTTER_OSCILLATOR_TOL, TROTTER_SIGNIFICANT};
use crate::error::{domain, Error, Result};
use crate::fields::RadialGrid;
use crate::numerics::dst::DstI;
use crate::susy_core::{effective_radial_potential, ModelSpec, PhysicalParams};

/// Source points in units of the model length scale.
const SOURCES: [f64; 3] = [0.5, 1.0, 1.5];

struct Propagator {
    dst: DstI,
    /// `e^{−dτV/2ħ}` on the interior points.
    half_potential: Vec<f64>,
    /// `e^{−dτT/ħ}` per sine mode, including the `2/(N+1)` of the inverse transform.
    kinetic: Vec<f64>,
    steps: usize,
}

impl Propagator {
    fn new(v: &[f64], tau: f64, steps: usize, g: &RadialGrid, p: &PhysicalParams) -> Self {
        let n = v.len();
        let dt = tau / steps as f64;
        let length = g.r_max() - g.r_min();
        let half_potential = v.iter().map(|vi| (-0.5 * dt * vi / p.hbar).exp()).collect();
        let norm = 2.0 / (n + 1) as f64;
        let kinetic = (0..n)
            .map(|j| {
                let k = std::f64::consts::PI * (j + 1) as f64 / length;
                norm * (-dt * p.hbar * k * k / (2.0 * p.m)).exp()
            })
            .collect();
        Self {
            dst: DstI::new(n),
            half_potential,
            kinetic,
            steps,
        }
    }

    fn evolve(&self, u: &mut [f64]) {
        for _ in 0..self.steps {
            u.iter_mut().zip(&self.half_potential).for_each(|(x, e)| *x *= e);
            self.dst.transform(u);
            u.iter_mut().zip(&self.kinetic).for_each(|(x, e)| *x *= e);
            self.dst.transform(u);
            u.iter_mut().zip(&self.half_potential).for_each(|(x, e)| *x *= e);
        }
    }
}

/// Interior-point potential of `H^{sector}_SUSY` in the channel, valid for Trotter checks.
fn channel_potential(ch: Channel, sector: Sign, ms: &ModelSpec, p: &PhysicalParams, g: &RadialGrid) -> Result<Vec<f64>> {
    if !matches!(ms, ModelSpec::FreeDirac | ModelSpec::DiracOscillator { .. }) {
        return Err(domain(
            "trotter_propagator_check",
            format!("no time-domain closed form for {}", ms.name()),
        ));
    }
    if g.r_min() != 0.0 {
        return Err(Error::Grid {
            op: "trotter_propagator_check",
            detail: format!("grid must start at r = 0, starts at {}", g.r_min()),
        });
    }
    let pot = effective_radial_potential(ms, ch, sector, p)?;
    Ok((1..g.len() - 1).map(|i| pot.total(g.r(i))).collect())
}

/// Trotter kernels `K(r_i, r_s; τ)` for each source index `s`, on the interior points.
fn trotter_columns(v: &[f64], sources: &[usize], tau: f64, steps: usize, g: &RadialGrid, p: &PhysicalParams) -> Vec<Vec<f64>> {
    let prop = Propagator::new(v, tau, steps, g, p);
    let h = g.spacing();
    sources
        .iter()
        .map(|&s| {
            let mut u = vec![0.0; v.len()];
            u[s - 1] = 1.0 / h;
            prop.evolve(&mut u);
            u
        })
        .collect()
}

fn source_indices(ms: &ModelSpec, p: &PhysicalParams, g: &RadialGrid) -> Vec<usize> {
    let h = g.spacing();
    SOURCES
        .iter()
        .map(|f| ((f * ms.length_scale(p) / h).round() as usize).clamp(1, g.len() - 2))
        .collect()
}

fn max_relative(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let scale = y.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            x.iter().zip(y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max) / scale
        })
        .fold(0.0, f64::max)
}

/// Compares Strang-split Euclidean evolution of `H^{sector}_SUSY` (free or oscillator channel)
/// with the Wick-rotated promotor at `ζ = 0` over `τ`, using the default step count.
pub fn trotter_propagator_check(
    ch: Channel,
    sector: Sign,
    ms: &ModelSpec,
    p: &PhysicalParams,
    tau: f64,
    g: &RadialGrid,
) -> Result<VerificationReport> {
    trotter_propagator_check_with_steps(ch, sector, ms, p, tau, g, TROTTER_DEFAULT_STEPS)
}

/// As [`trotter_propagator_check`] with an explicit number of time steps (even, `>= 2`).
///
/// Checks: the largest deviation relative to the peak of each kernel column, at points where
/// the closed form exceeds `1e-3` of its peak; and a step-count sufficiency estimate from the
/// difference between `steps` and `steps/2` (Strang error `∝ dτ²`).
#[allow(clippy::too_many_arguments)]
pub fn trotter_propagator_check_with_steps(
    ch: Channel,
    sector: Sign,
    ms: &ModelSpec,
    p: &PhysicalParams,
    tau: f64,
    g: &RadialGrid,
    steps: usize,
) -> Result<VerificationReport> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(domain("trotter_propagator_check", format!("Euclidean time must be positive, got {tau}")));
    }
    if steps < 2 || steps % 2 == 1 {
        return Err(domain("trotter_propagator_check", format!("step count {steps} must be even and >= 2")));
    }
    let thermal = (p.hbar * tau / p.m).sqrt();
    if g.spacing() > 0.25 * thermal {
        return Err(Error::Grid {
            op: "trotter_propagator_check",
            detail: format!("spacing {:.3e} does not resolve the thermal length {thermal:.3e}", g.spacing()),
        });
    }
    let v = channel_potential(ch, sector, ms, p, g)?;
    let sources = source_indices(ms, p, g);
    let t = Complex64::new(0.0, -tau);
    let zero = Complex64::new(0.0, 0.0);
    let mut exact = Vec::with_capacity(sources.len());
    for &s in &sources {
        let col = (1..g.len() - 1)
            .map(|i| Ok(promotor_closed_form(g.r(i), g.r(s), t, zero, ch, sector, ms, p)?.re))
            .collect::<Result<Vec<f64>>>()?;
        let peak = col.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let edge = col[col.len() - 1].abs();
        if edge > 1e-8 * peak {
            return Err(Error::Grid {
                op: "trotter_propagator_check",
                detail: format!("kernel at r_max is {:.1e} of its peak; extend the grid", edge / peak),
            });
        }
        exact.push(col);
    }
    let mut report = VerificationReport::new(format!("trotter/{}/{}/{sector}", ms.name(), channel_label(ch)));
    report
        .input("model", ms)
        .input("channel", channel_label(ch))
        .input("sector", sector)
        .input("tau", tau)
        .input("steps", steps)
        .input("points", g.len());
    let tol = if matches!(ms, ModelSpec::FreeDirac) {
        TROTTER_FREE_TOL
    } else {
        TROTTER_OSCILLATOR_TOL
    };
    let fine = trotter_columns(&v, &sources, tau, steps, g, p);
    let coarse = trotter_columns(&v, &sources, tau, steps / 2, g, p);
    let significant = |cols: &[Vec<f64>]| -> Vec<Vec<f64>> {
        cols.iter()
            .zip(&exact)
            .map(|(c, e)| {
                let peak = e.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
                c.iter().zip(e).filter(|(_, x)| x.abs() > TROTTER_SIGNIFICANT * peak).map(|(y, _)| *y).collect()
            })
            .collect()
    };
    let (fine, coarse, want) = (significant(&fine), significant(&coarse), significant(&exact));
    report.check("max relative deviation from promotor", max_relative(&fine, &want), tol);
    // Strang: K_N − K_exact ≈ (K_N − K_{N/2})/3.
    let step_error = max_relative(&fine, &coarse) / 3.0;
    let mut step_check = Check::new("time-step error estimate", step_error, tol);
    if !step_check.pass {
        step_check = step_check.with_note(format!("step count insufficient: {steps} steps"));
    }
    report.push(step_check);
    Ok(report)
}

/// Observed order of the Strang splitting from successive step doublings of
/// `steps = [n, 2n, 4n]`: `log2(|K_n − K_2n| / |K_2n − K_4n|)`.
pub fn trotter_convergence_order(
    ch: Channel,
    sector: Sign,
    ms: &ModelSpec,
    p: &PhysicalParams,
    tau: f64,
    g: &RadialGrid,
    base_steps: usize,
) -> Result<f64> {
    if base_steps == 0 {
        return Err(domain("trotter_convergence_order", "base step count must be positive"));
    }
    let v = channel_potential(ch, sector, ms, p, g)?;
    let sources = source_indices(ms, p, g);
    let k: Vec<Vec<Vec<f64>>> = [1, 2, 4]
        .iter()
        .map(|f| trotter_columns(&v, &sources, tau, f * base_steps, g, p))
        .collect();
    let e1 = max_relative(&k[0], &k[1]);
    let e2 = max_relative(&k[1], &k[2]);
    Ok((e1 / e2).log2())
}

fn channel_label(ch: Channel) -> String {
    format!("j={}/2,sigma={}", ch.twice_j, ch.sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j_half(sigma: Sign) -> Channel {
        Channel::radial(1, sigma).unwrap()
    }

    #[test]
    fn free_channel_matches_gaussian_kernel() {
        let p = PhysicalParams::natural();
        let g = RadialGrid::uniform(0.0, 12.0, 1200).unwrap();
        let r = trotter_propagator_check(j_half(Sign::Plus), Sign::Plus, &ModelSpec::FreeDirac, &p, 0.5, &g).unwrap();
        assert!(r.pass(), "{}", r.to_json(false));
    }

    #[test]
    fn oscillator_channel_matches_promotor() {
        let p = PhysicalParams::natural();
        let ms = ModelSpec::DiracOscillator { omega: 1.0 };
        let g = RadialGrid::uniform(0.0, 10.0, 1000).unwrap();
        for (sigma, sector) in [(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)] {
            let r = trotter_propagator_check(j_half(sigma), sector, &ms, &p, 0.7, &g).unwrap();
            assert!(r.pass(), "{}", r.to_json(false));
        }
    }

    #[test]
    fn strang_order_is_two() {
        let p = PhysicalParams::natural();
        let ms = ModelSpec::DiracOscillator { omega: 1.0 };
        let g = RadialGrid::uniform(0.0, 10.0, 500).unwrap();
        let order = trotter_convergence_order(j_half(Sign::Plus), Sign::Plus, &ms, &p, 0.7, &g, 64).unwrap();
        assert!((order - 2.0).abs() < 0.2, "{order}");
    }

    #[test]
    fn too_few_steps_are_flagged() {
        let p = PhysicalParams::natural();
        let ms = ModelSpec::DiracOscillator { omega: 1.0 };
        let g = RadialGrid::uniform(0.0, 10.0, 500).unwrap();
        let r = trotter_propagator_check_with_steps(j_half(Sign::Plus), Sign::Plus, &ms, &p, 0.7, &g, 4).unwrap();
        let c = r.checks.iter().find(|c| c.name == "time-step error estimate").unwrap();
        assert!(!c.pass && c.note.is_some());
    }

    #[test]
    fn unsupported_model_rejected() {
        let p = PhysicalParams::natural();
        let g = RadialGrid::uniform(0.0, 10.0, 500).unwrap();
        let ms = ModelSpec::LinearSuperpotential { gamma: 1.0 };
        assert!(trotter_propagator_check(j_half(Sign::Plus), Sign::Plus, &ms, &p, 0.5, &g).is_err());
    }
}
