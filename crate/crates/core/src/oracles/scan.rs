//! Pole and branch-cut scans of the radial kernels, and contour residues at their poles.

use num_complex::Complex64;

use super::report::VerificationReport;
use crate::angular::{Channel, Sign};
use crate::consts::{POLE_SCAN_ETA, POLE_SCAN_MAX_POLES, RESIDUE_CONTOUR_POINTS, RESIDUE_TOL};
use crate::error::{domain, Error, Result};
use crate::resolvent::{
    free_radial_kernel, linear_kernel_pole, oscillator_kernel_pole, radial_kernel, KernelParams, ResolventQuery,
};
use crate::spectra::{continuum_branch, ContinuumBranch};
use crate::susy_core::{ModelSpec, PhysicalParams};
use crate::wavefunctions::{level_grid, susy_eigenfunction};

/// How the poles of a scan were located.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleScanMethod {
    /// Bracketing and bisection of `ν±(ζ) = n + ρ + 1/2`.
    Analytic,
    /// Peak detection of `|g(ζ + iη)|` with quadratic refinement.
    Peak,
}

/// Poles of one channel kernel inside a real window.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleScan {
    pub poles: Vec<f64>,
    /// Radial index of each pole (analytic scans only).
    pub indices: Vec<u32>,
    pub method: PoleScanMethod,
    /// Set when poles beyond the window (or beyond the pole cap) were left out.
    pub truncation: Option<String>,
}

/// `ν±(ζ) − ρ − 1/2` for real `ζ`; its integer crossings are the kernel poles.
fn pole_condition(ms: &ModelSpec, ch: Channel, sector: Sign, zeta: f64, p: &PhysicalParams) -> Result<f64> {
    let q = ResolventQuery::new(Complex64::new(zeta, 0.0), 1.0, 1.0, ch, sector)?;
    let kp = match ms {
        ModelSpec::DiracOscillator { omega } => KernelParams::oscillator(&q, *omega, p),
        ModelSpec::LinearSuperpotential { gamma } => KernelParams::linear(&q, *gamma, p)?,
        _ => unreachable!("analytic pole condition only for oscillator and linear models"),
    };
    Ok(kp.nu.re - kp.rho - 0.5)
}

fn bisect(f: &dyn Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut f_lo = f(lo)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// All kernel poles of `g^{sector}` in channel `ch` with `ζ ∈ [lo, hi)`.
///
/// Oscillator and linear models use the analytic condition `ν±(ζ) = n + ρ + 1/2` (monotone in
/// `ζ`), solved by bisection. The window must lie below the continuum threshold, which may be
/// its open upper end; poles accumulating there are capped and reported in `truncation`.
pub fn pole_scan(ms: &ModelSpec, ch: Channel, sector: Sign, window: (f64, f64), p: &PhysicalParams) -> Result<PoleScan> {
    ms.validate()?;
    let (lo, hi) = window;
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(domain("pole_scan", format!("invalid window [{lo}, {hi})")));
    }
    let threshold = match continuum_branch(ms, p) {
        Ok(b) => Some(b.threshold * b.threshold),
        Err(Error::PurelyDiscrete(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(t) = threshold {
        if hi > t * (1.0 + 1e-15) {
            return Err(Error::BranchCut {
                op: "pole_scan",
                detail: format!("window end {hi} lies above the continuum threshold ζ = {t}"),
            });
        }
    }
    let pole_at = |n: u32| -> Option<f64> {
        match ms {
            ModelSpec::DiracOscillator { omega } => Some(oscillator_kernel_pole(ch, sector, n, *omega, p)),
            ModelSpec::LinearSuperpotential { gamma } => linear_kernel_pole(ch, sector, n, *gamma, p),
            _ => None,
        }
    };
    if !matches!(ms, ModelSpec::DiracOscillator { .. } | ModelSpec::LinearSuperpotential { .. }) {
        return Err(domain(
            "pole_scan",
            format!("no analytic pole condition for {}; use pole_scan_peaks with a kernel evaluator", ms.name()),
        ));
    }
    if pole_at(0).is_none() {
        // Repulsive linear channel: no poles at all.
        return Ok(PoleScan { poles: vec![], indices: vec![], method: PoleScanMethod::Analytic, truncation: None });
    }
    let f = |z: f64| pole_condition(ms, ch, sector, z, p);
    // The condition is increasing in ζ; the crossing with n lies in [lo, hi) iff
    // f(lo) <= n < f(hi) (f(hi) = ∞ at the threshold).
    let f_lo = f(lo)?;
    let at_threshold = threshold.is_some_and(|t| hi >= t * (1.0 - 1e-15));
    let f_hi = if at_threshold { f64::INFINITY } else { f(hi)? };
    let first = f_lo.max(0.0).ceil() as u32;
    let mut poles = Vec::new();
    let mut indices = Vec::new();
    let mut n = first;
    let mut truncation = None;
    while (n as f64) < f_hi {
        if poles.len() == POLE_SCAN_MAX_POLES {
            truncation = Some(format!(
                "stopped after {POLE_SCAN_MAX_POLES} poles; first excluded n = {n} (poles accumulate at the threshold)"
            ));
            break;
        }
        let guess = pole_at(n).expect("attractive channel");
        let g = |z: f64| Ok(f(z)? - n as f64);
        // Refine the closed-form location inside a bracket of the monotone condition.
        let cap = threshold.unwrap_or(f64::INFINITY);
        let scale = 1e-6 * guess.abs().max(1.0);
        let (mut a, mut step) = (guess, scale);
        while g(a)? > 0.0 {
            a -= step;
            step *= 2.0;
        }
        let (mut b, mut step) = (guess, scale);
        while g(b)? < 0.0 {
            b = (b + step).min(0.5 * (b + cap));
            step *= 2.0;
        }
        let z = if g(guess)? == 0.0 { guess } else { bisect(&g, a, b)? };
        if z >= lo && z < hi {
            poles.push(z);
            indices.push(n);
        }
        n += 1;
    }
    if truncation.is_none() && f_hi.is_finite() {
        truncation = Some(format!("first excluded n = {n}"));
    }
    Ok(PoleScan {
        poles,
        indices,
        method: PoleScanMethod::Analytic,
        truncation,
    })
}

/// Generic fallback: poles of `kernel` on `[lo, hi]` from peaks of `|kernel(ζ + iη)|`,
/// `η = 1e-6`, on `samples` points, each refined by quadratic fits of `1/|g|²` (exactly
/// quadratic next to a simple pole).
pub fn pole_scan_peaks(
    kernel: &dyn Fn(Complex64) -> Result<Complex64>,
    window: (f64, f64),
    samples: usize,
) -> Result<PoleScan> {
    let (lo, hi) = window;
    if !(lo < hi) || samples < 3 {
        return Err(domain("pole_scan_peaks", format!("invalid window [{lo}, {hi}] or {samples} samples")));
    }
    let eta = POLE_SCAN_ETA;
    let inv = |x: f64| -> Result<f64> { Ok(1.0 / kernel(Complex64::new(x, eta))?.norm_sqr()) };
    let h = (hi - lo) / (samples - 1) as f64;
    let xs: Vec<f64> = (0..samples).map(|k| lo + k as f64 * h).collect();
    let vals = xs.iter().map(|&x| inv(x)).collect::<Result<Vec<f64>>>()?;
    let mut sorted = vals.clone();
    sorted.sort_by(f64::total_cmp);
    let typical = sorted[samples / 2];
    let mut poles = Vec::new();
    for k in 1..samples - 1 {
        if !(vals[k] <= vals[k - 1] && vals[k] < vals[k + 1]) {
            continue;
        }
        // Parabola through three points, shrinking around the vertex.
        let (mut x0, mut d) = (xs[k], h);
        for _ in 0..60 {
            let (fm, f0, fp) = (inv(x0 - d)?, inv(x0)?, inv(x0 + d)?);
            let curv = fm - 2.0 * f0 + fp;
            if !(curv > 0.0) {
                break;
            }
            let shift = 0.5 * d * (fm - fp) / curv;
            x0 += shift.clamp(-d, d);
            if d < 10.0 * eta || shift.abs() < 1e-14 * x0.abs().max(1.0) {
                break;
            }
            d = (0.25 * d).max(shift.abs() * 4.0).min(d * 0.5);
        }
        // A pole makes 1/|g|² collapse to O(η²); a smooth dip does not.
        if inv(x0)? < 1e-6 * typical && poles.last().is_none_or(|&last: &f64| (x0 - last).abs() > h) {
            poles.push(x0);
        }
    }
    Ok(PoleScan {
        poles,
        indices: vec![],
        method: PoleScanMethod::Peak,
        truncation: None,
    })
}

/// One sample on the continuum branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPoint {
    pub lambda: f64,
    /// `ζ = m²c⁴ + ħ²c²γ² + c²λ²`.
    pub zeta: f64,
    /// `E = ±√ζ`.
    pub energy: (f64, f64),
    /// `Im g(ζ + iη) − Im g(ζ − iη)` of the diagonal kernel `g(r, r)` (`None` at `λ = 0`).
    pub im_jump: Option<f64>,
}

/// Continuum samples along the branch cut of the linear model (free model for `γ = 0`).
#[derive(Debug, Clone, PartialEq)]
pub struct BranchCutScan {
    pub branch: ContinuumBranch,
    pub points: Vec<BranchPoint>,
}

/// Maps `λ ↦ ζ` along the cut `ħ²γ² − μ²(ζ) = −λ²` and measures the kernel discontinuity
/// across it in the `+` sector of channel `ch`, at `r'' = r' = 1/γ` (Compton length if `γ = 0`).
pub fn branch_cut_scan(gamma: f64, ch: Channel, p: &PhysicalParams, lambda_grid: &[f64]) -> Result<BranchCutScan> {
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(domain("branch_cut_scan", format!("γ = {gamma} must be non-negative")));
    }
    let ms = if gamma == 0.0 {
        ModelSpec::FreeDirac
    } else {
        ModelSpec::LinearSuperpotential { gamma }
    };
    let branch = continuum_branch(&ms, p)?;
    let r = if gamma == 0.0 { ms.length_scale(p) } else { 1.0 / gamma };
    let c2 = p.c * p.c;
    let mut points = Vec::with_capacity(lambda_grid.len());
    for &lambda in lambda_grid {
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(domain("branch_cut_scan", format!("λ = {lambda} must be non-negative")));
        }
        let zeta = (p.mc2() * p.mc2() + c2 * (p.hbar * gamma).powi(2)) + c2 * lambda * lambda;
        let im_jump = if lambda > 0.0 {
            let eta = 1e-9 * zeta;
            let eval = |z: Complex64| -> Result<Complex64> {
                let q = ResolventQuery::new(z, r, r, ch, Sign::Plus)?;
                if gamma == 0.0 {
                    free_radial_kernel(&q, p)
                } else {
                    radial_kernel(&ms, &q, p)
                }
            };
            let above = eval(Complex64::new(zeta, eta))?;
            let below = eval(Complex64::new(zeta, -eta))?;
            Some(above.im - below.im)
        } else {
            None
        };
        let e = zeta.sqrt();
        points.push(BranchPoint {
            lambda,
            zeta,
            energy: (e, -e),
            im_jump,
        });
    }
    Ok(BranchCutScan { branch, points })
}

/// `(1/2πi)∮ g dζ` around the pole `ζ_n` of `g^{sector}_ℓ(r'', r')`, by the trapezoidal rule
/// on a circle of `RESIDUE_CONTOUR_POINTS` points whose radius is a quarter of the distance to
/// the nearest other pole (or threshold).
#[allow(clippy::too_many_arguments)]
pub fn contour_residue(
    ms: &ModelSpec,
    ch: Channel,
    sector: Sign,
    n: u32,
    r_out: f64,
    r_in: f64,
    p: &PhysicalParams,
) -> Result<(f64, Complex64)> {
    let pole = |k: u32| -> Result<Option<f64>> {
        Ok(match ms {
            ModelSpec::DiracOscillator { omega } => Some(oscillator_kernel_pole(ch, sector, k, *omega, p)),
            ModelSpec::LinearSuperpotential { gamma } => linear_kernel_pole(ch, sector, k, *gamma, p),
            _ => return Err(domain("contour_residue", format!("no closed-form kernel poles for {}", ms.name()))),
        })
    };
    let zn = pole(n)?.ok_or_else(|| Error::NoDiscreteSpectrum(format!("{}: no poles in sector {sector} of {ch}", ms.name())))?;
    let mut gap = f64::INFINITY;
    if let Some(next) = pole(n + 1)? {
        gap = gap.min((next - zn).abs());
    }
    if n > 0 {
        if let Some(prev) = pole(n - 1)? {
            gap = gap.min((zn - prev).abs());
        }
    }
    let radius = 0.25 * gap;
    let m = RESIDUE_CONTOUR_POINTS;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..m {
        let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / m as f64;
        let dz = Complex64::from_polar(radius, theta);
        let q = ResolventQuery::new(zn + dz, r_out, r_in, ch, sector)?;
        sum += radial_kernel(ms, &q, p)? * dz;
    }
    Ok((zn, sum / m as f64))
}

/// Compares contour residues with `−u(r'')u(r')`, `u = rR` the normalized eigenfunction of
/// level `n`, at grid points near each requested pair.
pub fn residue_eigenfunction_check(
    ms: &ModelSpec,
    ch: Channel,
    sector: Sign,
    n: u32,
    pairs: &[(f64, f64)],
    p: &PhysicalParams,
) -> Result<VerificationReport> {
    let g = level_grid(ms, ch, sector, n, p)?;
    let f = susy_eigenfunction(ms, ch, sector, n, p, &g)?;
    let h = g.spacing();
    let u = |r: f64| -> (f64, f64) {
        let i = ((r - g.r_min()) / h).round() as usize;
        let i = i.clamp(1, g.len() - 1);
        (g.r(i), g.r(i) * f.values()[i].re)
    };
    let mut report = VerificationReport::new(format!("residue/{}/{}/{sector}/n={n}", ms.name(), ch));
    report.input("model", ms).input("channel", ch).input("sector", sector).input("n", n);
    for &(a, b) in pairs {
        let ((ra, ua), (rb, ub)) = (u(a), u(b));
        let (_, res) = contour_residue(ms, ch, sector, n, ra, rb, p)?;
        let want = -ua * ub;
        let dev = (res - want).norm() / want.abs();
        report.check(format!("residue at r''={ra:.4}, r'={rb:.4}"), dev, RESIDUE_TOL);
    }
    Ok(report)
}
