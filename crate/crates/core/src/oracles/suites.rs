//! Verification suites: named groups of independent jobs, run concurrently and merged by name.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::susy_algebra_check;
use super::fd::{fd_radial_richardson, fd_witten1d_richardson};
use super::green::free_green_check;
use super::promotor::promotor_randomized_check;
use super::report::{Check, VerificationReport};
use super::scan::{branch_cut_scan, pole_scan, pole_scan_peaks, residue_eigenfunction_check};
use super::trotter::{trotter_convergence_order, trotter_propagator_check};
use crate::angular::{
    apply_sigma_er, spin_orbit_eigenvalue, spin_orbit_from_quantum_numbers, spin_spherical_harmonic, Channel,
    Sign, SphereQuadrature,
};
use crate::consts::{
    ALGEBRA_LEVELS, ANGULAR_FLIP_TOL, ANGULAR_ORTHO_TOL, INTERTWINING_TOL, NONREL_ORDER_TOL, POLE_MATCH_TOL,
    RICHARDSON_POINT_COUNTS, SPECTRA_FD_TOL, WITTEN_MAP_TOL, ZERO_MODE_RESIDUAL_TOL,
};
use crate::error::{domain, Error, Result};
use crate::fields::{RadialFunction, RadialGrid};
use crate::resolvent::{radial_kernel, ResolventQuery};
use crate::spectra::{dirac_spectrum_discrete, susy_spectrum_discrete};
use crate::susy_core::{effective_radial_potential, ModelSpec, PhysicalParams};
use crate::wavefunctions::{apply_d_operator, level_grid, susy_eigenfunction, susy_zero_mode};

/// Named verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    Spectra,
    Kernels,
    Intertwining,
    Limits,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["algebra", "spectra", "kernels", "intertwining", "limits", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Algebra, Suite::Spectra, Suite::Kernels, Suite::Intertwining, Suite::Limits],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "algebra" => Suite::Algebra,
            "spectra" => Suite::Spectra,
            "kernels" => Suite::Kernels,
            "intertwining" => Suite::Intertwining,
            "limits" => Suite::Limits,
            "all" => Suite::All,
            _ => return Err(domain("Suite", format!("unknown suite '{s}'; expected one of {:?}", Self::NAMES))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::Algebra, Suite::Spectra, Suite::Kernels, Suite::Intertwining, Suite::Limits, Suite::All]
            .iter()
            .position(|s| s == self)
            .unwrap_or(0);
        f.write_str(Self::NAMES[i])
    }
}

/// Suite settings: physical parameters, an optional model filter (by model name) and the
/// seed of the randomized promotor sets.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub params: PhysicalParams,
    pub model: Option<String>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            params: PhysicalParams::natural(),
            model: None,
            seed: 2024,
        }
    }
}

type JobFn = Box<dyn FnOnce() -> Result<VerificationReport> + Send>;

/// One verification job; `models` lists the model names it exercises.
pub struct Job {
    pub name: String,
    pub models: Vec<&'static str>,
    run: JobFn,
}

impl Job {
    fn new(name: impl Into<String>, models: &[&'static str], run: impl FnOnce() -> Result<VerificationReport> + Send + 'static) -> Self {
        Self {
            name: name.into(),
            models: models.to_vec(),
            run: Box::new(run),
        }
    }

    /// Runs the job; an error becomes a failed report carrying the message.
    pub fn run(self) -> VerificationReport {
        let t0 = Instant::now();
        let mut report = match (self.run)() {
            Ok(mut r) => {
                r.name = self.name;
                r
            }
            Err(e) => {
                let mut r = VerificationReport::new(self.name);
                r.push(Check::boolean("job completed", false).with_note(e.to_string()));
                r
            }
        };
        report.runtime_seconds = t0.elapsed().as_secs_f64();
        report
    }
}

const OSC: ModelSpec = ModelSpec::DiracOscillator { omega: 1.0 };
const LIN: ModelSpec = ModelSpec::LinearSuperpotential { gamma: 1.0 };

fn j_half(sigma: Sign) -> Channel {
    Channel::radial(1, sigma).expect("j = 1/2 channel")
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Jobs of a suite, filtered by `cfg.model`.
pub fn suite_jobs(suite: Suite, cfg: &SuiteConfig) -> Vec<Job> {
    let p = cfg.params;
    let mut jobs = Vec::new();
    for part in suite.parts() {
        match part {
            Suite::Algebra => {
                jobs.push(Job::new("algebra/angular", &[], angular_report));
                for (ms, sigma, r_max, n) in [
                    (ModelSpec::FreeDirac, Sign::Plus, 20.0, 1000),
                    (ModelSpec::FreeDiracBrokenSusy, Sign::Plus, 20.0, 1000),
                    (OSC, Sign::Plus, 10.0, 1000),
                    (OSC, Sign::Minus, 10.0, 1000),
                    (LIN, Sign::Plus, 150.0, 3000),
                ] {
                    let name = format!("algebra/{}/j=1/2,sigma={sigma}", ms.name());
                    let tag = ms.name();
                    jobs.push(Job::new(name, &[tag], move || algebra_report(&ms, j_half(sigma), r_max, n, &p)));
                }
            }
            Suite::Spectra => {
                jobs.push(Job::new("spectra/dirac-oscillator", &["dirac-oscillator"], move || {
                    closed_form_spectra_report(&OSC, &p)
                }));
                jobs.push(Job::new("spectra/linear", &["linear"], move || closed_form_spectra_report(&LIN, &p)));
            }
            Suite::Kernels => {
                jobs.push(Job::new("kernels/poles/dirac-oscillator", &["dirac-oscillator"], move || {
                    oscillator_pole_report(&p)
                }));
                jobs.push(Job::new("kernels/poles/linear", &["linear"], move || linear_pole_report(&p)));
                jobs.push(Job::new("kernels/branch-cut/linear", &["linear", "free"], move || branch_cut_report(&p)));
                jobs.push(Job::new("kernels/residue/dirac-oscillator", &["dirac-oscillator"], move || {
                    residue_report(&p)
                }));
                let seed = cfg.seed;
                for ms in [OSC, LIN] {
                    let tag = ms.name();
                    jobs.push(Job::new(format!("kernels/promotor/{tag}"), &[tag], move || {
                        promotor_randomized_check(&ms, 10, seed, &p)
                    }));
                }
                jobs.push(Job::new("kernels/trotter/free", &["free"], move || trotter_report(&ModelSpec::FreeDirac, &p)));
                jobs.push(Job::new("kernels/trotter/dirac-oscillator", &["dirac-oscillator"], move || {
                    trotter_report(&OSC, &p)
                }));
                jobs.push(Job::new("kernels/green/free", &["free"], move || {
                    let len = p.hbar / (p.m * p.c);
                    let pairs = [
                        ([0.7, -0.2, 0.4], [-0.1, 0.35, -0.3]),
                        ([1.5, 0.0, 0.0], [0.0, 0.0, 0.0]),
                        ([0.3, 0.9, -1.2], [0.2, -0.4, 0.5]),
                    ]
                    .map(|(a, b)| (a.map(|x| x * len), b.map(|x| x * len)));
                    free_green_check(Complex64::new(0.4, 0.3) * p.mc2(), &pairs, &p)
                }));
            }
            Suite::Intertwining => {
                jobs.push(Job::new("intertwining/dirac-oscillator", &["dirac-oscillator"], move || {
                    intertwining_report(&p)
                }));
                for ms in [OSC, LIN] {
                    let tag = ms.name();
                    jobs.push(Job::new(format!("intertwining/zero-modes/{tag}"), &[tag], move || {
                        zero_mode_report(&ms, 9, &p)
                    }));
                }
            }
            Suite::Limits => {
                jobs.push(Job::new("limits/dirac-oscillator-1d/spectrum", &["dirac-oscillator-1d"], move || {
                    witten1d_report(1.0, &p)
                }));
                jobs.push(Job::new("limits/dirac-oscillator-1d/nonrelativistic", &["dirac-oscillator-1d"], move || {
                    nonrelativistic_report(1.0, &p)
                }));
            }
            Suite::All => unreachable!("expanded by parts"),
        }
    }
    if let Some(m) = &cfg.model {
        jobs.retain(|j| j.models.iter().any(|t| t == m));
    }
    jobs
}

/// Runs the jobs of `suite` concurrently; reports are returned sorted by name.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let jobs = suite_jobs(suite, cfg);
    let mut reports: Vec<VerificationReport> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().map(|j| s.spawn(move || j.run())).collect();
        handles.into_iter().map(|h| h.join().expect("verification job panicked")).collect()
    });
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

/// Orthonormality of the spin spherical harmonics for `j ≤ 7/2`, the flip relation
/// `σ·e_r φ(σ) = φ(−σ)` at 64 seeded angles, and `κ = σ(j + 1/2)` for `j ≤ 9/2`.
pub fn angular_report() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("angular");
    let chans = |tj_max: u32| -> Vec<Channel> {
        let mut out = Vec::new();
        for tj in (1..=tj_max).step_by(2) {
            for tm in (-(tj as i32)..=tj as i32).step_by(2) {
                for s in [Sign::Plus, Sign::Minus] {
                    out.push(Channel::new(tj, tm, s).expect("valid channel"));
                }
            }
        }
        out
    };
    let q = SphereQuadrature::standard();
    let c7 = chans(7);
    let mut ortho = 0.0f64;
    for a in &c7 {
        for b in &c7 {
            let want = if a == b { 1.0 } else { 0.0 };
            ortho = ortho.max((q.overlap(*a, *b) - want).norm());
        }
    }
    report.input("orthonormality_channels", c7.len());
    report.check("max |<φ_a|φ_b> − δ_ab|, j ≤ 7/2", ortho, ANGULAR_ORTHO_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut flip = 0.0f64;
    for _ in 0..64 {
        let (theta, phi) = (rng.gen_range(0.0..std::f64::consts::PI), rng.gen_range(0.0..std::f64::consts::TAU));
        for ch in &c7 {
            let a = apply_sigma_er(spin_spherical_harmonic(*ch, theta, phi), theta, phi);
            let b = spin_spherical_harmonic(ch.flipped(), theta, phi);
            flip = flip.max((a.up - b.up).norm()).max((a.down - b.down).norm());
        }
    }
    report.check("max |σ·e_r φ(σ) − φ(−σ)| at 64 angles", flip, ANGULAR_FLIP_TOL);
    let kappa_ok = chans(9).iter().all(|ch| {
        let k = ch.sigma.value() * (ch.twice_j as i32 + 1) / 2;
        spin_orbit_eigenvalue(*ch) == k && spin_orbit_from_quantum_numbers(*ch) == k
    });
    report.push(Check::boolean("κ = σ(j + 1/2) exactly, j ≤ 9/2", kappa_ok));
    Ok(report)
}

/// `susy_algebra_check` on `[0, r_max]` with `n` points; for models with a discrete spectrum,
/// also requires the FD comparison to cover the lowest levels.
pub fn algebra_report(ms: &ModelSpec, ch: Channel, r_max: f64, n: usize, p: &PhysicalParams) -> Result<VerificationReport> {
    let g = RadialGrid::uniform(0.0, r_max * ms.length_scale(p), n)?;
    let mut r = susy_algebra_check(ms, ch, &g, p)?;
    if matches!(ms, ModelSpec::DiracOscillator { .. } | ModelSpec::LinearSuperpotential { .. }) {
        let compared: usize = r
            .inputs
            .iter()
            .find(|(k, _)| k == "fd_confined_levels")
            .and_then(|(_, v)| v.parse().ok())
            .unwrap_or(0);
        r.push(Check::boolean(
            format!("FD comparison covers the lowest {ALGEBRA_LEVELS} levels ({compared} compared)"),
            compared >= ALGEBRA_LEVELS,
        ));
    }
    Ok(r)
}

fn spectra_cases(ms: &ModelSpec) -> Vec<(Channel, Sign)> {
    let mut out = Vec::new();
    match ms {
        ModelSpec::DiracOscillator { .. } => {
            for tj in [1, 3, 5] {
                for sigma in [Sign::Plus, Sign::Minus] {
                    for sector in [Sign::Plus, Sign::Minus] {
                        out.push((Channel::radial(tj, sigma).expect("channel"), sector));
                    }
                }
            }
        }
        ModelSpec::LinearSuperpotential { .. } => {
            for l in 0..=2 {
                out.push((Channel::from_l(l, Sign::Plus, 1).expect("channel"), Sign::Plus));
                if l >= 1 {
                    out.push((Channel::from_l(l, Sign::Minus, 1).expect("channel"), Sign::Minus));
                }
            }
        }
        _ => {}
    }
    out
}

/// Closed-form `susy_spectrum_discrete` (`n ≤ 4`) against Richardson-extrapolated FD levels of
/// the channel potential. For the linear model the `1 + (…)²` variant and the unshifted
/// (`ε0`-free) variant are confirmed to disagree with FD.
pub fn closed_form_spectra_report(ms: &ModelSpec, p: &PhysicalParams) -> Result<VerificationReport> {
    let cases = spectra_cases(ms);
    if cases.is_empty() {
        return Err(domain("closed_form_spectra_report", format!("no closed-form channels for {}", ms.name())));
    }
    let mut report = VerificationReport::new(format!("spectra/{}", ms.name()));
    report.input("model", ms).input("n_max", 4).input("point_counts", format!("{:?}", RICHARDSON_POINT_COUNTS));
    let eps0 = ms.epsilon0(p);
    let mut misprint = f64::INFINITY;
    let mut unshifted = f64::INFINITY;
    for (ch, sector) in cases {
        let closed: Vec<f64> = (0..=4).map(|n| susy_spectrum_discrete(ms, ch, sector, n, p)).collect::<Result<_>>()?;
        let g = level_grid(ms, ch, sector, 4, p)?;
        let pot = effective_radial_potential(ms, ch, sector, p)?;
        let v = |r: f64| pot.without_centrifugal(r);
        let fd = fd_radial_richardson(&v, ch.l(), p, g.r_max(), &RICHARDSON_POINT_COUNTS, closed.len())?;
        let dev = closed.iter().zip(&fd).map(|(c, f)| rel(*c, *f)).fold(0.0, f64::max);
        report.check(format!("{ch} sector {sector}: closed form vs FD, n ≤ 4"), dev, SPECTRA_FD_TOL);
        if let ModelSpec::LinearSuperpotential { .. } = ms {
            let s = susy_threshold(ms, p) - eps0;
            for (c, f) in closed.iter().zip(&fd) {
                // c − ε0 = s(1 − x²); the variant is s(1 + x²).
                let scale = c - eps0;
                let x2 = 1.0 - scale / s;
                misprint = misprint.min(rel(s * (1.0 + x2) + eps0, *f));
                unshifted = unshifted.min(rel(scale, *f));
            }
        }
    }
    if let ModelSpec::LinearSuperpotential { .. } = ms {
        report.push(Check::boolean(
            format!("1 + (…)² variant rejected by FD (closest relative gap {misprint:.3e})"),
            misprint > 100.0 * SPECTRA_FD_TOL,
        ));
        report.push(Check::boolean(
            format!("spectrum without the ε0 shift rejected by FD (closest relative gap {unshifted:.3e})"),
            unshifted > 100.0 * SPECTRA_FD_TOL,
        ));
    }
    Ok(report)
}

/// `ε` at the continuum threshold of the linear model: `ħ²γ²/2m + ε0`.
fn susy_threshold(ms: &ModelSpec, p: &PhysicalParams) -> f64 {
    match ms {
        ModelSpec::LinearSuperpotential { gamma } => p.hbar * p.hbar * gamma * gamma / (2.0 * p.m) + ms.epsilon0(p),
        _ => f64::INFINITY,
    }
}

/// Oscillator poles of `g⁺` for `j = 1/2`: `σ = +1` in `[0.5, 18] m²c⁴` against
/// `m²c⁴ + 4mc²ħωn`, `σ = −1` against `2mc²ε` of the spectra, pole counts against the closed
/// form, and the peak fallback against the analytic scan.
pub fn oscillator_pole_report(p: &PhysicalParams) -> Result<VerificationReport> {
    let ModelSpec::DiracOscillator { omega } = OSC else { unreachable!() };
    let e2 = p.mc2() * p.mc2();
    let mut report = VerificationReport::new("poles/dirac-oscillator");
    report.input("model", OSC);
    for (sigma, window) in [(Sign::Plus, (0.5 * e2, 18.0 * e2)), (Sign::Minus, (0.5 * e2, 30.0 * e2))] {
        let ch = j_half(sigma);
        let scan = pole_scan(&OSC, ch, Sign::Plus, window, p)?;
        let mut want = Vec::new();
        for n in 0.. {
            let z = 2.0 * p.mc2() * susy_spectrum_discrete(&OSC, ch, Sign::Plus, n, p)?;
            if z > window.1 {
                break;
            }
            if z >= window.0 {
                want.push(z);
            }
        }
        report.push(Check::boolean(
            format!("{ch}: {} poles found, closed form has {}", scan.poles.len(), want.len()),
            scan.poles.len() == want.len(),
        ));
        let dev = scan.poles.iter().zip(&want).map(|(a, b)| rel(*a, *b)).fold(0.0, f64::max);
        report.check(format!("{ch}: poles vs 2mc²ε from the spectra"), dev, POLE_MATCH_TOL);
        if sigma == Sign::Plus {
            let ladder = (0..5).map(|n| e2 + 4.0 * p.mc2() * p.hbar * omega * n as f64);
            let dev = scan.poles.iter().zip(ladder).map(|(a, b)| rel(*a, b)).fold(0.0, f64::max);
            report.check(format!("{ch}: poles vs m²c⁴ + 4mc²ħωn"), dev, POLE_MATCH_TOL);
        } else {
            let len = OSC.length_scale(p);
            let kernel = |z: Complex64| radial_kernel(&OSC, &ResolventQuery::new(z, 0.9 * len, 0.6 * len, ch, Sign::Plus)?, p);
            let peaks = pole_scan_peaks(&kernel, window, 2000)?;
            let same = peaks.poles.len() == scan.poles.len();
            report.push(Check::boolean(format!("{ch}: peak scan finds {} poles", peaks.poles.len()), same));
            if same {
                let dev = peaks.poles.iter().zip(&scan.poles).map(|(a, b)| rel(*a, *b)).fold(0.0, f64::max);
                report.check(format!("{ch}: peak scan vs analytic scan"), dev, POLE_MATCH_TOL);
            }
        }
    }
    Ok(report)
}

/// Linear-model poles of `g⁺` (`l = 0`, `σ = +1`) in `[1.5, 2) m²c⁴`: match with the spectra
/// and accumulation at the threshold `m²c⁴ + ħ²c²γ²`.
pub fn linear_pole_report(p: &PhysicalParams) -> Result<VerificationReport> {
    let ModelSpec::LinearSuperpotential { gamma } = LIN else { unreachable!() };
    let e2 = p.mc2() * p.mc2();
    let threshold = e2 + (p.hbar * p.c * gamma).powi(2);
    let ch = j_half(Sign::Plus);
    let scan = pole_scan(&LIN, ch, Sign::Plus, (1.5 * e2, threshold), p)?;
    let mut report = VerificationReport::new("poles/linear");
    report.input("model", LIN).input("poles", scan.poles.len());
    let mut dev = 0.0f64;
    for (z, n) in scan.poles.iter().zip(&scan.indices) {
        dev = dev.max(rel(*z, 2.0 * p.mc2() * susy_spectrum_discrete(&LIN, ch, Sign::Plus, *n, p)?));
    }
    report.check("poles vs 2mc²ε from the spectra", dev, POLE_MATCH_TOL);
    let increasing = scan.poles.windows(2).all(|w| w[1] > w[0] && w[1] < threshold);
    let gaps: Vec<f64> = scan.poles.windows(2).map(|w| w[1] - w[0]).collect();
    let shrinking = gaps.windows(2).all(|w| w[1] < w[0]);
    let last = scan.poles.last().copied().unwrap_or(0.0);
    report.push(Check::boolean("poles increase below the threshold with shrinking gaps", increasing && shrinking));
    report.check("(threshold − last pole) / threshold", (threshold - last) / threshold, 1e-3);
    report.push(Check::boolean("window truncation reported", scan.truncation.is_some()));
    Ok(report)
}

/// Continuum branch: threshold `√2 mc²` for `γ = 1`, `mc²` for the free model, and a positive
/// jump of `Im g` across the cut at `λ = 0.5`.
pub fn branch_cut_report(p: &PhysicalParams) -> Result<VerificationReport> {
    let ch = j_half(Sign::Plus);
    let lam = 0.5 * p.m * p.c;
    let lin = branch_cut_scan(1.0, ch, p, &[0.0, lam])?;
    let free = branch_cut_scan(0.0, ch, p, &[0.0, lam])?;
    let mut report = VerificationReport::new("branch-cut");
    let want = (p.mc2() * p.mc2() + (p.hbar * p.c).powi(2)).sqrt();
    report.check("γ = 1 threshold vs sqrt(m²c⁴ + ħ²c²γ²)", rel(lin.points[0].energy.0, want), 1e-12);
    report.check("γ = 0 threshold vs mc²", rel(free.points[0].energy.0, p.mc2()), 1e-12);
    for (name, s) in [("γ = 1", &lin), ("γ = 0", &free)] {
        let jump = s.points[1].im_jump.unwrap_or(f64::NAN);
        report.push(Check::boolean(format!("{name}: Im g jump across the cut at λ = 0.5 is positive ({jump:.3e})"), jump > 0.0));
    }
    Ok(report)
}

/// Contour residue at the lowest oscillator pole (`j = 1/2`, `σ = +1`) against `−u(r'')u(r')`
/// at five point pairs.
pub fn residue_report(p: &PhysicalParams) -> Result<VerificationReport> {
    let len = OSC.length_scale(p);
    let pairs = [(0.5, 0.8), (1.2, 0.3), (0.9, 0.9), (1.6, 0.7), (2.1, 1.3)].map(|(a, b)| (a * len, b * len));
    residue_eigenfunction_check(&OSC, j_half(Sign::Plus), Sign::Plus, 0, &pairs, p)
}

/// Trotter propagation against the promotor (free: `l = 0`; oscillator: three
/// channel/sector combinations) and, for the oscillator, the fitted Strang order.
pub fn trotter_report(ms: &ModelSpec, p: &PhysicalParams) -> Result<VerificationReport> {
    let len = ms.length_scale(p);
    let t_unit = p.hbar / p.mc2();
    let mut report = VerificationReport::new(format!("trotter/{}", ms.name()));
    report.input("model", ms);
    let combos: Vec<(Sign, Sign)> = match ms {
        ModelSpec::FreeDirac => vec![(Sign::Plus, Sign::Plus)],
        _ => vec![(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)],
    };
    let (r_max, n, tau) = match ms {
        ModelSpec::FreeDirac => (12.0, 1200, 0.5),
        _ => (10.0, 1000, 0.7),
    };
    let g = RadialGrid::uniform(0.0, r_max * len, n)?;
    for (sigma, sector) in combos {
        let r = trotter_propagator_check(j_half(sigma), sector, ms, p, tau * t_unit, &g)?;
        for c in r.checks {
            report.push(Check { name: format!("{} {sector}: {}", j_half(sigma), c.name), ..c });
        }
    }
    if !matches!(ms, ModelSpec::FreeDirac) {
        let g = RadialGrid::uniform(0.0, r_max * len, 500)?;
        let order = trotter_convergence_order(j_half(Sign::Plus), Sign::Plus, ms, p, tau * t_unit, &g, 64)?;
        report.check(format!("Strang order {order:.3} vs 2"), (order - 2.0).abs(), 0.2);
    }
    Ok(report)
}

/// The four oscillator intertwining relations on analytic basis functions, `n ≤ 4`,
/// `j ≤ 5/2`.
pub fn intertwining_report(p: &PhysicalParams) -> Result<VerificationReport> {
    let ModelSpec::DiracOscillator { omega } = OSC else { unreachable!() };
    let g = RadialGrid::for_model(&OSC, p);
    let f = 2.0 * p.mc2() * p.hbar * omega;
    let i = Complex64::new(0.0, 1.0);
    let basis = |ch: Channel, sector: Sign, n: u32| susy_eigenfunction(&OSC, ch, sector, n, p, &g);
    let dev = |a: &RadialFunction, b: &RadialFunction| -> Result<f64> { Ok(a.sub(b)?.norm() / b.norm()) };
    let mut worst = [0.0f64; 4];
    for tj in [1u32, 3, 5] {
        let j = tj as f64 / 2.0;
        let up = Channel::radial(tj, Sign::Plus)?;
        let dn = Channel::radial(tj, Sign::Minus)?;
        for n in 0..=4u32 {
            let nf = n as f64;
            if n >= 1 {
                let (lhs, _) = apply_d_operator(&basis(up, Sign::Plus, n)?, up, &OSC, p, true)?;
                let rhs = basis(dn, Sign::Minus, n - 1)?.scaled(i * (f * 2.0 * nf).sqrt());
                worst[0] = worst[0].max(dev(&lhs, &rhs)?);
            }
            let (lhs, _) = apply_d_operator(&basis(dn, Sign::Plus, n)?, dn, &OSC, p, true)?;
            let rhs = basis(up, Sign::Minus, n)?.scaled(-i * (f * 2.0 * (nf + j + 1.0)).sqrt());
            worst[1] = worst[1].max(dev(&lhs, &rhs)?);
            let (lhs, _) = apply_d_operator(&basis(dn, Sign::Minus, n)?, dn, &OSC, p, false)?;
            let rhs = basis(up, Sign::Plus, n + 1)?.scaled(-i * (f * 2.0 * (nf + 1.0)).sqrt());
            worst[2] = worst[2].max(dev(&lhs, &rhs)?);
            let (lhs, _) = apply_d_operator(&basis(up, Sign::Minus, n)?, up, &OSC, p, false)?;
            let rhs = basis(dn, Sign::Plus, n)?.scaled(i * (f * 2.0 * (nf + 1.0 + j)).sqrt());
            worst[3] = worst[3].max(dev(&lhs, &rhs)?);
        }
    }
    let mut report = VerificationReport::new("intertwining/dirac-oscillator");
    report.input("model", OSC).input("points", g.len());
    let names = [
        "D†ψ⁺(σ=+1, n) = i√(2mc²ħω·2n) ψ⁻(σ=−1, n−1)",
        "D†ψ⁺(σ=−1, n) = −i√(2mc²ħω·2(n+j+1)) ψ⁻(σ=+1, n)",
        "Dψ⁻(σ=−1, n) = −i√(2mc²ħω·2(n+1)) ψ⁺(σ=+1, n+1)",
        "Dψ⁻(σ=+1, n) = i√(2mc²ħω·2(n+j+1)) ψ⁺(σ=−1, n)",
    ];
    for (name, w) in names.iter().zip(worst) {
        report.check(format!("{name}, n ≤ 4, j ≤ 5/2"), w, INTERTWINING_TOL);
    }
    Ok(report)
}

/// `‖D† ψ0‖` for the `σ = +1` zero modes, `j ≤ twice_j_max/2`, in units of `ħc / length`.
pub fn zero_mode_report(ms: &ModelSpec, twice_j_max: u32, p: &PhysicalParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("zero-modes/{}", ms.name()));
    report.input("model", ms).input("j_max", format!("{twice_j_max}/2"));
    let unit = p.hbar * p.c / ms.length_scale(p);
    for tj in (1..=twice_j_max).step_by(2) {
        let ch = Channel::radial(tj, Sign::Plus)?;
        let g = level_grid(ms, ch, Sign::Plus, 0, p)?;
        let z = susy_zero_mode(ms, ch, p, &g)?;
        let (d, _) = apply_d_operator(&z, ch, ms, p, true)?;
        report.check(format!("‖D†ψ0‖, j = {tj}/2"), d.norm() / unit, ZERO_MODE_RESIDUAL_TOL);
    }
    Ok(report)
}

/// One-dimensional Dirac oscillator: FD levels of both Witten sectors mapped through
/// `E = √(2mc²ε)` against `E0⁺ = mc²` and `E_n = mc²√(1 + 2nħω/mc²)`.
pub fn witten1d_report(omega: f64, p: &PhysicalParams) -> Result<VerificationReport> {
    let ms = ModelSpec::DiracOscillator1D { omega };
    let u = ms.superpotential(p).expect("oscillator superpotential");
    let len = ms.length_scale(p);
    let count = 5;
    let mut report = VerificationReport::new("witten1d/dirac-oscillator-1d");
    report.input("model", &ms).input("point_counts", format!("{:?}", RICHARDSON_POINT_COUNTS));
    let exact = |n: usize| p.mc2() * (1.0 + 2.0 * n as f64 * p.hbar * omega / p.mc2()).sqrt();
    for sector in [Sign::Plus, Sign::Minus] {
        let eps = fd_witten1d_richardson(&u, sector, p, -12.0 * len, 12.0 * len, &RICHARDSON_POINT_COUNTS, count)?;
        let offset = if sector == Sign::Plus { 0 } else { 1 };
        let dev = eps
            .iter()
            .enumerate()
            .map(|(k, e)| rel((2.0 * p.mc2() * e).sqrt(), exact(k + offset)))
            .fold(0.0, f64::max);
        report.check(format!("sector {sector}: √(2mc²ε) vs mc²√(1 + 2nħω/mc²)"), dev, WITTEN_MAP_TOL);
        if sector == Sign::Plus {
            report.check("E0⁺ vs mc²", rel((2.0 * p.mc2() * eps[0]).sqrt(), p.mc2()), WITTEN_MAP_TOL);
        }
    }
    Ok(report)
}

/// Convergence order of `E_n − mc² → nħω` in `c`, fitted between `c = 32` and `c = 64`
/// (in units of the given `c`), for `n = 1, 2, 3`.
pub fn nonrelativistic_report(omega: f64, p: &PhysicalParams) -> Result<VerificationReport> {
    let ms = ModelSpec::DiracOscillator1D { omega };
    let ch = j_half(Sign::Plus);
    let mut report = VerificationReport::new("nonrelativistic/dirac-oscillator-1d");
    report.input("model", &ms);
    let cs = [32.0, 64.0].map(|k| k * p.c);
    for n in 1..=3u32 {
        let devs: Vec<f64> = cs
            .iter()
            .map(|&c| {
                let q = p.with_c(c);
                let e = dirac_spectrum_discrete(&ms, ch, Sign::Plus, n, Sign::Plus, &q)?;
                Ok(((e - q.mc2()) - n as f64 * q.hbar * omega).abs())
            })
            .collect::<Result<_>>()?;
        let order = (devs[1] / devs[0]).ln() / (cs[1] / cs[0]).ln();
        report.check(format!("n = {n}: fitted order {order:.4} vs c^-2"), (order + 2.0).abs(), NONREL_ORDER_TOL);
    }
    Ok(report)
}
