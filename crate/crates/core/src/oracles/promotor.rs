//! Radial promotors (propagators of `H±_SUSY − ζ/2mc²`) and their time integrals.
//!
//! Times are complex: `t` real is real time and `t = −iτ` is Euclidean time `τ`. Internally
//! everything is written in the Euclidean variable `τ_E = i t`. The radial kernels share the
//! oscillator form
//! `K = (k√(ab)/S) exp(−(k/2)(a² + b²) coth(wτ_E)) I_ν(k ab/S)`, `S = sinh(wτ_E)`, `k = mw/ħ`,
//! with `(a, b) = (r'', r')`, `ν = ℓ + 1/2`, `w = ω` for the oscillator, `w → 0` for the free
//! model, and `(a, b) = (√r'', √r')`, `ν = 2ℓ + 1`, `w = Ω` for the linear model.
//! `ln S` is tracked on the branch continuous from `τ_E → 0⁺`, so half-integer orders stay
//! analytic along rotated contours.

use num_complex::Complex64;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::VerificationReport;
use crate::angular::{Channel, Sign};
use crate::consts::{
    PROMOTOR_MAX_PIECES, PROMOTOR_RANDOM_TOL, PROMOTOR_QUAD_REL_TOL, PROMOTOR_RAY_MARGIN, PROMOTOR_TAIL_EXPONENT, SINGULAR_TIME_TOL,
};
use crate::error::{domain, Error, Result};
use crate::numerics::quadrature::{adaptive_gk, adaptive_gk_semi_infinite, exp_sinh};
use crate::resolvent::{mu_of_zeta, radial_kernel, KernelParams, ResolventQuery};
use crate::specialfn::{
    bessel_i_half_order_scaled, bessel_i_int_scaled, ln_gamma_complex, whittaker_m, whittaker_w,
    HalfIntOrder,
};
use crate::susy_core::{ModelSpec, PhysicalParams};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Order of the modified Bessel function in the radial promotor, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Order(u32);

impl Order {
    fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

/// `ln I_ν(z)` given a continuous branch `ln_z` of `ln z` (fixes `z^{1/2}` for half orders).
fn log_bessel_i(order: Order, z: Complex64, ln_z: Complex64) -> Result<Complex64> {
    let nu = order.value();
    if z.norm() < 1e-8 {
        let lg = ln_gamma_complex(Complex64::new(nu + 1.0, 0.0))?;
        let corr = (z * z / (4.0 * (nu + 1.0)) + 1.0).ln();
        return Ok(nu * (ln_z - std::f64::consts::LN_2) - lg + corr);
    }
    if order.0 % 2 == 1 {
        let s = bessel_i_half_order_scaled(HalfIntOrder::from_twice(order.0 as i32), z)?;
        Ok(s.ln() + z - 0.5 * (ln_z - z.ln()))
    } else {
        let n = order.0 / 2;
        if z.re >= 0.0 {
            Ok(bessel_i_int_scaled(n, z).ln() + z)
        } else {
            let w = -z;
            Ok(bessel_i_int_scaled(n, w).ln() + w + Complex64::new(0.0, std::f64::consts::PI * n as f64))
        }
    }
}

/// `ln sinh(w)` continuous from `w → 0` with `Re w >= 0`.
fn log_sinh(w: Complex64) -> Complex64 {
    if w.norm() < 0.5 {
        w.sinh().ln()
    } else {
        let e = (-2.0 * w).exp();
        w + (1.0 - e).ln() - std::f64::consts::LN_2
    }
}

fn coth(w: Complex64) -> Complex64 {
    if w.re > 1.0 {
        let e = (-2.0 * w).exp();
        (1.0 + e) / (1.0 - e)
    } else {
        w.cosh() / w.sinh()
    }
}

/// Frequency-like parameter and radial variables of one promotor.
#[derive(Debug, Clone, Copy)]
struct OscForm {
    /// `w` (zero for the free kernel).
    w: Complex64,
    /// `m/ħ`.
    m_over_hbar: f64,
    a: f64,
    b: f64,
    order: Order,
    /// Coefficient `c` of the extra factor `exp(c τ_E)`.
    phase_rate: Complex64,
}

impl OscForm {
    /// `ln` of the Euclidean kernel at complex `τ_E`.
    fn log_value(&self, tau: Complex64) -> Result<Complex64> {
        let (ln_k_over_s, quad_coeff) = if self.w == ZERO {
            if tau.norm() < SINGULAR_TIME_TOL {
                return Err(Error::SingularTime {
                    op: "promotor_closed_form",
                    detail: "t = 0".into(),
                });
            }
            let ln_k_over_s = Complex64::new(self.m_over_hbar.ln(), 0.0) - tau.ln();
            (ln_k_over_s, 0.5 * self.m_over_hbar / tau)
        } else {
            let x = self.w * tau;
            if x.re < -SINGULAR_TIME_TOL {
                return Err(domain(
                    "promotor_closed_form",
                    format!("w τ_E = {x} lies outside the half-plane Re >= 0"),
                ));
            }
            if x.sinh().norm() < SINGULAR_TIME_TOL {
                return Err(Error::SingularTime {
                    op: "promotor_closed_form",
                    detail: format!("sin(w t) vanishes at w τ_E = {x}"),
                });
            }
            let k = self.w * self.m_over_hbar;
            (k.ln() - log_sinh(x), 0.5 * k * coth(x))
        };
        let ab = self.a * self.b;
        let ln_z = ln_k_over_s + ab.ln();
        let z = ln_z.exp();
        let li = log_bessel_i(self.order, z, ln_z)?;
        Ok(ln_k_over_s + 0.5 * ab.ln() - quad_coeff * (self.a * self.a + self.b * self.b) + li + self.phase_rate * tau)
    }

    /// Rate `C` of the large-`τ_E` behavior `exp(−C τ_E)` (ignoring powers of `τ_E`).
    fn decay_rate(&self) -> Complex64 {
        self.w * (self.order.value() + 1.0) - self.phase_rate
    }

    /// Half-open range of ray angles `φ` (`τ_E = e^{iφ}τ`) free of singularities.
    fn sector(&self) -> (f64, f64) {
        let half = std::f64::consts::FRAC_PI_2;
        let arg_w = if self.w == ZERO { 0.0 } else { self.w.arg() };
        (-half - arg_w, half - arg_w)
    }
}

/// Model-specific promotor data and the prefactor turning `∫dτ_E P` into the kernel.
fn promotor_form(
    r_out: f64,
    r_in: f64,
    zeta: Complex64,
    ch: Channel,
    sector: Sign,
    ms: &ModelSpec,
    p: &PhysicalParams,
) -> Result<(OscForm, Complex64)> {
    if !(r_out > 0.0 && r_in > 0.0) {
        return Err(domain("promotor", format!("radii must be positive, got r''={r_out}, r'={r_in}")));
    }
    ms.validate()?;
    let l = ch.l();
    let m_over_hbar = p.m / p.hbar;
    let two_mc2_hbar = 2.0 * p.mc2() * p.hbar;
    let q = ResolventQuery::new(zeta, r_out, r_in, ch, sector)?;
    match ms {
        ModelSpec::DiracOscillator { omega } => {
            let kp = KernelParams::oscillator(&q, *omega, p);
            let mu_pm_sq = kp.mu_pm_sq.expect("oscillator parameters carry μ±²");
            // K_osc exp(τ μ±²/2ħm) is the kernel of exp(−τ(H_SUSY − ζ/2mc²)/ħ) up to ε0 bookkeeping.
            let form = OscForm {
                w: Complex64::new(*omega, 0.0),
                m_over_hbar,
                a: r_out,
                b: r_in,
                order: Order(2 * l + 1),
                phase_rate: mu_pm_sq / (2.0 * p.hbar * p.m),
            };
            Ok((form, Complex64::new(1.0 / two_mc2_hbar, 0.0)))
        }
        ModelSpec::FreeDirac => {
            let mu = mu_of_zeta(zeta, p);
            let form = OscForm {
                w: ZERO,
                m_over_hbar,
                a: r_out,
                b: r_in,
                order: Order(2 * l + 1),
                phase_rate: mu * mu / (2.0 * p.hbar * p.m),
            };
            Ok((form, Complex64::new(1.0 / two_mc2_hbar, 0.0)))
        }
        ModelSpec::LinearSuperpotential { gamma } => {
            let kp = KernelParams::linear(&q, *gamma, p)?;
            let big_omega = kp.omega.expect("linear parameters carry Ω");
            let form = OscForm {
                w: big_omega,
                m_over_hbar,
                a: r_out.sqrt(),
                b: r_in.sqrt(),
                order: Order(2 * (2 * l + 1)),
                phase_rate: Complex64::new(
                    sector.as_f64() * 4.0 * p.hbar * gamma * ch.kappa() as f64 / p.m,
                    0.0,
                ),
            };
            let pref = (r_out * r_in).powf(0.25) / (p.mc2() * p.hbar);
            Ok((form, Complex64::new(pref, 0.0)))
        }
        _ => Err(domain(
            "promotor",
            format!("no closed-form promotor for {}", ms.name()),
        )),
    }
}

/// Radial promotor `P(t)` at complex time `t` (`t = −iτ` for Euclidean time `τ`).
///
/// Oscillator and free models: the `u = rR` propagator of the shifted oscillator (or free
/// particle) times `exp(itμ±²/2ħm)`, so `g = (i/2mc²ħ) ∫dt P`. Linear model: the integrand
/// in the pseudo-time of the `s = √r` variables, including `exp(±4iħγκt/m)`, so
/// `g = (i(r''r')^{1/4}/mc²ħ) ∫dt P`.
#[allow(clippy::too_many_arguments)]
pub fn promotor_closed_form(
    r_out: f64,
    r_in: f64,
    t: Complex64,
    zeta: Complex64,
    ch: Channel,
    sector: Sign,
    ms: &ModelSpec,
    p: &PhysicalParams,
) -> Result<Complex64> {
    let (form, _) = promotor_form(r_out, r_in, zeta, ch, sector, ms, p)?;
    let tau = Complex64::i() * t;
    Ok(form.log_value(tau)?.exp())
}

/// Integration ray used by [`promotor_time_integral`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PromotorRay {
    /// Angle `φ` of `τ_E = e^{iφ}τ`; `φ = 0` is the Wick-rotated contour `t = −iτ`.
    pub angle: f64,
    /// Real part of the exponential decay rate along the ray.
    pub decay: f64,
}

fn choose_ray(form: &OscForm) -> Result<PromotorRay> {
    let c = form.decay_rate();
    let decay_at = |phi: f64| (c * Complex64::from_polar(1.0, phi)).re;
    if form.w == ZERO && c == ZERO {
        // Free kernel at threshold: power-law decay on the Wick-rotated ray.
        return Ok(PromotorRay { angle: 0.0, decay: 0.0 });
    }
    // Rays with Re(C e^{iφ}) > 0, intersected with the singularity-free sector and with
    // |φ| < π/2, where the short-time Gaussian factor exp(−m(a−b)²/2ħτ_E) decays.
    let half = std::f64::consts::FRAC_PI_2;
    let (s_lo, s_hi) = form.sector();
    let lo = s_lo.max(-half - c.arg()).max(-half);
    let hi = s_hi.min(half - c.arg()).min(half);
    // Stay clear of the zeros of sinh near the sector edges.
    let margin = (0.25 * (hi - lo)).max(0.5 * PROMOTOR_RAY_MARGIN);
    if lo < -margin && hi > margin && decay_at(0.0) > 0.0 {
        return Ok(PromotorRay { angle: 0.0, decay: decay_at(0.0) });
    }
    let angle = 0.5 * (lo + hi);
    if !(hi - lo > PROMOTOR_RAY_MARGIN) || !(decay_at(angle) > 0.0) {
        return Err(Error::NonConvergence {
            op: "promotor_time_integral",
            detail: format!(
                "no convergent ray: decay rate {c}, admissible angles ({lo:.4}, {hi:.4}); ζ lies where the \
                 time integral does not represent the kernel"
            ),
        });
    }
    Ok(PromotorRay { angle, decay: decay_at(angle) })
}

/// `g±_ℓ(r'', r'; ζ)` from the time integral of the closed-form promotor.
///
/// Integrates along `τ_E = e^{iφ}τ`, `τ ∈ (0, ∞)`, with `φ = 0` (the Wick-rotated contour)
/// whenever the integrand decays there away from the sector edges, and otherwise the middle of the admissible ray
/// sector (decaying integrand, no singularities crossed); by analyticity every such ray gives the same value.
pub fn promotor_time_integral(
    r_out: f64,
    r_in: f64,
    zeta: Complex64,
    ch: Channel,
    sector: Sign,
    ms: &ModelSpec,
    p: &PhysicalParams,
) -> Result<Complex64> {
    Ok(promotor_time_integral_with_ray(r_out, r_in, zeta, ch, sector, ms, p)?.0)
}

/// As [`promotor_time_integral`], also returning the ray used.
pub fn promotor_time_integral_with_ray(
    r_out: f64,
    r_in: f64,
    zeta: Complex64,
    ch: Channel,
    sector: Sign,
    ms: &ModelSpec,
    p: &PhysicalParams,
) -> Result<(Complex64, PromotorRay)> {
    let (form, pref) = promotor_form(r_out, r_in, zeta, ch, sector, ms, p)?;
    let ray = choose_ray(&form)?;
    let dir = Complex64::from_polar(1.0, ray.angle);
    let f = |tau: f64| -> Complex64 {
        if tau <= 0.0 {
            return ZERO;
        }
        match form.log_value(dir * tau) {
            Ok(lv) if lv.re < -745.0 => ZERO,
            Ok(lv) => dir * lv.exp(),
            Err(_) => Complex64::new(f64::NAN, 0.0),
        }
    };
    let fail = |detail: String| Error::NonConvergence {
        op: "promotor_time_integral",
        detail: format!("ray angle {:.4}, decay {:.3e}: {detail}", ray.angle, ray.decay),
    };
    let value = if ray.angle == 0.0 {
        match exp_sinh(f, PROMOTOR_QUAD_REL_TOL) {
            Ok(v) => v,
            Err(first) => adaptive_gk_semi_infinite(f, 0.0, PROMOTOR_QUAD_REL_TOL, 0.0)
                .map(|q| q.value)
                .map_err(|second| fail(format!("{first}; fallback: {second}")))?,
        }
    } else {
        // Rotated rays pass near the zeros of sinh: integrate piecewise up to the
        // exponential-tail cutoff.
        let tau_cut = PROMOTOR_TAIL_EXPONENT / ray.decay;
        let period = if form.w == ZERO { tau_cut } else { std::f64::consts::PI / form.w.norm() };
        let pieces = ((tau_cut / period).ceil() as usize).clamp(1, PROMOTOR_MAX_PIECES);
        let width = tau_cut / pieces as f64;
        let mut total = ZERO;
        for k in 0..pieces {
            let q = adaptive_gk(f, k as f64 * width, (k + 1) as f64 * width, PROMOTOR_QUAD_REL_TOL, 0.0)
                .map_err(|e| fail(e.to_string()))?;
            total += q.value;
        }
        total
    };
    Ok((value * pref, ray))
}

/// The Laplace-type identity behind the closed-form kernels:
/// `∫_0^∞ dτ e^{2ντ}/sinh τ · exp(−(a+b)/2 coth τ) I_{2ρ}(√(ab)/sinh τ)
///  = Γ(1/2 + ρ − ν) / (√(ab) Γ(1 + 2ρ)) · W_{ν,ρ}(a) M_{ν,ρ}(b)` for `a > b > 0`.
///
/// Returns `(quadrature, closed form)`; `2ρ` must be a non-negative integer or half-integer.
pub fn laplace_whittaker_identity(nu: f64, twice_rho: u32, a: f64, b: f64) -> Result<(Complex64, Complex64)> {
    if !(a > b && b > 0.0) {
        return Err(domain("laplace_whittaker_identity", "need a > b > 0"));
    }
    let rho = twice_rho as f64 / 2.0;
    if nu >= rho + 0.5 {
        return Err(domain("laplace_whittaker_identity", "need ν < ρ + 1/2 for convergence"));
    }
    // I_{2ρ} with 2ρ doubled gives the stored order 4ρ.
    let form = OscForm {
        w: Complex64::new(1.0, 0.0),
        m_over_hbar: 1.0,
        a: a.sqrt(),
        b: b.sqrt(),
        order: Order(2 * twice_rho),
        phase_rate: Complex64::new(2.0 * nu, 0.0),
    };
    let f = |tau: f64| -> Complex64 {
        if tau <= 0.0 {
            return ZERO;
        }
        match form.log_value(Complex64::new(tau, 0.0)) {
            Ok(lv) if lv.re < -745.0 => ZERO,
            // The form carries √(ab)^{1/2}·k; divide it out.
            Ok(lv) => (lv - 0.5 * (a * b).sqrt().ln()).exp(),
            Err(_) => Complex64::new(f64::NAN, 0.0),
        }
    };
    let quad = exp_sinh(f, PROMOTOR_QUAD_REL_TOL)?;
    let nu_c = Complex64::new(nu, 0.0);
    let rho_c = Complex64::new(rho, 0.0);
    let lg = ln_gamma_complex(Complex64::new(0.5 + rho - nu, 0.0))? - ln_gamma_complex(Complex64::new(1.0 + 2.0 * rho, 0.0))?;
    let closed = lg.exp() / (a * b).sqrt()
        * whittaker_w(nu_c, rho_c, Complex64::new(a, 0.0))?
        * whittaker_m(nu_c, rho_c, Complex64::new(b, 0.0))?;
    Ok((quad, closed))
}

/// Time integral vs closed-form kernel at `sets` randomized parameter sets drawn from a
/// seeded ChaCha8 stream: `r'', r' ∈ [0.2, 2.5]·length scale`, `2j ∈ {1, 3, 5}`, both σ and
/// sectors, `Re ζ ∈ [−1, 8]·mc²`, `Im ζ ∈ [0.05, 2]·mc²`.
pub fn promotor_randomized_check(ms: &ModelSpec, sets: usize, seed: u64, p: &PhysicalParams) -> Result<VerificationReport> {
    ms.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (len, e2) = (ms.length_scale(p), p.mc2() * p.mc2());
    let sign = |b: bool| if b { Sign::Plus } else { Sign::Minus };
    let mut report = VerificationReport::new(format!("promotor/{}/randomized", ms.name()));
    report.input("model", ms).input("sets", sets).input("seed", seed);
    for k in 0..sets {
        let r_out = len * rng.gen_range(0.2..2.5);
        let r_in = len * rng.gen_range(0.2..2.5);
        let twice_j = [1, 3, 5][rng.gen_range(0..3)];
        let ch = Channel::radial(twice_j, sign(rng.gen_bool(0.5)))?;
        let sector = sign(rng.gen_bool(0.5));
        let zeta = Complex64::new(e2 * rng.gen_range(-1.0..8.0), e2 * rng.gen_range(0.05..2.0));
        let quad = promotor_time_integral(r_out, r_in, zeta, ch, sector, ms, p)?;
        let exact = radial_kernel(ms, &ResolventQuery::new(zeta, r_out, r_in, ch, sector)?, p)?;
        report.check(
            format!(
                "set {k}: r''={r_out:.4}, r'={r_in:.4}, j={twice_j}/2, sigma={}, sector={sector}, zeta={:.4}{:+.4}i",
                ch.sigma, zeta.re, zeta.im
            ),
            (quad - exact).norm() / exact.norm(),
            PROMOTOR_RANDOM_TOL,
        );
    }
    Ok(report)
}
