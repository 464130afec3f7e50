//! Iterated-resolvent kernels `g±(ζ)`, partial-wave sums and Dirac Green's functions
//! `G(z) = (H_D + z) g(z²)`.
//!
//! Radial kernels are Green's functions of `2mc² H±_SUSY - ζ` in the `u = rR` measure; the
//! 3D sector kernel is `Σ g_ℓ(r'', r') / (r'' r') φ(Ω'') φ(Ω')†`. Branches: `Im μ >= 0` and
//! `Re Ω > 0` (physical sheet).

use num_complex::Complex64;

use crate::angular::{spin_spherical_harmonic, Channel, Sign};
use crate::consts::{KERNEL_POLE_TOL, MIN_SEPARATION};
use crate::error::{domain, Error, Result};
use crate::specialfn::{
    bessel_i_half_order_scaled, bessel_k_half_order_scaled, ln_gamma_complex, whittaker_m, whittaker_w,
    HalfIntOrder,
};
use crate::susy_core::{ModelSpec, PhysicalParams, Superpotential};

pub type Vec3 = [f64; 3];
pub type Mat2 = [[Complex64; 2]; 2];
pub type Mat4 = [[Complex64; 4]; 4];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// One radial kernel evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolventQuery {
    pub zeta: Complex64,
    pub r_out: f64,
    pub r_in: f64,
    pub ch: Channel,
    pub sector: Sign,
}

impl ResolventQuery {
    pub fn new(zeta: Complex64, r_out: f64, r_in: f64, ch: Channel, sector: Sign) -> Result<Self> {
        if !(r_out > 0.0 && r_in > 0.0 && r_out.is_finite() && r_in.is_finite()) {
            return Err(domain("ResolventQuery", format!("radii must be positive, got {r_out}, {r_in}")));
        }
        if !(zeta.re.is_finite() && zeta.im.is_finite()) {
            return Err(domain("ResolventQuery", "non-finite ζ"));
        }
        Ok(Self { zeta, r_out, r_in, ch, sector })
    }

    pub fn r_greater(&self) -> f64 {
        self.r_out.max(self.r_in)
    }
    pub fn r_less(&self) -> f64 {
        self.r_out.min(self.r_in)
    }
}

/// Derived kernel parameters. Oscillator: `μ±²`, `ν± = μ±²/4mωħ`, `ρ = ℓ/2 + 1/4`.
/// Linear: `Ω = (2/m) sqrt(ħ²γ² - μ²)`, `ν± = ±2ħγκ/Ωm`, `ρ = ℓ + 1/2`, `Λ = 2ℓ + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    pub mu: Complex64,
    pub nu: Complex64,
    pub rho: f64,
    pub lambda: Option<f64>,
    pub omega: Option<Complex64>,
    pub mu_pm_sq: Option<Complex64>,
}

impl KernelParams {
    pub fn oscillator(q: &ResolventQuery, omega: f64, p: &PhysicalParams) -> Self {
        let mu = mu_of_zeta(q.zeta, p);
        let shift = 2.0 * p.m * p.hbar * omega * (q.ch.kappa() as f64 + 0.5);
        let mu_pm_sq = mu * mu + q.sector.as_f64() * shift;
        Self {
            mu,
            nu: mu_pm_sq / (4.0 * p.m * omega * p.hbar),
            rho: q.ch.l() as f64 / 2.0 + 0.25,
            lambda: None,
            omega: None,
            mu_pm_sq: Some(mu_pm_sq),
        }
    }

    pub fn linear(q: &ResolventQuery, gamma: f64, p: &PhysicalParams) -> Result<Self> {
        let mu = mu_of_zeta(q.zeta, p);
        let w = Complex64::new((p.hbar * gamma).powi(2), 0.0) - mu * mu;
        if w.re < 0.0 && w.im.abs() <= 1e-14 * w.norm() {
            return Err(Error::BranchCut {
                op: "linear_radial_kernel",
                detail: format!("ħ²γ² - μ² = {w} is real negative (ζ = {} on the continuum)", q.zeta),
            });
        }
        let big_omega = w.sqrt() * (2.0 / p.m);
        let l = q.ch.l() as f64;
        Ok(Self {
            mu,
            nu: q.sector.as_f64() * 2.0 * p.hbar * gamma * q.ch.kappa() as f64 / (big_omega * p.m),
            rho: l + 0.5,
            lambda: Some(2.0 * l + 0.5),
            omega: Some(big_omega),
            mu_pm_sq: None,
        })
    }
}

/// `μ(ζ) = sqrt(ζ/c² - m²c²)` on the branch `Im μ >= 0` (positive for real `ζ > m²c⁴`).
pub fn mu_of_zeta(zeta: Complex64, p: &PhysicalParams) -> Complex64 {
    let mc = p.m * p.c;
    let s = (zeta / (p.c * p.c) - mc * mc).sqrt();
    if s.im < 0.0 || (s.im == 0.0 && s.re < 0.0) {
        -s
    } else {
        s
    }
}

fn separation(a: Vec3, b: Vec3) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

fn check_separation(a: Vec3, b: Vec3, length: f64) -> Result<f64> {
    let d = separation(a, b);
    if d < MIN_SEPARATION * length {
        return Err(Error::CoincidentPoints(d));
    }
    Ok(d)
}

/// `exp(iμ|x|/ħ) / (4π|x|(ħc)²)`, the same for both sectors.
pub fn free_iterated_kernel(x_out: Vec3, x_in: Vec3, zeta: Complex64, p: &PhysicalParams) -> Result<Complex64> {
    let d = check_separation(x_out, x_in, p.hbar / (p.m * p.c))?;
    let mu = mu_of_zeta(zeta, p);
    Ok((I * mu * d / p.hbar).exp() / (4.0 * std::f64::consts::PI * d * (p.hbar * p.c).powi(2)))
}

/// Free partial-wave kernel `sqrt(r''r') I_{ℓ+1/2}(s r<) K_{ℓ+1/2}(s r>) / (ħc)²`, `s = -iμ/ħ`.
pub fn free_radial_kernel(q: &ResolventQuery, p: &PhysicalParams) -> Result<Complex64> {
    let s = -I * mu_of_zeta(q.zeta, p) / p.hbar;
    let (a, b) = (s * q.r_less(), s * q.r_greater());
    let l = q.ch.l();
    let i_s = bessel_i_half_order_scaled(HalfIntOrder::l_plus_half(l), a)?;
    let k_s = bessel_k_half_order_scaled(l, b)?;
    Ok((q.r_out * q.r_in).sqrt() * i_s * k_s * (a - b).exp() / (p.hbar * p.c).powi(2))
}

fn check_pole(a: Complex64, op: &'static str) -> Result<()> {
    if a.re < 0.5 {
        let n = (-a.re).round().max(0.0);
        let distance = (a + n).norm();
        if distance < KERNEL_POLE_TOL {
            return Err(Error::PoleProximity { op, n: n as i64, distance });
        }
    }
    Ok(())
}

/// Oscillator kernel `Γ(ρ-ν+1/2) W_{ν,ρ}(β r>²) M_{ν,ρ}(β r<²) / (2mc²ħω sqrt(r''r') Γ(1+2ρ))`,
/// `β = mω/ħ`.
pub fn oscillator_radial_kernel(q: &ResolventQuery, omega: f64, p: &PhysicalParams) -> Result<Complex64> {
    if !(omega > 0.0) {
        return Err(domain("oscillator_radial_kernel", format!("ω = {omega} must be positive")));
    }
    let kp = KernelParams::oscillator(q, omega, p);
    let a = kp.rho - kp.nu + 0.5;
    check_pole(a, "oscillator_radial_kernel")?;
    let beta = p.m * omega / p.hbar;
    let rho = Complex64::new(kp.rho, 0.0);
    let w = whittaker_w(kp.nu, rho, Complex64::new(beta * q.r_greater().powi(2), 0.0))?;
    let m = whittaker_m(kp.nu, rho, Complex64::new(beta * q.r_less().powi(2), 0.0))?;
    let ratio = (ln_gamma_complex(a)? - ln_gamma_complex(Complex64::new(1.0 + 2.0 * kp.rho, 0.0))?).exp();
    Ok(ratio * w * m / (2.0 * p.mc2() * p.hbar * omega * (q.r_out * q.r_in).sqrt()))
}

/// Linear-superpotential (Coulomb-type) kernel
/// `Γ(ρ-ν+1/2) W_{ν,ρ}(r> mΩ/ħ) M_{ν,ρ}(r< mΩ/ħ) / (mc²ħΩ Γ(1+2ρ))`.
pub fn linear_radial_kernel(q: &ResolventQuery, gamma: f64, p: &PhysicalParams) -> Result<Complex64> {
    if !(gamma > 0.0) {
        return Err(domain("linear_radial_kernel", format!("γ = {gamma} must be positive")));
    }
    let kp = KernelParams::linear(q, gamma, p)?;
    let big_omega = kp.omega.unwrap_or(ZERO);
    let a = kp.rho - kp.nu + 0.5;
    check_pole(a, "linear_radial_kernel")?;
    let k = big_omega * p.m / p.hbar;
    let rho = Complex64::new(kp.rho, 0.0);
    let w = whittaker_w(kp.nu, rho, k * q.r_greater())?;
    let m = whittaker_m(kp.nu, rho, k * q.r_less())?;
    let ratio = (ln_gamma_complex(a)? - ln_gamma_complex(Complex64::new(1.0 + 2.0 * kp.rho, 0.0))?).exp();
    Ok(ratio * w * m / (p.mc2() * p.hbar * big_omega))
}

/// Radial kernel of the model's `H^{sector}_SUSY` (free kernels for both free models).
pub fn radial_kernel(ms: &ModelSpec, q: &ResolventQuery, p: &PhysicalParams) -> Result<Complex64> {
    match ms {
        ModelSpec::FreeDirac | ModelSpec::FreeDiracBrokenSusy => free_radial_kernel(q, p),
        ModelSpec::DiracOscillator { omega } => oscillator_radial_kernel(q, *omega, p),
        ModelSpec::LinearSuperpotential { gamma } => linear_radial_kernel(q, *gamma, p),
        _ => Err(domain("radial_kernel", format!("no closed-form kernel for {}", ms.name()))),
    }
}

/// Oscillator kernel pole `ζ_n` (solution of `ν± = n + ρ + 1/2`).
pub fn oscillator_kernel_pole(ch: Channel, sector: Sign, n: u32, omega: f64, p: &PhysicalParams) -> f64 {
    let rho = ch.l() as f64 / 2.0 + 0.25;
    let mu_pm_sq = 4.0 * p.m * omega * p.hbar * (n as f64 + rho + 0.5);
    let mu_sq = mu_pm_sq - sector.as_f64() * 2.0 * p.m * p.hbar * omega * (ch.kappa() as f64 + 0.5);
    p.c * p.c * (mu_sq + (p.m * p.c).powi(2))
}

/// Linear kernel pole `ζ_n` (solution of `ν± = n + ℓ + 1`), or `None` when `±κ < 0`.
pub fn linear_kernel_pole(ch: Channel, sector: Sign, n: u32, gamma: f64, p: &PhysicalParams) -> Option<f64> {
    let sk = sector.as_f64() * ch.kappa() as f64;
    if sk <= 0.0 {
        return None;
    }
    let q = gamma * sk / (n + ch.l() + 1) as f64;
    let mu_sq = p.hbar * p.hbar * (gamma * gamma - q * q);
    Some(p.c * p.c * (mu_sq + (p.m * p.c).powi(2)))
}

fn spherical_angles(x: Vec3) -> (f64, f64, f64) {
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let theta = if r > 0.0 { (x[2] / r).clamp(-1.0, 1.0).acos() } else { 0.0 };
    (r, theta, x[1].atan2(x[0]))
}

/// Truncated partial-wave sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialWaveSum {
    pub matrix: Mat2,
    /// Estimated norm of the omitted shells (geometric extrapolation of the last two).
    pub tail_estimate: f64,
}

fn frobenius2(m: &Mat2) -> f64 {
    m.iter().flatten().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

/// `Σ_{j <= j_max, σ, m_j} g_ℓ(r'', r') / (r''r') φ(Ω'') φ(Ω')†` for a per-channel radial kernel
/// `(ch, r'', r') ↦ g`. With `rel_tol`, a tail estimate above `rel_tol·|sum|` is a
/// non-convergence error.
pub fn assemble_partial_waves(
    kernel: &dyn Fn(Channel, f64, f64) -> Result<Complex64>,
    x_out: Vec3,
    x_in: Vec3,
    twice_j_max: u32,
    rel_tol: Option<f64>,
) -> Result<PartialWaveSum> {
    let (r2, t2, f2) = spherical_angles(x_out);
    let (r1, t1, f1) = spherical_angles(x_in);
    if !(r2 > 0.0 && r1 > 0.0) {
        return Err(domain("assemble_partial_waves", "points must avoid the origin"));
    }
    let d = separation(x_out, x_in);
    if d < MIN_SEPARATION * r1.max(r2) {
        return Err(Error::CoincidentPoints(d));
    }
    let mut total = [[ZERO; 2]; 2];
    let mut shells = Vec::new();
    for tj in (1..=twice_j_max).step_by(2) {
        let mut shell = [[ZERO; 2]; 2];
        for sigma in [Sign::Plus, Sign::Minus] {
            let ch = Channel::radial(tj, sigma)?;
            let g = kernel(ch, r2, r1)? / (r2 * r1);
            for tmj in (-(tj as i32)..=tj as i32).step_by(2) {
                let c = Channel::new(tj, tmj, sigma)?;
                let a = spin_spherical_harmonic(c, t2, f2);
                let b = spin_spherical_harmonic(c, t1, f1);
                let (av, bv) = ([a.up, a.down], [b.up, b.down]);
                for i in 0..2 {
                    for k in 0..2 {
                        shell[i][k] += g * av[i] * bv[k].conj();
                    }
                }
            }
        }
        for i in 0..2 {
            for k in 0..2 {
                total[i][k] += shell[i][k];
            }
        }
        shells.push(frobenius2(&shell));
    }
    let tail_estimate = match shells.as_slice() {
        [.., prev, last] if *prev > *last && *last > 0.0 => {
            let q = last / prev;
            last * q / (1.0 - q)
        }
        [.., last] => *last,
        [] => 0.0,
    };
    if let Some(tol) = rel_tol {
        let scale = frobenius2(&total);
        if tail_estimate > tol * scale {
            return Err(Error::NonConvergence {
                op: "assemble_partial_waves",
                detail: format!("tail estimate {tail_estimate:.2e} exceeds {tol:.1e} of |sum| = {scale:.3e}"),
            });
        }
    }
    Ok(PartialWaveSum { matrix: total, tail_estimate })
}

fn pauli() -> [Mat2; 3] {
    let o = Complex64::new(1.0, 0.0);
    [
        [[ZERO, o], [o, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[o, ZERO], [ZERO, -o]],
    ]
}

fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for i in 0..2 {
        for k in 0..2 {
            out[i][k] = a[i][0] * b[0][k] + a[i][1] * b[1][k];
        }
    }
    out
}

fn set_block(m: &mut Mat4, row: usize, col: usize, b: &Mat2) {
    for i in 0..2 {
        for k in 0..2 {
            m[row + i][col + k] = b[i][k];
        }
    }
}

/// Closed-form free Dirac Green's function
/// `[iħc α·x/|x|² + cμ α·x/|x| + β M0 + z] g(z²)` in the standard representation.
pub fn free_dirac_green(x_out: Vec3, x_in: Vec3, z: Complex64, p: &PhysicalParams) -> Result<Mat4> {
    let g = free_iterated_kernel(x_out, x_in, z * z, p)?;
    let x = [x_out[0] - x_in[0], x_out[1] - x_in[1], x_out[2] - x_in[2]];
    let d = separation(x_out, x_in);
    let mu = mu_of_zeta(z * z, p);
    let coef = I * p.hbar * p.c / (d * d) + p.c * mu / d;
    let s = pauli();
    let mut off = [[ZERO; 2]; 2];
    for (k, sk) in s.iter().enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                off[i][j] += sk[i][j] * x[k] * coef * g;
            }
        }
    }
    let m0 = p.rest_energy();
    let mut out = [[ZERO; 4]; 4];
    let diag_u = [[(z + m0) * g, ZERO], [ZERO, (z + m0) * g]];
    let diag_l = [[(z - m0) * g, ZERO], [ZERO, (z - m0) * g]];
    set_block(&mut out, 0, 0, &diag_u);
    set_block(&mut out, 0, 2, &off);
    set_block(&mut out, 2, 0, &off);
    set_block(&mut out, 2, 2, &diag_l);
    Ok(out)
}

/// 2×2 sector kernel evaluator `(x'', x') ↦ g±`.
pub type SectorKernel = Box<dyn Fn(Vec3, Vec3) -> Result<Mat2> + Send + Sync>;

/// Dirac Green's function assembled from sector kernels: diagonal blocks `(z ± M0) g±`,
/// off-diagonal `D(r'') g-` and `D†(r'') g+` by 4th-order differences in `r''`.
pub struct DiracGreen {
    g_plus: SectorKernel,
    g_minus: SectorKernel,
    z: Complex64,
    m0: f64,
    hbar_c: f64,
    superpotential: Option<Superpotential>,
    /// Channel-diagonal constant in `D` (`-imc²` for the broken free model).
    d_const: Complex64,
    step: f64,
}

/// Builds the Dirac Green's function evaluator of model `ms` at energy `z`.
pub fn dirac_green_blocks(
    g_plus: SectorKernel,
    g_minus: SectorKernel,
    z: Complex64,
    ms: &ModelSpec,
    p: &PhysicalParams,
) -> Result<DiracGreen> {
    if !ms.is_spherical() {
        return Err(domain("dirac_green_blocks", "spherical models only"));
    }
    let d_const = match ms {
        ModelSpec::FreeDiracBrokenSusy => Complex64::new(0.0, -p.mc2()),
        _ => ZERO,
    };
    Ok(DiracGreen {
        g_plus,
        g_minus,
        z,
        m0: ms.rest_energy(p),
        hbar_c: p.hbar * p.c,
        superpotential: ms.superpotential(p),
        d_const,
        step: 1e-3 * ms.length_scale(p),
    })
}

impl DiracGreen {
    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// `D(r'') g-` (or `D†(r'') g+`) at `(x'', x')`.
    fn first_order(&self, dagger: bool, x_out: Vec3, x_in: Vec3) -> Result<Mat2> {
        let g: &SectorKernel = if dagger { &self.g_plus } else { &self.g_minus };
        let h = self.step;
        let s = pauli();
        let mut acc = [[ZERO; 2]; 2];
        for (k, sk) in s.iter().enumerate() {
            let at = |t: f64| -> Result<Mat2> {
                let mut x = x_out;
                x[k] += t;
                g(x, x_in)
            };
            let (m2, m1, p1, p2) = (at(-2.0 * h)?, at(-h)?, at(h)?, at(2.0 * h)?);
            let mut grad = [[ZERO; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    grad[i][j] = (m2[i][j] - 8.0 * m1[i][j] + 8.0 * p1[i][j] - p2[i][j]) / (12.0 * h);
                }
            }
            let t = mat2_mul(sk, &grad);
            for i in 0..2 {
                for j in 0..2 {
                    acc[i][j] += -I * self.hbar_c * t[i][j];
                }
            }
        }
        let center = g(x_out, x_in)?;
        let (r, _, _) = spherical_angles(x_out);
        let du = self.superpotential.as_ref().map_or(0.0, |s| s.du(r));
        let sign = if dagger { -1.0 } else { 1.0 };
        let c = if dagger { self.d_const.conj() } else { self.d_const };
        if du != 0.0 && r > 0.0 {
            let mut ser = [[ZERO; 2]; 2];
            for (k, sk) in s.iter().enumerate() {
                for i in 0..2 {
                    for j in 0..2 {
                        ser[i][j] += sk[i][j] * (x_out[k] / r);
                    }
                }
            }
            let t = mat2_mul(&ser, &center);
            for i in 0..2 {
                for j in 0..2 {
                    acc[i][j] += sign * I * self.hbar_c * du * t[i][j];
                }
            }
        }
        for i in 0..2 {
            for j in 0..2 {
                acc[i][j] += c * center[i][j];
            }
        }
        Ok(acc)
    }

    /// The 4×4 kernel at `(x'', x')`.
    pub fn eval(&self, x_out: Vec3, x_in: Vec3) -> Result<Mat4> {
        let d = separation(x_out, x_in);
        if d < 10.0 * self.step {
            return Err(Error::Grid {
                op: "dirac_green_blocks",
                detail: format!("separation {d:.3e} is within the differentiation stencil ({:.1e})", self.step),
            });
        }
        let gp = (self.g_plus)(x_out, x_in)?;
        let gm = (self.g_minus)(x_out, x_in)?;
        let mut out = [[ZERO; 4]; 4];
        let scale = |m: &Mat2, f: Complex64| -> Mat2 { [[m[0][0] * f, m[0][1] * f], [m[1][0] * f, m[1][1] * f]] };
        set_block(&mut out, 0, 0, &scale(&gp, self.z + self.m0));
        set_block(&mut out, 2, 2, &scale(&gm, self.z - self.m0));
        set_block(&mut out, 0, 2, &self.first_order(false, x_out, x_in)?);
        set_block(&mut out, 2, 0, &self.first_order(true, x_out, x_in)?);
        Ok(out)
    }
}

/// Sector kernel of a model as a truncated partial-wave sum.
pub fn partial_wave_sector_kernel(
    ms: &ModelSpec,
    sector: Sign,
    zeta: Complex64,
    twice_j_max: u32,
    p: &PhysicalParams,
) -> SectorKernel {
    let ms = ms.clone();
    let p = *p;
    Box::new(move |x_out, x_in| {
        let k = |ch: Channel, r2: f64, r1: f64| {
            radial_kernel(&ms, &ResolventQuery::new(zeta, r2, r1, ch, sector)?, &p)
        };
        Ok(assemble_partial_waves(&k, x_out, x_in, twice_j_max, None)?.matrix)
    })
}

/// Free sector kernel `g(x'', x') 1₂` in closed form.
pub fn free_sector_kernel(zeta: Complex64, p: &PhysicalParams) -> SectorKernel {
    let p = *p;
    Box::new(move |x_out, x_in| {
        let g = free_iterated_kernel(x_out, x_in, zeta, &p)?;
        Ok([[g, ZERO], [ZERO, g]])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat() -> PhysicalParams {
        PhysicalParams::natural()
    }

    #[test]
    fn mu_branches() {
        let p = nat();
        assert_eq!(mu_of_zeta(Complex64::new(1.0, 0.0), &p), ZERO);
        assert!((mu_of_zeta(ZERO, &p) - I).norm() < 1e-15);
        assert!((mu_of_zeta(Complex64::new(2.0, 0.0), &p) - 1.0).norm() < 1e-15);
        assert!(mu_of_zeta(Complex64::new(0.3, -0.4), &p).im >= 0.0);
    }

    #[test]
    fn free_kernel_yukawa() {
        let g = free_iterated_kernel([0.0; 3], [1.0, 0.0, 0.0], ZERO, &nat()).unwrap();
        assert!((g.re - (-1f64).exp() / (4.0 * std::f64::consts::PI)).abs() < 1e-15);
        assert!(matches!(
            free_iterated_kernel([0.5; 3], [0.5; 3], ZERO, &nat()),
            Err(Error::CoincidentPoints(_))
        ));
    }

    #[test]
    fn oscillator_kernel_value() {
        let ch = Channel::radial(1, Sign::Plus).unwrap();
        let q = ResolventQuery::new(Complex64::new(0.3, 0.4), 1.2, 0.7, ch, Sign::Plus).unwrap();
        let g = oscillator_radial_kernel(&q, 1.0, &nat()).unwrap();
        let expect = Complex64::new(0.7306780416703917, 0.4433037017668377);
        assert!((g - expect).norm() < 1e-12 * expect.norm(), "{g}");
        let swapped = ResolventQuery::new(q.zeta, 0.7, 1.2, ch, Sign::Plus).unwrap();
        assert_eq!(oscillator_radial_kernel(&swapped, 1.0, &nat()).unwrap(), g);
    }

    #[test]
    fn linear_kernel_value() {
        let ch = Channel::radial(1, Sign::Plus).unwrap();
        let q = ResolventQuery::new(Complex64::new(0.3, 0.4), 1.2, 0.7, ch, Sign::Plus).unwrap();
        let g = linear_radial_kernel(&q, 1.0, &nat()).unwrap();
        let expect = Complex64::new(0.5911502058965, 0.3292718810673);
        assert!((g - expect).norm() < 1e-11 * expect.norm(), "{g}");
        let cut = ResolventQuery::new(Complex64::new(3.0, 0.0), 1.2, 0.7, ch, Sign::Plus).unwrap();
        assert!(matches!(linear_radial_kernel(&cut, 1.0, &nat()), Err(Error::BranchCut { .. })));
    }

    #[test]
    fn kernel_poles() {
        let p = nat();
        let ch = Channel::radial(1, Sign::Plus).unwrap();
        for n in 0..3 {
            assert!((oscillator_kernel_pole(ch, Sign::Plus, n, 1.0, &p) - (1.0 + 4.0 * n as f64)).abs() < 1e-14);
        }
        let z1 = linear_kernel_pole(ch, Sign::Plus, 1, 1.0, &p).unwrap();
        assert!((z1 - 1.75).abs() < 1e-15);
        let z2 = linear_kernel_pole(ch, Sign::Plus, 2, 1.0, &p).unwrap();
        assert!((z2 - (2.0 - 1.0 / 9.0)).abs() < 1e-15);
        assert!(linear_kernel_pole(ch.flipped(), Sign::Plus, 0, 1.0, &p).is_none());
        let q = ResolventQuery::new(Complex64::new(5.0, 0.0), 1.0, 0.5, ch, Sign::Plus).unwrap();
        assert!(matches!(oscillator_radial_kernel(&q, 1.0, &p), Err(Error::PoleProximity { n: 1, .. })));
    }
}
