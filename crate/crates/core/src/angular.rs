//! Spin spherical harmonics and the spin-orbit operator.
//!
//! Half-integers are stored doubled (`twice_j`, `twice_mj`) so channel arithmetic is exact.

use std::fmt;

use num_complex::{Complex, Complex64};

use crate::error::{domain, Result};
use crate::numerics::quadrature::gauss_legendre;
use crate::scalar::Real;
use crate::specialfn::spherical_harmonic;

/// A ±1 label: spin-orbit sign σ, SUSY sector, or energy branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_i32(s: i32) -> Option<Self> {
        match s {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Angular channel `(j, m_j, σ)` with `j = l + σ/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Channel {
    pub twice_j: u32,
    pub twice_mj: i32,
    pub sigma: Sign,
}

impl Channel {
    pub fn new(twice_j: u32, twice_mj: i32, sigma: Sign) -> Result<Self> {
        if twice_j % 2 != 1 {
            return Err(domain("Channel", format!("2j = {twice_j} is not odd")));
        }
        if twice_mj.unsigned_abs() > twice_j || twice_mj.rem_euclid(2) != 1 {
            return Err(domain(
                "Channel",
                format!("2m_j = {twice_mj} invalid for 2j = {twice_j}"),
            ));
        }
        Ok(Self {
            twice_j,
            twice_mj,
            sigma,
        })
    }

    /// Channel with `m_j = +1/2`, enough when only radial quantities matter.
    pub fn radial(twice_j: u32, sigma: Sign) -> Result<Self> {
        Self::new(twice_j, 1, sigma)
    }

    /// Channel whose orbital quantum number is `l` (`j = l + σ/2`).
    pub fn from_l(l: u32, sigma: Sign, twice_mj: i32) -> Result<Self> {
        let twice_j = 2 * l as i64 + sigma.value() as i64;
        if twice_j < 1 {
            return Err(domain("Channel", format!("l = {l} with σ = {sigma} gives j < 1/2")));
        }
        Self::new(twice_j as u32, twice_mj, sigma)
    }

    pub fn j(&self) -> f64 {
        self.twice_j as f64 / 2.0
    }

    pub fn mj(&self) -> f64 {
        self.twice_mj as f64 / 2.0
    }

    /// Orbital angular momentum `l = j - σ/2`.
    pub fn l(&self) -> u32 {
        ((self.twice_j as i32 - self.sigma.value()) / 2) as u32
    }

    /// Spin-orbit eigenvalue `κ = σ(j + 1/2)`.
    pub fn kappa(&self) -> i32 {
        self.sigma.value() * (self.twice_j as i32 + 1) / 2
    }

    /// Same `(j, m_j)`, opposite σ.
    pub fn flipped(&self) -> Self {
        Self {
            sigma: self.sigma.flip(),
            ..*self
        }
    }

    pub fn with_sigma(&self, sigma: Sign) -> Self {
        Self { sigma, ..*self }
    }

    /// Degeneracy in `m_j`.
    pub fn multiplicity(&self) -> u32 {
        self.twice_j + 1
    }

    /// All channels with `j <= j_max` (doubled) and both σ, for the given `m_j`.
    pub fn enumerate(twice_j_max: u32, twice_mj: i32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut tj = 1;
        while tj <= twice_j_max {
            if twice_mj.unsigned_abs() <= tj {
                for s in [Sign::Plus, Sign::Minus] {
                    out.push(Self {
                        twice_j: tj,
                        twice_mj,
                        sigma: s,
                    });
                }
            }
            tj += 2;
        }
        out
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "j={}/2 mj={}/2 sigma={}",
            self.twice_j, self.twice_mj, self.sigma
        )
    }
}

/// Two-component spinor value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor2<T: Real = f64> {
    pub up: Complex<T>,
    pub down: Complex<T>,
}

impl<T: Real> Spinor2<T> {
    pub fn new(up: Complex<T>, down: Complex<T>) -> Self {
        Self { up, down }
    }

    pub fn zero() -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self { up: z, down: z }
    }

    /// `⟨self, other⟩ = self† other`.
    pub fn dot(&self, other: &Self) -> Complex<T> {
        self.up.conj() * other.up + self.down.conj() * other.down
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            up: self.up * s,
            down: self.down * s,
        }
    }

    pub fn norm_sqr(&self) -> T {
        self.up.norm_sqr() + self.down.norm_sqr()
    }
}

/// Spin spherical harmonic `φ^{(σ)}_{j m_j}(θ, φ)`.
pub fn spin_spherical_harmonic<T: Real>(ch: Channel, theta: T, phi: T) -> Spinor2<T> {
    let l = ch.l();
    let two_l1 = T::int(2 * l as i64 + 1);
    let s = ch.sigma.value() as i64;
    // 2(l + 1/2 ± σ m_j) = 2l + 1 ± σ 2m_j
    let up_w = T::int(2 * l as i64 + 1 + s * ch.twice_mj as i64) / (T::two() * two_l1);
    let down_w = T::int(2 * l as i64 + 1 - s * ch.twice_mj as i64) / (T::two() * two_l1);
    let m_up = (ch.twice_mj - 1) / 2;
    let m_down = (ch.twice_mj + 1) / 2;
    let zero = Complex::new(T::zero(), T::zero());
    let up = if m_up.unsigned_abs() <= l {
        spherical_harmonic(l, m_up, theta, phi).unwrap_or(zero) * up_w.sqrt()
    } else {
        zero
    };
    let down = if m_down.unsigned_abs() <= l {
        spherical_harmonic(l, m_down, theta, phi).unwrap_or(zero) * (down_w.sqrt() * T::int(s))
    } else {
        zero
    };
    Spinor2 { up, down }
}

/// `κ = σ(j + 1/2)`.
pub fn spin_orbit_eigenvalue(ch: Channel) -> i32 {
    ch.kappa()
}

/// Eigenvalue of `K = J² - L² + 1/4` (in units of ħ²) from the quantum numbers, computed in
/// quarter units so it is exact.
pub fn spin_orbit_from_quantum_numbers(ch: Channel) -> i32 {
    let tj = ch.twice_j as i64;
    let l = ch.l() as i64;
    // 4 j(j+1) - 4 l(l+1) + 1
    let quarter = tj * (tj + 2) - 4 * l * (l + 1) + 1;
    (quarter / 4) as i32
}

/// Multiplies by `σ·e_r`.
pub fn apply_sigma_er<T: Real>(s: Spinor2<T>, theta: T, phi: T) -> Spinor2<T> {
    let (st, ct) = (theta.sin(), theta.cos());
    let e_minus = Complex::new(phi.cos(), -phi.sin()) * st;
    let e_plus = Complex::new(phi.cos(), phi.sin()) * st;
    Spinor2 {
        up: s.up * ct + s.down * e_minus,
        down: s.up * e_plus - s.down * ct,
    }
}

/// Angular quadrature on the sphere: Gauss–Legendre in `cos θ` times a uniform φ rule.
pub struct SphereQuadrature {
    pub points: Vec<(f64, f64)>,
    pub weights: Vec<f64>,
}

impl SphereQuadrature {
    pub fn new(n_theta: usize, n_phi: usize) -> Self {
        let (x, w) = gauss_legendre(n_theta);
        let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
        let mut points = Vec::with_capacity(n_theta * n_phi);
        let mut weights = Vec::with_capacity(n_theta * n_phi);
        for (xi, wi) in x.iter().zip(&w) {
            for k in 0..n_phi {
                points.push((xi.acos(), k as f64 * dphi));
                weights.push(wi * dphi);
            }
        }
        Self { points, weights }
    }

    /// Default rule: 64 Gauss–Legendre nodes by 128 azimuthal points.
    pub fn standard() -> Self {
        Self::new(64, 128)
    }

    /// `∫ φ_a† φ_b dΩ`.
    pub fn overlap(&self, a: Channel, b: Channel) -> Complex64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&(t, p), &w)| {
                spin_spherical_harmonic(a, t, p).dot(&spin_spherical_harmonic(b, t, p)) * w
            })
            .sum()
    }
}
