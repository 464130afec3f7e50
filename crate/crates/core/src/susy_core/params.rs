//! Physical parameters and the SUSY ↔ Dirac energy maps.

use crate::consts::THRESHOLD_REL_TOL;
use crate::error::{domain, Result};
use crate::scalar::Real;

/// Mass, rest mass, speed of light and Planck constant. The rest energy is `M0 = m0 c²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams<T: Real = f64> {
    pub m: T,
    pub m0: T,
    pub c: T,
    pub hbar: T,
}

impl<T: Real> Default for PhysicalParams<T> {
    fn default() -> Self {
        Self::natural()
    }
}

impl<T: Real> PhysicalParams<T> {
    /// Natural units `m = m0 = c = ħ = 1`.
    pub fn natural() -> Self {
        Self {
            m: T::one(),
            m0: T::one(),
            c: T::one(),
            hbar: T::one(),
        }
    }

    pub fn new(m: T, m0: T, c: T, hbar: T) -> Result<Self> {
        if !(m > T::zero() && m0 >= T::zero() && c > T::zero() && hbar > T::zero()) {
            return Err(domain(
                "PhysicalParams",
                format!("need m > 0, m0 >= 0, c > 0, ħ > 0; got m={m} m0={m0} c={c} ħ={hbar}"),
            ));
        }
        Ok(Self { m, m0, c, hbar })
    }

    /// Rest energy `M0 = m0 c²`.
    pub fn rest_energy(&self) -> T {
        self.m0 * self.c * self.c
    }

    /// `mc²`.
    pub fn mc2(&self) -> T {
        self.m * self.c * self.c
    }

    /// `a = 1/(2mc²)`.
    pub fn a(&self) -> T {
        T::one() / (T::two() * self.mc2())
    }

    pub fn with_c(&self, c: T) -> Self {
        Self { c, ..*self }
    }
}

/// `ε0 = M0²/(2mc²)`.
pub fn epsilon0<T: Real>(p: &PhysicalParams<T>) -> T {
    let m0 = p.rest_energy();
    m0 * m0 / (T::two() * p.mc2())
}

/// `E = branch · sqrt(2mc² ε)`.
pub fn dirac_energy_from_susy<T: Real>(eps: T, p: &PhysicalParams<T>, branch: i32) -> Result<T> {
    if eps < T::zero() {
        return Err(domain(
            "dirac_energy_from_susy",
            format!("negative SUSY eigenvalue {eps}"),
        ));
    }
    let e = (T::two() * p.mc2() * eps).sqrt();
    Ok(if branch < 0 { -e } else { e })
}

/// Foldy–Wouthuysen mixing coefficients `(c+, c-)` for `ε > ε0 >= 0`.
pub fn fw_mixing_coefficients<T: Real>(eps: T, eps0: T) -> Result<(T, T)> {
    if eps0 < T::zero() || eps <= eps0 {
        return Err(domain(
            "fw_mixing_coefficients",
            format!("need ε > ε0 >= 0; got ε={eps}, ε0={eps0}"),
        ));
    }
    let s = (eps0 / eps).sqrt();
    let norm = (T::two() + T::two() * s).sqrt();
    let c_plus = (T::one() + s) / norm;
    let c_minus = (T::one() - s * s).sqrt() / norm;
    Ok((c_plus, c_minus))
}

/// Whether `eps` equals `eps0` within the relative threshold tolerance.
pub fn at_threshold<T: Real>(eps: T, eps0: T) -> bool {
    (eps - eps0).abs() <= T::lit(THRESHOLD_REL_TOL) * eps0.abs().max(T::min_positive_value())
}
