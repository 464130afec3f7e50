//! Confluent hypergeometric functions and the Whittaker functions `M` and `W`.
//!
//! `M` comes from the Kummer series. `W` comes from Tricomi's `U`, evaluated by its Laplace
//! integral with `Re a` shifted up and stable downward recurrence in `a`. The integral is
//! insensitive to `1 + 2ρ` being an integer, so the logarithmic case needs no special limit;
//! a flag is still reported for callers that want to know.

use num_complex::Complex64;

use crate::consts::{DE_QUAD_REL_TOL, KUMMER_MAX_TERMS, SERIES_REL_TOL, WHITTAKER_LOG_CASE_TOL};
use crate::error::{domain, Error, Result};
use crate::numerics::quadrature::exp_sinh;
use crate::specialfn::gamma::rgamma_complex;

/// Minimum `Re a` at which the Laplace integral for `U` is evaluated directly.
const U_INTEGRAL_MIN_RE_A: f64 = 2.0;

/// Below this `|x|` the connection formula replaces the integral when `b` is not near an
/// integer.
const SMALL_X: f64 = 1.0;

/// Distance of `b` from the integers required by the connection formula.
const MIN_NONINTEGER_B: f64 = 0.05;

fn nonpositive_integer(b: Complex64) -> Option<i64> {
    let n = b.re.round();
    if n <= 0.0 && (b - Complex64::new(n, 0.0)).norm() < 1e-14 {
        Some(n as i64)
    } else {
        None
    }
}

/// Kummer's function `M(a, b, x) = 1F1(a; b; x)`.
pub fn kummer_m(a: Complex64, b: Complex64, x: Complex64) -> Result<Complex64> {
    if let Some(n) = nonpositive_integer(b) {
        return Err(Error::Pole {
            op: "kummer_m",
            location: format!("b = {n}"),
        });
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut peak = 1.0f64;
    for k in 0..KUMMER_MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * x / (kf + 1.0);
        sum += term;
        peak = peak.max(term.norm());
        if term.norm() <= SERIES_REL_TOL * sum.norm() && kf + 1.0 > (a.norm() - b.re).max(x.norm())
        {
            if peak > 1e8 * sum.norm() {
                return Err(Error::NonConvergence {
                    op: "kummer_m",
                    detail: format!(
                        "cancellation: peak term {peak:.3e} vs sum {:.3e} (a = {a}, b = {b}, x = {x})",
                        sum.norm()
                    ),
                });
            }
            return Ok(sum);
        }
        if term.norm() == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        op: "kummer_m",
        detail: format!("{KUMMER_MAX_TERMS} terms exhausted (a = {a}, b = {b}, x = {x})"),
    })
}

/// Laplace integral for `U(a, b, x)`, valid for `Re a > 0`, `Re x > 0`.
fn tricomi_u_integral(a: Complex64, b: Complex64, x: Complex64) -> Result<Complex64> {
    // U = x^{-a}/Γ(a) ∫_0^∞ e^{-s} s^{a-1} (1 + s/x)^{b-a-1} ds
    let e = b - a - 1.0;
    let integrand = |s: f64| {
        let ls = s.ln();
        let w = (1.0 + Complex64::new(s, 0.0) / x).ln();
        ((a - 1.0) * ls + e * w - s).exp()
    };
    let integral = exp_sinh(integrand, DE_QUAD_REL_TOL)?;
    Ok(integral * (-a * x.ln()).exp() * rgamma_complex(a))
}

/// `(-1)^n n! L_n^α(x)` for complex `α`, `x`.
fn polynomial_u(n: usize, alpha: Complex64, x: Complex64) -> Complex64 {
    let mut prev = Complex64::new(1.0, 0.0);
    let mut cur = 1.0 + alpha - x;
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    cur * fact * sign
}

/// Connection formula through two Kummer functions, for non-integer `b` and small `|x|`.
fn tricomi_u_from_m(a: Complex64, b: Complex64, x: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let g1 = crate::specialfn::gamma::gamma_complex(one - b)?;
    let g2 = crate::specialfn::gamma::gamma_complex(b - 1.0)?;
    let t1 = g1 * rgamma_complex(a - b + 1.0) * kummer_m(a, b, x)?;
    let t2 = g2 * rgamma_complex(a) * ((one - b) * x.ln()).exp() * kummer_m(a - b + 1.0, 2.0 - b, x)?;
    Ok(t1 + t2)
}

/// Tricomi's confluent hypergeometric function `U(a, b, x)` for `Re x > 0`.
pub fn tricomi_u(a: Complex64, b: Complex64, x: Complex64) -> Result<Complex64> {
    if x.re <= 0.0 {
        return Err(domain(
            "tricomi_u",
            format!("argument {x} outside the right half-plane"),
        ));
    }
    if let Some(n) = nonpositive_integer(a) {
        // U(-n, α+1, x) = (-1)^n n! L_n^α(x)
        return Ok(polynomial_u(n.unsigned_abs() as usize, b - 1.0, x));
    }
    let frac = (b.re - b.re.round()).abs() + b.im.abs();
    if x.norm() < SMALL_X && frac > MIN_NONINTEGER_B {
        return tricomi_u_from_m(a, b, x);
    }
    if a.re >= U_INTEGRAL_MIN_RE_A {
        return tricomi_u_integral(a, b, x);
    }
    let shift = (U_INTEGRAL_MIN_RE_A - a.re).ceil() as usize;
    let top = a + shift as f64;
    let mut upper = tricomi_u_integral(top + 1.0, b, x)?;
    let mut cur = tricomi_u_integral(top, b, x)?;
    // U(a-1) = -(b - 2a - x) U(a) - a (a - b + 1) U(a+1)
    let mut ak = top;
    for _ in 0..shift {
        let lower = -(b - 2.0 * ak - x) * cur - ak * (ak - b + 1.0) * upper;
        upper = cur;
        cur = lower;
        ak -= 1.0;
    }
    Ok(cur)
}

/// Whittaker `M_{ν,ρ}(x) = e^{-x/2} x^{ρ+1/2} M(ρ-ν+1/2, 1+2ρ, x)`.
pub fn whittaker_m(nu: Complex64, rho: Complex64, x: Complex64) -> Result<Complex64> {
    let b = 1.0 + 2.0 * rho;
    if let Some(n) = nonpositive_integer(b) {
        return Err(Error::Pole {
            op: "whittaker_m",
            location: format!("1 + 2ρ = {n}"),
        });
    }
    let a = rho - nu + 0.5;
    let m = kummer_m(a, b, x)?;
    Ok(m * (-0.5 * x + (rho + 0.5) * x.ln()).exp())
}

/// Value of `W` together with an informational flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerW {
    pub value: Complex64,
    /// `1 + 2ρ` lies within tolerance of an integer (the logarithmic case).
    pub near_log_case: bool,
}

/// Whittaker `W_{ν,ρ}(x) = e^{-x/2} x^{ρ+1/2} U(ρ-ν+1/2, 1+2ρ, x)` with the log-case flag.
pub fn whittaker_w_flagged(nu: Complex64, rho: Complex64, x: Complex64) -> Result<WhittakerW> {
    let b = 1.0 + 2.0 * rho;
    let a = rho - nu + 0.5;
    let u = tricomi_u(a, b, x)?;
    let value = u * (-0.5 * x + (rho + 0.5) * x.ln()).exp();
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::NonConvergence {
            op: "whittaker_w",
            detail: format!("non-finite result for ν = {nu}, ρ = {rho}, x = {x}"),
        });
    }
    let near_log_case = (b - Complex64::new(b.re.round(), 0.0)).norm() < WHITTAKER_LOG_CASE_TOL;
    Ok(WhittakerW {
        value,
        near_log_case,
    })
}

/// Whittaker `W_{ν,ρ}(x)` for `Re x > 0`.
pub fn whittaker_w(nu: Complex64, rho: Complex64, x: Complex64) -> Result<Complex64> {
    whittaker_w_flagged(nu, rho, x).map(|w| w.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn elementary_reductions() {
        let m = whittaker_m(c(0.0, 0.0), c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        assert!(rel(m, c(2.0 * 0.5f64.sinh(), 0.0)) < 1e-14);
        let w = whittaker_w(c(0.0, 0.0), c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        assert!(rel(w, c((-0.5f64).exp(), 0.0)) < 1e-12);
    }

    #[test]
    fn log_case_is_flagged() {
        let w = whittaker_w_flagged(c(0.3, 0.0), c(1.5, 0.0), c(2.0, 0.0)).unwrap();
        assert!(w.near_log_case);
        let w = whittaker_w_flagged(c(0.3, 0.0), c(0.25, 0.0), c(2.0, 0.0)).unwrap();
        assert!(!w.near_log_case);
    }

    #[test]
    fn m_parameter_pole() {
        assert!(matches!(
            whittaker_m(c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn u_left_half_plane_rejected() {
        assert!(tricomi_u(c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)).is_err());
    }
}
