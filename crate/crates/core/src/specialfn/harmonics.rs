//! Orthonormal spherical harmonics with the Condon–Shortley phase.

use num_complex::Complex;

use crate::error::{domain, Result};
use crate::scalar::Real;

/// Normalized associated Legendre function `sqrt((2l+1)/4π (l-m)!/(l+m)!) P_l^m(cos θ)`
/// for `0 <= m <= l`, including the Condon–Shortley phase.
fn normalized_legendre<T: Real>(l: u32, m: u32, theta: T) -> T {
    let x = theta.cos();
    let s = theta.sin();
    let four_pi = T::lit(4.0) * T::PI();
    let mut pmm = T::one() / four_pi;
    for k in 1..=m {
        let k = T::int(k as i64);
        pmm = pmm * (T::two() * k - T::one()) / (T::two() * k);
    }
    let mut pmm = (pmm * T::int(2 * m as i64 + 1)).sqrt() * s.powi(m as i32);
    if m % 2 == 1 {
        pmm = -pmm;
    }
    if l == m {
        return pmm;
    }
    let mf = T::int(m as i64);
    let mut prev = pmm;
    let mut cur = x * (T::two() * mf + T::lit(3.0)).sqrt() * pmm;
    let a = |ll: u32| {
        let lf = T::int(ll as i64);
        ((T::lit(4.0) * lf * lf - T::one()) / (lf * lf - mf * mf)).sqrt()
    };
    for ll in (m + 2)..=l {
        let next = a(ll) * (x * cur - prev / a(ll - 1));
        prev = cur;
        cur = next;
    }
    cur
}

/// `Y_l^m(θ, φ)`; domain error when `|m| > l`.
pub fn spherical_harmonic<T: Real>(l: u32, m: i32, theta: T, phi: T) -> Result<Complex<T>> {
    if m.unsigned_abs() > l {
        return Err(domain(
            "spherical_harmonic",
            format!("|m| = {} exceeds l = {l}", m.abs()),
        ));
    }
    let am = m.unsigned_abs();
    let p = normalized_legendre(l, am, theta);
    let arg = T::int(am as i64) * phi;
    let y = Complex::new(p * arg.cos(), p * arg.sin());
    if m >= 0 {
        Ok(y)
    } else if am % 2 == 0 {
        Ok(y.conj())
    } else {
        Ok(-y.conj())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn low_order_values() {
        let y00 = spherical_harmonic(0, 0, 0.7f64, 1.3).unwrap();
        assert!((y00.re - 0.282_094_791_773_878_1).abs() < 1e-15);
        let y10 = spherical_harmonic(1, 0, 0.0f64, 0.0).unwrap();
        assert!((y10.re - 0.488_602_511_902_919_9).abs() < 1e-15);
    }

    #[test]
    fn explicit_l2_m1() {
        // Y_2^1 = -sqrt(15/8π) sinθ cosθ e^{iφ}
        let (t, p) = (PI / 3.0, PI / 4.0);
        let y = spherical_harmonic(2, 1, t, p).unwrap();
        let amp = -(15.0 / (8.0 * PI)).sqrt() * t.sin() * t.cos();
        assert!((y.re - amp * p.cos()).abs() < 1e-14);
        assert!((y.im - amp * p.sin()).abs() < 1e-14);
    }

    #[test]
    fn rejects_large_m() {
        assert!(spherical_harmonic(1, 2, 0.1f64, 0.1).is_err());
    }
}
