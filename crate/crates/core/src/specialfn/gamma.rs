//! Complex gamma function: Lanczos approximation (g = 7, 9 terms) with reflection.

use num_complex::Complex;

use crate::consts::GAMMA_POLE_TOL;
use crate::error::{Error, Result};
use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn check_pole<T: Real>(z: Complex<T>) -> Result<()> {
    let n = z.re.round();
    if n <= T::zero() {
        let d = (z - Complex::new(n, T::zero())).norm();
        if d <= T::lit(GAMMA_POLE_TOL) * (T::one() + n.abs()) {
            return Err(Error::Pole {
                op: "gamma",
                location: format!("z = {n}"),
            });
        }
    }
    Ok(())
}

/// `ln Γ(z)` for `Re z >= 1/2`, principal branch of the Lanczos form.
fn ln_gamma_right<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = T::half();
    let z = z - T::one();
    let mut a = Complex::new(T::lit(LANCZOS_COEF[0]), T::zero());
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a = a + Complex::new(T::lit(c), T::zero()) / (z + T::int(k as i64));
    }
    let t = z + T::lit(LANCZOS_G) + half;
    let ln_sqrt_2pi = T::lit(0.918_938_533_204_672_8);
    (z + half) * t.ln() - t + a.ln() + ln_sqrt_2pi
}

/// Complex gamma function.
///
/// Returns [`Error::Pole`] when `z` lies within tolerance of a non-positive integer.
pub fn gamma_complex<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_pole(z)?;
    if z.re < T::half() {
        // Γ(z) Γ(1-z) = π / sin(πz)
        let pi = T::PI();
        let s = (z * pi).sin();
        let g = ln_gamma_right(Complex::new(T::one(), T::zero()) - z).exp();
        Ok(Complex::new(pi, T::zero()) / (s * g))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

/// `ln Γ(z)` (not necessarily the principal branch of the log for `Re z < 1/2`; the real part
/// is `ln |Γ(z)|` everywhere).
pub fn ln_gamma_complex<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_pole(z)?;
    if z.re < T::half() {
        let pi = T::PI();
        let s = (z * pi).sin();
        Ok(Complex::new(pi.ln(), T::zero())
            - s.ln()
            - ln_gamma_right(Complex::new(T::one(), T::zero()) - z))
    } else {
        Ok(ln_gamma_right(z))
    }
}

/// Real gamma function.
pub fn gamma<T: Real>(x: T) -> Result<T> {
    gamma_complex(Complex::new(x, T::zero())).map(|v| v.re)
}

/// `1/Γ(z)`, entire: returns exact zero at the poles of Γ.
pub fn rgamma_complex<T: Real>(z: Complex<T>) -> Complex<T> {
    match gamma_complex(z) {
        Ok(g) => Complex::new(T::one(), T::zero()) / g,
        Err(_) => Complex::new(T::zero(), T::zero()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn factorial_and_sqrt_pi() {
        assert!((gamma(5.0f64).unwrap() - 24.0).abs() < 1e-13);
        assert!((gamma(0.5f64).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-15);
        assert!((gamma(5.0f32).unwrap() - 24.0).abs() < 1e-4);
    }

    #[test]
    fn poles_are_reported() {
        for n in 0..5 {
            let z = Complex64::new(-(n as f64), 0.0);
            assert!(matches!(gamma_complex(z), Err(Error::Pole { .. })));
        }
        assert!(gamma_complex(Complex64::new(-2.0, 1e-6)).is_ok());
    }

    #[test]
    fn negative_half_integer() {
        // Γ(-1/2) = -2 √π
        let g = gamma(-0.5f64).unwrap();
        assert!((g + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn ln_gamma_real_part_matches_modulus() {
        for z in [Complex64::new(-3.3, 0.7), Complex64::new(12.0, -4.0), Complex64::new(0.2, 30.0)] {
            let a = ln_gamma_complex(z).unwrap().re;
            let b = gamma_complex(z).unwrap().norm().ln();
            assert!((a - b).abs() < 1e-12 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn large_argument() {
        // Γ(31) = 30!
        let g = gamma_complex(Complex64::new(31.0, 0.0)).unwrap();
        assert!(rel(g, Complex64::new(2.652_528_598_121_910_6e32, 0.0)) < 1e-13);
    }
}
