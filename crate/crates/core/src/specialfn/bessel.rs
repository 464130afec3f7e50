//! Modified Bessel functions `I` of half-integer and integer order, and `K` of half-integer order.
//!
//! Half-integer orders start from the elementary forms of `I_{±1/2}` and use upward
//! recurrence when `|z|` exceeds the order, Miller's downward recurrence otherwise.
//! Integer orders use Miller's recurrence normalized by `e^z = I_0 + 2 Σ I_k`.

use num_complex::Complex64;

use crate::consts::{BESSEL_SERIES_MAX_TERMS, MILLER_EXTRA_ORDERS, SERIES_REL_TOL};
use crate::error::{domain, Result};

/// An order stored as twice its value, so half-integers stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfIntOrder {
    pub twice_value: i32,
}

impl HalfIntOrder {
    pub fn from_twice(twice_value: i32) -> Self {
        Self { twice_value }
    }

    /// The order `l + 1/2`.
    pub fn l_plus_half(l: u32) -> Self {
        Self {
            twice_value: 2 * l as i32 + 1,
        }
    }

    pub fn value(self) -> f64 {
        self.twice_value as f64 / 2.0
    }

    pub fn is_half_integer(self) -> bool {
        self.twice_value.rem_euclid(2) == 1
    }
}

const RESCALE_ABOVE: f64 = 1e250;

/// `e^{-z} I_{±1/2}(z)` from the elementary forms.
fn scaled_seed(z: Complex64) -> (Complex64, Complex64) {
    let pref = (2.0 / (std::f64::consts::PI * z)).sqrt();
    let e = (-2.0 * z).exp();
    let sinh_part = if z.norm() < 1e-3 {
        // (1 - e^{-2z})/2 without cancellation
        let s = z.sinh();
        s * (-z).exp()
    } else {
        (1.0 - e) * 0.5
    };
    let cosh_part = (1.0 + e) * 0.5;
    (pref * sinh_part, pref * cosh_part)
}

/// `e^{-z} I_{order}(z)` for half-integer order `>= -1/2`.
pub fn bessel_i_half_order_scaled(order: HalfIntOrder, z: Complex64) -> Result<Complex64> {
    if !order.is_half_integer() || order.twice_value < -1 {
        return Err(domain(
            "bessel_i_half_order",
            format!("order {} is not a half-integer >= -1/2", order.value()),
        ));
    }
    if z.norm() == 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return Err(domain("bessel_i_half_order", format!("invalid argument z = {z}")));
    }
    let (i_half, i_mhalf) = scaled_seed(z);
    if order.twice_value == -1 {
        return Ok(i_mhalf);
    }
    let n = ((order.twice_value - 1) / 2) as usize;
    if n == 0 {
        return Ok(i_half);
    }
    if z.norm() <= 2.0 {
        return Ok(half_order_series(n, z) * (-z).exp());
    }
    if z.norm() > order.value() {
        // Upward: I_{v+1} = I_{v-1} - (2v/z) I_v
        let (mut prev, mut cur) = (i_mhalf, i_half);
        for k in 0..n {
            let v = k as f64 + 0.5;
            let next = prev - cur * (2.0 * v) / z;
            prev = cur;
            cur = next;
        }
        return Ok(cur);
    }
    // Miller: I_{v-1} = I_{v+1} + (2v/z) I_v, starting well above the target order.
    let start = n + MILLER_EXTRA_ORDERS + z.norm().ceil() as usize;
    let mut hi = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    let mut target = Complex64::new(0.0, 0.0);
    let mut last_half = Complex64::new(0.0, 0.0);
    for k in (0..=start).rev() {
        // cur holds order k + 1/2, hi holds k + 3/2
        if k == n {
            target = cur;
        }
        let v = k as f64 + 0.5;
        let lower = hi + cur * (2.0 * v) / z;
        if k == 0 {
            last_half = cur;
            let m_half = lower;
            // Normalize against whichever seed is larger in modulus.
            let scale = if i_half.norm() >= i_mhalf.norm() {
                i_half / last_half
            } else {
                i_mhalf / m_half
            };
            return Ok(target * scale);
        }
        hi = cur;
        cur = lower;
        if cur.norm() > RESCALE_ABOVE {
            cur /= RESCALE_ABOVE;
            hi /= RESCALE_ABOVE;
            target /= RESCALE_ABOVE;
        }
    }
    let _ = last_half;
    unreachable!("Miller loop always returns at k = 0")
}

/// `I_{n+1/2}(z)` by its power series, principal branch of `sqrt(z)`.
fn half_order_series(n: usize, z: Complex64) -> Complex64 {
    let nu = n as f64 + 0.5;
    // (z/2)^nu / Γ(nu+1) with Γ(n+3/2) = (2n+1)!! sqrt(π) / 2^{n+1}
    let mut lead = (z * 0.5).sqrt() * (2.0 / std::f64::consts::PI.sqrt());
    for k in 1..=n {
        lead *= z / (2.0 * k as f64 + 1.0);
    }
    let q = z * z * 0.25;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..BESSEL_SERIES_MAX_TERMS {
        term *= q / (k as f64 * (nu + k as f64));
        sum += term;
        if term.norm() <= SERIES_REL_TOL * sum.norm() {
            break;
        }
    }
    lead * sum
}

/// Modified Bessel function `I_{order}(z)` for half-integer order `>= -1/2`.
pub fn bessel_i_half_order(order: HalfIntOrder, z: Complex64) -> Result<Complex64> {
    Ok(bessel_i_half_order_scaled(order, z)? * z.exp())
}

/// `e^{-z} I_n(z)` for integer `n >= 0`: power series for `|z| <= 2`, the large-argument
/// expansion for `Re z >= 20`, otherwise Miller's recurrence in `Re z >= 0` and
/// `I_n(-z) = (-1)^n I_n(z)` elsewhere.
pub fn bessel_i_int_scaled(n: u32, z: Complex64) -> Complex64 {
    if z.norm() == 0.0 {
        return if n == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
    if z.norm() <= 2.0 {
        return int_order_series(n, z) * (-z).exp();
    }
    if z.re >= INT_ASYMPTOTIC_MIN_RE && z.norm() >= (n * n) as f64 {
        return int_order_asymptotic(n, z);
    }
    let n = n as usize;
    let a = z.norm();
    let start = n + MILLER_EXTRA_ORDERS + (a + 10.0 * a.sqrt()).ceil() as usize;
    let w = if z.re >= 0.0 { z } else { -z };
    let mut hi = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut target = Complex64::new(0.0, 0.0);
    for k in (0..=start).rev() {
        if k == n {
            target = cur;
        }
        if k == 0 {
            sum += cur;
        } else {
            sum += 2.0 * cur;
        }
        if k == 0 {
            break;
        }
        // I_{k-1} = I_{k+1} + (2k/z) I_k
        let lower = hi + cur * (2.0 * k as f64) / w;
        hi = cur;
        cur = lower;
        if cur.norm() > RESCALE_ABOVE {
            cur /= RESCALE_ABOVE;
            hi /= RESCALE_ABOVE;
            target /= RESCALE_ABOVE;
            sum /= RESCALE_ABOVE;
        }
    }
    // sum = e^{w} in unnormalized units; result is e^{-w} I_n(w)
    let value = target / sum;
    if z.re >= 0.0 {
        value
    } else {
        // e^{-z} I_n(z) = (-1)^n e^{-z} I_n(w) = (-1)^n e^{2w} [e^{-w} I_n(w)]
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        value * (2.0 * w).exp() * sign
    }
}

/// `Re z` above which the neglected `e^{-2z}` term of the large-argument expansion is below
/// double precision.
const INT_ASYMPTOTIC_MIN_RE: f64 = 20.0;

/// `e^{-z} I_n(z) ≈ (2πz)^{-1/2} Σ_k (-1)^k a_k(n) / z^k`, truncated at the smallest term.
fn int_order_asymptotic(n: u32, z: Complex64) -> Complex64 {
    let mu = 4.0 * (n as f64).powi(2);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..BESSEL_SERIES_MAX_TERMS {
        let odd = (2 * k - 1) as f64;
        let next = -term * (mu - odd * odd) / (8.0 * k as f64 * z);
        if next.norm() >= term.norm() {
            break;
        }
        term = next;
        sum += term;
        if term.norm() <= SERIES_REL_TOL * sum.norm() {
            break;
        }
    }
    sum / (2.0 * std::f64::consts::PI * z).sqrt()
}

/// Power series `Σ (z/2)^{2k+n} / (k! (k+n)!)`, used for `|z| <= 2`.
fn int_order_series(n: u32, z: Complex64) -> Complex64 {
    let half = z * 0.5;
    let mut term = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        term *= half / k as f64;
    }
    let q = half * half;
    let mut sum = term;
    for k in 1..BESSEL_SERIES_MAX_TERMS {
        term *= q / (k as f64 * (k + n as usize) as f64);
        sum += term;
        if term.norm() <= SERIES_REL_TOL * sum.norm() {
            break;
        }
    }
    sum
}

/// Modified Bessel function `I_n(z)` of integer order.
pub fn bessel_i_int(n: u32, z: Complex64) -> Complex64 {
    bessel_i_int_scaled(n, z) * z.exp()
}

/// `e^{z} K_{l+1/2}(z)` for `z != 0` by upward recurrence from the elementary `K_{1/2}`.
pub fn bessel_k_half_order_scaled(l: u32, z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return Err(domain("bessel_k_half_order", format!("argument {z} must be finite and non-zero")));
    }
    let k_half = (std::f64::consts::FRAC_PI_2 / z).sqrt();
    let mut prev = k_half;
    let mut cur = k_half * (1.0 + 1.0 / z);
    if l == 0 {
        return Ok(prev);
    }
    for k in 1..l {
        let next = prev + cur * ((2 * k + 1) as f64) / z;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn k_five_halves_closed_form() {
        let z = Complex64::new(0.7, 1.3);
        let exact = (std::f64::consts::FRAC_PI_2 / z).sqrt() * (1.0 + 3.0 / z + 3.0 / (z * z));
        let v = bessel_k_half_order_scaled(2, z).unwrap();
        assert!((v - exact).norm() < 1e-14 * exact.norm());
    }

    #[test]
    fn order_half_closed_form() {
        let v = bessel_i_half_order(HalfIntOrder::from_twice(1), c(1.0)).unwrap();
        assert!((v.re - 0.937_674_888_245_488_2).abs() < 1e-12);
    }

    #[test]
    fn order_three_halves_closed_form() {
        let z = 2.0f64;
        let exact = (2.0 / (std::f64::consts::PI * z)).sqrt() * (z.cosh() - z.sinh() / z);
        let v = bessel_i_half_order(HalfIntOrder::from_twice(3), c(z)).unwrap();
        assert!((v.re - exact).abs() < 1e-13 * exact);
    }

    #[test]
    fn small_argument_series() {
        let z = 1e-4;
        let lead = (2.0 * z / std::f64::consts::PI).sqrt() * (1.0 + z * z / 6.0);
        let v = bessel_i_half_order(HalfIntOrder::from_twice(1), c(z)).unwrap();
        assert!((v.re - lead).abs() < 1e-12 * lead);
    }

    #[test]
    fn rejects_integer_order() {
        assert!(bessel_i_half_order(HalfIntOrder::from_twice(2), c(1.0)).is_err());
        assert!(bessel_i_half_order(HalfIntOrder::from_twice(1), c(0.0)).is_err());
    }

    #[test]
    fn integer_order_small_values() {
        // I_0(1.5), I_3(0.2)
        assert!((bessel_i_int(0, c(1.5)).re - 1.646_723_189_772_890_8).abs() < 1e-14);
        assert!((bessel_i_int(3, c(0.2)).re - 1.670_837_502_315_642e-4).abs() < 1e-17);
    }

    #[test]
    fn half_order_small_argument() {
        for x in [1e-4, 1e-2, 0.5] {
            let z = Complex64::new(x, 0.0);
            let got = bessel_i_half_order(HalfIntOrder::from_twice(5), z).unwrap().re;
            // I_{5/2}(x) = sqrt(2/(πx)) [(3/x² + 1) sinh x − 3 cosh x / x]
            let exact = (2.0 / (std::f64::consts::PI * x)).sqrt()
                * ((3.0 / (x * x) + 1.0) * x.sinh() - 3.0 * x.cosh() / x);
            let lead = (2.0 / std::f64::consts::PI).sqrt() * x.powf(2.5) / 15.0;
            let reference = if x <= 1e-2 { lead * (1.0 + x * x / 14.0) } else { exact };
            assert!((got - reference).abs() < 1e-9 * reference.abs(), "{x}: {got} vs {reference}");
        }
    }

    #[test]
    fn integer_order_small_complex_argument() {
        let z = Complex64::new(2.4e-3, 1e-3);
        let lead = z * 0.5 * (1.0 + z * z / 8.0 + z * z * z * z / 192.0);
        assert!((bessel_i_int(1, z) - lead).norm() < 1e-14 * lead.norm());
    }

    #[test]
    fn integer_order_large_argument_matches_recurrence() {
        for (n, z) in [(0, Complex64::new(25.0, 3.0)), (3, Complex64::new(40.0, -12.0)), (5, Complex64::new(30.0, 0.0))] {
            let a = int_order_asymptotic(n, z);
            let b = {
                let w = z;
                let start = n as usize + MILLER_EXTRA_ORDERS + (w.norm() + 10.0 * w.norm().sqrt()).ceil() as usize;
                let (mut hi, mut cur, mut sum, mut target) =
                    (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
                for k in (0..=start).rev() {
                    if k == n as usize {
                        target = cur;
                    }
                    sum += if k == 0 { cur } else { 2.0 * cur };
                    if k == 0 {
                        break;
                    }
                    let lower = hi + cur * (2.0 * k as f64) / w;
                    hi = cur;
                    cur = lower;
                    if cur.norm() > RESCALE_ABOVE {
                        cur /= RESCALE_ABOVE;
                        hi /= RESCALE_ABOVE;
                        target /= RESCALE_ABOVE;
                        sum /= RESCALE_ABOVE;
                    }
                }
                target / sum
            };
            assert!((a - b).norm() < 1e-13 * b.norm(), "n={n} z={z}: {a} vs {b}");
        }
    }

    #[test]
    fn integer_order_negative_half_plane() {
        let z = Complex64::new(-1.3, 0.4);
        let a = bessel_i_int(3, z);
        let b = -bessel_i_int(3, -z);
        assert!((a - b).norm() < 1e-14 * b.norm());
    }
}
