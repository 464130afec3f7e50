//! Property tests for the special functions.

use num_complex::Complex64;
use proptest::prelude::*;
use susy_dirac::numerics::quadrature::gauss_legendre;
use susy_dirac::specialfn::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn off_pole(z: Complex64) -> bool {
    z.re > 0.0 || (z - c(z.re.round(), 0.0)).norm() > 1e-3
}

proptest! {
    #[test]
    fn gamma_reflection(re in -5.0f64..5.0, im in -3.0f64..3.0) {
        let z = c(re, im);
        prop_assume!(off_pole(z) && off_pole(1.0 - z));
        let pi = std::f64::consts::PI;
        let prod = gamma_complex(z).unwrap() * gamma_complex(1.0 - z).unwrap() * (pi * z).sin() / pi;
        prop_assert!((prod - 1.0).norm() < 1e-10, "product {}", prod);
    }

    #[test]
    fn gamma_recurrence(re in -8.0f64..30.0, im in -10.0f64..10.0) {
        let z = c(re, im);
        prop_assume!(off_pole(z));
        let lhs = gamma_complex(z + 1.0).unwrap();
        let rhs = z * gamma_complex(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm());
    }

    #[test]
    fn bessel_recurrence(l in 1u32..15, re in 0.05f64..60.0, im in -5.0f64..5.0) {
        let z = c(re, im);
        let v = l as f64 + 0.5;
        let lo = bessel_i_half_order(HalfIntOrder::from_twice(2 * l as i32 - 1), z).unwrap();
        let mid = bessel_i_half_order(HalfIntOrder::from_twice(2 * l as i32 + 1), z).unwrap();
        let hi = bessel_i_half_order(HalfIntOrder::from_twice(2 * l as i32 + 3), z).unwrap();
        let resid = lo - hi - mid * (2.0 * v) / z;
        prop_assert!(resid.norm() <= 1e-9 * lo.norm().max(mid.norm()));
    }

    #[test]
    fn integer_bessel_recurrence(n in 1u32..12, re in 0.05f64..40.0, im in -5.0f64..5.0) {
        let z = c(re, im);
        let lo = bessel_i_int(n - 1, z);
        let mid = bessel_i_int(n, z);
        let hi = bessel_i_int(n + 1, z);
        let resid = lo - hi - mid * (2.0 * n as f64) / z;
        prop_assert!(resid.norm() <= 1e-9 * lo.norm().max(mid.norm()));
    }

    #[test]
    fn whittaker_polynomial_reduction(n in 0usize..6, two_rho in 0u32..6, x in 0.05f64..15.0) {
        let rho = two_rho as f64 / 2.0 + 0.25;
        let nu = c(n as f64 + rho + 0.5, 0.0);
        let pref = (-x / 2.0).exp() * x.powf(rho + 0.5);
        let lag = assoc_laguerre(n, 2.0 * rho, x);
        prop_assume!(lag.abs() > 1e-6);
        // M ∝ x^{ρ+1/2} e^{-x/2} L_n^{2ρ}(x) with constant n!/(1+2ρ)_n
        let mut ratio = 1.0;
        for k in 0..n {
            ratio *= (k as f64 + 1.0) / (1.0 + 2.0 * rho + k as f64);
        }
        let m = whittaker_m(nu, c(rho, 0.0), c(x, 0.0)).unwrap();
        prop_assert!((m.re / (pref * lag) - ratio).abs() <= 1e-8 * ratio);
        // W: U(-n, 1+2ρ, x) = (-1)^n n! L_n^{2ρ}(x)
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let w = whittaker_w(nu, c(rho, 0.0), c(x, 0.0)).unwrap();
        let want = pref * sign * fact * lag;
        prop_assert!((w.re - want).abs() <= 1e-9 * want.abs().max(pref * fact));
    }
}

#[test]
fn spherical_harmonic_orthonormality() {
    let (nodes, weights) = gauss_legendre(64);
    let nphi = 128;
    let mut channels = Vec::new();
    for l in 0..=6u32 {
        for m in -(l as i32)..=(l as i32) {
            channels.push((l, m));
        }
    }
    let samples: Vec<Vec<Complex64>> = channels
        .iter()
        .map(|&(l, m)| {
            let mut v = Vec::new();
            for &x in &nodes {
                for k in 0..nphi {
                    let phi = 2.0 * std::f64::consts::PI * k as f64 / nphi as f64;
                    v.push(spherical_harmonic(l, m, x.acos(), phi).unwrap());
                }
            }
            v
        })
        .collect();
    let dphi = 2.0 * std::f64::consts::PI / nphi as f64;
    for (a, ya) in samples.iter().enumerate() {
        for (b, yb) in samples.iter().enumerate() {
            let mut s = c(0.0, 0.0);
            for (i, w) in weights.iter().enumerate() {
                for k in 0..nphi {
                    let idx = i * nphi + k;
                    s += ya[idx].conj() * yb[idx] * (w * dphi);
                }
            }
            let want = if a == b { 1.0 } else { 0.0 };
            assert!((s - want).norm() < 1e-10, "{:?} {:?}: {s}", channels[a], channels[b]);
        }
    }
}
