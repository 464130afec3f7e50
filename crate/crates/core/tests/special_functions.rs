//! Special functions against frozen arbitrary-precision reference values.

use num_complex::Complex64;
use susy_dirac::specialfn::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn gamma_reference_values() {
    let cases = [
        (c(1.0, 1.0), c(0.49801566811835604, -0.15494982830181069)),
        (c(-2.5, 0.3), c(-0.61382299743774149, -0.21123261493704178)),
        (c(0.1, -7.0), c(1.8472584713886633e-5, 5.6256095355659045e-6)),
        (c(20.0, 15.0), c(-165203361969923.64, 582584951248381.57)),
        (c(-4.7, -2.2), c(0.00013511217452957813, 1.0508409047862174e-5)),
        (c(45.0, 0.5), c(-8.513740141744014e53, 2.510375455966287e54)),
    ];
    for (z, want) in cases {
        let got = gamma_complex(z).unwrap();
        assert!(rel(got, want) < 1e-12, "Γ({z}) = {got}, want {want}");
    }
}

#[test]
fn whittaker_w_reference_values() {
    let cases = [
        ((c(0.25, 0.0), c(0.25, 0.0), c(3.0, 0.0)), c(0.29365580527727636, 0.0)),
        ((c(0.3, 0.2), c(1.5, 0.0), c(2.5, 0.0)), c(0.73873475245322528, 0.18030243048348613)),
        ((c(-1.2, 0.4), c(0.5, 0.0), c(0.7, 0.0)), c(0.25055119523730448, 0.12055729715057824)),
        ((c(2.3, -0.1), c(2.5, 0.0), c(6.0, 0.0)), c(5.6037013539423392, -0.67927834261495834)),
        ((c(-0.7, 0.0), c(0.25, 0.0), c(0.05, 0.0)), c(0.64158662054058727, 0.0)),
        ((c(0.6, 0.3), c(0.75, 0.0), c(4.0, 1.0)), c(0.33818064432153315, 0.011665964043561751)),
        ((c(1.1, 0.0), c(0.25, 0.0), c(40.0, 0.0)), c(1.1834178646337023e-7, 0.0)),
    ];
    for ((nu, rho, x), want) in cases {
        let got = whittaker_w(nu, rho, x).unwrap();
        assert!(rel(got, want) < 1e-9, "W({nu},{rho},{x}) = {got}, want {want}");
    }
}

#[test]
fn whittaker_m_reference_values() {
    let cases = [
        ((c(0.75, 0.0), c(0.25, 0.0), c(2.0, 0.0)), c(0.61869700665321123, 0.0)),
        ((c(-2.1, 0.5), c(0.75, 0.0), c(3.3, 0.0)), c(44.489255138160097, -18.800698347927961)),
        ((c(0.4, 0.0), c(2.5, 0.0), c(25.0, 0.0)), c(4936558.423495765, 0.0)),
        ((c(0.2, -0.3), c(0.5, 0.0), c(1.5, 0.5)), c(1.1635635538833025, 0.74587277274049061)),
        ((c(3.0, 0.0), c(0.25, 0.0), c(55.0, 0.0)), c(-3408947.395257271, 0.0)),
    ];
    for ((nu, rho, x), want) in cases {
        let got = whittaker_m(nu, rho, x).unwrap();
        assert!(rel(got, want) < 1e-10, "M({nu},{rho},{x}) = {got}, want {want}");
    }
}

#[test]
fn bessel_reference_values() {
    let half = [
        (3, c(2.0, 0.0), c(1.0994731886331097, 0.0)),
        (11, c(0.3, 0.0), c(1.0251453570654913e-7, 0.0)),
        (21, c(25.0, 0.0), c(629417235.64155727, 0.0)),
        (1, c(2.0, 3.0), c(-1.2249578056342323, 0.90860976746082078)),
        (41, c(1.0, -1.0), c(-6.7778459606095652e-23, 2.9939741147701293e-23)),
        (7, c(80.0, 0.0), c(2.2916624745657915e33, 0.0)),
    ];
    for (twice, z, want) in half {
        let got = bessel_i_half_order(HalfIntOrder::from_twice(twice), z).unwrap();
        assert!(rel(got, want) < 1e-10, "I_{twice}/2({z}) = {got}, want {want}");
    }
    let int = [
        (0, c(1.5, 0.0), c(1.6467231897728908, 0.0)),
        (3, c(0.2, 0.0), c(0.0001670837502315642, 0.0)),
        (7, c(12.0, 0.0), c(2396.0356923993661, 0.0)),
        (1, c(4.0, 2.0), c(-2.3059656762851777, 9.2222462574541642)),
    ];
    for (n, z, want) in int {
        let got = bessel_i_int(n, z);
        assert!(rel(got, want) < 1e-10, "I_{n}({z}) = {got}, want {want}");
    }
}

#[test]
fn spherical_harmonic_reference_values() {
    let y = spherical_harmonic(2, 1, std::f64::consts::PI / 3.0, std::f64::consts::PI / 4.0).unwrap();
    assert!(rel(y, c(-0.23654367393939, -0.23654367393939)) < 1e-12);
    let y = spherical_harmonic(3, -2, 1.1f64, -0.4).unwrap();
    assert!(rel(y, c(0.25652020493318779, 0.26412309366167117)) < 1e-12);
}

#[test]
fn laguerre_reference_value() {
    assert!((assoc_laguerre(3, 2.5f64, 1.7) - 0.52866666666666687).abs() < 1e-14);
}
