//! Angular algebra: orthonormality, the σ·e_r flip, and κ.

use num_complex::Complex64;
use proptest::prelude::*;
use susy_dirac::angular::*;

fn all_channels(twice_j_max: u32) -> Vec<Channel> {
    let mut out = Vec::new();
    let mut tj = 1;
    while tj <= twice_j_max {
        let mut tm = -(tj as i32);
        while tm <= tj as i32 {
            for s in [Sign::Plus, Sign::Minus] {
                out.push(Channel::new(tj, tm, s).unwrap());
            }
            tm += 2;
        }
        tj += 2;
    }
    out
}

#[test]
fn orthonormal_up_to_seven_halves() {
    let q = SphereQuadrature::standard();
    let chans = all_channels(7);
    for a in &chans {
        for b in &chans {
            let want = if a == b { 1.0 } else { 0.0 };
            let got = q.overlap(*a, *b);
            assert!((got - want).norm() < 1e-10, "{a} / {b}: {got}");
        }
    }
}

#[test]
fn three_halves_normalized() {
    let q = SphereQuadrature::standard();
    let ch = Channel::new(3, 1, Sign::Plus).unwrap();
    assert!((q.overlap(ch, ch).re - 1.0).abs() < 1e-12);
}

proptest! {
    #[test]
    fn flip_relation(theta in 0.0f64..std::f64::consts::PI, phi in 0.0f64..6.283, idx in 0usize..40) {
        let chans = all_channels(7);
        let ch = chans[idx % chans.len()];
        let a = apply_sigma_er(spin_spherical_harmonic(ch, theta, phi), theta, phi);
        let b = spin_spherical_harmonic(ch.flipped(), theta, phi);
        prop_assert!((a.up - b.up).norm() < 1e-12 && (a.down - b.down).norm() < 1e-12);
    }

    #[test]
    fn sigma_er_involutive(theta in 0.0f64..3.2, phi in -7.0f64..7.0, a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let s = Spinor2::new(Complex64::new(a, b), Complex64::new(b, -a * 0.5));
        let t = apply_sigma_er(apply_sigma_er(s, theta, phi), theta, phi);
        prop_assert!((t.up - s.up).norm() < 1e-15 * 4.0 && (t.down - s.down).norm() < 1e-15 * 4.0);
    }
}
