//! Stencil checks of the closed-form free Dirac Green's function.

use num_complex::Complex64;

use super::report::{Check, VerificationReport};
use crate::consts::{FREE_GREEN_RESIDUAL_TOL, FREE_GREEN_STENCIL};
use crate::error::{domain, Result};
use crate::resolvent::{free_dirac_green, free_iterated_kernel, Mat2, Mat4, Vec3};
use crate::susy_core::PhysicalParams;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

fn pauli() -> [Mat2; 3] {
    let o = Complex64::new(1.0, 0.0);
    [[[ZERO, o], [o, ZERO]], [[ZERO, -I], [I, ZERO]], [[o, ZERO], [ZERO, -o]]]
}

/// `max |(H_D − z) G(·, x_in)|(x) / max |G(x, x_in)|` with `H_D = [[M0, cσ·p], [cσ·p, −M0]]`
/// and five-point central differences of step `h`.
pub fn free_green_stencil_residual(x: Vec3, x_in: Vec3, z: Complex64, h: f64, p: &PhysicalParams) -> Result<f64> {
    let s = pauli();
    let hc = p.hbar * p.c;
    let m0 = p.rest_energy();
    let center = free_dirac_green(x, x_in, z, p)?;
    let mut grad: Vec<Mat4> = Vec::with_capacity(3);
    for a in 0..3 {
        let at = |t: f64| {
            let mut y = x;
            y[a] += t;
            free_dirac_green(y, x_in, z, p)
        };
        let (m2, m1, p1, p2) = (at(-2.0 * h)?, at(-h)?, at(h)?, at(2.0 * h)?);
        let mut d = [[ZERO; 4]; 4];
        for i in 0..4 {
            for k in 0..4 {
                d[i][k] = (m2[i][k] - 8.0 * m1[i][k] + 8.0 * p1[i][k] - p2[i][k]) / (12.0 * h);
            }
        }
        grad.push(d);
    }
    let mut worst = 0.0f64;
    for col in 0..4 {
        for blk in 0..2 {
            let other = 1 - blk;
            let mass = if blk == 0 { m0 } else { -m0 };
            for i in 0..2 {
                let mut v = (mass - z) * center[2 * blk + i][col];
                for (a, sa) in s.iter().enumerate() {
                    for j in 0..2 {
                        v += -I * hc * sa[i][j] * grad[a][2 * other + j][col];
                    }
                }
                worst = worst.max(v.norm());
            }
        }
    }
    let scale = center.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
    Ok(worst / scale)
}

/// Stencil residual of `free_dirac_green` at separated point pairs, and the Yukawa form of the
/// iterated kernel for real `ζ < m²c⁴`: real, positive and decreasing with distance.
pub fn free_green_check(z: Complex64, pairs: &[(Vec3, Vec3)], p: &PhysicalParams) -> Result<VerificationReport> {
    if pairs.is_empty() {
        return Err(domain("free_green_check", "no point pairs"));
    }
    let len = p.hbar / (p.m * p.c);
    let mut report = VerificationReport::new("green/free");
    report.input("z", z).input("pairs", pairs.len());
    for (x, y) in pairs {
        let res = free_green_stencil_residual(*x, *y, z, FREE_GREEN_STENCIL * len, p)?;
        report.check(
            format!("(H_D − z)G at x''=({:.3},{:.3},{:.3}), x'=({:.3},{:.3},{:.3})", x[0], x[1], x[2], y[0], y[1], y[2]),
            res,
            FREE_GREEN_RESIDUAL_TOL,
        );
    }
    let zeta = Complex64::new(0.6 * p.mc2() * p.mc2(), 0.0);
    let mut ok = true;
    let mut last = f64::INFINITY;
    for k in 1..50 {
        let g = free_iterated_kernel([0.0; 3], [0.1 * k as f64 * len, 0.0, 0.0], zeta, p)?;
        ok &= g.im == 0.0 && g.re > 0.0 && g.re < last;
        last = g.re;
    }
    report.push(Check::boolean("real ζ < m²c⁴ gives a positive decaying Yukawa kernel", ok));
    Ok(report)
}
