use num_complex::Complex64;
use susy_dirac::angular::{Channel, Sign};
use susy_dirac::numerics::stencil::second_derivative;
use susy_dirac::resolvent::{
    assemble_partial_waves, dirac_green_blocks, free_dirac_green, free_iterated_kernel, free_sector_kernel,
    linear_kernel_pole, linear_radial_kernel, oscillator_kernel_pole, oscillator_radial_kernel,
    partial_wave_sector_kernel, radial_kernel, Mat2, Mat4, ResolventQuery, Vec3,
};
use susy_dirac::spectra::susy_spectrum_discrete;
use susy_dirac::susy_core::{effective_radial_potential, ModelSpec, PhysicalParams};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

fn nat() -> PhysicalParams {
    PhysicalParams::natural()
}

fn pauli() -> [Mat2; 3] {
    let o = Complex64::new(1.0, 0.0);
    [[[ZERO, o], [o, ZERO]], [[ZERO, -I], [I, ZERO]], [[o, ZERO], [ZERO, -o]]]
}

/// `(H_D - z) G(·, x_in)` at `x`, with `H_D = [[M0, D], [D†, -M0]]`,
/// `D = cσ·p + iħc U' σ·e_r + d0`, by 4th-order differences.
fn dirac_residual(
    g: &dyn Fn(Vec3) -> Mat4,
    x: Vec3,
    z: Complex64,
    m0: f64,
    du: &dyn Fn(f64) -> f64,
    d0: Complex64,
    p: &PhysicalParams,
) -> f64 {
    let h = 1e-3;
    let s = pauli();
    let hc = p.hbar * p.c;
    let center = g(x);
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    // sp[i][k] = Σ_a (σ_a ∂_a)[i][k] acting on rows of G
    let mut grad: Vec<Mat4> = Vec::new();
    for a in 0..3 {
        let at = |t: f64| {
            let mut y = x;
            y[a] += t;
            g(y)
        };
        let (m2, m1, p1, p2) = (at(-2.0 * h), at(-h), at(h), at(2.0 * h));
        let mut d = [[ZERO; 4]; 4];
        for i in 0..4 {
            for k in 0..4 {
                d[i][k] = (m2[i][k] - 8.0 * m1[i][k] + 8.0 * p1[i][k] - p2[i][k]) / (12.0 * h);
            }
        }
        grad.push(d);
    }
    let mut res = [[ZERO; 4]; 4];
    let mut scale = 0.0f64;
    for col in 0..4 {
        for blk in 0..2 {
            // rows of the other block feed this block through D or D†
            let other = 1 - blk;
            for i in 0..2 {
                let mut v = ZERO;
                for a in 0..3 {
                    for j in 0..2 {
                        v += -I * hc * s[a][i][j] * grad[a][2 * other + j][col];
                    }
                }
                let sign = if blk == 0 { 1.0 } else { -1.0 };
                for j in 0..2 {
                    let ser: Complex64 = (0..3).map(|a| s[a][i][j] * (x[a] / r)).sum();
                    v += sign * I * hc * du(r) * ser * center[2 * other + j][col];
                }
                let c = if blk == 0 { d0 } else { d0.conj() };
                v += c * center[2 * other + i][col];
                let mass = if blk == 0 { m0 } else { -m0 };
                v += (mass - z) * center[2 * blk + i][col];
                res[2 * blk + i][col] = v;
            }
        }
    }
    for row in center.iter() {
        for v in row {
            scale = scale.max(v.norm());
        }
    }
    res.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max) / scale
}

#[test]
fn free_partial_waves_converge_to_closed_kernel() {
    let p = nat();
    let zeta = Complex64::new(0.3, 0.4);
    let (xo, xi) = ([1.1, -0.4, 0.6], [0.2, 0.3, -0.25]);
    let k = |ch: Channel, r2: f64, r1: f64| {
        radial_kernel(&ModelSpec::FreeDirac, &ResolventQuery::new(zeta, r2, r1, ch, Sign::Plus)?, &p)
    };
    let s = assemble_partial_waves(&k, xo, xi, 25, Some(1e-4)).unwrap();
    let g = free_iterated_kernel(xo, xi, zeta, &p).unwrap();
    assert!((s.matrix[0][0] - g).norm() <= 1e-4 * g.norm());
    assert!((s.matrix[1][1] - g).norm() <= 1e-4 * g.norm());
    assert!(s.matrix[0][1].norm() <= 1e-4 * g.norm());
    assert!(s.tail_estimate <= 1e-4 * g.norm());
    let few = assemble_partial_waves(&k, xo, xi, 1, Some(1e-8));
    assert!(few.is_err());
}

#[test]
fn partial_waves_are_rotation_covariant() {
    let p = nat();
    let zeta = Complex64::new(0.3, 0.4);
    let k = |ch: Channel, r2: f64, r1: f64| {
        oscillator_radial_kernel(&ResolventQuery::new(zeta, r2, r1, ch, Sign::Plus)?, 1.0, &p)
    };
    let (xo, xi) = ([1.1, -0.4, 0.6], [0.2, 0.3, -0.25]);
    let a = 0.7f64;
    let rot = |x: Vec3| [a.cos() * x[0] - a.sin() * x[1], a.sin() * x[0] + a.cos() * x[1], x[2]];
    let g = assemble_partial_waves(&k, xo, xi, 9, None).unwrap().matrix;
    let h = assemble_partial_waves(&k, rot(xo), rot(xi), 9, None).unwrap().matrix;
    // U = exp(-i a σ_z / 2): h = U g U†
    let ph = [(-I * a / 2.0).exp(), (I * a / 2.0).exp()];
    for i in 0..2 {
        for k in 0..2 {
            let expect = ph[i] * g[i][k] * ph[k].conj();
            assert!((h[i][k] - expect).norm() <= 1e-12 * g[0][0].norm().max(1e-300));
        }
    }
}

#[test]
fn single_channel_source() {
    let k = |ch: Channel, _: f64, _: f64| {
        Ok(if ch == Channel::radial(1, Sign::Plus)? { Complex64::new(2.0, 0.5) } else { ZERO })
    };
    let (xo, xi) = ([0.3, 0.2, 0.9], [-0.4, 0.5, 0.1]);
    let m = assemble_partial_waves(&k, xo, xi, 7, None).unwrap().matrix;
    let r = |x: Vec3| (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let expect = Complex64::new(2.0, 0.5) / (r(xo) * r(xi) * 4.0 * std::f64::consts::PI);
    assert!((m[0][0] - expect).norm() < 1e-14 && (m[1][1] - expect).norm() < 1e-14);
    assert!(m[0][1].norm() < 1e-15 && m[1][0].norm() < 1e-15);
}

#[test]
fn free_green_symmetries_and_blocks() {
    let p = nat();
    let z = Complex64::new(0.4, 0.3);
    let (xo, xi) = ([0.7, -0.2, 0.4], [-0.1, 0.35, -0.3]);
    let g = free_dirac_green(xo, xi, z, &p).unwrap();
    let gt = free_dirac_green(xi, xo, z.conj(), &p).unwrap();
    let scale = g.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
    for i in 0..4 {
        for k in 0..4 {
            assert!((gt[k][i].conj() - g[i][k]).norm() <= 1e-12 * scale);
        }
    }
    let gs = free_iterated_kernel(xo, xi, z * z, &p).unwrap();
    assert!((g[0][0] - (z + 1.0) * gs).norm() <= 1e-14 * scale);
    assert!(g[0][1].norm() == 0.0);

    let blocks = dirac_green_blocks(free_sector_kernel(z * z, &p), free_sector_kernel(z * z, &p), z, &ModelSpec::FreeDirac, &p)
        .unwrap()
        .eval(xo, xi)
        .unwrap();
    for i in 0..4 {
        for k in 0..4 {
            assert!((blocks[i][k] - g[i][k]).norm() <= 1e-6 * scale, "({i},{k})");
        }
    }
    let col = |x: Vec3| free_dirac_green(x, xi, z, &p).unwrap();
    assert!(dirac_residual(&col, xo, z, 1.0, &|_| 0.0, ZERO, &p) <= 1e-6);
}

#[test]
fn broken_model_blocks() {
    let p = nat();
    let z = Complex64::new(0.4, 0.3);
    let (xo, xi) = ([0.7, -0.2, 0.4], [-0.1, 0.35, -0.3]);
    let ms = ModelSpec::FreeDiracBrokenSusy;
    let green = dirac_green_blocks(free_sector_kernel(z * z, &p), free_sector_kernel(z * z, &p), z, &ms, &p).unwrap();
    let g = green.eval(xo, xi).unwrap();
    let gs = free_iterated_kernel(xo, xi, z * z, &p).unwrap();
    assert!((g[0][0] - z * gs).norm() <= 1e-14 * gs.norm());
    assert!((g[2][2] - z * gs).norm() <= 1e-14 * gs.norm());
    let col = |x: Vec3| green.eval(x, xi).unwrap();
    let d0 = Complex64::new(0.0, -1.0);
    assert!(dirac_residual(&col, xo, z, 0.0, &|_| 0.0, d0, &p) <= 1e-5);
}

#[test]
fn oscillator_green_solves_dirac_equation() {
    let p = nat();
    let ms = ModelSpec::DiracOscillator { omega: 1.0 };
    let z = Complex64::new(0.6, 0.5);
    let (xo, xi) = ([0.9, -0.6, 0.7], [0.3, 0.1, 0.2]);
    let green = dirac_green_blocks(
        partial_wave_sector_kernel(&ms, Sign::Plus, z * z, 25, &p),
        partial_wave_sector_kernel(&ms, Sign::Minus, z * z, 25, &p),
        z,
        &ms,
        &p,
    )
    .unwrap();
    let col = |x: Vec3| green.eval(x, xi).unwrap();
    let res = dirac_residual(&col, xo, z, 1.0, &|r| r, ZERO, &p);
    assert!(res <= 1e-5, "residual {res:e}");
}

fn sector_identity_residual(ms: &ModelSpec, ch: Channel, sector: Sign, zeta: Complex64, p: &PhysicalParams) -> f64 {
    let r_in = 0.8;
    let h = 2e-3;
    let rs: Vec<f64> = (0..400).map(|i| 1.2 + i as f64 * h).collect();
    let g: Vec<Complex64> = rs
        .iter()
        .map(|&r| radial_kernel(ms, &ResolventQuery::new(zeta, r, r_in, ch, sector).unwrap(), p).unwrap())
        .collect();
    let g2 = second_derivative(&g, h);
    let v = effective_radial_potential(ms, ch, sector, p).unwrap();
    let scale = g.iter().map(|x| x.norm()).fold(0.0, f64::max) * zeta.norm().max(1.0);
    (10..rs.len() - 10)
        .map(|k| {
            let a = -(p.hbar * p.c).powi(2) * g2[k] + (2.0 * p.mc2() * v.total(rs[k]) - zeta) * g[k];
            a.norm() / scale
        })
        .fold(0.0, f64::max)
}

#[test]
fn sector_kernels_invert_susy_hamiltonians() {
    let p = PhysicalParams::new(1.2, 1.2, 1.4, 0.9).unwrap();
    let zeta = Complex64::new(0.7, 0.6);
    for ms in [ModelSpec::DiracOscillator { omega: 0.8 }, ModelSpec::LinearSuperpotential { gamma: 0.9 }, ModelSpec::FreeDirac] {
        for tj in [1u32, 3, 5] {
            for sigma in [Sign::Plus, Sign::Minus] {
                for sector in [Sign::Plus, Sign::Minus] {
                    let ch = Channel::radial(tj, sigma).unwrap();
                    let r = sector_identity_residual(&ms, ch, sector, zeta, &p);
                    assert!(r <= 1e-5, "{} {ch} {sector}: {r:e}", ms.name());
                }
            }
        }
    }
}

#[test]
fn kernel_poles_match_spectra() {
    let p = PhysicalParams::new(1.1, 1.1, 1.3, 0.7).unwrap();
    let osc = ModelSpec::DiracOscillator { omega: 0.9 };
    let lin = ModelSpec::LinearSuperpotential { gamma: 1.3 };
    for tj in [1u32, 3, 5] {
        for sigma in [Sign::Plus, Sign::Minus] {
            let ch = Channel::radial(tj, sigma).unwrap();
            for sector in [Sign::Plus, Sign::Minus] {
                for n in 0..=5u32 {
                    let zs = 2.0 * p.mc2() * susy_spectrum_discrete(&osc, ch, sector, n, &p).unwrap();
                    let zk = oscillator_kernel_pole(ch, sector, n, 0.9, &p);
                    assert!((zs - zk).abs() <= 1e-8 * zs);
                    let near = ResolventQuery::new(Complex64::new(zk * (1.0 + 1e-12), 0.0), 1.0, 0.5, ch, sector).unwrap();
                    assert!(oscillator_radial_kernel(&near, 0.9, &p).is_err());
                    match (linear_kernel_pole(ch, sector, n, 1.3, &p), susy_spectrum_discrete(&lin, ch, sector, n, &p)) {
                        (Some(zk), Ok(eps)) => {
                            let zs = 2.0 * p.mc2() * eps;
                            assert!((zs - zk).abs() <= 1e-8 * zs);
                            let near = ResolventQuery::new(Complex64::new(zk, 1e-13), 1.0, 0.5, ch, sector).unwrap();
                            assert!(linear_radial_kernel(&near, 1.3, &p).is_err());
                        }
                        (None, Err(_)) => {}
                        other => panic!("pole/spectrum mismatch for {ch} {sector} n={n}: {other:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn free_kernel_yukawa_limit() {
    let p = nat();
    let zeta = Complex64::new(0.6, 0.0);
    let mut last = f64::INFINITY;
    for k in 1..50 {
        let g = free_iterated_kernel([0.0; 3], [0.1 * k as f64, 0.0, 0.0], zeta, &p).unwrap();
        assert!(g.im == 0.0 && g.re > 0.0 && g.re < last);
        last = g.re;
    }
    let far = free_iterated_kernel([0.0; 3], [30.0, 0.0, 0.0], Complex64::new(2.0, 0.5), &p).unwrap();
    assert!(far.norm() < 1e-3);
}
