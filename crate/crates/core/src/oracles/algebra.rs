//! SUSY algebra of the Dirac operator discretized on a staggered radial lattice.
//!
//! In a channel, `D† u = −iħc A u` and `D v = iħc Aᵀ v` with `A = e^{−Φ} ∂ e^{Φ}`,
//! `Φ = U − κ ln r` (`u = rR`). The upper radial function lives on half points
//! `r_min + (k+1/2)h`, the lower one on the interior grid points, and
//! `(Au)_i = (G_{i+1/2} u_{i+1/2} − G_{i−1/2} u_{i−1/2}) / (h G_i)`, `G = e^Φ`. Multiplying the
//! lower component by `−i` turns `H_D` into the real symmetric `[[M0, Sᵀ], [S, −M0]]`,
//! `S = −ħcA`, which is tridiagonal when upper and lower points are interleaved.
//!
//! The broken free model (`D = cσ·p − imc²`, `M0 = 0`) couples both spin-orbit channels: the
//! upper pair `(u_κ on half points, u_{−κ} on grid points)` maps to the lower pair
//! `(v_{−κ} on grid points, v_κ on half points)` through `S = [[−ħcA, mc²], [mc², ħcAᵀ]]`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::fd::{fd_radial_richardson, richardson_h2};
use super::report::{Check, VerificationReport};
use crate::angular::{Channel, Sign};
use crate::consts::{ALGEBRA_DENSE_MAX_POINTS, ALGEBRA_FW_TOL, ALGEBRA_IDENTITY_TOL, ALGEBRA_LEVELS, ALGEBRA_SPECTRUM_TOL};
use crate::error::{domain, Error, Result};
use crate::fields::RadialGrid;
use crate::numerics::sparse::CsrMatrix;
use crate::numerics::tridiag::SymTridiagonal;
use crate::susy_core::{
    classify_susy, effective_radial_potential, fw_mixing_coefficients, ModelSpec, PhysicalParams, SusyStatus,
};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Bidiagonal `A`: `A[i][i] = diag[i]`, `A[i][i+1] = sup[i]`; `n_v` rows, `n_u` columns.
#[derive(Debug, Clone)]
struct Bidiag {
    diag: Vec<f64>,
    sup: Vec<f64>,
    n_u: usize,
    n_v: usize,
}

/// Placement of `u` and `v` on the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    /// `u` on half points, `v` on interior grid points, `n_u = n_v`.
    Square,
    /// As `Square` plus the half point next to `r_max` (`n_u = n_v + 1`).
    ZeroMode,
    /// `u` on interior grid points, `v` on half points, stored in reversed order; excludes the
    /// `r^κ` near-kernel of `A` for `κ < 0`.
    Mirrored,
}

impl Bidiag {
    /// `A` on `g` for `Φ`.
    fn new(phi: &dyn Fn(f64) -> f64, g: &RadialGrid, layout: Layout) -> Result<Self> {
        let h = g.spacing();
        let n_v = g.len() - 2;
        let n_u = if layout == Layout::ZeroMode { n_v + 1 } else { n_v };
        let half = |k: usize| g.r_min() + (k as f64 + 0.5) * h;
        let whole = |i: usize| g.r_min() + i as f64 * h;
        let mut diag = Vec::with_capacity(n_v);
        let mut sup = Vec::with_capacity(n_u - 1);
        for i in 0..n_v {
            if layout == Layout::Mirrored {
                let k = n_v - 1 - i;
                let p0 = phi(half(k));
                diag.push((phi(whole(k + 1)) - p0).exp() / h);
                if k >= 1 {
                    sup.push(-(phi(whole(k)) - p0).exp() / h);
                }
            } else {
                let p0 = phi(whole(i + 1));
                diag.push(-(phi(half(i)) - p0).exp() / h);
                if i + 1 < n_u {
                    sup.push((phi(half(i + 1)) - p0).exp() / h);
                }
            }
        }
        if diag.iter().chain(&sup).any(|x| !x.is_finite()) {
            return Err(Error::Discretization {
                identity: "A = e^{-Φ} ∂ e^{Φ}".into(),
                detail: "non-finite lattice coefficient; the superpotential overflows on this grid".into(),
            });
        }
        Ok(Self { diag, sup, n_u, n_v })
    }

    /// `AᵀA` scaled by `s`, plus `shift` on the diagonal.
    fn gram_upper(&self, s: f64, shift: f64) -> SymTridiagonal {
        let d: Vec<f64> = (0..self.n_u)
            .map(|k| {
                let own = if k < self.n_v { self.diag[k].powi(2) } else { 0.0 };
                let above = if k >= 1 { self.sup[k - 1].powi(2) } else { 0.0 };
                s * (own + above) + shift
            })
            .collect();
        let off = (0..self.n_u - 1).map(|k| s * self.diag[k] * self.sup[k]).collect();
        SymTridiagonal::new(d, off)
    }

    /// `AAᵀ` scaled by `s`, plus `shift` on the diagonal.
    fn gram_lower(&self, s: f64, shift: f64) -> SymTridiagonal {
        let d: Vec<f64> = (0..self.n_v)
            .map(|i| s * (self.diag[i].powi(2) + self.sup.get(i).map_or(0.0, |x| x * x)) + shift)
            .collect();
        let off = (0..self.n_v - 1).map(|i| s * self.sup[i] * self.diag[i + 1]).collect();
        SymTridiagonal::new(d, off)
    }

    fn triplets(&self, scale: f64, r0: usize, c0: usize, out: &mut Vec<(usize, usize, f64)>) {
        for i in 0..self.n_v {
            out.push((r0 + i, c0 + i, scale * self.diag[i]));
            if let Some(s) = self.sup.get(i) {
                out.push((r0 + i, c0 + i + 1, scale * s));
            }
        }
    }

    fn transposed_triplets(&self, scale: f64, r0: usize, c0: usize, out: &mut Vec<(usize, usize, f64)>) {
        let mut t = Vec::new();
        self.triplets(scale, 0, 0, &mut t);
        out.extend(t.into_iter().map(|(r, c, v)| (r0 + c, c0 + r, v)));
    }
}

/// Real form `S` of `D†` (lower × upper) with the Gram blocks of `SᵀS` and `SSᵀ`.
struct Lattice {
    s: Vec<(usize, usize, f64)>,
    n_up: usize,
    n_low: usize,
    m0: f64,
    /// Diagonal blocks `(offset, matrix)` of `SᵀS`.
    upper_gram: Vec<(usize, SymTridiagonal)>,
    lower_gram: Vec<(usize, SymTridiagonal)>,
    /// `Some` when `H'` is tridiagonal in the interleaved order `u_0, v_0, u_1, v_1, …`.
    interleaved: Option<SymTridiagonal>,
}

fn channel_lattice(a: &Bidiag, p: &PhysicalParams, m0: f64) -> Lattice {
    let hc = p.hbar * p.c;
    let mut s = Vec::new();
    a.triplets(-hc, 0, 0, &mut s);
    let size = a.n_u + a.n_v;
    let diag = (0..size).map(|x| if x % 2 == 0 { m0 } else { -m0 }).collect();
    let off = (0..size - 1)
        .map(|x| {
            // x even: v_{x/2} with u_{x/2}; x odd: v_{(x-1)/2} with u_{(x+1)/2}.
            if x % 2 == 0 {
                -hc * a.diag[x / 2]
            } else {
                -hc * a.sup[(x - 1) / 2]
            }
        })
        .collect();
    Lattice {
        s,
        n_up: a.n_u,
        n_low: a.n_v,
        m0,
        upper_gram: vec![(0, a.gram_upper(hc * hc, 0.0))],
        lower_gram: vec![(0, a.gram_lower(hc * hc, 0.0))],
        interleaved: Some(SymTridiagonal::new(diag, off)),
    }
}

fn broken_lattice(a: &Bidiag, p: &PhysicalParams) -> Lattice {
    let hc = p.hbar * p.c;
    let mc2 = p.mc2();
    let n = a.n_v;
    let mut s = Vec::new();
    // rows: v_{−κ} (grid) then v_κ (half); columns: u_κ (half) then u_{−κ} (grid).
    a.triplets(-hc, 0, 0, &mut s);
    a.transposed_triplets(hc, n, n, &mut s);
    for i in 0..n {
        s.push((i, n + i, mc2));
        s.push((n + i, i, mc2));
    }
    let m2 = mc2 * mc2;
    Lattice {
        s,
        n_up: 2 * n,
        n_low: 2 * n,
        m0: 0.0,
        upper_gram: vec![(0, a.gram_upper(hc * hc, m2)), (n, a.gram_lower(hc * hc, m2))],
        lower_gram: vec![(0, a.gram_lower(hc * hc, m2)), (n, a.gram_upper(hc * hc, m2))],
        interleaved: None,
    }
}

impl Lattice {
    fn h_prime_dense(&self) -> DMatrix<f64> {
        let n = self.n_up + self.n_low;
        let mut h = DMatrix::zeros(n, n);
        for k in 0..self.n_up {
            h[(k, k)] = self.m0;
        }
        for k in 0..self.n_low {
            h[(self.n_up + k, self.n_up + k)] = -self.m0;
        }
        for &(r, c, v) in &self.s {
            h[(self.n_up + r, c)] += v;
            h[(c, self.n_up + r)] += v;
        }
        h
    }

    /// `H' x` with `x = (upper, lower)`.
    fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; x.len()];
        for k in 0..self.n_up {
            y[k] = self.m0 * x[k];
        }
        for k in 0..self.n_low {
            y[self.n_up + k] = -self.m0 * x[self.n_up + k];
        }
        for &(r, c, v) in &self.s {
            y[self.n_up + r] += v * x[c];
            y[c] += v * x[self.n_up + r];
        }
        y
    }

    fn apply_s(&self, upper: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n_low];
        for &(r, c, v) in &self.s {
            y[r] += v * upper[c];
        }
        y
    }

    /// Lowest `count` eigenvalues of `H'` above zero and highest `count` below, both ordered by `|E|`.
    fn dirac_levels(&self, count: usize) -> (Vec<f64>, Vec<f64>) {
        if let Some(t) = &self.interleaved {
            let k0 = t.count_below(0.0);
            let pos = (k0..(k0 + count).min(t.len())).map(|k| t.eigenvalue(k)).collect();
            let neg = (k0.saturating_sub(count)..k0).rev().map(|k| t.eigenvalue(k)).collect();
            (pos, neg)
        } else {
            let mut ev: Vec<f64> = self.h_prime_dense().symmetric_eigenvalues().iter().copied().collect();
            ev.sort_by(f64::total_cmp);
            let k0 = ev.partition_point(|&e| e < 0.0);
            let pos = ev[k0..(k0 + count).min(ev.len())].to_vec();
            let neg = ev[k0.saturating_sub(count)..k0].iter().rev().copied().collect();
            (pos, neg)
        }
    }
}

/// Lowest `count` eigenvalues over a set of diagonal blocks, with embedded eigenvectors if asked.
fn block_lowest(blocks: &[(usize, SymTridiagonal)], size: usize, count: usize, vectors: bool) -> Vec<(f64, Vec<f64>)> {
    let mut all: Vec<(f64, usize)> = Vec::new();
    for (b, (_, t)) in blocks.iter().enumerate() {
        all.extend(t.lowest(count).into_iter().map(|e| (e, b)));
    }
    all.sort_by(|a, b| a.0.total_cmp(&b.0));
    all.truncate(count);
    all.into_iter()
        .map(|(e, b)| {
            let mut v = Vec::new();
            if vectors {
                let (offset, t) = &blocks[b];
                v = vec![0.0; size];
                v[*offset..offset + t.len()].copy_from_slice(&t.eigenvector(e));
            }
            (e, v)
        })
        .collect()
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn complex_blocks(l: &Lattice) -> (CsrMatrix, CsrMatrix, CsrMatrix, CsrMatrix) {
    let (nu, nl) = (l.n_up, l.n_low);
    let d_dag = CsrMatrix::from_triplets(nl, nu, &l.s.iter().map(|&(r, c, v)| (r, c, I * v)).collect::<Vec<_>>());
    let d = d_dag.adjoint();
    let zu = CsrMatrix::zeros(nu, nu);
    let zl = CsrMatrix::zeros(nl, nl);
    let zul = CsrMatrix::zeros(nu, nl);
    let q = CsrMatrix::block(&[vec![&zu, &zul], vec![&d_dag, &zl]]);
    let iu = CsrMatrix::identity(nu);
    let il = CsrMatrix::identity(nl);
    let w = CsrMatrix::block(&[vec![&iu, &zul], vec![&CsrMatrix::zeros(nl, nu), &il.scale(Complex64::new(-1.0, 0.0))]]);
    let m0 = Complex64::new(l.m0, 0.0);
    let h = CsrMatrix::block(&[vec![&iu.scale(m0), &d], vec![&d_dag, &il.scale(-m0)]]);
    (q, w, h, CsrMatrix::identity(nu + nl))
}

/// Discretizes `Q`, `Q†`, `W` and `H_D` of a spherical model in channel `ch` on `g` and checks:
///
/// - `Q² = 0`, `{W, Q} = 0`, `W² = 1` exactly;
/// - `‖{Q, Q†} + M0² − H_D²‖ / ‖H_D²‖ <= 1e-10` and block-diagonality of `H_D²`;
/// - the lowest levels of `H_D` against `±sqrt(M0² + eig(DD†))` on the same lattice (`1e-5`),
///   and against `sqrt(2mc² ε)` of the finite-difference `H±_SUSY` eigensolver on `g`;
/// - the FW rotation of each `(Ψ+, Ψ−)` pair gives `diag(+E, −E)`;
/// - zero modes: an unpaired `+M0` level exactly when SUSY is unbroken with the zero mode in
///   this channel; none otherwise.
///
/// The broken free model is diagonalized densely on at most 256 points spanning the same
/// interval; its levels are also compared with the unbroken free realization.
pub fn susy_algebra_check(ms: &ModelSpec, ch: Channel, g: &RadialGrid, p: &PhysicalParams) -> Result<VerificationReport> {
    if !ms.is_spherical() {
        return Err(domain("susy_algebra_check", format!("{} is not a spherical model", ms.name())));
    }
    ms.validate()?;
    let class = classify_susy(ms, p)?;
    let zero_mode_here = class.status == SusyStatus::Unbroken
        && class.zero_mode_sector == Some(Sign::Plus)
        && ch.sigma == Sign::Plus;
    let u = ms.superpotential(p);
    let kappa = ch.kappa() as f64;
    let phi = |r: f64| u.as_ref().map_or(0.0, |u| u.u(r)) - kappa * r.ln();
    let broken = matches!(ms, ModelSpec::FreeDiracBrokenSusy);
    let m0 = ms.rest_energy(p);

    let mut report = VerificationReport::new(format!("algebra/{}/j={}/2,sigma={}", ms.name(), ch.twice_j, ch.sigma));
    report.input("model", ms).input("channel", ch).input("points", g.len()).input("r_max", g.r_max());
    if broken {
        report.push(Check::boolean("classify_susy reports Broken", class.status == SusyStatus::Broken));
    }

    // Operator identities on the full grid.
    let layout = if zero_mode_here {
        Layout::ZeroMode
    } else if kappa < 0.0 && !broken {
        Layout::Mirrored
    } else {
        Layout::Square
    };
    let a = Bidiag::new(&phi, g, layout)?;
    let lat = if broken { broken_lattice(&a, p) } else { channel_lattice(&a, p, m0) };
    let (q, w, h, one) = complex_blocks(&lat);
    let qd = q.adjoint();
    report.push(Check::boolean("Q² = 0", (&q * &q).max_abs() == 0.0));
    report.push(Check::boolean("(Q†)² = 0", (&qd * &qd).max_abs() == 0.0));
    report.push(Check::boolean("{W, Q} = 0", (&(&w * &q) + &(&q * &w)).max_abs() == 0.0));
    report.push(Check::boolean("W² = 1", (&(&w * &w) - &one).max_abs() == 0.0));
    let h2 = &h * &h;
    let anti = &(&q * &qd) + &(&qd * &q);
    let lhs = &anti + &one.scale(Complex64::new(m0 * m0, 0.0));
    let defect = (&lhs - &h2).frobenius_norm() / h2.frobenius_norm();
    report.check("‖{Q,Q†} + M0² − H_D²‖ / ‖H_D²‖", defect, ALGEBRA_IDENTITY_TOL);
    let (nu, nl) = (lat.n_up, lat.n_low);
    let off = h2.sub_block(0, nu, nu, nl).max_abs().max(h2.sub_block(nu, 0, nl, nu).max_abs());
    report.check("H_D² off-diagonal blocks / ‖H_D²‖", off / h2.max_abs(), ALGEBRA_IDENTITY_TOL);
    if defect > 1e3 * ALGEBRA_IDENTITY_TOL {
        return Err(Error::Discretization {
            identity: "H_D² = {Q,Q†} + M0²".into(),
            detail: format!("relative defect {defect:.3e}"),
        });
    }

    // Spectra (a coarser lattice over the same interval for the dense broken case).
    let spec_lat;
    let spec_grid;
    let lat = if broken && g.len() > ALGEBRA_DENSE_MAX_POINTS {
        spec_grid = RadialGrid::uniform(g.r_min(), g.r_max(), ALGEBRA_DENSE_MAX_POINTS)?;
        report.input("spectral_points", ALGEBRA_DENSE_MAX_POINTS);
        spec_lat = broken_lattice(&Bidiag::new(&phi, &spec_grid, Layout::Square)?, p);
        &spec_lat
    } else {
        spec_grid = *g;
        &lat
    };
    let count = ALGEBRA_LEVELS;
    let (pos, neg) = lat.dirac_levels(count + 1);
    let upper = block_lowest(&lat.upper_gram, lat.n_up, count, true);
    let lower = block_lowest(&lat.lower_gram, lat.n_low, count, false);
    let m0sq = lat.m0 * lat.m0;
    let rel = |a: f64, b: f64| (a - b).abs() / b.abs();
    let dev_pos = upper.iter().zip(&pos).map(|((l, _), e)| rel(*e, (m0sq + l).sqrt())).fold(0.0, f64::max);
    let dev_neg = lower.iter().zip(&neg).map(|((l, _), e)| rel(*e, -(m0sq + l).sqrt())).fold(0.0, f64::max);
    report.check("E+ vs +sqrt(M0² + eig DD†), same lattice", dev_pos, ALGEBRA_SPECTRUM_TOL);
    report.check("E− vs −sqrt(M0² + eig D†D), same lattice", dev_neg, ALGEBRA_SPECTRUM_TOL);

    // Independent finite-difference H+_SUSY: both discretizations extrapolated to h → 0 over
    // grids with spacing h, h/2, h/4. The two treat the wall at r_max differently, so only
    // levels that do not move when the FD box shrinks to 3/4 are compared.
    let two_mc2 = 2.0 * p.mc2();
    if !broken && g.r_min() == 0.0 {
        let counts: Vec<usize> = (0..3).map(|k| (g.len() - 1) * (1 << k) + 1).collect();
        let mut hs = Vec::new();
        let mut levels = Vec::new();
        for &n in &counts {
            let gk = RadialGrid::uniform(g.r_min(), g.r_max(), n)?;
            hs.push(gk.spacing());
            levels.push(channel_lattice(&Bidiag::new(&phi, &gk, layout)?, p, m0).dirac_levels(count).0);
        }
        let lattice_limit = richardson_h2(&hs, &levels);
        let pot = effective_radial_potential(ms, ch, Sign::Plus, p)?;
        let v = |r: f64| pot.without_centrifugal(r);
        let to_energy = |eps: &Vec<f64>| eps.iter().map(|e| (two_mc2 * e).sqrt()).collect::<Vec<f64>>();
        let fd_limit = to_energy(&fd_radial_richardson(&v, ch.l(), p, g.r_max(), &counts, count)?);
        let short: Vec<usize> = counts.iter().map(|n| (n - 1) * 3 / 4 + 1).collect();
        let r_short = (short[0] - 1) as f64 * hs[0];
        let fd_short = to_energy(&fd_radial_richardson(&v, ch.l(), p, r_short, &short, count)?);
        let confined: Vec<usize> = (0..fd_limit.len().min(lattice_limit.len()))
            .filter(|&k| rel(fd_short[k], fd_limit[k]) <= 0.1 * ALGEBRA_SPECTRUM_TOL)
            .collect();
        report.input("fd_confined_levels", confined.len());
        if !confined.is_empty() {
            let dev_fd = confined.iter().map(|&k| rel(lattice_limit[k], fd_limit[k])).fold(0.0, f64::max);
            report.check("E+ vs sqrt(2mc² ε) of finite-difference H+_SUSY (h → 0)", dev_fd, ALGEBRA_SPECTRUM_TOL);
        }
    }

    // Zero modes.
    let eps0 = m0sq / two_mc2;
    let scale = p.mc2();
    let near = |list: &[f64], target: f64| list.iter().filter(|e| (*e - target).abs() <= 1e-8 * scale).count();
    if zero_mode_here {
        report.push(Check::boolean("unpaired zero mode at E = +M0", near(&pos, lat.m0) == 1));
        report.push(Check::boolean("no partner at E = −M0", near(&neg, -lat.m0) == 0));
    } else {
        let lowest_eps = upper[0].0 / two_mc2 + eps0;
        report.push(
            Check::boolean("no H_SUSY level at ε0", lowest_eps - eps0 > 1e-8 * scale)
                .with_note(format!("lowest ε − ε0 = {:.6e}", lowest_eps - eps0)),
        );
    }

    // FW rotation per pair.
    let mut fw_dev: f64 = 0.0;
    for (lambda, psi_plus) in &upper {
        if *lambda <= 1e-10 * scale * scale {
            continue;
        }
        let big = lambda.sqrt();
        let e = (m0sq + lambda).sqrt();
        let psi_minus: Vec<f64> = lat.apply_s(psi_plus).iter().map(|x| x / big).collect();
        let (cp, cm) = fw_mixing_coefficients(e * e / two_mc2, eps0)?;
        let pos_v: Vec<f64> = psi_plus.iter().map(|x| cp * x).chain(psi_minus.iter().map(|x| cm * x)).collect();
        let neg_v: Vec<f64> = psi_plus.iter().map(|x| -cm * x).chain(psi_minus.iter().map(|x| cp * x)).collect();
        let (hp, hn) = (lat.apply(&pos_v), lat.apply(&neg_v));
        let res_p: Vec<f64> = hp.iter().zip(&pos_v).map(|(a, b)| a - e * b).collect();
        let res_n: Vec<f64> = hn.iter().zip(&neg_v).map(|(a, b)| a + e * b).collect();
        // Rotated 2x2 operator must be diag(+E, −E).
        let rotated = [dot(&pos_v, &hp) - e, dot(&neg_v, &hn) + e, dot(&pos_v, &hn)];
        let worst = rotated.iter().fold(norm(&res_p).max(norm(&res_n)), |m, x| m.max(x.abs()));
        fw_dev = fw_dev.max(worst / e);
    }
    report.check("FW rotation gives diag(+E, −E)", fw_dev, ALGEBRA_FW_TOL);

    if broken {
        // Same levels as the unbroken free realization on the same lattice.
        let free = channel_lattice(&Bidiag::new(&phi, &spec_grid, Layout::Square)?, p, p.mc2());
        let (free_pos, _) = free.dirac_levels(count);
        let dev = free_pos
            .iter()
            .enumerate()
            .map(|(k, e)| rel(pos[2 * k], *e).max(rel(pos[2 * k + 1], *e)))
            .take(count / 2)
            .fold(0.0, f64::max);
        report.check("levels equal the unbroken free realization", dev, ALGEBRA_SPECTRUM_TOL);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(ms: ModelSpec, sigma: Sign, r_max: f64, n: usize) -> VerificationReport {
        let p = PhysicalParams::natural();
        let ch = Channel::radial(1, sigma).unwrap();
        let g = RadialGrid::uniform(0.0, r_max, n).unwrap();
        susy_algebra_check(&ms, ch, &g, &p).unwrap()
    }

    #[test]
    fn oscillator_channels() {
        for sigma in [Sign::Plus, Sign::Minus] {
            let r = run(ModelSpec::DiracOscillator { omega: 1.0 }, sigma, 10.0, 1000);
            assert!(r.pass(), "{}", r.to_json(false));
            assert!(r.checks.iter().any(|c| c.name.contains("finite-difference")));
        }
    }

    #[test]
    fn oscillator_zero_mode_is_unpaired() {
        let r = run(ModelSpec::DiracOscillator { omega: 1.0 }, Sign::Plus, 10.0, 600);
        assert!(r.checks.iter().any(|c| c.name.contains("unpaired zero mode") && c.pass));
    }

    #[test]
    fn free_and_broken_free() {
        let r = run(ModelSpec::FreeDirac, Sign::Plus, 20.0, 1000);
        assert!(r.pass(), "{}", r.to_json(false));
        let r = run(ModelSpec::FreeDiracBrokenSusy, Sign::Plus, 20.0, 1000);
        assert!(r.pass(), "{}", r.to_json(false));
    }

    #[test]
    fn linear_channel() {
        let r = run(ModelSpec::LinearSuperpotential { gamma: 1.0 }, Sign::Plus, 40.0, 2000);
        assert!(r.pass(), "{}", r.to_json(false));
        assert!(r.checks.iter().any(|c| c.name.contains("finite-difference")));
    }
}
