//! Finite-difference eigensolvers for radial and one-dimensional Schrödinger operators.
//!
//! Three-point Laplacian with Dirichlet ends, diagonalized as a symmetric tridiagonal matrix.

use num_complex::Complex64;

use crate::angular::Sign;
use crate::consts::{FD_EIGEN_TOL, FD_MAX_COUNT};
use crate::error::{domain, Error, Result};
use crate::fields::{RadialFunction, RadialGrid};
use crate::numerics::tridiag::SymTridiagonal;
use crate::susy_core::{PhysicalParams, Superpotential, WittenPotential};

/// Uniform one-dimensional grid `x_i = x_min + i h`, `i = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn uniform(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !(x_max > x_min && x_min.is_finite() && x_max.is_finite()) || n < 8 {
            return Err(Error::Grid {
                op: "Grid1D",
                detail: format!("need x_min < x_max and n >= 8, got [{x_min}, {x_max}] with {n}"),
            });
        }
        Ok(Self { x_min, x_max, n })
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.spacing()
    }
}

/// Lowest eigenpairs of a radial problem; `functions[k]` is `R = u/r`, unit norm in `r² dr`.
#[derive(Debug, Clone)]
pub struct FdSolution {
    pub eigenvalues: Vec<f64>,
    pub functions: Vec<RadialFunction>,
}

fn check_count(op: &'static str, count: usize) -> Result<()> {
    if count == 0 || count > FD_MAX_COUNT {
        return Err(domain(op, format!("count {count} outside 1..={FD_MAX_COUNT}")));
    }
    Ok(())
}

/// `-(ħ²/2m) d²/dx² + V` on the interior points of `x_0 + i h`, `i = 1..n-1`.
fn dirichlet_matrix(v: &dyn Fn(f64) -> f64, x0: f64, h: f64, n: usize, p: &PhysicalParams) -> Result<SymTridiagonal> {
    let kin = p.hbar * p.hbar / (p.m * h * h);
    let mut diag = Vec::with_capacity(n - 2);
    for i in 1..n - 1 {
        let vi = v(x0 + i as f64 * h);
        if !vi.is_finite() {
            return Err(domain("fd_eigensolver", format!("potential is {vi} at x = {}", x0 + i as f64 * h)));
        }
        diag.push(kin + vi);
    }
    Ok(SymTridiagonal::new(diag, vec![-0.5 * kin; n - 3]))
}

fn lowest_checked(
    op: &'static str,
    v: &dyn Fn(f64) -> f64,
    x0: f64,
    x1: f64,
    n: usize,
    count: usize,
    p: &PhysicalParams,
) -> Result<(SymTridiagonal, Vec<f64>)> {
    let h = (x1 - x0) / (n - 1) as f64;
    let t = dirichlet_matrix(v, x0, h, n, p)?;
    let ev = t.lowest(count);
    let fine = dirichlet_matrix(v, x0, 0.5 * h, 2 * n - 1, p)?.lowest(count);
    let scale = p.hbar * p.hbar / (p.m * (x1 - x0) * (x1 - x0));
    for (k, (a, b)) in ev.iter().zip(&fine).enumerate() {
        let shift = (a - b).abs();
        if shift > 10.0 * FD_EIGEN_TOL * a.abs().max(scale) {
            return Err(Error::Grid {
                op,
                detail: format!("level {k} moves by {shift:.3e} when the point count doubles ({a} -> {b})"),
            });
        }
    }
    Ok((t, ev))
}

/// Lowest `count` eigenpairs of `-(ħ²/2m)u'' + [V(r) + l(l+1)ħ²/2mr²]u` with `u = 0` at both
/// grid ends.
pub fn fd_radial_eigensolver(
    v: &dyn Fn(f64) -> f64,
    l: u32,
    p: &PhysicalParams,
    g: &RadialGrid,
    count: usize,
) -> Result<FdSolution> {
    check_count("fd_radial_eigensolver", count)?;
    let cf = l as f64 * (l as f64 + 1.0) * p.hbar * p.hbar / (2.0 * p.m);
    let total = |r: f64| v(r) + cf / (r * r);
    let (t, eigenvalues) =
        lowest_checked("fd_radial_eigensolver", &total, g.r_min(), g.r_max(), g.len(), count, p)?;
    let mut functions = Vec::with_capacity(count);
    for &e in &eigenvalues {
        let u = t.eigenvector(e);
        let mut r_vals = vec![0.0; g.len()];
        for (i, ui) in u.iter().enumerate() {
            r_vals[i + 1] = ui / g.r(i + 1);
        }
        r_vals[0] = if g.r_min() > 0.0 {
            0.0
        } else {
            3.0 * r_vals[1] - 3.0 * r_vals[2] + r_vals[3]
        };
        let f = RadialFunction::new(*g, r_vals.into_iter().map(|x| Complex64::new(x, 0.0)).collect())?;
        functions.push(f.normalized()?);
    }
    Ok(FdSolution { eigenvalues, functions })
}

/// Polynomial extrapolation in `h²` to `h = 0` (Neville), per level.
pub fn richardson_h2(spacings: &[f64], values: &[Vec<f64>]) -> Vec<f64> {
    let count = values.iter().map(Vec::len).min().unwrap_or(0);
    let x: Vec<f64> = spacings.iter().map(|h| h * h).collect();
    (0..count)
        .map(|k| {
            let mut t: Vec<f64> = values.iter().map(|v| v[k]).collect();
            let n = t.len();
            for m in 1..n {
                for i in 0..n - m {
                    t[i] = (x[i + m] * t[i] - x[i] * t[i + 1]) / (x[i + m] - x[i]);
                }
            }
            t[0]
        })
        .collect()
}

/// Radial eigenvalues extrapolated over grids `[0, r_max]` with the given point counts.
pub fn fd_radial_richardson(
    v: &dyn Fn(f64) -> f64,
    l: u32,
    p: &PhysicalParams,
    r_max: f64,
    point_counts: &[usize],
    count: usize,
) -> Result<Vec<f64>> {
    check_count("fd_radial_richardson", count)?;
    let cf = l as f64 * (l as f64 + 1.0) * p.hbar * p.hbar / (2.0 * p.m);
    let total = |r: f64| v(r) + cf / (r * r);
    let mut hs = Vec::new();
    let mut vals = Vec::new();
    for &n in point_counts {
        let g = RadialGrid::uniform(0.0, r_max, n)?;
        hs.push(g.spacing());
        vals.push(dirichlet_matrix(&total, 0.0, g.spacing(), n, p)?.lowest(count));
    }
    Ok(richardson_h2(&hs, &vals))
}

/// Lowest eigenvalues of `p²/2m + (ħ²/2m)(U'² ∓ U'') + mc²/2` with Dirichlet ends.
pub fn fd_witten1d_eigensolver(
    u: &Superpotential,
    sector: Sign,
    p: &PhysicalParams,
    g: &Grid1D,
    count: usize,
) -> Result<Vec<f64>> {
    check_count("fd_witten1d_eigensolver", count)?;
    let w = WittenPotential::new(u.clone(), sector, p);
    let v = |x: f64| w.value(x);
    Ok(lowest_checked("fd_witten1d_eigensolver", &v, g.x_min, g.x_max, g.n, count, p)?.1)
}

/// One-dimensional eigenvalues extrapolated over several point counts.
pub fn fd_witten1d_richardson(
    u: &Superpotential,
    sector: Sign,
    p: &PhysicalParams,
    x_min: f64,
    x_max: f64,
    point_counts: &[usize],
    count: usize,
) -> Result<Vec<f64>> {
    check_count("fd_witten1d_richardson", count)?;
    let w = WittenPotential::new(u.clone(), sector, p);
    let v = |x: f64| w.value(x);
    let mut hs = Vec::new();
    let mut vals = Vec::new();
    for &n in point_counts {
        let g = Grid1D::uniform(x_min, x_max, n)?;
        hs.push(g.spacing());
        vals.push(dirichlet_matrix(&v, x_min, g.spacing(), n, p)?.lowest(count));
    }
    Ok(richardson_h2(&hs, &vals))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_oscillator_and_hydrogen() {
        let p = PhysicalParams::natural();
        let g = RadialGrid::uniform(0.0, 20.0, 4000).unwrap();
        let osc = fd_radial_eigensolver(&|r| 0.5 * r * r, 0, &p, &g, 3).unwrap();
        assert!((osc.eigenvalues[0] - 1.5).abs() < 1e-4);
        assert!((osc.eigenvalues[2] - 5.5).abs() < 1e-3);
        let g = RadialGrid::uniform(0.0, 60.0, 6000).unwrap();
        let h = fd_radial_eigensolver(&|r| -1.0 / r, 0, &p, &g, 2).unwrap();
        assert!((h.eigenvalues[0] + 0.5).abs() < 1e-4, "{}", h.eigenvalues[0]);
        let f = &h.functions[0];
        assert!((f.norm_sqr() - 1.0).abs() < 1e-10);
        // R = 2 e^{-r}
        assert!((f.values()[500].re - 2.0 * (-g.r(500)).exp()).abs() < 1e-3);
    }

    #[test]
    fn richardson_improves_oscillator() {
        let p = PhysicalParams::natural();
        let ev = fd_radial_richardson(&|r| 0.5 * r * r, 1, &p, 20.0, &[2000, 4000, 8000], 4).unwrap();
        for (k, e) in ev.iter().enumerate() {
            let exact = 2.0 * k as f64 + 2.5;
            assert!((e - exact).abs() < 1e-9 * exact, "{k}: {e}");
        }
    }

    #[test]
    fn count_limits() {
        let p = PhysicalParams::natural();
        let g = RadialGrid::uniform(0.0, 20.0, 100).unwrap();
        assert!(fd_radial_eigensolver(&|r| r * r, 0, &p, &g, 0).is_err());
        assert!(fd_radial_eigensolver(&|r| r * r, 0, &p, &g, 21).is_err());
    }

    #[test]
    fn coarse_grid_is_flagged() {
        let p = PhysicalParams::natural();
        let g = RadialGrid::uniform(0.0, 20.0, 40).unwrap();
        let err = fd_radial_eigensolver(&|r| 0.5 * r * r, 0, &p, &g, 5).unwrap_err();
        assert!(matches!(err, Error::Grid { .. }));
    }

    #[test]
    fn witten_oscillator_ladder() {
        let p = PhysicalParams::natural();
        let u = Superpotential::Harmonic { k: 1.0 };
        let g = Grid1D::uniform(-12.0, 12.0, 6001).unwrap();
        let plus = fd_witten1d_eigensolver(&u, Sign::Plus, &p, &g, 4).unwrap();
        let minus = fd_witten1d_eigensolver(&u, Sign::Minus, &p, &g, 3).unwrap();
        assert!((plus[0] - 0.5).abs() < 1e-4);
        for k in 0..3 {
            assert!((plus[k + 1] - minus[k]).abs() < 1e-4);
        }
    }
}
