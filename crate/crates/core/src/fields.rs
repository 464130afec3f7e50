//! Uniform radial grids, sampled radial functions and 2-/4-spinor fields built on them.

use num_complex::Complex64;

use crate::angular::Channel;
use crate::consts::{DEFAULT_GRID_EXTENT, DEFAULT_GRID_POINTS};
use crate::error::{domain, Error, Result};
use crate::numerics::quadrature::{simpson_uniform, simpson_uniform_complex};
use crate::susy_core::{ModelSpec, PhysicalParams};

/// Minimum number of grid points.
pub const MIN_GRID_POINTS: usize = 16;

/// Uniform grid `r_i = r_min + i h`, `i = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    n: usize,
}

impl RadialGrid {
    pub fn uniform(r_min: f64, r_max: f64, n: usize) -> Result<Self> {
        if !(r_min >= 0.0 && r_max > r_min && r_max.is_finite()) {
            return Err(Error::Grid {
                op: "RadialGrid",
                detail: format!("need 0 <= r_min < r_max, got [{r_min}, {r_max}]"),
            });
        }
        if n < MIN_GRID_POINTS {
            return Err(Error::Grid {
                op: "RadialGrid",
                detail: format!("{n} points, need at least {MIN_GRID_POINTS}"),
            });
        }
        Ok(Self { r_min, r_max, n })
    }

    /// `[0, 20 L]` with the default point count, `L` the model length scale.
    pub fn for_model(ms: &ModelSpec, p: &PhysicalParams) -> Self {
        let r_max = DEFAULT_GRID_EXTENT * ms.length_scale(p);
        Self {
            r_min: 0.0,
            r_max,
            n: DEFAULT_GRID_POINTS,
        }
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }
    pub fn r_max(&self) -> f64 {
        self.r_max
    }
    pub fn len(&self) -> usize {
        self.n
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n - 1) as f64
    }
    pub fn r(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.r_max
        } else {
            self.r_min + i as f64 * self.spacing()
        }
    }
    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.r(i)).collect()
    }
}

/// Radial profile `R(r)` sampled on a grid; norms use the measure `r² dr`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    grid: RadialGrid,
    values: Vec<Complex64>,
}

impl RadialFunction {
    pub fn new(grid: RadialGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Grid {
                op: "RadialFunction",
                detail: format!("{} samples for {} grid points", values.len(), grid.len()),
            });
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(domain("RadialFunction", "non-finite sample"));
        }
        Ok(Self { grid, values })
    }

    pub fn from_real(grid: RadialGrid, values: Vec<f64>) -> Result<Self> {
        Self::new(grid, values.into_iter().map(|v| Complex64::new(v, 0.0)).collect())
    }

    pub fn from_fn(grid: RadialGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::from_real(grid, grid.points().into_iter().map(f).collect())
    }

    pub fn zeros(grid: RadialGrid) -> Self {
        Self {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    /// Rescaled to unit grid norm.
    pub fn normalized(self) -> Result<Self> {
        let n = self.norm();
        if !(n > 0.0) {
            return Err(domain("RadialFunction::normalized", "zero function"));
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `∫ |R|² r² dr` by Simpson's rule.
    pub fn norm_sqr(&self) -> f64 {
        let w: Vec<f64> = self
            .values
            .iter()
            .zip(self.grid.points())
            .map(|(v, r)| v.norm_sqr() * r * r)
            .collect();
        simpson_uniform(&w, self.grid.spacing())
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `∫ conj(self) other r² dr`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.check_grid(other)?;
        let w: Vec<Complex64> = self
            .values
            .iter()
            .zip(&other.values)
            .zip(self.grid.points())
            .map(|((a, b), r)| a.conj() * b * (r * r))
            .collect();
        Ok(simpson_uniform_complex(&w, self.grid.spacing()))
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_grid(other)?;
        Ok(Self {
            grid: self.grid,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `|R(r_max)| / max |R|`.
    pub fn boundary_ratio(&self) -> f64 {
        let m = self.max_abs();
        if m == 0.0 {
            0.0
        } else {
            self.values[self.values.len() - 1].norm() / m
        }
    }

    /// Estimated share of the norm beyond `r_max`, from the decay of the last samples
    /// (infinite when the function does not decay there).
    pub fn tail_fraction(&self) -> f64 {
        let total = self.norm_sqr();
        let n = self.values.len();
        let r = self.grid.r_max();
        let h = self.grid.spacing();
        let last = self.values[n - 1].norm_sqr() * r * r;
        if last == 0.0 {
            return 0.0;
        }
        let prev = self.values[n - 2].norm_sqr() * (r - h) * (r - h);
        if prev <= last || total == 0.0 {
            return f64::INFINITY;
        }
        let decay_length = h / (prev / last).ln();
        last * decay_length / total
    }

    /// Interior sign changes after removing the global phase, ignoring samples below `1e-8`
    /// of the peak.
    pub fn node_count(&self) -> usize {
        let peak = self
            .values
            .iter()
            .copied()
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .unwrap_or_default();
        if peak.norm() == 0.0 {
            return 0;
        }
        let phase = peak.conj() / peak.norm();
        let floor = 1e-8 * peak.norm();
        let mut last = 0.0f64;
        let mut count = 0;
        for v in &self.values {
            if v.norm() < floor {
                continue;
            }
            let x = (v * phase).re;
            if last != 0.0 && x * last < 0.0 {
                count += 1;
            }
            last = x;
        }
        count
    }

    fn check_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::Grid {
                op: "RadialFunction",
                detail: "functions live on different grids".into(),
            });
        }
        Ok(())
    }
}

/// Two-spinor field `R(r) φ_ch(θ, φ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    pub radial: RadialFunction,
    pub ch: Channel,
}

impl SpinorField {
    pub fn new(radial: RadialFunction, ch: Channel) -> Self {
        Self { radial, ch }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.radial.norm_sqr()
    }

    /// Inner product; distinct channels are orthogonal.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.ch != other.ch {
            return Ok(Complex64::new(0.0, 0.0));
        }
        self.radial.inner(&other.radial)
    }
}

/// Four-spinor with upper block in `H+` space and lower block in `H-` space.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracSpinor {
    pub upper: SpinorField,
    pub lower: SpinorField,
}

impl DiracSpinor {
    /// Blocks must share `(j, m_j)` with opposite σ.
    pub fn new(upper: SpinorField, lower: SpinorField) -> Result<Self> {
        if upper.ch.flipped() != lower.ch {
            return Err(domain(
                "DiracSpinor",
                format!("block channels {} and {} are not σ-partners", upper.ch, lower.ch),
            ));
        }
        if upper.radial.grid() != lower.radial.grid() {
            return Err(Error::Grid {
                op: "DiracSpinor",
                detail: "blocks live on different grids".into(),
            });
        }
        Ok(Self { upper, lower })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.upper.norm_sqr() + self.lower.norm_sqr()
    }

    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        Ok(self.upper.inner(&other.upper)? + self.lower.inner(&other.lower)?)
    }
}
