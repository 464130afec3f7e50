//! Superpotentials `U(r)` (or `U(x)` in one dimension) and their derivatives.

use crate::error::{domain, Result};

/// Tabulated `U`, `U'`, `U''` on an increasing grid, interpolated by cubic Hermite
/// polynomials (`U` from `U, U'`; `U'` from `U', U''`) and linearly for `U''`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSuperpotential {
    x: Vec<f64>,
    u: Vec<f64>,
    du: Vec<f64>,
    d2u: Vec<f64>,
}

impl SampledSuperpotential {
    pub fn new(x: Vec<f64>, u: Vec<f64>, du: Vec<f64>, d2u: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n < 2 || u.len() != n || du.len() != n || d2u.len() != n {
            return Err(domain(
                "SampledSuperpotential",
                format!(
                    "grids must match and have at least 2 points (x {}, U {}, U' {}, U'' {})",
                    n,
                    u.len(),
                    du.len(),
                    d2u.len()
                ),
            ));
        }
        if x.windows(2).any(|w| w[1] <= w[0]) {
            return Err(domain("SampledSuperpotential", "abscissae must increase"));
        }
        if x.iter().chain(&u).chain(&du).chain(&d2u).any(|v| !v.is_finite()) {
            return Err(domain("SampledSuperpotential", "non-finite sample"));
        }
        Ok(Self { x, u, du, d2u })
    }

    /// Samples analytic `U`, `U'`, `U''` on `n` uniform points of `[a, b]`.
    pub fn from_fns(
        a: f64,
        b: f64,
        n: usize,
        u: impl Fn(f64) -> f64,
        du: impl Fn(f64) -> f64,
        d2u: impl Fn(f64) -> f64,
    ) -> Result<Self> {
        let h = (b - a) / (n as f64 - 1.0);
        let x: Vec<f64> = (0..n).map(|i| a + i as f64 * h).collect();
        Self::new(
            x.clone(),
            x.iter().map(|&t| u(t)).collect(),
            x.iter().map(|&t| du(t)).collect(),
            x.iter().map(|&t| d2u(t)).collect(),
        )
    }

    pub fn range(&self) -> (f64, f64) {
        (self.x[0], self.x[self.x.len() - 1])
    }

    pub fn abscissae(&self) -> &[f64] {
        &self.x
    }

    fn locate(&self, t: f64) -> (usize, f64, f64) {
        let n = self.x.len();
        let i = match self.x.binary_search_by(|v| v.partial_cmp(&t).expect("finite")) {
            Ok(i) => i.min(n - 2),
            Err(0) => 0,
            Err(i) => (i - 1).min(n - 2),
        };
        let h = self.x[i + 1] - self.x[i];
        (i, (t - self.x[i]) / h, h)
    }

    fn hermite(f0: f64, f1: f64, d0: f64, d1: f64, s: f64, h: f64) -> f64 {
        let s2 = s * s;
        let s3 = s2 * s;
        (2.0 * s3 - 3.0 * s2 + 1.0) * f0
            + (s3 - 2.0 * s2 + s) * h * d0
            + (-2.0 * s3 + 3.0 * s2) * f1
            + (s3 - s2) * h * d1
    }

    pub fn u(&self, t: f64) -> f64 {
        let (i, s, h) = self.locate(t);
        Self::hermite(self.u[i], self.u[i + 1], self.du[i], self.du[i + 1], s, h)
    }

    pub fn du(&self, t: f64) -> f64 {
        let (i, s, h) = self.locate(t);
        Self::hermite(self.du[i], self.du[i + 1], self.d2u[i], self.d2u[i + 1], s, h)
    }

    pub fn d2u(&self, t: f64) -> f64 {
        let (i, s, _) = self.locate(t);
        self.d2u[i] * (1.0 - s) + self.d2u[i + 1] * s
    }
}

/// A superpotential with evaluators for `U`, `U'`, `U''`.
#[derive(Debug, Clone, PartialEq)]
pub enum Superpotential {
    /// `U = (k/2) r²` with `k = mω/ħ`.
    Harmonic { k: f64 },
    /// `U = γ r`.
    Linear { gamma: f64 },
    Sampled(SampledSuperpotential),
}

impl Superpotential {
    pub fn u(&self, r: f64) -> f64 {
        match self {
            Superpotential::Harmonic { k } => 0.5 * k * r * r,
            Superpotential::Linear { gamma } => gamma * r,
            Superpotential::Sampled(s) => s.u(r),
        }
    }

    pub fn du(&self, r: f64) -> f64 {
        match self {
            Superpotential::Harmonic { k } => k * r,
            Superpotential::Linear { gamma } => *gamma,
            Superpotential::Sampled(s) => s.du(r),
        }
    }

    pub fn d2u(&self, r: f64) -> f64 {
        match self {
            Superpotential::Harmonic { k } => *k,
            Superpotential::Linear { .. } => 0.0,
            Superpotential::Sampled(s) => s.d2u(r),
        }
    }

    /// Sampled range, if the superpotential is tabulated.
    pub fn sampled_range(&self) -> Option<(f64, f64)> {
        match self {
            Superpotential::Sampled(s) => Some(s.range()),
            _ => None,
        }
    }
}
