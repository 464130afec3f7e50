//! Channel-reduced potentials of `H±_SUSY`.

use super::model::ModelSpec;
use super::params::PhysicalParams;
use super::superpotential::Superpotential;
use crate::angular::{Channel, Sign};
use crate::error::{domain, Result};

/// Radial potential of `H±_SUSY` in one channel, acting on `u = rR`:
/// `(ħ²/2m)(U'² ∓ U'') ∓ ħ²κU'/(mr) + l(l+1)ħ²/(2mr²) + ε0`.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveRadialPotential {
    superpotential: Option<Superpotential>,
    sector: Sign,
    kappa: i32,
    l: u32,
    hbar: f64,
    m: f64,
    constant: f64,
}

impl EffectiveRadialPotential {
    /// Orbital quantum number of the channel (sets the centrifugal term).
    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn kappa(&self) -> i32 {
        self.kappa
    }

    pub fn sector(&self) -> Sign {
        self.sector
    }

    /// Additive constant (`ε0`, plus `mc²/2` for the broken free model).
    pub fn constant(&self) -> f64 {
        self.constant
    }

    /// Everything except the centrifugal term.
    pub fn without_centrifugal(&self, r: f64) -> f64 {
        let Some(u) = &self.superpotential else {
            return self.constant;
        };
        let s = self.sector.as_f64();
        let (du, d2u) = (u.du(r), u.d2u(r));
        let h2m = self.hbar * self.hbar / self.m;
        0.5 * h2m * (du * du - s * d2u) - s * h2m * self.kappa as f64 * du / r + self.constant
    }

    /// `l(l+1)ħ²/(2mr²)`.
    pub fn centrifugal(&self, r: f64) -> f64 {
        let l = self.l as f64;
        l * (l + 1.0) * self.hbar * self.hbar / (2.0 * self.m * r * r)
    }

    pub fn total(&self, r: f64) -> f64 {
        self.without_centrifugal(r) + self.centrifugal(r)
    }
}

/// Channel-reduced potential of `H^{sector}_SUSY` for a spherical model.
pub fn effective_radial_potential(
    ms: &ModelSpec,
    ch: Channel,
    sector: Sign,
    p: &PhysicalParams,
) -> Result<EffectiveRadialPotential> {
    if !ms.is_spherical() {
        return Err(domain(
            "effective_radial_potential",
            format!("{} is not a spherical model", ms.name()),
        ));
    }
    ms.validate()?;
    Ok(EffectiveRadialPotential {
        superpotential: ms.superpotential(p),
        sector,
        kappa: ch.kappa(),
        l: ch.l(),
        hbar: p.hbar,
        m: p.m,
        constant: ms.epsilon0(p) + ms.operator_constant(p),
    })
}

/// One-dimensional Witten potential `(ħ²/2m)(U'² ∓ U'') + mc²/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct WittenPotential {
    superpotential: Superpotential,
    sector: Sign,
    hbar: f64,
    m: f64,
    constant: f64,
}

impl WittenPotential {
    pub fn new(superpotential: Superpotential, sector: Sign, p: &PhysicalParams) -> Self {
        Self {
            superpotential,
            sector,
            hbar: p.hbar,
            m: p.m,
            constant: 0.5 * p.mc2(),
        }
    }

    /// Same potential without the `mc²/2` shift (the non-relativistic Witten model).
    pub fn unshifted(mut self) -> Self {
        self.constant = 0.0;
        self
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn value(&self, x: f64) -> f64 {
        let u = &self.superpotential;
        let (du, d2u) = (u.du(x), u.d2u(x));
        0.5 * self.hbar * self.hbar / self.m * (du * du - self.sector.as_f64() * d2u) + self.constant
    }
}

/// Witten potential for a one-dimensional model.
pub fn witten_potential(ms: &ModelSpec, sector: Sign, p: &PhysicalParams) -> Result<WittenPotential> {
    if !ms.is_one_dimensional() {
        return Err(domain(
            "witten_potential",
            format!("{} is not a one-dimensional model", ms.name()),
        ));
    }
    ms.validate()?;
    let u = ms.superpotential(p).expect("one-dimensional models carry a superpotential");
    Ok(WittenPotential::new(u, sector, p))
}
