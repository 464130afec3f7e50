//! SUSY bookkeeping: parameters, ε0, the energy map, Foldy–Wouthuysen mixing, SUSY
//! classification and channel-reduced potentials.

mod assemble;
mod classify;
mod model;
mod params;
mod potential;
mod superpotential;

pub use assemble::assemble_dirac_state;
pub use classify::{classify_susy, SusyClassification, SusyStatus};
pub use model::ModelSpec;
pub use params::{
    at_threshold, dirac_energy_from_susy, epsilon0, fw_mixing_coefficients, PhysicalParams,
};
pub use potential::{
    effective_radial_potential, witten_potential, EffectiveRadialPotential, WittenPotential,
};
pub use superpotential::{SampledSuperpotential, Superpotential};
