//! Special functions used by the closed-form kernels and wavefunctions.

pub mod bessel;
pub mod gamma;
pub mod harmonics;
pub mod laguerre;
pub mod whittaker;

pub use bessel::{
    bessel_i_half_order, bessel_i_half_order_scaled, bessel_i_int, bessel_i_int_scaled,
    bessel_k_half_order_scaled,
    HalfIntOrder,
};
pub use gamma::{gamma, gamma_complex, ln_gamma_complex, rgamma_complex};
pub use whittaker::{kummer_m, tricomi_u, whittaker_m, whittaker_w, whittaker_w_flagged, WhittakerW};
pub use harmonics::spherical_harmonic;
pub use laguerre::assoc_laguerre;
