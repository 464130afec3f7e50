pub mod angular;
pub mod consts;
pub mod error;
pub mod fields;
pub mod numerics;
pub mod oracles;
pub mod specialfn;
pub mod spectra;
pub mod susy_core;
pub mod resolvent;
pub mod scalar;
pub mod wavefunctions;

pub use error::{Error, Result};
pub use scalar::Real;
