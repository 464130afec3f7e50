//! Independent numerical oracles: finite-difference eigensolvers, promotor quadrature,
//! Trotter propagation, pole and branch-cut scans, and discretized SUSY algebra.

pub mod algebra;
pub mod fd;
pub mod green;
pub mod promotor;
pub mod report;
pub mod scan;
pub mod suites;
pub mod trotter;

pub use algebra::*;
pub use fd::*;
pub use green::*;
pub use promotor::*;
pub use report::*;
pub use scan::*;
pub use suites::*;
pub use trotter::*;
