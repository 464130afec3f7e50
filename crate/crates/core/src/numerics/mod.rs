//! Numerical building blocks: quadrature, finite differences, tridiagonal eigensolvers,
//! sparse matrices and sine transforms.

pub mod dst;
pub mod quadrature;
pub mod sparse;
pub mod stencil;
pub mod tridiag;
