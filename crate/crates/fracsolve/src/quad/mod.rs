//! Quadrature and differentiation primitives shared by the special-function
//! and fractional-derivative kernels.

pub mod findiff;
pub mod gauss_jacobi;
pub mod kronrod;

pub use findiff::{central_offsets, fd_weights};
pub use gauss_jacobi::{gauss_jacobi, JacobiRule};
