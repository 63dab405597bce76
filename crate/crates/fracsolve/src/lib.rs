//! Exact solutions of linear fractional ordinary differential equations and
//! systems whose right-hand sides are Cauchy-Euler operators, together with
//! the special-function machinery needed to evaluate them and an independent
//! numerical engine that verifies every constructed solution.
//!
//! The pipeline is:
//!
//! 1. [`charpoly`] expands the characteristic polynomial of the Cauchy-Euler
//!    operator and finds its roots.
//! 2. [`solution`] assembles closed-form solution families from the roots:
//!    Mittag-Leffler series for order-zero right-hand sides, generalized
//!    Wright series when the fractional order exceeds the operator order,
//!    and Fox H-functions (Mellin-Barnes contour integrals) below it.
//! 3. [`specfun`] evaluates Γ, E_{α,β}, Ψ, ₚΨ_q and H^{m,l}_{p,q} numerically.
//! 4. [`fracderiv`] provides the Riemann-Liouville derivative, both the exact
//!    power rule and a quadrature/finite-difference evaluator built straight
//!    from the definition.
//! 5. [`verify`] substitutes an evaluated solution back into the equation and
//!    reports residuals; [`pde`] reduces variable-coefficient fractional
//!    diffusion-wave problems to the ODE classes and lifts solutions back.
//!
//! The `fracsolve` binary exposes all of this behind `solve`, `eval`,
//! `verify` and `reduce` subcommands driven by JSON problem files.

pub mod charpoly;
pub mod error;
pub mod fracderiv;
pub mod pde;
pub mod problem;
pub mod quad;
pub mod solution;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
