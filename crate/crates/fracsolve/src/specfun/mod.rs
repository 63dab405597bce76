//! Numerical evaluation of the special functions this crate builds
//! solutions from: the complex gamma function (Lanczos), the Mittag-Leffler
//! function E_{α,β}, the Wright function Ψ(z; α, β), the generalized Wright
//! function ₚΨ_q and the Fox H-function H^{m,l}_{p,q}.
//!
//! Everything here is pure and stateless; values can be shared freely
//! across threads.

pub mod foxh;
pub mod gamma;
pub mod series;
pub mod types;

pub use foxh::{fox_h, fox_h_diag, fox_h_parts};
pub use gamma::{gamma, gamma_real, is_nonpositive_integer, lngamma, recip_gamma, POLE_TOL};
pub use series::{
    gen_wright, gen_wright_diag, mittag_leffler, mittag_leffler_diag, wright, wright_diag,
};
pub use types::{EvalDiagnostics, ParamRow, SpecialFunctionDescriptor};
