//! Parameter descriptors for the special functions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One parameter row `(A, α)` (upper) or `(B, β)` (lower) of a generalized
/// Wright or Fox H-function.
///
/// The first entry is complex because characteristic roots of the
/// Cauchy-Euler operator may come in conjugate pairs and enter the rows
/// directly; the step stays real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamRow {
    /// Parameter A (upper) or B (lower), serialized as `[re, im]`.
    pub a: Complex64,
    /// Step α (upper) or β (lower).
    pub step: f64,
}

impl ParamRow {
    pub fn new(a: Complex64, step: f64) -> Self {
        ParamRow { a, step }
    }
    pub fn real(a: f64, step: f64) -> Self {
        ParamRow { a: Complex64::new(a, 0.0), step }
    }
}

/// Tagged parameterization of one of the four special-function families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecialFunctionDescriptor {
    MittagLeffler { alpha: f64, beta: f64 },
    Wright { alpha: f64, beta: f64 },
    GenWright { upper: Vec<ParamRow>, lower: Vec<ParamRow> },
    FoxH { m: usize, l: usize, upper: Vec<ParamRow>, lower: Vec<ParamRow> },
}

impl SpecialFunctionDescriptor {
    /// Convergence index Δ = Σβ_j − Σα_i of a generalized Wright series;
    /// the series defines an entire function when Δ > −1.
    pub fn gen_wright_delta(upper: &[ParamRow], lower: &[ParamRow]) -> f64 {
        lower.iter().map(|r| r.step).sum::<f64>() - upper.iter().map(|r| r.step).sum::<f64>()
    }

    /// Contour-convergence index μ of a Fox H-function.
    pub fn fox_mu(m: usize, l: usize, upper: &[ParamRow], lower: &[ParamRow]) -> f64 {
        let mut mu = 0.0;
        for (i, r) in upper.iter().enumerate() {
            mu += if i < l { r.step } else { -r.step };
        }
        for (j, r) in lower.iter().enumerate() {
            mu += if j < m { r.step } else { -r.step };
        }
        mu
    }

    /// Decay index ν = Σβ_j − Σα_i of a Fox H-function (controls the
    /// exponential decay of H^{m,0} for large argument).
    pub fn fox_nu(upper: &[ParamRow], lower: &[ParamRow]) -> f64 {
        lower.iter().map(|r| r.step).sum::<f64>() - upper.iter().map(|r| r.step).sum::<f64>()
    }

    /// Check the structural invariants of the descriptor.
    pub fn validate(&self) -> Result<()> {
        match self {
            SpecialFunctionDescriptor::MittagLeffler { alpha, .. } => {
                if *alpha <= 0.0 {
                    return Err(Error::domain("Mittag-Leffler requires alpha > 0"));
                }
            }
            SpecialFunctionDescriptor::Wright { alpha, .. } => {
                if *alpha <= -1.0 {
                    return Err(Error::domain("Wright function requires alpha > -1"));
                }
            }
            SpecialFunctionDescriptor::GenWright { upper, lower } => {
                if upper.iter().chain(lower.iter()).any(|r| r.step == 0.0) {
                    return Err(Error::domain("generalized Wright steps must be nonzero"));
                }
                let delta = Self::gen_wright_delta(upper, lower);
                if delta <= -1.0 {
                    return Err(Error::domain(format!(
                        "generalized Wright series diverges: Δ = {delta} ≤ -1"
                    )));
                }
            }
            SpecialFunctionDescriptor::FoxH { m, l, upper, lower } => {
                if *m > lower.len() || *l > upper.len() {
                    return Err(Error::domain("Fox H requires m ≤ q and l ≤ p"));
                }
                if *m == 0 && *l == 0 {
                    return Err(Error::domain("Fox H requires (m, l) ≠ (0, 0)"));
                }
                if upper.iter().chain(lower.iter()).any(|r| r.step <= 0.0) {
                    return Err(Error::domain("Fox H steps must be strictly positive"));
                }
                let mu = Self::fox_mu(*m, *l, upper, lower);
                if mu <= 0.0 {
                    return Err(Error::domain(format!(
                        "Fox H contour integral diverges: μ = {mu} ≤ 0"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Convergence bookkeeping attached to an evaluation.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct EvalDiagnostics {
    /// Series terms summed, or integrand evaluations spent.
    pub terms_used: usize,
    /// Relative tail estimate of the truncated series / quadrature.
    pub tail_estimate: f64,
    /// Final half-height T of the Mellin-Barnes contour (Fox H only).
    pub contour_half_height: f64,
    pub converged: bool,
}
