//! Fox H-function by Mellin-Barnes contour integration.
//!
//! H^{m,l}_{p,q}[z] is the integral (1/2πi) ∫_L G(s) z^s ds over a vertical
//! line L_{γ+i∞}, where
//!
//!   G(s) = Π_{j≤m} Γ(B_j - β_j s) · Π_{i≤l} Γ(1 - A_i + α_i s)
//!        / ( Π_{i>l} Γ(A_i - α_i s) · Π_{j>m} Γ(1 - B_j + β_j s) )
//!
//! and γ separates the right poles s = (B_j + k)/β_j of the numerator's
//! lower gammas from the left poles s = (A_i - 1 - k)/α_i of its upper
//! gammas. The integrand decays like exp(-μπ|t|/2) along the line, so the
//! half-height T is doubled until the outermost shell stops contributing.

use num_complex::Complex64;

use super::gamma::lngamma;
use super::types::{EvalDiagnostics, ParamRow, SpecialFunctionDescriptor};
use crate::error::{Error, Result};
use crate::quad::kronrod::{refine, seed, Totals};

/// Integrand-evaluation budget per H evaluation.
const MAX_EVALS: usize = 400_000;
/// Initial contour half-height.
const T0: f64 = 8.0;
/// Largest half-height tried before giving up.
const T_MAX: f64 = 1.0e6;

struct Contour<'a> {
    m: usize,
    l: usize,
    upper: &'a [ParamRow],
    lower: &'a [ParamRow],
    gamma0: f64,
    ln_z: Complex64,
}

impl Contour<'_> {
    /// G(s) z^s at s = γ + i t, assembled in log space.
    fn integrand(&self, t: f64) -> Complex64 {
        let s = Complex64::new(self.gamma0, t);
        let mut w = s * self.ln_z;
        for (j, row) in self.lower.iter().enumerate() {
            let arg = row.a - row.step * s;
            if j < self.m {
                w += lngamma(arg);
            } else {
                w -= lngamma(Complex64::new(1.0, 0.0) - arg);
            }
        }
        for (i, row) in self.upper.iter().enumerate() {
            let arg = row.a - row.step * s;
            if i < self.l {
                w += lngamma(Complex64::new(1.0, 0.0) - arg);
            } else {
                w -= lngamma(arg);
            }
        }
        w.exp()
    }
}

/// Pick the contour abscissa γ, or explain why no line separates the poles.
fn contour_abscissa(m: usize, l: usize, upper: &[ParamRow], lower: &[ParamRow]) -> Result<f64> {
    let right_min = lower[..m]
        .iter()
        .map(|r| r.a.re / r.step)
        .fold(f64::INFINITY, f64::min);
    let left_max = upper[..l]
        .iter()
        .map(|r| (r.a.re - 1.0) / r.step)
        .fold(f64::NEG_INFINITY, f64::max);
    if l == 0 {
        Ok(right_min - 0.5)
    } else if m == 0 {
        Ok(left_max + 0.5)
    } else if left_max < right_min {
        Ok(0.5 * (left_max + right_min))
    } else {
        Err(Error::domain(format!(
            "no contour separates the gamma poles (left poles reach {left_max}, right poles start at {right_min})"
        )))
    }
}

/// Evaluate a Fox H descriptor at `z` by adaptive contour quadrature.
pub fn fox_h(desc: &SpecialFunctionDescriptor, z: Complex64, tol: f64) -> Result<Complex64> {
    fox_h_diag(desc, z, tol).map(|(v, _)| v)
}

pub fn fox_h_diag(
    desc: &SpecialFunctionDescriptor,
    z: Complex64,
    tol: f64,
) -> Result<(Complex64, EvalDiagnostics)> {
    let (m, l, upper, lower) = match desc {
        SpecialFunctionDescriptor::FoxH { m, l, upper, lower } => (*m, *l, upper, lower),
        _ => return Err(Error::domain("fox_h requires a FoxH descriptor")),
    };
    desc.validate()?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("Fox H-function is undefined at z = 0"));
    }
    let mu = SpecialFunctionDescriptor::fox_mu(m, l, upper, lower);
    if z.arg().abs() >= std::f64::consts::PI * mu / 2.0 {
        return Err(Error::domain(format!(
            "argument condition violated: |arg z| = {} ≥ πμ/2 = {}",
            z.arg().abs(),
            std::f64::consts::PI * mu / 2.0
        )));
    }
    let gamma0 = contour_abscissa(m, l, upper, lower)?;
    let c = Contour { m, l, upper, lower, gamma0, ln_z: z.ln() };
    let f = |t: f64| c.integrand(t);

    let mut panels = Vec::with_capacity(64);
    let mut totals = Totals::default();
    // Seed the oscillatory core with unit-width panels.
    seed(&f, -T0, T0, 2 * T0 as usize, &mut panels, &mut totals);

    // roundoff floor: panel error estimates bottom out at ~50·eps·resabs
    let floor = |t: &Totals| 2e-14 * t.resabs;
    let target = |t: &Totals| (0.5 * tol * t.value.norm()).max(floor(t));

    let mut half_height = T0;
    while half_height < T_MAX {
        if !refine(&f, &mut panels, &mut totals, target, MAX_EVALS) {
            return Err(Error::convergence(format!(
                "contour quadrature stalled after {} evaluations (T = {half_height})",
                totals.evals
            )));
        }
        // Extend by one doubling shell on each side and measure what it adds.
        let mut shell_panels = Vec::with_capacity(16);
        let mut shell = Totals::default();
        let segments = ((half_height / 4.0).ceil() as usize).clamp(4, 64);
        seed(&f, half_height, 2.0 * half_height, segments, &mut shell_panels, &mut shell);
        seed(&f, -2.0 * half_height, -half_height, segments, &mut shell_panels, &mut shell);
        if !refine(&f, &mut shell_panels, &mut shell, target, MAX_EVALS) {
            return Err(Error::convergence("contour tail refinement stalled"));
        }
        totals.value += shell.value;
        totals.err += shell.err;
        totals.resabs += shell.resabs;
        totals.evals += shell.evals;
        panels.extend_from_slice(&shell_panels);
        half_height *= 2.0;

        let tail = shell.value.norm();
        if tail <= (0.1 * tol * totals.value.norm()).max(floor(&totals)) {
            // Final global polish to the full tolerance.
            if !refine(&f, &mut panels, &mut totals, |t| (tol * t.value.norm()).max(floor(t)), MAX_EVALS)
            {
                return Err(Error::convergence("contour quadrature stalled in final refinement"));
            }
            let value = totals.value / (2.0 * std::f64::consts::PI);
            let diag = EvalDiagnostics {
                terms_used: totals.evals,
                tail_estimate: tail / totals.value.norm().max(f64::MIN_POSITIVE),
                contour_half_height: half_height,
                converged: true,
            };
            return Ok((value, diag));
        }
    }
    Err(Error::convergence(format!(
        "contour tail still contributing at T = {half_height} (μ = {mu}); argument too extreme"
    )))
}

/// Evaluate with rows supplied directly (test and internal convenience).
pub fn fox_h_parts(
    m: usize,
    l: usize,
    upper: &[ParamRow],
    lower: &[ParamRow],
    z: Complex64,
    tol: f64,
) -> Result<Complex64> {
    fox_h(
        &SpecialFunctionDescriptor::FoxH {
            m,
            l,
            upper: upper.to_vec(),
            lower: lower.to_vec(),
        },
        z,
        tol,
    )
}
