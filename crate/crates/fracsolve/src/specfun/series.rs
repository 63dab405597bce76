//! Power-series evaluation of the Mittag-Leffler, Wright and generalized
//! Wright functions.
//!
//! All three share one kernel: the term
//!
//!   t_k = Π Γ(A_i + α_i k) / Π Γ(B_j + β_j k) · z^k / k!
//!
//! is assembled in log space (sums of `lngamma`) so that intermediate gamma
//! values never overflow, and denominator rows that land on gamma poles
//! contribute an exact zero through the reciprocal gamma.

use num_complex::Complex64;

use super::gamma::{is_nonpositive_integer, lngamma};
use super::types::{EvalDiagnostics, ParamRow, SpecialFunctionDescriptor};
use crate::error::{Error, Result};

/// Hard cap on series terms.
pub const MAX_TERMS: usize = 100_000;
/// Consecutive small terms required before the series is declared converged;
/// guards against alternating-term false convergence.
const STREAK: usize = 3;

/// Σ_k weight(k) · Π Γ(upper) / Π Γ(lower) · z^k / k!
///
/// Structural zeros (a lower row hitting a gamma pole) are skipped without
/// feeding the convergence streak: leading terms of a shifted series vanish
/// that way and must not look like decay.
pub(crate) fn weighted_series<W>(
    upper: &[ParamRow],
    lower: &[ParamRow],
    z: Complex64,
    tol: f64,
    mut weight: W,
) -> Result<(Complex64, EvalDiagnostics)>
where
    W: FnMut(usize) -> Complex64,
{
    let ln_z = if z == Complex64::new(0.0, 0.0) { None } else { Some(z.ln()) };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut streak = 0usize;
    let mut last_mag = [0.0f64; STREAK];

    for k in 0..MAX_TERMS {
        let kf = k as f64;

        // z = 0: only the k = 0 term survives.
        if ln_z.is_none() && k > 0 {
            let diag = EvalDiagnostics {
                terms_used: 1,
                tail_estimate: 0.0,
                contour_half_height: 0.0,
                converged: true,
            };
            return Ok((sum, diag));
        }

        let mut structural_zero = false;
        let mut ln_term = Complex64::new(0.0, 0.0);
        for row in lower {
            let arg = row.a + row.step * kf;
            if is_nonpositive_integer(arg) {
                structural_zero = true;
                break;
            }
            ln_term -= lngamma(arg);
        }
        if structural_zero {
            continue;
        }
        for row in upper {
            let arg = row.a + row.step * kf;
            if is_nonpositive_integer(arg) {
                return Err(Error::domain(format!(
                    "upper parameter row hits a gamma pole at series index {k}"
                )));
            }
            ln_term += lngamma(arg);
        }
        ln_term -= lngamma(Complex64::new(kf + 1.0, 0.0));
        if let Some(lz) = ln_z {
            ln_term += kf * lz;
        }

        let term = weight(k) * ln_term.exp();
        if !term.is_finite() {
            return Err(Error::convergence(format!(
                "series term overflow at index {k} (argument outside practical series radius)"
            )));
        }
        sum += term;

        let mag = term.norm();
        last_mag[streak.min(STREAK - 1)] = mag;
        if mag <= tol * sum.norm().max(f64::MIN_POSITIVE) {
            streak += 1;
            if streak >= STREAK {
                let tail = last_mag.iter().cloned().fold(0.0, f64::max)
                    / sum.norm().max(f64::MIN_POSITIVE);
                let diag = EvalDiagnostics {
                    terms_used: k + 1,
                    tail_estimate: tail,
                    contour_half_height: 0.0,
                    converged: true,
                };
                return Ok((sum, diag));
            }
        } else {
            streak = 0;
        }
    }

    Err(Error::convergence(format!(
        "series did not converge within {MAX_TERMS} terms"
    )))
}

/// Mittag-Leffler function E_{α,β}(z) = Σ z^k / Γ(αk + β), α > 0.
pub fn mittag_leffler(alpha: f64, beta: f64, z: Complex64, tol: f64) -> Result<Complex64> {
    mittag_leffler_diag(alpha, beta, z, tol).map(|(v, _)| v)
}

pub fn mittag_leffler_diag(
    alpha: f64,
    beta: f64,
    z: Complex64,
    tol: f64,
) -> Result<(Complex64, EvalDiagnostics)> {
    if alpha <= 0.0 {
        return Err(Error::domain("Mittag-Leffler requires alpha > 0"));
    }
    if tol <= 0.0 {
        return Err(Error::domain("tolerance must be positive"));
    }
    // E_{α,β}(z) = ₁Ψ₁[z | (1,1); (β,α)]: the Γ(1+k) row cancels the k!.
    weighted_series(
        &[ParamRow::real(1.0, 1.0)],
        &[ParamRow::real(beta, alpha)],
        z,
        tol,
        |_| Complex64::new(1.0, 0.0),
    )
}

/// Wright function Ψ(z; α, β) = Σ z^k / (k! Γ(αk + β)), α > −1.
pub fn wright(z: Complex64, alpha: f64, beta: f64, tol: f64) -> Result<Complex64> {
    wright_diag(z, alpha, beta, tol).map(|(v, _)| v)
}

pub fn wright_diag(
    z: Complex64,
    alpha: f64,
    beta: f64,
    tol: f64,
) -> Result<(Complex64, EvalDiagnostics)> {
    if alpha <= -1.0 {
        return Err(Error::domain("Wright function requires alpha > -1"));
    }
    weighted_series(&[], &[ParamRow::real(beta, alpha)], z, tol, |_| {
        Complex64::new(1.0, 0.0)
    })
}

/// Generalized Wright function ₚΨ_q with parameter rows `upper`, `lower`.
pub fn gen_wright(
    upper: &[ParamRow],
    lower: &[ParamRow],
    z: Complex64,
    tol: f64,
) -> Result<Complex64> {
    gen_wright_diag(upper, lower, z, tol).map(|(v, _)| v)
}

pub fn gen_wright_diag(
    upper: &[ParamRow],
    lower: &[ParamRow],
    z: Complex64,
    tol: f64,
) -> Result<(Complex64, EvalDiagnostics)> {
    let desc = SpecialFunctionDescriptor::GenWright {
        upper: upper.to_vec(),
        lower: lower.to_vec(),
    };
    desc.validate()?;
    weighted_series(upper, lower, z, tol, |_| Complex64::new(1.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    const TOL: f64 = 1e-13;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn ml_exponential() {
        let v = mittag_leffler(1.0, 1.0, re(1.0), TOL).unwrap();
        assert!((v.re - E).abs() < 1e-12);
        for i in 0..=100 {
            let x = -5.0 + 10.0 * i as f64 / 100.0;
            let v = mittag_leffler(1.0, 1.0, re(x), TOL).unwrap();
            assert!(
                (v.re - x.exp()).abs() / x.exp() < 1e-11,
                "E_1,1({x}) vs exp"
            );
        }
    }

    #[test]
    fn ml_cosine() {
        // E_{2,1}(-x²) = cos x
        for i in 0..=100 {
            let x = -5.0 + 10.0 * i as f64 / 100.0;
            let v = mittag_leffler(2.0, 1.0, re(-x * x), TOL).unwrap();
            assert!(
                (v.re - x.cos()).abs() <= 1e-11 * x.cos().abs().max(1.0),
                "E_2,1(-{x}²) vs cos"
            );
        }
    }

    #[test]
    fn wright_only_first_term_at_zero() {
        // Ψ(0; 0.3, 2) = 1/Γ(2) = 1
        let v = wright(re(0.0), 0.3, 2.0, TOL).unwrap();
        assert!((v.re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn wright_alpha_zero_collapses_to_exp() {
        // Ψ(z; 0, β) = e^z / Γ(β)
        let v = wright(re(1.0), 0.0, 1.0, TOL).unwrap();
        assert!((v.re - E).abs() < 1e-12);
        for i in 0..=100 {
            let x = -4.0 + 8.0 * i as f64 / 100.0;
            let v = wright(re(x), 0.0, 2.5, TOL).unwrap();
            let expect = x.exp() / crate::specfun::gamma_real(2.5).unwrap();
            assert!((v.re - expect).abs() / expect.abs() < 1e-11);
        }
    }

    #[test]
    fn gen_wright_reduces_to_ml() {
        // ₁Ψ₁[z | (1,1); (1,1)] = E_{1,1}(z) = e^z
        let v = gen_wright(
            &[ParamRow::real(1.0, 1.0)],
            &[ParamRow::real(1.0, 1.0)],
            re(1.0),
            TOL,
        )
        .unwrap();
        assert!((v.re - E).abs() < 1e-12);
    }

    #[test]
    fn gen_wright_zero_argument() {
        // ₀Ψ₁[0 | —; (1,1)] = 1/Γ(1) = 1
        let v = gen_wright(&[], &[ParamRow::real(1.0, 1.0)], re(0.0), TOL).unwrap();
        assert!((v.re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gen_wright_divergent_rejected() {
        // Δ = 0.5 - 2.0 = -1.5 ≤ -1
        let r = gen_wright(
            &[ParamRow::real(1.0, 2.0)],
            &[ParamRow::real(1.0, 0.5)],
            re(0.5),
            TOL,
        );
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn bridge_wright_as_gen_wright_term_by_term() {
        // Ψ(z; α, β) = ₀Ψ₁[z | —; (β, α)]: same kernel, must agree to 1e-12.
        for &(z, a, b) in &[(0.7, 0.4, 1.3), (-1.3, 0.9, 0.5), (2.0, -0.4, 2.0)] {
            let w = wright(re(z), a, b, TOL).unwrap();
            let g = gen_wright(&[], &[ParamRow::real(b, a)], re(z), TOL).unwrap();
            let rel = (w - g).norm() / g.norm().max(1e-300);
            assert!(rel < 1e-12, "bridge mismatch at z={z}: {rel:.2e}");
        }
    }

    #[test]
    fn structural_zeros_do_not_stop_series() {
        // E_{1,-1}(z): Γ(k-1) poles at k=0,1 zero the leading terms, the rest
        // sum to z·e^z... more precisely Σ_{k≥2} z^k/(k-2)! = z² e^z.
        let z = 1.5f64;
        let v = mittag_leffler(1.0, -1.0, re(z), TOL).unwrap();
        let expect = z * z * z.exp();
        assert!((v.re - expect).abs() / expect < 1e-12);
    }

    #[test]
    fn derived_half_order_ml() {
        // E_{1/2,1}(1) = Σ 1/Γ(k/2 + 1); 50-digit series oracle value.
        let v = mittag_leffler(0.5, 1.0, re(1.0), TOL).unwrap();
        let oracle = 5.008_980_080_762_283_4;
        assert!((v.re - oracle).abs() / oracle < 1e-12);
    }
}
