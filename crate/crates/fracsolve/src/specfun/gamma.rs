//! Complex gamma function via the Lanczos approximation (g = 7, 9
//! coefficients), with the reflection formula for Re(z) < 1/2.
//!
//! Three entry points:
//! * [`lngamma`] — a branch of log Γ(z); exact only up to multiples of 2πi,
//!   which is harmless because every consumer exponentiates sums of values.
//! * [`gamma`] — Γ(z) itself, erroring at the poles.
//! * [`recip_gamma`] — the entire function 1/Γ(z), returning exactly 0 at
//!   non-positive integers detected within [`POLE_TOL`].

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Detection tolerance for "z is a non-positive integer".
pub const POLE_TOL: f64 = 1e-9;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// True if `z` lies within [`POLE_TOL`] of a non-positive integer.
pub fn is_nonpositive_integer(z: Complex64) -> bool {
    if z.im.abs() > POLE_TOL {
        return false;
    }
    let r = z.re.round();
    r <= 0.5 && (z.re - r).abs() <= POLE_TOL
}

/// log Γ(z) for Re(z) ≥ 1/2 by the Lanczos sum.
fn lngamma_positive(z: Complex64) -> Complex64 {
    // Series is written for Γ(1 + x); shift by one.
    let x = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (x + k as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// log sin(πz), stable for large |Im z| where sin itself overflows.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let w = PI * z;
    if w.im.abs() < 20.0 {
        return w.sin().ln();
    }
    // sin w = (e^{iw} - e^{-iw}) / (2i); factor out the dominant exponential.
    let i = Complex64::new(0.0, 1.0);
    if w.im > 0.0 {
        // |e^{-iw}| dominates
        -i * w + (1.0 - (2.0 * i * w).exp()).ln() + (i / 2.0).ln()
    } else {
        i * w + (1.0 - (-2.0 * i * w).exp()).ln() - (2.0 * i).ln()
    }
}

/// A branch of log Γ(z). Do not interpret the imaginary part as a principal
/// value; only exp of (sums of) results is meaningful.
pub fn lngamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        lngamma_positive(z)
    } else {
        // Reflection: Γ(z) Γ(1-z) = π / sin(πz).
        PI.ln() - ln_sin_pi(z) - lngamma_positive(1.0 - z)
    }
}

/// Γ(z). Errors with [`Error::Pole`] at non-positive integers.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("{z}")));
    }
    Ok(lngamma(z).exp())
}

/// 1/Γ(z), total on ℂ: exactly 0 at non-positive integers.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return Complex64::new(0.0, 0.0);
    }
    (-lngamma(z)).exp()
}

/// Convenience: Γ at a real argument.
pub fn gamma_real(x: f64) -> Result<f64> {
    gamma(Complex64::new(x, 0.0)).map(|v| v.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn classical_values() {
        assert!((gamma(c(1.0, 0.0)).unwrap().re - 1.0).abs() < 1e-14);
        assert!((gamma(c(5.0, 0.0)).unwrap().re - 24.0).abs() < 24.0 * 1e-13);
        assert!((gamma(c(0.5, 0.0)).unwrap().re - PI.sqrt()).abs() < 1e-13);
        // Γ(-0.5) = -2√π
        assert!((gamma(c(-0.5, 0.0)).unwrap().re + 2.0 * PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn poles_and_reciprocal() {
        assert!(gamma(c(0.0, 0.0)).is_err());
        assert!(gamma(c(-3.0, 0.0)).is_err());
        assert_eq!(recip_gamma(c(0.0, 0.0)), c(0.0, 0.0));
        assert_eq!(recip_gamma(c(-7.0, 0.0)), c(0.0, 0.0));
        assert!((recip_gamma(c(3.0, 0.0)).re - 0.5).abs() < 1e-14);
    }

    #[test]
    fn recurrence_random_complex() {
        // Γ(z+1) = z Γ(z) off the pole line, |z| ≤ 20.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..1000 {
            let re = 40.0 * next() - 20.0;
            let im = 40.0 * next() - 20.0;
            if im.abs() < 0.05 && re < 0.5 {
                continue; // stay off the pole line
            }
            let z = c(re, im);
            let lhs = gamma(z + 1.0).unwrap();
            let rhs = z * gamma(z).unwrap();
            let rel = (lhs - rhs).norm() / rhs.norm().max(1e-300);
            assert!(rel < 1e-12, "recurrence failed at {z}: rel={rel:.3e}");
        }
    }

    #[test]
    fn modulus_on_critical_line() {
        // |Γ(1/2 + iy)|² = π / cosh(πy)
        for &y in &[0.3, 2.0, 8.5, 30.0] {
            let g = gamma(c(0.5, y)).unwrap();
            let expected = (PI / (PI * y).cosh()).sqrt();
            assert!(
                (g.norm() - expected).abs() / expected < 1e-12,
                "y = {y}"
            );
        }
    }

    #[test]
    fn reflection_large_imag() {
        // ln_sin_pi must not overflow for large |Im|.
        let z = c(-0.3, 120.0);
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        assert!((lhs - rhs).norm() / rhs.norm() < 1e-11);
    }
}
