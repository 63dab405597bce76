//! Riemann-Liouville fractional differentiation.
//!
//! Two routes, deliberately independent of each other:
//!
//! * the exact power rule d^α z^β = Γ(1+β)/Γ(1+β-α) z^{β-α} and its
//!   term-by-term extension to power series ([`rl_power`], [`rl_series`]);
//! * a numerical evaluator [`rl_numeric`] built straight from the
//!   definition: substituting s = zu turns the fractional integral into
//!   z^{n-α}/Γ(n-α) ∫₀¹ (1-u)^{n-α-1} f(zu) du, which is smooth in z, and
//!   the outer n-th derivative is taken by central finite differences with
//!   Richardson extrapolation.
//!
//! The inner integral uses Gauss-Jacobi quadrature with the weight
//! (1-u)^{n-α-1}; when the integrand carries fractional-power behavior at
//! u = 0 as well (solution families start at z^{α-n}) the node-doubling
//! ladder stalls and the evaluator switches to a tanh-sinh rule, which
//! handles algebraic endpoint singularities at both ends.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::findiff::fd_weights;
use crate::quad::gauss_jacobi::gauss_jacobi;
use crate::specfun::{gamma_real, recip_gamma};

/// A single power term `coeff · z^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub coeff: Complex64,
    pub exponent: f64,
}

impl PowerTerm {
    pub fn new(coeff: Complex64, exponent: f64) -> Self {
        PowerTerm { coeff, exponent }
    }
    pub fn real(coeff: f64, exponent: f64) -> Self {
        PowerTerm { coeff: Complex64::new(coeff, 0.0), exponent }
    }
}

/// Fractional order α > 0 together with n = ⌈α⌉ (n = α for integer α).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracOrder {
    alpha: f64,
    n: u32,
}

const INT_TOL: f64 = 1e-12;

impl FracOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain("fractional order must be positive and finite"));
        }
        let r = alpha.round();
        let n = if (alpha - r).abs() <= INT_TOL && r > 0.0 {
            r as u32
        } else {
            alpha.ceil() as u32
        };
        Ok(FracOrder { alpha, n })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Smallest integer n with n ≥ α (equals α when α is integral).
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_integer(&self) -> bool {
        (self.alpha - self.alpha.round()).abs() <= INT_TOL
    }
}

/// d^α z^β for β > -1: exact coefficient via the reciprocal gamma, so the
/// result is exactly 0 whenever 1+β-α is a non-positive integer (the
/// z^{α-k} kernels of every solution family are annihilated this way).
pub fn rl_power(order: &FracOrder, beta: f64) -> Result<PowerTerm> {
    if beta <= -1.0 {
        return Err(Error::domain(format!(
            "power rule requires exponent > -1, got {beta}"
        )));
    }
    let num = gamma_real(1.0 + beta)?;
    let rec = recip_gamma(Complex64::new(1.0 + beta - order.alpha, 0.0));
    Ok(PowerTerm {
        coeff: num * rec,
        exponent: beta - order.alpha,
    })
}

/// Term-by-term derivative of a power series; exact zeros are dropped.
/// Callers are responsible for the uniform-convergence context that makes
/// term-wise differentiation valid.
pub fn rl_series(terms: &[PowerTerm], order: &FracOrder) -> Result<Vec<PowerTerm>> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let d = rl_power(order, t.exponent)?;
        let coeff = t.coeff * d.coeff;
        if coeff != Complex64::new(0.0, 0.0) {
            out.push(PowerTerm { coeff, exponent: d.exponent });
        }
    }
    Ok(out)
}

/// Inner-integral strategy, fixed once per `rl_numeric` call so the
/// quadrature error varies smoothly across the finite-difference stencil.
#[derive(Debug, Clone, Copy)]
enum InnerPlan {
    Jacobi(usize),
    TanhSinh(f64),
}

/// ∫₀¹ (1-u)^{μ-1} f(yu) du with the chosen rule.
fn inner_integral<F>(f: &F, mu: f64, y: f64, plan: InnerPlan) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    match plan {
        InnerPlan::Jacobi(n) => {
            let rule = gauss_jacobi(n, mu - 1.0, 0.0)?;
            let scale = 2f64.powf(-mu);
            let mut acc = Complex64::new(0.0, 0.0);
            for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
                let u = 0.5 * (x + 1.0);
                acc += w * f(y * u)?;
            }
            Ok(acc * scale)
        }
        InnerPlan::TanhSinh(h) => tanh_sinh(f, mu, y, h),
    }
}

/// Tanh-sinh rule for ∫₀¹ (1-u)^{μ-1} f(yu) du at step `h`.
fn tanh_sinh<F>(f: &F, mu: f64, y: f64, h: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    use std::f64::consts::FRAC_PI_2;
    let mut sum = Complex64::new(0.0, 0.0);
    // Walk outward from the center until contributions vanish.
    for dir in [1.0f64, -1.0] {
        let mut negligible = 0;
        let mut k = if dir > 0.0 { 0 } else { 1 };
        loop {
            let tau = dir * k as f64 * h;
            if tau.abs() > 8.0 {
                break;
            }
            let x = FRAC_PI_2 * tau.sinh();
            // u and 1-u with full relative precision on their small side
            let e2x = (2.0 * x).exp();
            let u = e2x / (1.0 + e2x);
            let one_minus_u = 1.0 / (1.0 + e2x);
            if u <= 0.0 || one_minus_u <= 0.0 || !e2x.is_finite() && x < 0.0 {
                break;
            }
            if !e2x.is_finite() {
                break;
            }
            let weight = FRAC_PI_2 * tau.cosh() / (2.0 * x.cosh().powi(2)) * h;
            let kernel = (mu - 1.0) * one_minus_u.ln();
            let contrib = weight * kernel.exp() * f(y * u)?;
            sum += contrib;
            if contrib.norm() <= 1e-18 * sum.norm().max(f64::MIN_POSITIVE) && k > 4 {
                negligible += 1;
                if negligible >= 3 {
                    break;
                }
            } else {
                negligible = 0;
            }
            k += 1;
        }
    }
    Ok(sum)
}

/// Pick an inner rule at the evaluation point: Gauss-Jacobi nodes doubled
/// from 32 until two successive estimates agree, tanh-sinh stepped down if
/// the ladder stalls (integrand singular at u = 0 as well).
fn choose_plan<F>(f: &F, mu: f64, z: f64, tol: f64) -> Result<InnerPlan>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let mut prev: Option<Complex64> = None;
    for n in [32usize, 64, 128, 256] {
        let cur = inner_integral(f, mu, z, InnerPlan::Jacobi(n))?;
        if let Some(p) = prev {
            if (cur - p).norm() <= 0.5 * tol * cur.norm().max(1e-30) {
                return Ok(InnerPlan::Jacobi(n));
            }
        }
        prev = Some(cur);
    }
    let mut prev: Option<Complex64> = None;
    let mut h = 0.25;
    while h >= 0.25 / 64.0 {
        let cur = tanh_sinh(f, mu, z, h)?;
        if let Some(p) = prev {
            if (cur - p).norm() <= 0.5 * tol * cur.norm().max(1e-30) {
                return Ok(InnerPlan::TanhSinh(h));
            }
        }
        prev = Some(cur);
        h *= 0.5;
    }
    Err(Error::convergence(
        "inner fractional integral did not converge under node doubling or tanh-sinh refinement",
    ))
}

/// Reject functions that are visibly non-integrable at 0 (definition (3)
/// requires |f(s)| = O(s^{-1+δ}) near 0).
fn check_integrable<F>(f: &F, z: f64) -> Result<()>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let s1 = 1e-4 * z;
    let s2 = 1e-6 * z;
    let f1 = f(s1)?.norm();
    let f2 = f(s2)?.norm();
    if f2 > 1e3 && f1 > 0.0 {
        let slope = (f2 / f1).ln() / (s2 / s1).ln();
        if slope <= -0.99 {
            return Err(Error::domain(format!(
                "integrand grows like s^{slope:.2} near 0: not integrable"
            )));
        }
    }
    Ok(())
}

/// Finite-difference stencil parameters per outer-derivative order.
fn stencil_params(n: u32, z: f64) -> (usize, f64) {
    if n <= 2 {
        (2, (1e-4 * z).max(1e-6))
    } else {
        // high-order stencils need h large enough that roundoff amplified by
        // h^{-n} stays below the target; cap so the stencil stays in (0, 2z)
        let halfwidth = ((n as usize + 7) / 2).max(5);
        let h = (0.02 * z.max(0.5)).min(0.9 * z / halfwidth as f64);
        (halfwidth, h)
    }
}

/// n-th derivative of `g` at `z` by central differences at steps `h` and
/// `h/2`, Richardson-extrapolated; returns (value, error estimate).
fn fd_derivative<G>(g: &G, n: u32, z: f64, halfwidth: usize, h: f64) -> Result<(Complex64, f64)>
where
    G: Fn(f64) -> Result<Complex64>,
{
    let order = 2 * halfwidth + 1 - n as usize; // accuracy order of the stencil
    let mut estimates = Vec::with_capacity(2);
    for step in [h, 0.5 * h] {
        let nodes: Vec<f64> = (-(halfwidth as i64)..=halfwidth as i64)
            .map(|k| k as f64 * step)
            .collect();
        let w = fd_weights(&nodes, 0.0, n as usize);
        let mut acc = Complex64::new(0.0, 0.0);
        for (off, wi) in nodes.iter().zip(w.iter()) {
            if *wi == 0.0 {
                continue;
            }
            acc += *wi * g(z + off)?;
        }
        estimates.push(acc);
    }
    let (d_h, d_h2) = (estimates[0], estimates[1]);
    let factor = 2f64.powi(order as i32);
    let value = (factor * d_h2 - d_h) / (factor - 1.0);
    let err = (d_h2 - d_h).norm();
    Ok((value, err))
}

/// Riemann-Liouville derivative of order α of `f` at `z > 0`, numerically,
/// straight from the definition. `f` must be integrable near 0.
pub fn rl_numeric<F>(f: F, order: &FracOrder, z: f64, tol: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if z <= 0.0 {
        return Err(Error::domain("rl_numeric requires z > 0"));
    }
    if tol <= 0.0 {
        return Err(Error::domain("tolerance must be positive"));
    }
    let n = order.n;

    if order.is_integer() {
        // ordinary n-th derivative
        let (hw, h) = stencil_params(n, z);
        let g = |y: f64| f(y);
        let (value, err) = fd_derivative(&g, n, z, hw, h)?;
        if err > tol * value.norm().max(1.0) {
            return Err(Error::convergence(format!(
                "derivative estimates disagree: {err:.3e} at z = {z}"
            )));
        }
        return Ok(value);
    }

    check_integrable(&f, z)?;

    let mu = n as f64 - order.alpha; // ∈ (0, 1)
    let quad_tol = (tol * 1e-2).max(1e-13);
    let plan = choose_plan(&f, mu, z, quad_tol)?;
    let recip_gamma_mu = 1.0 / gamma_real(mu)?;

    let g = |y: f64| -> Result<Complex64> {
        let i = inner_integral(&f, mu, y, plan)?;
        Ok(y.powf(mu) * recip_gamma_mu * i)
    };

    let (hw, h) = stencil_params(n, z);
    let (mut value, mut err) = fd_derivative(&g, n, z, hw, h)?;
    if err > tol * value.norm().max(1.0) {
        // one retry at a finer pair before giving up
        let (v2, e2) = fd_derivative(&g, n, z, hw, 0.5 * h)?;
        if e2 < err {
            value = v2;
            err = e2;
        }
        if err > tol * value.norm().max(1.0) {
            return Err(Error::convergence(format!(
                "Richardson estimates disagree beyond tolerance: {err:.3e} at z = {z}"
            )));
        }
    }
    Ok(value)
}

/// Convenience wrapper for real-valued closures.
pub fn rl_numeric_real<F>(f: F, order: &FracOrder, z: f64, tol: f64) -> Result<Complex64>
where
    F: Fn(f64) -> f64,
{
    rl_numeric(|s| Ok(Complex64::new(f(s), 0.0)), order, z, tol)
}
