//! Characteristic polynomial of a Cauchy-Euler operator.
//!
//! The operator Σ (a_i/α^i) z^i d^i/dz^i acts on z^s as multiplication by
//!
//!   P̃(s) = a₀ + Σ_{i=1}^m a_i Π_{j=0}^{i-1} (s - j/α),
//!
//! so its roots s₁..s_m parameterize every solution family. This module
//! expands the falling-factorial sum to monomial coefficients, finds all
//! roots (Aberth-Ehrlich iteration, companion-matrix eigenvalues as the
//! fallback) and enforces exact conjugate pairing for real inputs so that
//! downstream evaluations stay real on z > 0.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scalar problem d^α φ = Σ (a_i/α^i) z^i φ^{(i)}, coefficients a₀..a_m.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FodeSpec {
    pub alpha: f64,
    pub coeffs: Vec<f64>,
}

impl FodeSpec {
    pub fn new(alpha: f64, coeffs: Vec<f64>) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain("alpha must be positive"));
        }
        if coeffs.is_empty() {
            return Err(Error::domain("coefficient list a₀..a_m must be non-empty"));
        }
        if coeffs.len() > 1 && coeffs[coeffs.len() - 1] == 0.0 {
            return Err(Error::domain("leading coefficient a_m must be nonzero"));
        }
        Ok(FodeSpec { alpha, coeffs })
    }

    /// Operator order m.
    pub fn m(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn lead(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }
}

/// Cross-coupled system: d^α φ driven by ψ through a₀..a_{m₁}, d^α ψ driven
/// by φ through b₀..b_{m₂}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub alpha: f64,
    pub a_coeffs: Vec<f64>,
    pub b_coeffs: Vec<f64>,
}

impl SystemSpec {
    pub fn new(alpha: f64, a_coeffs: Vec<f64>, b_coeffs: Vec<f64>) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain("alpha must be positive"));
        }
        for (name, c) in [("a", &a_coeffs), ("b", &b_coeffs)] {
            if c.is_empty() {
                return Err(Error::domain(format!("{name}-coefficients must be non-empty")));
            }
            if c.len() > 1 && c[c.len() - 1] == 0.0 {
                return Err(Error::domain(format!("leading {name}-coefficient must be nonzero")));
            }
        }
        Ok(SystemSpec { alpha, a_coeffs, b_coeffs })
    }

    pub fn m1(&self) -> usize {
        self.a_coeffs.len() - 1
    }
    pub fn m2(&self) -> usize {
        self.b_coeffs.len() - 1
    }
    pub fn a_lead(&self) -> f64 {
        *self.a_coeffs.last().unwrap()
    }
    pub fn b_lead(&self) -> f64 {
        *self.b_coeffs.last().unwrap()
    }
}

/// Expanded characteristic polynomial with its root multiset.
#[derive(Debug, Clone)]
pub struct CharPoly {
    /// Monomial coefficients, ascending degree.
    pub coeffs: Vec<f64>,
    /// Leading coefficient a_m.
    pub lead: f64,
    /// All roots with multiplicity, conjugate-paired for real input.
    pub roots: Vec<Complex64>,
    /// Two roots coincide within 1e-7: the solution formulas remain
    /// formally valid but the emitted terms lose independence.
    pub repeated: bool,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation of the monomial form.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * s + c;
        }
        acc
    }
}

/// Expand a₀ + Σ a_i Π_{j<i} (s - j/α) into ascending monomial coefficients.
fn expand(alpha: f64, coeffs: &[f64]) -> Vec<f64> {
    let m = coeffs.len() - 1;
    let mut out = vec![0.0; m + 1];
    out[0] = coeffs[0];
    let mut prod = vec![1.0]; // Π so far, ascending
    for i in 1..=m {
        let shift = (i - 1) as f64 / alpha;
        // prod *= (s - shift)
        let mut next = vec![0.0; prod.len() + 1];
        for (d, &v) in prod.iter().enumerate() {
            next[d + 1] += v;
            next[d] -= shift * v;
        }
        prod = next;
        for (d, &v) in prod.iter().enumerate() {
            out[d] += coeffs[i] * v;
        }
    }
    out
}

/// Build the characteristic polynomial of a scalar spec and root it.
pub fn build_scalar(spec: &FodeSpec) -> Result<CharPoly> {
    let coeffs = expand(spec.alpha, &spec.coeffs);
    finish(coeffs, spec.lead())
}

/// Characteristic polynomials P₁ (a-side) and P₂ (b-side) of a system.
pub fn build_system(spec: &SystemSpec) -> Result<(CharPoly, CharPoly)> {
    let p1 = finish(expand(spec.alpha, &spec.a_coeffs), spec.a_lead())?;
    let p2 = finish(expand(spec.alpha, &spec.b_coeffs), spec.b_lead())?;
    Ok((p1, p2))
}

fn finish(coeffs: Vec<f64>, lead: f64) -> Result<CharPoly> {
    let roots = if coeffs.len() > 1 { find_roots(&coeffs)? } else { Vec::new() };
    let repeated = has_repeated(&roots);
    Ok(CharPoly { coeffs, lead, roots, repeated })
}

fn has_repeated(roots: &[Complex64]) -> bool {
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            if (a - b).norm() < 1e-7 * (1.0 + a.norm()) {
                return true;
            }
        }
    }
    false
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of a real polynomial (ascending coefficients, degree ≥ 1).
pub fn find_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let degree = coeffs.len() - 1;
    assert!(degree >= 1, "find_roots needs degree ≥ 1");
    let lead = coeffs[degree];
    if lead == 0.0 {
        return Err(Error::domain("leading coefficient is zero"));
    }
    let monic: Vec<Complex64> = coeffs
        .iter()
        .map(|&c| Complex64::new(c / lead, 0.0))
        .collect();

    let mut roots = aberth(&monic).or_else(|_| companion_eigenvalues(&monic))?;
    symmetrize_conjugates(&mut roots);

    // residual acceptance against the coefficient scale
    for r in &roots {
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(d, &c)| c.abs() * r.norm().powi(d as i32))
            .sum();
        let (p, _) = horner(&monic, *r);
        if (p.norm() * lead.abs()) > 1e-9 * scale.max(1e-12) {
            return Err(Error::convergence(format!(
                "root residual {:.3e} exceeds 1e-9 of coefficient scale at s = {r}",
                p.norm() * lead.abs()
            )));
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

fn aberth(monic: &[Complex64]) -> Result<Vec<Complex64>> {
    let degree = monic.len() - 1;
    let radius = 1.0
        + monic[..degree]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / degree as f64 + 0.4;
            0.7 * radius * Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    for _ in 0..200 {
        let mut max_step = 0.0f64;
        let snapshot = z.clone();
        for k in 0..degree {
            let (p, dp) = horner(monic, snapshot[k]);
            if p.norm() == 0.0 {
                continue;
            }
            if dp.norm() == 0.0 {
                z[k] += Complex64::new(1e-8, 1e-8);
                max_step = f64::MAX;
                continue;
            }
            let newton = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for (j, other) in snapshot.iter().enumerate() {
                if j != k {
                    s += 1.0 / (snapshot[k] - other);
                }
            }
            let denom = 1.0 - newton * s;
            let step = if denom.norm() < 1e-300 { newton } else { newton / denom };
            z[k] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
        }
        if max_step < 1e-14 {
            return Ok(z);
        }
    }
    Err(Error::convergence("Aberth iteration did not settle"))
}

fn companion_eigenvalues(monic: &[Complex64]) -> Result<Vec<Complex64>> {
    let degree = monic.len() - 1;
    let mut m = DMatrix::<f64>::zeros(degree, degree);
    for i in 1..degree {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..degree {
        m[(i, degree - 1)] = -monic[i].re;
    }
    let eigen = m.complex_eigenvalues();
    Ok(eigen.iter().copied().collect())
}

/// Snap nearly-real roots to the axis and force exact conjugate pairs, so
/// H-function parameter rows built from them keep evaluations real.
fn symmetrize_conjugates(roots: &mut [Complex64]) {
    for r in roots.iter_mut() {
        if r.im.abs() <= 1e-9 * (1.0 + r.norm()) {
            r.im = 0.0;
        }
    }
    let n = roots.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] || roots[i].im <= 0.0 {
            continue;
        }
        // closest unused root to the conjugate of roots[i]
        let target = roots[i].conj();
        let mut best: Option<(usize, f64)> = None;
        for (j, r) in roots.iter().enumerate() {
            if j == i || used[j] || r.im >= 0.0 {
                continue;
            }
            let d = (r - target).norm();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        if let Some((j, d)) = best {
            if d <= 1e-6 * (1.0 + target.norm()) {
                let avg = 0.5 * (roots[i] + roots[j].conj());
                roots[i] = avg;
                roots[j] = avg.conj();
                used[i] = true;
                used[j] = true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::findiff::fd_weights;

    #[test]
    fn euler_operator_alpha_one() {
        // α = 1, coefficients (0, 0, 1): P̃(s) = s(s-1)
        let spec = FodeSpec::new(1.0, vec![0.0, 0.0, 1.0]).unwrap();
        let p = build_scalar(&spec).unwrap();
        assert_eq!(p.coeffs, vec![0.0, -1.0, 1.0]);
        assert!((p.roots[0] - Complex64::new(0.0, 0.0)).norm() < 1e-12);
        assert!((p.roots[1] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn first_order_root() {
        // coefficients (a, b): single root -a/b
        let spec = FodeSpec::new(0.7, vec![1.5, -2.0]).unwrap();
        let p = build_scalar(&spec).unwrap();
        assert_eq!(p.degree(), 1);
        assert!((p.roots[0].re - 0.75).abs() < 1e-12);
    }

    #[test]
    fn quadratic_matches_closed_form() {
        // monic form s² + (b/c - 1/α) s + a/c
        let (alpha, a, b, c) = (2.0, -0.3, 0.8, 1.3);
        let spec = FodeSpec::new(alpha, vec![a, b, c]).unwrap();
        let p = build_scalar(&spec).unwrap();
        let d = 1.0 / (alpha * alpha) - 2.0 * b / (alpha * c) + (b / c).powi(2) - 4.0 * a / c;
        let s1 = 0.5 * (1.0 / alpha - b / c + d.sqrt());
        let s2 = 0.5 * (1.0 / alpha - b / c - d.sqrt());
        let mut expect = [s1, s2];
        expect.sort_by(f64::total_cmp);
        assert!((p.roots[0].re - expect[0]).abs() < 1e-12);
        assert!((p.roots[1].re - expect[1]).abs() < 1e-12);
    }

    #[test]
    fn pure_imaginary_pair() {
        // s² + 1 → ±i, exactly conjugate
        let roots = find_roots(&[1.0, 0.0, 1.0]).unwrap();
        assert!((roots[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((roots[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert_eq!(roots[0].re, roots[1].re);
        assert_eq!(roots[0].im, -roots[1].im);
    }

    #[test]
    fn degree_five_against_companion() {
        let coeffs = vec![-1.2, 0.7, 2.0, -0.5, 0.3, 1.0];
        let roots = find_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 5);
        let monic: Vec<Complex64> = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
        let mut comp = companion_eigenvalues(&monic).unwrap();
        comp.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        for (r, c) in roots.iter().zip(comp.iter()) {
            assert!((r - c).norm() < 1e-8, "{r} vs {c}");
        }
    }

    #[test]
    fn factorization_recovers_coefficients() {
        let spec = FodeSpec::new(1.7, vec![0.4, -1.1, 0.9, 0.6]).unwrap();
        let p = build_scalar(&spec).unwrap();
        // expand lead · Π (s - s_k)
        let mut poly = vec![Complex64::new(p.lead, 0.0)];
        for r in &p.roots {
            let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
            for (d, &v) in poly.iter().enumerate() {
                next[d + 1] += v;
                next[d] -= r * v;
            }
            poly = next;
        }
        for (got, want) in poly.iter().zip(p.coeffs.iter()) {
            assert!(
                (got.re - want).abs() <= 1e-8 * want.abs().max(1.0) && got.im.abs() < 1e-9,
                "{got} vs {want}"
            );
        }
    }

    #[test]
    fn repeated_root_flagged() {
        // (s - 1)² = s² - 2s + 1
        let p = finish(vec![1.0, -2.0, 1.0], 1.0).unwrap();
        assert!(p.repeated);
    }

    #[test]
    fn system_roots_first_order() {
        let spec = SystemSpec::new(0.5, vec![1.0, 2.0], vec![-3.0, 1.5]).unwrap();
        let (p1, p2) = build_system(&spec).unwrap();
        assert!((p1.roots[0].re + 0.5).abs() < 1e-12);
        assert!((p2.roots[0].re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn operator_action_on_powers() {
        // the operator symbol on z^{ασ} is P̃(σ): Σ (a_i/α^i) z^i d^i[z^{ασ}]
        // = P̃(σ) z^{ασ}, with the z-derivatives taken by finite differences
        let spec = FodeSpec::new(1.3, vec![0.7, -0.4, 1.1]).unwrap();
        let p = build_scalar(&spec).unwrap();
        let z = 1.5f64;
        for &sigma in &[0.6, 1.9, -0.35] {
            let power = spec.alpha * sigma;
            let mut lhs = spec.coeffs[0] * z.powf(power);
            for i in 1..=spec.m() {
                let h = 1e-2;
                let nodes: Vec<f64> = (-4..=4).map(|k| z + k as f64 * h).collect();
                let w = fd_weights(&nodes, z, i);
                let di: f64 = nodes.iter().zip(&w).map(|(&x, &wi)| wi * x.powf(power)).sum();
                lhs += spec.coeffs[i] / spec.alpha.powi(i as i32) * z.powi(i as i32) * di;
            }
            let rhs = p.eval(Complex64::new(sigma, 0.0)).re * z.powf(power);
            assert!(
                (lhs - rhs).abs() <= 1e-7 * rhs.abs().max(1.0),
                "sigma = {sigma}: {lhs} vs {rhs}"
            );
        }
    }
}
