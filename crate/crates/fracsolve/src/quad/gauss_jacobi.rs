//! Gauss-Jacobi quadrature rules for the weight (1-x)^a (1+x)^b on [-1, 1],
//! computed with the Golub-Welsch algorithm (symmetric tridiagonal
//! eigenproblem of the three-term recurrence). Rules are cached per (a, n)
//! because the fractional-derivative kernel requests the same rule at every
//! stencil point.

use nalgebra::DMatrix;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::specfun::gamma_real;

/// Nodes (ascending, in (-1, 1)) and weights of one rule.
#[derive(Debug, Clone)]
pub struct JacobiRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl JacobiRule {
    /// ∫₀¹ (1-u)^a f(u) du via the rule mapped to [0, 1] (b = 0 rules).
    pub fn integrate_unit<T, F>(&self, zero: T, mut f: F) -> T
    where
        T: std::ops::AddAssign + Copy,
        F: FnMut(f64, f64) -> T,
    {
        let mut acc = zero;
        for (&x, &w) in self.nodes.iter().zip(self.weights.iter()) {
            let u = 0.5 * (x + 1.0);
            acc += f(u, w);
        }
        acc
    }
}

fn cache() -> &'static Mutex<HashMap<(u64, u64, usize), Arc<JacobiRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64, usize), Arc<JacobiRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss-Jacobi rule with `n` nodes for weight (1-x)^a (1+x)^b, a, b > -1.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<Arc<JacobiRule>> {
    if n < 2 {
        return Err(Error::domain("Gauss-Jacobi needs at least 2 nodes"));
    }
    if a <= -1.0 || b <= -1.0 {
        return Err(Error::domain("Gauss-Jacobi exponents must exceed -1"));
    }
    let key = (a.to_bits(), b.to_bits(), n);
    if let Some(rule) = cache().lock().unwrap().get(&key) {
        return Ok(rule.clone());
    }

    let mut jac = DMatrix::<f64>::zeros(n, n);
    let mut diag = (b - a) / (a + b + 2.0);
    for k in 0..n - 1 {
        let k1 = k as f64 + 1.0;
        let denom = 2.0 * k1 + a + b;
        let off = 2.0 / denom
            * (k1 * (k1 + a) * (k1 + b) * (k1 + a + b) / ((denom + 1.0) * (denom - 1.0))).sqrt();
        jac[(k, k)] = diag;
        jac[(k, k + 1)] = off;
        jac[(k + 1, k)] = off;
        diag = (b * b - a * a) / (denom * (denom + 2.0));
    }
    jac[(n - 1, n - 1)] = diag;

    let eigen = jac.symmetric_eigen();
    // μ₀ = ∫ (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
    let mu0 = 2f64.powf(a + b + 1.0) * gamma_real(a + 1.0)? * gamma_real(b + 1.0)?
        / gamma_real(a + b + 2.0)?;

    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eigen.eigenvectors[(0, i)];
            (eigen.eigenvalues[i], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));

    let rule = Arc::new(JacobiRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    });
    cache().lock().unwrap().insert(key, rule.clone());
    Ok(rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_special_case() {
        // a = b = 0 reduces to Gauss-Legendre: ∫_{-1}^1 x² dx = 2/3
        let rule = gauss_jacobi(8, 0.0, 0.0).unwrap();
        let v: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &w)| w * x * x)
            .sum();
        assert!((v - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn singular_endpoint_weight() {
        // ∫₀¹ (1-u)^{-1/2} u du = B(2, 1/2) = 4/3
        let a = -0.5;
        let rule = gauss_jacobi(16, a, 0.0).unwrap();
        // map to [0,1]: ∫₀¹ (1-u)^a f(u) du = 2^{-(a+1)} Σ w_i f((x_i+1)/2)
        let scale = 2f64.powf(-(a + 1.0));
        let v: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &w)| w * (0.5 * (x + 1.0)))
            .sum::<f64>()
            * scale;
        assert!((v - 4.0 / 3.0).abs() < 1e-13, "got {v}");
    }

    #[test]
    fn cache_hits() {
        let r1 = gauss_jacobi(32, -0.3, 0.0).unwrap();
        let r2 = gauss_jacobi(32, -0.3, 0.0).unwrap();
        assert!(Arc::ptr_eq(&r1, &r2));
    }
}
