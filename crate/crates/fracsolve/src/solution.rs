//! Construction and evaluation of the closed-form solution families.
//!
//! Every solution this crate produces is a linear combination of terms
//!
//!   c · coeff · z^ρ · F(A z^σ)
//!
//! where F is one of the special functions in [`crate::specfun`], `c` is a
//! free constant and `coeff` a structural prefactor. Which family applies
//! is decided by the fractional order α against the operator order m:
//!
//! * m = 0 — Mittag-Leffler terms z^{α-k} E_{α,1+α-k}(a₀ z^α), k = 1..n;
//! * α > m — generalized Wright terms with upper rows (1 - k/α - s_i, 1)
//!   built from the characteristic roots s_i and argument a_m z^α;
//! * 0 < α < m, a_m > 0 — a single Fox H-function of argument z^{-α}/a_m
//!   with lower rows (-s_i, 1);
//! * the discriminant-1/4 case collapses, via the gamma duplication
//!   formula, to a plain Wright function (or a two-row ₚΨ_q for α > 2).
//!
//! Cross-coupled systems follow the same pattern with doubled order 2α,
//! argument scale 2^{m₁+m₂} a_{m₁} b_{m₂} and sign/ratio prefactors.
//!
//! Construction and evaluation are pure; terms are summed in index order so
//! results are reproducible bit-for-bit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::charpoly::{build_scalar, build_system, FodeSpec, SystemSpec};
use crate::error::{Error, Result};
use crate::specfun::series::weighted_series;
use crate::specfun::{
    fox_h, gen_wright, mittag_leffler, wright, ParamRow, SpecialFunctionDescriptor,
};

/// Which solution family a [`SolutionExpression`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    MittagLeffler,
    GenWright,
    FoxH,
    WrightDegenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionWarning {
    /// Characteristic roots coincide within 1e-7: the formulas stay
    /// formally valid but the emitted terms lose independence.
    RepeatedRoots,
}

/// One term `coeff · z^rho · F(arg_scale · z^arg_power)`, multiplied by the
/// free constant `constants[constant_index]` at evaluation time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionTerm {
    pub constant_index: usize,
    pub coeff: Complex64,
    pub rho: f64,
    pub func: SpecialFunctionDescriptor,
    pub arg_scale: f64,
    pub arg_power: f64,
}

/// A solution family: `n` free constants per family, every term tagged with
/// the constant it belongs to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionExpression {
    pub terms: Vec<SolutionTerm>,
    /// Number of constants per family (⌈α⌉, or α itself when integral).
    pub n: usize,
    /// Total number of free constants expected by [`evaluate`].
    pub n_constants: usize,
    pub branch: Branch,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<SolutionWarning>,
}

/// Solution of a cross-coupled system; φ and ψ share one constant vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemSolution {
    pub phi: SolutionExpression,
    pub psi: SolutionExpression,
}

/// Number of free constants per family: ⌈α⌉, and α itself at integers.
pub fn family_size(alpha: f64) -> usize {
    let r = alpha.round();
    if (alpha - r).abs() <= 1e-12 {
        r as usize
    } else {
        alpha.ceil() as usize
    }
}

const BOUNDARY_TOL: f64 = 1e-9;

fn warnings_from(repeated: bool) -> Vec<SolutionWarning> {
    if repeated {
        vec![SolutionWarning::RepeatedRoots]
    } else {
        Vec::new()
    }
}

/// Solve d^α φ = Σ (a_i/α^i) z^i φ^{(i)}; the branch is picked from
/// (α, m, sign of a_m).
pub fn solve_scalar(spec: &FodeSpec) -> Result<SolutionExpression> {
    let alpha = spec.alpha;
    let m = spec.m();
    let n = family_size(alpha);

    if m == 0 {
        // d^α φ = a₀ φ: φ_k = z^{α-k} E_{α,1+α-k}(a₀ z^α)
        let terms = (1..=n)
            .map(|k| SolutionTerm {
                constant_index: k - 1,
                coeff: Complex64::new(1.0, 0.0),
                rho: alpha - k as f64,
                func: SpecialFunctionDescriptor::MittagLeffler {
                    alpha,
                    beta: 1.0 + alpha - k as f64,
                },
                arg_scale: spec.coeffs[0],
                arg_power: alpha,
            })
            .collect();
        return Ok(SolutionExpression {
            terms,
            n,
            n_constants: n,
            branch: Branch::MittagLeffler,
            warnings: Vec::new(),
        });
    }

    if (alpha - m as f64).abs() <= BOUNDARY_TOL {
        return Err(Error::unsupported(format!(
            "no solution formula at the boundary α = m = {m}"
        )));
    }

    let poly = build_scalar(spec)?;
    let warnings = warnings_from(poly.repeated);

    if alpha < m as f64 {
        if spec.lead() <= 0.0 {
            return Err(Error::unsupported(format!(
                "0 < α < m requires a_m > 0, got a_m = {}",
                spec.lead()
            )));
        }
        // single H-function: H^{m,0}_{1,m}[z^{-α}/a_m | (1,α); (-s_i,1)_i]
        let lower = poly.roots.iter().map(|s| ParamRow::new(-s, 1.0)).collect();
        let term = SolutionTerm {
            constant_index: 0,
            coeff: Complex64::new(1.0, 0.0),
            rho: 0.0,
            func: SpecialFunctionDescriptor::FoxH {
                m,
                l: 0,
                upper: vec![ParamRow::real(1.0, alpha)],
                lower,
            },
            arg_scale: 1.0 / spec.lead(),
            arg_power: -alpha,
        };
        return Ok(SolutionExpression {
            terms: vec![term],
            n,
            n_constants: 1,
            branch: Branch::FoxH,
            warnings,
        });
    }

    // α > m: φ_k = z^{α-k} · ₘ₊₁Ψ₁[a_m z^α | (1-k/α-s_i,1)_i,(1,1); (1+α-k,α)]
    let terms = (1..=n)
        .map(|k| {
            let kf = k as f64;
            let mut upper: Vec<ParamRow> = poly
                .roots
                .iter()
                .map(|s| ParamRow::new(Complex64::new(1.0 - kf / alpha, 0.0) - s, 1.0))
                .collect();
            upper.push(ParamRow::real(1.0, 1.0));
            SolutionTerm {
                constant_index: k - 1,
                coeff: Complex64::new(1.0, 0.0),
                rho: alpha - kf,
                func: SpecialFunctionDescriptor::GenWright {
                    upper,
                    lower: vec![ParamRow::real(1.0 + alpha - kf, alpha)],
                },
                arg_scale: spec.lead(),
                arg_power: alpha,
            }
        })
        .collect();
    Ok(SolutionExpression {
        terms,
        n,
        n_constants: n,
        branch: Branch::GenWright,
        warnings,
    })
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Solve the cross-coupled system d^α φ = (a-operator) ψ,
/// d^α ψ = (b-operator) φ.
pub fn solve_system(spec: &SystemSpec) -> Result<SystemSolution> {
    let alpha = spec.alpha;
    let (m1, m2) = (spec.m1(), spec.m2());
    let m = m1 + m2;
    let n = family_size(alpha);
    let two_alpha = 2.0 * alpha;

    if m == 0 {
        // φ_k / ψ_k in Mittag-Leffler form with doubled order 2α
        let a0 = spec.a_coeffs[0];
        let b0 = spec.b_coeffs[0];
        let scale = a0 * b0;
        let ml = |beta_shift: f64, k: usize| SpecialFunctionDescriptor::MittagLeffler {
            alpha: two_alpha,
            beta: 1.0 + beta_shift - k as f64,
        };
        let mut phi = Vec::with_capacity(2 * n);
        let mut psi = Vec::with_capacity(2 * n);
        for k in 1..=n {
            phi.push(SolutionTerm {
                constant_index: k - 1,
                coeff: Complex64::new(1.0, 0.0),
                rho: alpha - k as f64,
                func: ml(alpha, k),
                arg_scale: scale,
                arg_power: two_alpha,
            });
            psi.push(SolutionTerm {
                constant_index: k - 1,
                coeff: Complex64::new(b0, 0.0),
                rho: two_alpha - k as f64,
                func: ml(two_alpha, k),
                arg_scale: scale,
                arg_power: two_alpha,
            });
        }
        for k in 1..=n {
            phi.push(SolutionTerm {
                constant_index: n + k - 1,
                coeff: Complex64::new(a0, 0.0),
                rho: two_alpha - k as f64,
                func: ml(two_alpha, k),
                arg_scale: scale,
                arg_power: two_alpha,
            });
            psi.push(SolutionTerm {
                constant_index: n + k - 1,
                coeff: Complex64::new(1.0, 0.0),
                rho: alpha - k as f64,
                func: ml(alpha, k),
                arg_scale: scale,
                arg_power: two_alpha,
            });
        }
        let expr = |terms| SolutionExpression {
            terms,
            n,
            n_constants: 2 * n,
            branch: Branch::MittagLeffler,
            warnings: Vec::new(),
        };
        return Ok(SystemSolution { phi: expr(phi), psi: expr(psi) });
    }

    if (alpha - m as f64 / 2.0).abs() <= BOUNDARY_TOL {
        return Err(Error::unsupported(format!(
            "no solution formula at the boundary α = (m₁+m₂)/2 = {}",
            m as f64 / 2.0
        )));
    }

    let (p1, p2) = build_system(spec)?;
    let warnings = warnings_from(p1.repeated || p2.repeated);
    // combined root list s₁..s_{m₁}, s_{m₁+1}..s_{m₁+m₂}
    let roots: Vec<Complex64> = p1.roots.iter().chain(p2.roots.iter()).copied().collect();
    let a_lead = spec.a_lead();
    let b_lead = spec.b_lead();

    if alpha < m as f64 / 2.0 {
        if a_lead * b_lead <= 0.0 {
            return Err(Error::unsupported(format!(
                "0 < α < (m₁+m₂)/2 requires a_{{m₁}} b_{{m₂}} > 0, got {}",
                a_lead * b_lead
            )));
        }
        let arg_scale = 1.0 / (2f64.powi(m as i32) * a_lead * b_lead);
        // lower rows -s_i/2, with the +1/2 shift on the first block for φ
        // and on the second block for ψ
        let rows = |shift_first_block: bool| -> Vec<ParamRow> {
            roots
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let shift = if (i < m1) == shift_first_block { 0.5 } else { 0.0 };
                    ParamRow::new(-s / 2.0 + shift, 1.0)
                })
                .collect()
        };
        let h_term = |coeff: f64, lower: Vec<ParamRow>| SolutionTerm {
            constant_index: 0,
            coeff: Complex64::new(coeff, 0.0),
            rho: 0.0,
            func: SpecialFunctionDescriptor::FoxH {
                m,
                l: 0,
                upper: vec![ParamRow::real(1.0, two_alpha)],
                lower,
            },
            arg_scale,
            arg_power: -two_alpha,
        };
        let phi = h_term(sgn(b_lead), rows(true));
        let psi = h_term(
            2f64.powf((m2 as f64 - m1 as f64) / 2.0) * (b_lead / a_lead).sqrt(),
            rows(false),
        );
        let expr = |t| SolutionExpression {
            terms: vec![t],
            n,
            n_constants: 1,
            branch: Branch::FoxH,
            warnings: warnings.clone(),
        };
        return Ok(SystemSolution { phi: expr(phi), psi: expr(psi) });
    }

    // α > (m₁+m₂)/2: four ₘ₊₁Ψ₁ families with argument A z^{2α}
    let arg_scale = 2f64.powi(m as i32) * a_lead * b_lead;
    // upper rows (x - k/(2α) - s_i/2, 1) with x per root block
    let gw_rows = |k: usize, first_block: f64, second_block: f64| -> Vec<ParamRow> {
        let kf = k as f64;
        let mut rows: Vec<ParamRow> = roots
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let base = if i < m1 { first_block } else { second_block };
                ParamRow::new(Complex64::new(base - kf / (2.0 * alpha), 0.0) - s / 2.0, 1.0)
            })
            .collect();
        rows.push(ParamRow::real(1.0, 1.0));
        rows
    };
    let gw_term = |idx: usize, coeff: f64, rho: f64, upper: Vec<ParamRow>, lower_b: f64| {
        SolutionTerm {
            constant_index: idx,
            coeff: Complex64::new(coeff, 0.0),
            rho,
            func: SpecialFunctionDescriptor::GenWright {
                upper,
                lower: vec![ParamRow::real(lower_b, two_alpha)],
            },
            arg_scale,
            arg_power: two_alpha,
        }
    };

    let mut phi = Vec::with_capacity(2 * n);
    let mut psi = Vec::with_capacity(2 * n);
    for k in 1..=n {
        let kf = k as f64;
        phi.push(gw_term(
            k - 1,
            1.0,
            alpha - kf,
            gw_rows(k, 1.0, 0.5),
            1.0 + alpha - kf,
        ));
        psi.push(gw_term(
            k - 1,
            2f64.powi(m2 as i32) * b_lead,
            two_alpha - kf,
            gw_rows(k, 1.0, 1.5),
            1.0 + two_alpha - kf,
        ));
    }
    for k in 1..=n {
        let kf = k as f64;
        phi.push(gw_term(
            n + k - 1,
            2f64.powi(m1 as i32) * a_lead,
            two_alpha - kf,
            gw_rows(k, 1.5, 1.0),
            1.0 + two_alpha - kf,
        ));
        psi.push(gw_term(
            n + k - 1,
            1.0,
            alpha - kf,
            gw_rows(k, 0.5, 1.0),
            1.0 + alpha - kf,
        ));
    }
    let expr = |terms| SolutionExpression {
        terms,
        n,
        n_constants: 2 * n,
        branch: Branch::GenWright,
        warnings: warnings.clone(),
    };
    Ok(SystemSolution { phi: expr(phi), psi: expr(psi) })
}

/// Discriminant of the second-order characteristic equation.
pub fn discriminant(alpha: f64, a: f64, b: f64, c: f64) -> f64 {
    1.0 / (alpha * alpha) - 2.0 * b / (alpha * c) + (b / c).powi(2) - 4.0 * a / c
}

/// Solutions of the second-order problem in the degenerate case D = 1/4,
/// where the gamma duplication formula collapses the paired parameter rows:
/// a single Wright function for 0 < α < 2 (c > 0), a two-row ₂Ψ₁ for α > 2.
pub fn solve_degenerate_wright(alpha: f64, a: f64, b: f64, c: f64) -> Result<SolutionExpression> {
    if c == 0.0 {
        return Err(Error::domain("degenerate Wright form requires c ≠ 0"));
    }
    let d = discriminant(alpha, a, b, c);
    if (d - 0.25).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "degenerate Wright form requires discriminant 1/4, got D = {d}"
        )));
    }
    if (alpha - 2.0).abs() <= BOUNDARY_TOL {
        return Err(Error::unsupported("no formula at the boundary α = 2"));
    }

    if alpha < 2.0 {
        if !(alpha > 0.0) {
            return Err(Error::domain("α must be positive"));
        }
        if c <= 0.0 {
            return Err(Error::domain("the Wright form for 0 < α < 2 requires c > 0"));
        }
        let s1 = 0.5 * (1.0 / alpha - b / c + 0.5);
        let term = SolutionTerm {
            constant_index: 0,
            coeff: Complex64::new(1.0, 0.0),
            rho: alpha * s1,
            func: SpecialFunctionDescriptor::Wright {
                alpha: -alpha / 2.0,
                beta: alpha / 2.0 * (3.0 / alpha - b / c + 0.5),
            },
            arg_scale: -2.0 / c.sqrt(),
            arg_power: -alpha / 2.0,
        };
        return Ok(SolutionExpression {
            terms: vec![term],
            n: 1,
            n_constants: 1,
            branch: Branch::WrightDegenerate,
            warnings: Vec::new(),
        });
    }

    let n = family_size(alpha);
    let terms = (1..=n)
        .map(|k| {
            let kf = k as f64;
            SolutionTerm {
                constant_index: k - 1,
                coeff: Complex64::new(1.0, 0.0),
                rho: alpha - kf,
                func: SpecialFunctionDescriptor::GenWright {
                    upper: vec![
                        ParamRow::real(1.5 - (2.0 * kf + 1.0) / alpha + b / c, 2.0),
                        ParamRow::real(1.0, 1.0),
                    ],
                    lower: vec![ParamRow::real(1.0 + alpha - kf, alpha)],
                },
                arg_scale: c / 4.0,
                arg_power: alpha,
            }
        })
        .collect();
    Ok(SolutionExpression {
        terms,
        n,
        n_constants: n,
        branch: Branch::WrightDegenerate,
        warnings: Vec::new(),
    })
}

/// For H^{m,0} descriptors the function vanishes like exp(-ν (ε z)^{1/ν});
/// past `exponent > 400` the value is returned as an exact 0 instead of
/// asking the contour to resolve a sub-1e-170 residue of a cancelling
/// integral.
fn h_decay_exponent(desc: &SpecialFunctionDescriptor, w_norm: f64) -> Option<f64> {
    if let SpecialFunctionDescriptor::FoxH { l: 0, upper, lower, .. } = desc {
        let nu = SpecialFunctionDescriptor::fox_nu(upper, lower);
        if nu <= 0.0 {
            return None;
        }
        let mut eps = 1.0f64;
        for r in upper {
            eps *= r.step.powf(r.step);
        }
        for r in lower {
            eps *= r.step.powf(-r.step);
        }
        Some(nu * (eps * w_norm).powf(1.0 / nu))
    } else {
        None
    }
}

const H_UNDERFLOW_EXPONENT: f64 = 400.0;

/// Evaluate one descriptor at argument `w`.
fn eval_func(func: &SpecialFunctionDescriptor, w: Complex64, tol: f64) -> Result<Complex64> {
    match func {
        SpecialFunctionDescriptor::MittagLeffler { alpha, beta } => {
            mittag_leffler(*alpha, *beta, w, tol)
        }
        SpecialFunctionDescriptor::Wright { alpha, beta } => wright(w, *alpha, *beta, tol),
        SpecialFunctionDescriptor::GenWright { upper, lower } => gen_wright(upper, lower, w, tol),
        SpecialFunctionDescriptor::FoxH { .. } => {
            if let Some(e) = h_decay_exponent(func, w.norm()) {
                if e > H_UNDERFLOW_EXPONENT {
                    return Ok(Complex64::new(0.0, 0.0));
                }
            }
            fox_h(func, w, tol)
        }
    }
}

/// Σ constants[idx] · coeff · z^ρ · F(A z^σ). Terms are summed in index
/// order; outputs are real (up to roundoff) when the spec was real and the
/// roots came in conjugate pairs.
pub fn evaluate(
    expr: &SolutionExpression,
    constants: &[Complex64],
    z: f64,
    tol: f64,
) -> Result<Complex64> {
    if constants.len() != expr.n_constants {
        return Err(Error::domain(format!(
            "expected {} constants, got {}",
            expr.n_constants,
            constants.len()
        )));
    }
    if z <= 0.0 {
        return Err(Error::domain("evaluation requires z > 0"));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for term in &expr.terms {
        let c = constants[term.constant_index];
        if c == Complex64::new(0.0, 0.0) {
            continue;
        }
        let w = Complex64::new(term.arg_scale * z.powf(term.arg_power), 0.0);
        let f = eval_func(&term.func, w, tol)?;
        acc += c * term.coeff * z.powf(term.rho) * f;
    }
    Ok(acc)
}

/// i-th z-derivative of the expression, term-wise analytic: series branches
/// differentiate under the sum, the Fox H branch maps to a shifted
/// H^{m+1,0} descriptor evaluated by the same contour engine.
pub fn evaluate_deriv(
    expr: &SolutionExpression,
    constants: &[Complex64],
    z: f64,
    order: usize,
    tol: f64,
) -> Result<Complex64> {
    if order == 0 {
        return evaluate(expr, constants, z, tol);
    }
    if constants.len() != expr.n_constants {
        return Err(Error::domain(format!(
            "expected {} constants, got {}",
            expr.n_constants,
            constants.len()
        )));
    }
    if z <= 0.0 {
        return Err(Error::domain("evaluation requires z > 0"));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for term in &expr.terms {
        let c = constants[term.constant_index];
        if c == Complex64::new(0.0, 0.0) {
            continue;
        }
        acc += c * term.coeff * term_deriv(term, z, order, tol)?;
    }
    Ok(acc)
}

/// d^order/dz^order of z^ρ F(A z^σ) for a single term (without coeff).
fn term_deriv(term: &SolutionTerm, z: f64, order: usize, tol: f64) -> Result<Complex64> {
    let rho = term.rho;
    let sigma = term.arg_power;
    let w = Complex64::new(term.arg_scale * z.powf(sigma), 0.0);

    let series_rows: Option<(Vec<ParamRow>, Vec<ParamRow>)> = match &term.func {
        SpecialFunctionDescriptor::MittagLeffler { alpha, beta } => Some((
            vec![ParamRow::real(1.0, 1.0)],
            vec![ParamRow::real(*beta, *alpha)],
        )),
        SpecialFunctionDescriptor::Wright { alpha, beta } => {
            Some((vec![], vec![ParamRow::real(*beta, *alpha)]))
        }
        SpecialFunctionDescriptor::GenWright { upper, lower } => {
            Some((upper.clone(), lower.clone()))
        }
        SpecialFunctionDescriptor::FoxH { .. } => None,
    };

    if let Some((upper, lower)) = series_rows {
        // d^i [z^ρ Σ g_k (A z^σ)^k] = z^{ρ-i} Σ g_k (A z^σ)^k Π_r (ρ+σk-r)
        let weight = |k: usize| {
            let base = rho + sigma * k as f64;
            let mut prod = 1.0;
            for r in 0..order {
                prod *= base - r as f64;
            }
            Complex64::new(prod, 0.0)
        };
        let (sum, _) = weighted_series(&upper, &lower, w, tol, weight)?;
        return Ok(z.powf(rho - order as f64) * sum);
    }

    // Fox H: d^N [z^{ρ'-1} H^{m,0}_{p,q}[A z^σ]] with ρ' = ρ + 1 equals
    // z^{ρ'-N-1} H^{m+1,0}_{p+1,q+1}[A z^σ] with the extra rows
    // (ρ'-N, -σ) upper and (ρ', -σ) leading lower.
    let (m, upper, lower) = match &term.func {
        SpecialFunctionDescriptor::FoxH { m, l: 0, upper, lower } => (*m, upper, lower),
        _ => {
            return Err(Error::domain(
                "analytic derivative of Fox H terms requires l = 0",
            ))
        }
    };
    if sigma >= 0.0 {
        return Err(Error::domain(
            "Fox H solution terms carry negative argument powers",
        ));
    }
    let rho1 = rho + 1.0;
    let mut new_upper = upper.clone();
    new_upper.push(ParamRow::real(rho1 - order as f64, -sigma));
    let mut new_lower = Vec::with_capacity(lower.len() + 1);
    new_lower.push(ParamRow::real(rho1, -sigma));
    new_lower.extend_from_slice(lower);
    let desc = SpecialFunctionDescriptor::FoxH {
        m: m + 1,
        l: 0,
        upper: new_upper,
        lower: new_lower,
    };
    let value = if let Some(e) = h_decay_exponent(&desc, w.norm()) {
        if e > H_UNDERFLOW_EXPONENT {
            Complex64::new(0.0, 0.0)
        } else {
            fox_h(&desc, w, tol)?
        }
    } else {
        fox_h(&desc, w, tol)?
    };
    Ok(z.powf(rho - order as f64) * value)
}

/// Constants all set to 1: the deterministic default fixture.
pub fn unit_constants(count: usize) -> Vec<Complex64> {
    vec![Complex64::new(1.0, 0.0); count]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ml_spec(alpha: f64, a: f64) -> FodeSpec {
        FodeSpec::new(alpha, vec![a]).unwrap()
    }

    #[test]
    fn prop_2_1_shape_and_alpha_one_collapse() {
        let expr = solve_scalar(&ml_spec(0.7, 1.0)).unwrap();
        assert_eq!(expr.branch, Branch::MittagLeffler);
        assert_eq!(expr.terms.len(), 1);
        assert!((expr.terms[0].rho + 0.3).abs() < 1e-12);

        // α = 1, a = 1: φ = E_{1,1}(z) = e^z, so φ(2) = e²
        let expr = solve_scalar(&ml_spec(1.0, 1.0)).unwrap();
        let v = evaluate(&expr, &unit_constants(1), 2.0, 1e-12).unwrap();
        let e2 = std::f64::consts::E * std::f64::consts::E;
        assert!((v.re - e2).abs() < 1e-10 * e2);
    }

    #[test]
    fn boundary_alpha_equals_m_rejected() {
        let spec = FodeSpec::new(1.0, vec![0.3, 1.0]).unwrap();
        assert!(matches!(
            solve_scalar(&spec),
            Err(Error::UnsupportedRegime(_))
        ));
    }

    #[test]
    fn h_branch_requires_positive_lead() {
        let spec = FodeSpec::new(0.5, vec![0.3, -1.0]).unwrap();
        assert!(matches!(
            solve_scalar(&spec),
            Err(Error::UnsupportedRegime(_))
        ));
    }

    #[test]
    fn prop_6_1_fixture_rows() {
        // α = 1/2, coefficients (0, 1): s̄ = 0, so the H-term is
        // H^{1,0}_{1,1}[z^{-1/2} | (1, 1/2); (0, 1)]
        let spec = FodeSpec::new(0.5, vec![0.0, 1.0]).unwrap();
        let expr = solve_scalar(&spec).unwrap();
        assert_eq!(expr.branch, Branch::FoxH);
        let t = &expr.terms[0];
        assert!((t.arg_scale - 1.0).abs() < 1e-12);
        assert!((t.arg_power + 0.5).abs() < 1e-12);
        match &t.func {
            SpecialFunctionDescriptor::FoxH { m, l, upper, lower } => {
                assert_eq!((*m, *l), (1, 0));
                assert!((upper[0].a.re - 1.0).abs() < 1e-12 && (upper[0].step - 0.5).abs() < 1e-12);
                assert!(lower[0].a.norm() < 1e-12 && (lower[0].step - 1.0).abs() < 1e-12);
            }
            other => panic!("wrong descriptor {other:?}"),
        }
        // its value at z = 1 equals Ψ(-1; -1/2, 1)
        let v = evaluate(&expr, &unit_constants(1), 1.0, 1e-11).unwrap();
        assert!((v.re - 0.479_500_122_186_953_46).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn thm_8_2_rows_match_prop_4_2_fixture() {
        // α = 2.5, coefficients (-0.5, -0.4, 0.8): frozen rows from the
        // 50-digit oracle run, k = 1
        let spec = FodeSpec::new(2.5, vec![-0.5, -0.4, 0.8]).unwrap();
        let expr = solve_scalar(&spec).unwrap();
        assert_eq!(expr.branch, Branch::GenWright);
        assert_eq!(expr.terms.len(), 3);
        let t = &expr.terms[0];
        match &t.func {
            SpecialFunctionDescriptor::GenWright { upper, lower } => {
                let mut rows: Vec<f64> = upper[..2].iter().map(|r| r.a.re).collect();
                rows.sort_by(f64::total_cmp);
                assert!((rows[0] + 0.759_670_269_933_012_6).abs() < 1e-12);
                assert!((rows[1] - 1.059_670_269_933_012_6).abs() < 1e-12);
                assert!((upper[2].a.re - 1.0).abs() < 1e-12);
                assert!((lower[0].a.re - 2.5).abs() < 1e-12);
                assert!((lower[0].step - 2.5).abs() < 1e-12);
            }
            other => panic!("wrong descriptor {other:?}"),
        }
        // evaluated term k=1 at z = 1.2 against the frozen oracle
        let z: f64 = 1.2;
        let w = Complex64::new(t.arg_scale * z.powf(t.arg_power), 0.0);
        let f = match &t.func {
            SpecialFunctionDescriptor::GenWright { upper, lower } => {
                gen_wright(upper, lower, w, 1e-13).unwrap()
            }
            _ => unreachable!(),
        };
        assert!(
            (f.re + 3.420_941_601_135_349_6).abs() < 1e-11 * 3.42,
            "got {f}"
        );
    }

    #[test]
    fn degenerate_wright_case1_parameters() {
        // a = 0, α = 1, c = 1 ⇒ D = (1-b)²: b = 1/2 gives D = 1/4
        let expr = solve_degenerate_wright(1.0, 0.0, 0.5, 1.0).unwrap();
        assert_eq!(expr.branch, Branch::WrightDegenerate);
        let t = &expr.terms[0];
        let s1 = 0.5 * (1.0 - 0.5 + 0.5);
        assert!((t.rho - s1).abs() < 1e-12);
        match &t.func {
            SpecialFunctionDescriptor::Wright { alpha, beta } => {
                assert!((alpha + 0.5).abs() < 1e-12);
                assert!((beta - 0.5 * (3.0 - 0.5 + 0.5)).abs() < 1e-12);
            }
            other => panic!("wrong descriptor {other:?}"),
        }
        assert!((t.arg_scale + 2.0).abs() < 1e-12);
        assert!((t.arg_power + 0.5).abs() < 1e-12);
    }

    #[test]
    fn degenerate_wright_rejects_wrong_discriminant() {
        // D = (1-b)² with b = 0.3 gives 0.49 ≠ 1/4
        assert!(matches!(
            solve_degenerate_wright(1.0, 0.0, 0.3, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn degenerate_wright_matches_h_form() {
        // D = 1/4 draw: both engines must produce the same function up to
        // the duplication-formula constant √π c^{s₁}
        let (alpha, b, c) = (0.8, 0.3, 1.1);
        let a = c / 4.0 * (discriminant(alpha, 0.0, b, c) - 0.25);
        let d = discriminant(alpha, a, b, c);
        assert!((d - 0.25).abs() < 1e-12);

        let wright_form = solve_degenerate_wright(alpha, a, b, c).unwrap();
        let spec = FodeSpec::new(alpha, vec![a, b, c]).unwrap();
        let h_form = solve_scalar(&spec).unwrap();
        assert_eq!(h_form.branch, Branch::FoxH);

        let s1 = 0.5 * (1.0 / alpha - b / c + 0.5);
        let scale = PI.sqrt() * c.powf(s1);
        for &z in &[0.5, 1.0, 2.0] {
            let hv = evaluate(&h_form, &unit_constants(1), z, 1e-11).unwrap();
            let wv = evaluate(&wright_form, &unit_constants(1), z, 1e-13).unwrap();
            let rel = (hv - scale * wv).norm() / hv.norm();
            assert!(rel < 1e-8, "z = {z}: rel = {rel:.2e}");
        }
    }

    #[test]
    fn system_ml_shape() {
        let spec = SystemSpec::new(0.7, vec![2.0], vec![3.0]).unwrap();
        let sol = solve_system(&spec).unwrap();
        assert_eq!(sol.phi.branch, Branch::MittagLeffler);
        assert_eq!(sol.phi.terms.len(), 2);
        assert_eq!(sol.phi.n_constants, 2);
        // φ family 2 carries the a₁ prefactor, ψ family 1 the a₂ prefactor
        assert!((sol.phi.terms[1].coeff.re - 2.0).abs() < 1e-12);
        assert!((sol.psi.terms[0].coeff.re - 3.0).abs() < 1e-12);
        assert!((sol.phi.terms[0].arg_scale - 6.0).abs() < 1e-12);
        assert!((sol.phi.terms[0].arg_power - 1.4).abs() < 1e-12);
    }

    #[test]
    fn prop_6_3_fixture_rows() {
        // m₁ = m₂ = 1, α = 1/2, a-side (0,1), b-side (0,1): s̃₁ = s̃₂ = 0,
        // φ = sgn(1)·H^{2,0}_{1,2}[z^{-1}/4 | (1,1); (1/2,1),(0,1)]
        let spec = SystemSpec::new(0.5, vec![0.0, 1.0], vec![0.0, 1.0]).unwrap();
        let sol = solve_system(&spec).unwrap();
        assert_eq!(sol.phi.branch, Branch::FoxH);
        let t = &sol.phi.terms[0];
        assert!((t.arg_scale - 0.25).abs() < 1e-12);
        assert!((t.arg_power + 1.0).abs() < 1e-12);
        match &t.func {
            SpecialFunctionDescriptor::FoxH { m, l, upper, lower } => {
                assert_eq!((*m, *l), (2, 0));
                assert!((upper[0].step - 1.0).abs() < 1e-12);
                assert!((lower[0].a.re - 0.5).abs() < 1e-12);
                assert!(lower[1].a.norm() < 1e-12);
            }
            other => panic!("wrong descriptor {other:?}"),
        }
        // ψ swaps the shifted block
        match &sol.psi.terms[0].func {
            SpecialFunctionDescriptor::FoxH { lower, .. } => {
                assert!(lower[0].a.norm() < 1e-12);
                assert!((lower[1].a.re - 0.5).abs() < 1e-12);
            }
            other => panic!("wrong descriptor {other:?}"),
        }
    }

    #[test]
    fn zero_constants_evaluate_to_zero() {
        let expr = solve_scalar(&ml_spec(0.7, 1.0)).unwrap();
        let v = evaluate(&expr, &[Complex64::new(0.0, 0.0)], 1.3, 1e-10).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn conjugate_roots_keep_values_real() {
        // complex characteristic roots: α = 3.5 > m = 2, negative discriminant
        let spec = FodeSpec::new(3.5, vec![1.0, 0.2, 0.9]).unwrap();
        let expr = solve_scalar(&spec).unwrap();
        let v = evaluate(&expr, &unit_constants(4), 1.1, 1e-11).unwrap();
        assert!(v.im.abs() <= 1e-10 * v.norm().max(1e-10), "imag = {}", v.im);
    }

    #[test]
    fn series_derivative_matches_finite_difference() {
        let spec = FodeSpec::new(2.5, vec![-0.5, -0.4, 0.8]).unwrap();
        let expr = solve_scalar(&spec).unwrap();
        let constants = unit_constants(3);
        let z = 1.1;
        let h = 1e-3;
        for order in 1..=2usize {
            let analytic = evaluate_deriv(&expr, &constants, z, order, 1e-12).unwrap();
            let nodes: Vec<f64> = (-3..=3).map(|k| z + k as f64 * h).collect();
            let w = crate::quad::findiff::fd_weights(&nodes, z, order);
            let mut fd = Complex64::new(0.0, 0.0);
            for (&x, &wi) in nodes.iter().zip(&w) {
                fd += wi * evaluate(&expr, &constants, x, 1e-12).unwrap();
            }
            let rel = (analytic - fd).norm() / fd.norm().max(1e-12);
            assert!(rel < 1e-7, "order {order}: rel = {rel:.2e}");
        }
    }

    #[test]
    fn h_derivative_matches_finite_difference() {
        let spec = FodeSpec::new(0.8, vec![0.4, -0.3, 1.2]).unwrap();
        let expr = solve_scalar(&spec).unwrap();
        assert_eq!(expr.branch, Branch::FoxH);
        let constants = unit_constants(1);
        let z = 1.0;
        let h = 1e-3;
        for order in 1..=2usize {
            let analytic = evaluate_deriv(&expr, &constants, z, order, 1e-11).unwrap();
            let nodes: Vec<f64> = (-3..=3).map(|k| z + k as f64 * h).collect();
            let w = crate::quad::findiff::fd_weights(&nodes, z, order);
            let mut fd = Complex64::new(0.0, 0.0);
            for (&x, &wi) in nodes.iter().zip(&w) {
                fd += wi * evaluate(&expr, &constants, x, 1e-12).unwrap();
            }
            let rel = (analytic - fd).norm() / fd.norm().max(1e-12);
            assert!(rel < 1e-6, "order {order}: rel = {rel:.2e}");
        }
    }
}
