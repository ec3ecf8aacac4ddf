//! Gauss-Jacobi quadrature by Golub-Welsch.
//!
//! Nodes are the eigenvalues of the symmetric Jacobi matrix, polished with
//! Newton steps on `P_n^{(α,β)}`. Weights use the closed form
//! `w_i = C / ((1 - x_i^2) P_n'(x_i)^2)` at the polished nodes, which keeps
//! full relative accuracy for the small weights near the endpoints.

use nalgebra::{DMatrix, DVector};

use super::{jacobi_derivative, jacobi_eval, jacobi_eval_all, JacobiParam};
use crate::error::{Error, Result};
use crate::specialfn::{gamma_ratio, ln_gamma};

/// Nodes and weights of an `n`-point rule for the weight `(1-x)^α (1+x)^β`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    pub params: JacobiParam,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_i f(x_i)`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// `∫ (1-x)^α (1+x)^β dx = 2^{α+β+1} B(α+1, β+1)`.
pub fn jacobi_mass(p: JacobiParam) -> Result<f64> {
    let (a, b) = (p.alpha, p.beta);
    let ln = (a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0)? + ln_gamma(b + 1.0)? - ln_gamma(a + b + 2.0)?;
    Ok(ln.exp())
}

/// Diagonal and off-diagonal of the symmetric Jacobi matrix.
fn jacobi_matrix(p: JacobiParam, n: usize) -> (Vec<f64>, Vec<f64>) {
    let (a, b) = (p.alpha, p.beta);
    let diag = (0..n)
        .map(|k| {
            let s = 2.0 * k as f64 + a + b;
            if k == 0 {
                (b - a) / (a + b + 2.0)
            } else {
                (b * b - a * a) / (s * (s + 2.0))
            }
        })
        .collect();
    let off = (1..n)
        .map(|k| {
            let kf = k as f64;
            let s = 2.0 * kf + a + b;
            let sq = if k == 1 {
                // the general formula is 0/0 when α+β = -1
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b).powi(2) * (3.0 + a + b))
            } else {
                4.0 * kf * (kf + a) * (kf + b) * (kf + a + b) / (s * s * (s + 1.0) * (s - 1.0))
            };
            sq.sqrt()
        })
        .collect();
    (diag, off)
}

/// Sorted zeros of `P_n^{(α,β)}` for `α, β > -1`.
pub fn jacobi_roots(p: JacobiParam, n: usize) -> Result<Vec<f64>> {
    p.check_quadrature()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let (diag, off) = jacobi_matrix(p, n);
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
    }
    for (i, &o) in off.iter().enumerate() {
        m[(i, i + 1)] = o;
        m[(i + 1, i)] = o;
    }
    let mut roots: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    roots.sort_by(f64::total_cmp);
    for r in roots.iter_mut() {
        *r = polish_root(p, n, *r);
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

fn polish_root(p: JacobiParam, n: usize, mut x: f64) -> f64 {
    for _ in 0..3 {
        let d = jacobi_derivative(p, n, x);
        if d == 0.0 {
            break;
        }
        let step = jacobi_eval(p, n, x) / d;
        let next = x - step;
        if !(next > -1.0 && next < 1.0) {
            break;
        }
        x = next;
        if step.abs() < 1e-17 {
            break;
        }
    }
    x
}

/// `n`-point Gauss-Jacobi rule.
pub fn gauss_jacobi_rule(p: JacobiParam, n: usize) -> Result<QuadRule> {
    p.check_quadrature()?;
    if n == 0 {
        return Err(Error::Domain(0.0, "gauss_jacobi_rule point count"));
    }
    let nodes = jacobi_roots(p, n)?;
    let (a, b) = (p.alpha, p.beta);
    let nf = n as f64;
    let weights = if n == 1 {
        vec![jacobi_mass(p)?]
    } else {
        // Γ(n+α+1)Γ(n+β+1) / (Γ(n+α+β+1) n!) 2^{α+β+1}
        let c = gamma_ratio(nf + a + 1.0, nf + a + b + 1.0)?
            * gamma_ratio(nf + b + 1.0, nf + 1.0)?
            * 2f64.powf(a + b + 1.0);
        nodes
            .iter()
            .map(|&x| {
                let d = jacobi_derivative(p, n, x);
                c / ((1.0 - x * x) * d * d)
            })
            .collect()
    };
    Ok(QuadRule {
        params: p,
        nodes,
        weights,
    })
}

/// `n`-point Gauss-Legendre rule.
pub fn gauss_legendre(n: usize) -> Result<QuadRule> {
    gauss_jacobi_rule(JacobiParam::LEGENDRE, n)
}

/// Weights of the interpolatory rule `∫ f ≈ Σ w_i f(x_i)` on distinct
/// nodes, exact for polynomials of degree `< nodes.len()`.
pub fn interpolatory_weights(nodes: &[f64]) -> Result<Vec<f64>> {
    let m = nodes.len();
    if m == 0 {
        return Err(Error::Domain(0.0, "interpolatory rule size"));
    }
    // V^T w = (2, 0, ..., 0) with V_ij = L_j(x_i)
    let mut vt = DMatrix::<f64>::zeros(m, m);
    for (i, &x) in nodes.iter().enumerate() {
        for (j, l) in jacobi_eval_all(JacobiParam::LEGENDRE, m - 1, x).into_iter().enumerate() {
            vt[(j, i)] = l;
        }
    }
    let mut rhs = DVector::zeros(m);
    rhs[0] = 2.0;
    let w = vt.lu().solve(&rhs).ok_or(Error::Singular(f64::NAN))?;
    Ok(w.iter().copied().collect())
}

/// Legendre coefficients `f̃_n = (2n+1)/2 ∫ f L_n`, `n = 0..=degree`, by a
/// `quad_points`-point Gauss-Legendre rule.
pub fn legendre_expand<F: Fn(f64) -> f64>(f: F, degree: usize, quad_points: usize) -> Result<Vec<f64>> {
    if quad_points < degree + 1 {
        return Err(Error::Domain(quad_points as f64, "legendre_expand quadrature size"));
    }
    let rule = gauss_legendre(quad_points)?;
    let samples: Vec<f64> = rule.nodes.iter().zip(&rule.weights).map(|(&x, &w)| w * f(x)).collect();
    let mut out = vec![0.0; degree + 1];
    for (&x, &fw) in rule.nodes.iter().zip(&samples) {
        let vals = super::jacobi_eval_all(JacobiParam::LEGENDRE, degree, x);
        for (slot, v) in out.iter_mut().zip(vals) {
            *slot += fw * v;
        }
    }
    for (k, c) in out.iter_mut().enumerate() {
        *c *= (2 * k + 1) as f64 / 2.0;
    }
    Ok(out)
}
