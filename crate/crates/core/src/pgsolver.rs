//! Petrov-Galerkin spectral solver for `D^s u = f` (right RL derivative,
//! `u(1) = 0`), its left-anchored mirror, and the reaction variant
//! `D^s u + u = f`.
//!
//! Trial functions are the GJFs `⁺J_n = (1-x)^s P_n^{(s,-s)}`, test
//! functions Legendre polynomials. Because `D^s ⁺J_n = Γ(n+s+1)/n! L_n`
//! the pure derivative problem is diagonal:
//!
//! ```text
//! ũ_n = n!/Γ(n+s+1) · f̃_n,     f̃_n = (2n+1)/2 ∫ f L_n
//! ```
//!
//! The reaction term adds the dense mass matrix `∫ ⁺J_n L_k`, computed by
//! Gauss-Jacobi quadrature with weight `(1-x)^s`.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fracderiv::FracSpec;
use crate::orthopoly::{
    gauss_jacobi_rule, gauss_legendre, jacobi_eval_all, jacobi_series_eval, legendre_expand, JacobiParam, Side,
};
use crate::specialfn::gamma_ratio;
use crate::superpoints::{pg_fracderiv_superpoints, pg_value_superpoints, PointSource, SuperPointSet};

/// Condition number above which the reaction system is rejected.
pub const MAX_CONDITION: f64 = 1e13;

/// Which endpoint carries the homogeneous condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Anchoring {
    /// `u(1) = 0`, right RL derivative, basis `⁺J_n^{(-s,-s)}`.
    RightAnchored,
    /// `u(-1) = 0`, left RL derivative, basis `⁻J_n^{(-s,-s)}`.
    LeftAnchored,
}

impl Anchoring {
    pub fn side(self) -> Side {
        match self {
            Anchoring::RightAnchored => Side::Right,
            Anchoring::LeftAnchored => Side::Left,
        }
    }

    /// Parameters of the Jacobi factor of the basis.
    fn basis_params(self, s: f64) -> JacobiParam {
        match self {
            Anchoring::RightAnchored => JacobiParam::new(s, -s),
            Anchoring::LeftAnchored => JacobiParam::new(-s, s),
        }
    }

    /// Gauss-Jacobi parameters matching the basis weight.
    fn weight_params(self, s: f64) -> JacobiParam {
        match self {
            Anchoring::RightAnchored => JacobiParam::new(s, 0.0),
            Anchoring::LeftAnchored => JacobiParam::new(0.0, s),
        }
    }
}

/// A fractional initial/terminal value problem.
#[derive(Debug, Clone, Copy)]
pub struct FivpProblem<F> {
    pub rhs: F,
    pub s: f64,
    pub side: Anchoring,
    /// Adds `+u` to the operator.
    pub reaction: bool,
}

impl<F: Fn(f64) -> f64> FivpProblem<F> {
    pub fn new(rhs: F, s: f64) -> Result<Self> {
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::Domain(s, "FIVP order s in (0, 1)"));
        }
        Ok(Self {
            rhs,
            s,
            side: Anchoring::RightAnchored,
            reaction: false,
        })
    }

    pub fn anchored(mut self, side: Anchoring) -> Self {
        self.side = side;
        self
    }

    pub fn with_reaction(mut self) -> Self {
        self.reaction = true;
        self
    }

    pub fn spec(&self) -> FracSpec {
        FracSpec {
            order: self.s,
            side: self.side.side(),
            kind: crate::fracderiv::FracKind::RiemannLiouville,
        }
    }
}

/// `u_N = Σ ũ_n J_n` in the GJF basis of `side`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GjfExpansion {
    pub s: f64,
    pub side: Anchoring,
    pub coeffs: Vec<f64>,
    /// 2-norm condition number of the solved system, when one was solved.
    pub condition: Option<f64>,
}

impl GjfExpansion {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `u_N(x)`; exactly zero at the anchored endpoint.
    pub fn eval(&self, x: f64) -> Result<f64> {
        check_domain(x)?;
        let t = self.side.side().distance(x);
        if t == 0.0 {
            return Ok(0.0);
        }
        Ok(t.powf(self.s) * jacobi_series_eval(self.side.basis_params(self.s), &self.coeffs, x))
    }

    /// `D^s u_N(x) = Σ ũ_n Γ(n+s+1)/n! L_n(x)`.
    pub fn eval_frac_deriv(&self, x: f64) -> Result<f64> {
        check_domain(x)?;
        let image = self.derivative_legendre()?;
        Ok(jacobi_series_eval(JacobiParam::LEGENDRE, &image, x))
    }

    /// Legendre coefficients of `D^s u_N`.
    pub fn derivative_legendre(&self) -> Result<Vec<f64>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, &u)| Ok(u / diagonal_scaling(n, self.s)?))
            .collect()
    }
}

fn check_domain(x: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(x, "solution evaluation"))
    }
}

pub fn eval_solution(e: &GjfExpansion, x: f64) -> Result<f64> {
    e.eval(x)
}

pub fn eval_frac_deriv_solution(e: &GjfExpansion, x: f64) -> Result<f64> {
    e.eval_frac_deriv(x)
}

/// `n!/Γ(n+s+1)`, the inverse of the diagonal of the fractional operator.
pub fn diagonal_scaling(n: usize, s: f64) -> Result<f64> {
    Ok(1.0 / gamma_ratio(n as f64 + s + 1.0, n as f64 + 1.0)?)
}

/// Quadrature size for projecting the right-hand side.
pub fn rhs_quadrature_points(n: usize) -> usize {
    (2 * n + 16).max(64)
}

/// Solves the pure derivative problem (either anchoring).
pub fn solve_fivp<F: Fn(f64) -> f64>(p: &FivpProblem<F>, n: usize) -> Result<GjfExpansion> {
    solve_fivp_scaled(p, n, diagonal_scaling)
}

/// [`solve_fivp`] with a replaceable diagonal, so validation can check that
/// a perturbed scaling is detected.
pub fn solve_fivp_scaled<F: Fn(f64) -> f64>(
    p: &FivpProblem<F>,
    n: usize,
    scaling: impl Fn(usize, f64) -> Result<f64>,
) -> Result<GjfExpansion> {
    if p.reaction {
        return Err(Error::Unsupported("reaction problems need solve_reaction_fivp".into()));
    }
    let f_tilde = rhs_legendre(p, n)?;
    let coeffs = f_tilde
        .iter()
        .enumerate()
        .map(|(k, &f)| Ok(scaling(k, p.s)? * f))
        .collect::<Result<Vec<_>>>()?;
    Ok(GjfExpansion {
        s: p.s,
        side: p.side,
        coeffs,
        condition: None,
    })
}

/// Left-anchored form: `D^s_{-1,x} u = f`, `u(-1) = 0`.
pub fn solve_fivp_left<F: Fn(f64) -> f64>(p: &FivpProblem<F>, n: usize) -> Result<GjfExpansion> {
    let left = FivpProblem {
        rhs: &p.rhs,
        s: p.s,
        side: Anchoring::LeftAnchored,
        reaction: p.reaction,
    };
    solve_fivp(&left, n)
}

fn rhs_legendre<F: Fn(f64) -> f64>(p: &FivpProblem<F>, n: usize) -> Result<Vec<f64>> {
    legendre_expand(&p.rhs, n, rhs_quadrature_points(n))
}

/// `∫ J_n L_k` for `k, n ≤ N`, exact by Gauss-Jacobi quadrature.
fn mass_matrix(side: Anchoring, s: f64, n: usize) -> Result<DMatrix<f64>> {
    let rule = gauss_jacobi_rule(side.weight_params(s), n + 2)?;
    let mut m = DMatrix::<f64>::zeros(n + 1, n + 1);
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let basis = jacobi_eval_all(side.basis_params(s), n, x);
        let test = jacobi_eval_all(JacobiParam::LEGENDRE, n, x);
        for k in 0..=n {
            for j in 0..=n {
                m[(k, j)] += w * test[k] * basis[j];
            }
        }
    }
    Ok(m)
}

/// Assembled reaction system `A ũ = F`.
pub fn reaction_system<F: Fn(f64) -> f64>(p: &FivpProblem<F>, n: usize) -> Result<(DMatrix<f64>, DVector<f64>)> {
    let mut a = mass_matrix(p.side, p.s, n)?;
    let f_tilde = rhs_legendre(p, n)?;
    let mut rhs = DVector::<f64>::zeros(n + 1);
    for k in 0..=n {
        let norm = 2.0 / (2 * k + 1) as f64;
        a[(k, k)] += norm / diagonal_scaling(k, p.s)?;
        rhs[k] = norm * f_tilde[k];
    }
    Ok((a, rhs))
}

/// Solves `D^s u + u = f` by dense LU with partial pivoting.
pub fn solve_reaction_fivp<F: Fn(f64) -> f64>(p: &FivpProblem<F>, n: usize) -> Result<GjfExpansion> {
    let (a, rhs) = reaction_system(p, n)?;
    let sv = a.singular_values();
    let smax = sv.max();
    let smin = sv.min();
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if !(condition <= MAX_CONDITION) {
        return Err(Error::IllConditioned(condition));
    }
    let u = a.lu().solve(&rhs).ok_or(Error::IllConditioned(condition))?;
    Ok(GjfExpansion {
        s: p.s,
        side: p.side,
        coeffs: u.iter().copied().collect(),
        condition: Some(condition),
    })
}

/// Dispatches on `reaction`.
pub fn solve<F: Fn(f64) -> f64>(p: &FivpProblem<F>, n: usize) -> Result<GjfExpansion> {
    if p.reaction {
        solve_reaction_fivp(p, n)
    } else {
        solve_fivp(p, n)
    }
}

/// `(D^s u_N + reaction·u_N - f, L_k)` for `k ≤ N`.
pub fn galerkin_residuals(e: &GjfExpansion, rhs: impl Fn(f64) -> f64, reaction: bool) -> Result<Vec<f64>> {
    let n = e.degree();
    let gl = gauss_legendre(2 * n + 16)?;
    let image = e.derivative_legendre()?;
    let mut r = vec![0.0; n + 1];
    for (&x, &w) in gl.nodes.iter().zip(&gl.weights) {
        let lk = jacobi_eval_all(JacobiParam::LEGENDRE, n, x);
        let v = jacobi_series_eval(JacobiParam::LEGENDRE, &image, x) - rhs(x);
        for k in 0..=n {
            r[k] += w * v * lk[k];
        }
    }
    if reaction {
        let m = mass_matrix(e.side, e.s, n)?;
        let u = DVector::from_column_slice(&e.coeffs);
        let mu = m * u;
        for k in 0..=n {
            r[k] += mu[k];
        }
    }
    Ok(r)
}

/// Value and derivative error curves of a computed solution against
/// references, with the errors at the superconvergence points.
#[derive(Debug, Clone, Serialize)]
pub struct PgErrorCurves {
    pub grid: Vec<f64>,
    pub value_errors: Vec<f64>,
    pub deriv_errors: Vec<f64>,
    pub value_points: SuperPointSet,
    pub deriv_points: SuperPointSet,
    pub value_errors_at_points: Vec<f64>,
    pub deriv_errors_at_points: Vec<f64>,
    pub value_global_max: f64,
    pub value_max_at_points: f64,
    pub deriv_global_max: f64,
    pub deriv_max_at_points: f64,
}

impl PgErrorCurves {
    /// `max at points / global max` for values.
    pub fn value_ratio(&self) -> f64 {
        ratio(self.value_max_at_points, self.value_global_max)
    }

    pub fn deriv_ratio(&self) -> f64 {
        ratio(self.deriv_max_at_points, self.deriv_global_max)
    }
}

fn ratio(local: f64, global: f64) -> f64 {
    if global <= crate::interp::NOISE_FLOOR {
        0.0
    } else {
        local / global
    }
}

/// Value superpoints for either anchoring: the zeros of the Jacobi factor
/// of `J_{N+1}`.
pub fn value_superpoints(side: Anchoring, s: f64, n: usize) -> Result<SuperPointSet> {
    let mut set = pg_value_superpoints(s, n)?;
    if side == Anchoring::LeftAnchored {
        set.points = set.points.iter().rev().map(|x| -x).collect();
    }
    debug_assert_eq!(set.source, PointSource::PgValue);
    Ok(set)
}

/// `size` uniform points on `[-1, 1]`.
pub fn uniform_grid(size: usize) -> Vec<f64> {
    let h = 2.0 / (size - 1) as f64;
    (0..size)
        .map(|i| if i + 1 == size { 1.0 } else { -1.0 + h * i as f64 })
        .collect()
}

pub fn pg_error_curves(
    sol: &GjfExpansion,
    value: impl Fn(f64) -> Result<f64>,
    deriv: impl Fn(f64) -> Result<f64>,
    grid_size: usize,
) -> Result<PgErrorCurves> {
    if grid_size < 2 {
        return Err(Error::Domain(grid_size as f64, "error grid size"));
    }
    let grid = uniform_grid(grid_size);
    let verr = |x: f64| -> Result<f64> { Ok(value(x)? - sol.eval(x)?) };
    let derr = |x: f64| -> Result<f64> { Ok(deriv(x)? - sol.eval_frac_deriv(x)?) };
    let value_errors = grid.iter().map(|&x| verr(x)).collect::<Result<Vec<_>>>()?;
    let deriv_errors = grid.iter().map(|&x| derr(x)).collect::<Result<Vec<_>>>()?;
    let value_points = value_superpoints(sol.side, sol.s, sol.degree())?;
    let deriv_points = pg_fracderiv_superpoints(sol.degree())?;
    let value_errors_at_points = value_points
        .points
        .iter()
        .map(|&x| verr(x))
        .collect::<Result<Vec<_>>>()?;
    let deriv_errors_at_points = deriv_points
        .points
        .iter()
        .map(|&x| derr(x))
        .collect::<Result<Vec<_>>>()?;
    let max_abs = |v: &[f64]| v.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let value_max_at_points = max_abs(&value_errors_at_points);
    let deriv_max_at_points = max_abs(&deriv_errors_at_points);
    Ok(PgErrorCurves {
        value_global_max: max_abs(&value_errors).max(value_max_at_points),
        deriv_global_max: max_abs(&deriv_errors).max(deriv_max_at_points),
        grid,
        value_errors,
        deriv_errors,
        value_points,
        deriv_points,
        value_errors_at_points,
        deriv_errors_at_points,
        value_max_at_points,
        deriv_max_at_points,
    })
}

/// Error curves against a reference solution of degree `ref_n` computed by
/// the same method.
pub fn pg_error_curves_vs_reference<F: Fn(f64) -> f64>(
    p: &FivpProblem<F>,
    n: usize,
    ref_n: usize,
    grid_size: usize,
) -> Result<PgErrorCurves> {
    let sol = solve(p, n)?;
    let reference = solve(p, ref_n)?;
    pg_error_curves(&sol, |x| reference.eval(x), |x| reference.eval_frac_deriv(x), grid_size)
}
