//! Self-check suites behind `fracsuper validate`.

use std::fmt;

use crate::builtins::{ex31, ex41};
use crate::error::Result;
use crate::fracderiv::{
    frac_deriv_node_poly, frac_deriv_power, FracKind, FracOracle, FracSpec, PolyFactor, SingularPoly,
};
use crate::interp::frac_error_curve;
use crate::orthopoly::{
    gauss_jacobi_rule, jacobi_derivative, jacobi_eval, legendre_eval, JacobiParam, NodeFamily, Side,
};
use crate::pgsolver::{diagonal_scaling, pg_error_curves_vs_reference, solve_fivp_scaled, FivpProblem};
use crate::specialfn::gamma;
use crate::superpoints::interp_superpoints;

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub results: Vec<SuiteResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

/// Outcome of one suite: `Ok(detail)` on success, `Err(detail)` otherwise.
type Outcome = std::result::Result<String, String>;

fn run(name: &'static str, suite: impl FnOnce() -> Result<Outcome>) -> SuiteResult {
    let (passed, detail) = match suite() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    SuiteResult { name, passed, detail }
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Runs every suite with the true Petrov-Galerkin diagonal.
pub fn run_all() -> Report {
    run_all_with_scaling(&|n, s| diagonal_scaling(n, s))
}

/// Runs every suite; `scaling` replaces `n!/Γ(n+s+1)` in the
/// Petrov-Galerkin solver.
pub fn run_all_with_scaling(scaling: &dyn Fn(usize, f64) -> Result<f64>) -> Report {
    Report {
        results: vec![
            run("oracle-agreement", oracle_agreement),
            run("quadrature-exactness", quadrature_exactness),
            run("order-one-limit", order_one_limit),
            run("mirror", mirror),
            run("interp-gain", interp_gain),
            run("pg-oracle", || pg_oracle(scaling)),
            run("pg-superconvergence", pg_superconvergence),
        ],
    }
}

/// Interior sample points `-1 + 2i/(m+1)`, `i = 1..=m`.
pub fn interior_points(m: usize) -> Vec<f64> {
    (1..=m).map(|i| -1.0 + 2.0 * i as f64 / (m + 1) as f64).collect()
}

/// Largest discrepancy of the shifted-power route and of the quadrature
/// oracle from the closed form of `D^μ w_{N+1}`, relative to the largest
/// closed-form value on the sample points.
pub fn node_poly_discrepancy(family: NodeFamily, n: usize, spec: FracSpec, samples: &[f64]) -> Result<(f64, f64)> {
    let closed = frac_deriv_node_poly(family, n, spec)?;
    let power = frac_deriv_power(&family.node_power_poly(n, spec.side)?, spec)?;
    let oracle = FracOracle::new(spec, 0.0, 64)?;
    let w = |x: f64| family.node_poly_eval(n, x);
    let dw = |x: f64| family.node_poly_derivative(n, x);
    let mut scale = 0.0f64;
    let (mut dp, mut dq) = (0.0f64, 0.0f64);
    for &x in samples {
        let c = closed.eval(x)?;
        scale = scale.max(c.abs());
        dp = dp.max((c - power.eval(x)?).abs());
        dq = dq.max((c - oracle.eval(&w, &dw, x)?).abs());
    }
    Ok((dp / scale, dq / scale))
}

fn oracle_agreement() -> Result<Outcome> {
    let xs = interior_points(50);
    let mut worst = 0.0f64;
    for family in NodeFamily::LEGENDRE {
        for n in [4usize, 8, 12] {
            for mu in [0.1, 0.5, 0.9] {
                for kind in [FracKind::RiemannLiouville, FracKind::Caputo] {
                    for side in [Side::Left, Side::Right] {
                        let (a, b) = node_poly_discrepancy(family, n, FracSpec::new(mu, side, kind)?, &xs)?;
                        worst = worst.max(a).max(b);
                    }
                }
            }
        }
    }
    Ok(check(
        worst <= 1e-9,
        format!("max relative discrepancy {worst:.2e} (tol 1e-9)"),
    ))
}

fn quadrature_exactness() -> Result<Outcome> {
    // 50-digit references for ∫ (1-x)^{-1/2} x^j dx
    let rule = gauss_jacobi_rule(JacobiParam::new(-0.5, 0.0), 8)?;
    let refs = [
        (0, 2.828_427_124_746_190_097_6),
        (7, 0.545_466_676_271_953_676_94),
        (15, 0.401_715_152_985_510_762_98),
    ];
    let mut worst = 0.0f64;
    for (j, v) in refs {
        worst = worst.max((rule.integrate(|x| x.powi(j)) - v).abs() / v);
    }
    let mut ortho = 0.0f64;
    for (a, b) in [(0.0, 0.0), (0.3, -0.3), (-0.5, 0.7)] {
        let p = JacobiParam::new(a, b);
        for n in 0..=10usize {
            for m in (0..n).chain(n + 1..=10) {
                let r = gauss_jacobi_rule(p, 2 * n.max(m))?;
                ortho = ortho.max(r.integrate(|x| jacobi_eval(p, n, x) * jacobi_eval(p, m, x)).abs());
            }
        }
    }
    Ok(check(
        worst <= 1e-13 && ortho <= 1e-12,
        format!("monomials {worst:.2e} (tol 1e-13), orthogonality {ortho:.2e} (tol 1e-12)"),
    ))
}

/// Zeros of `w'_{N+1}`.
pub fn classical_points(family: NodeFamily, n: usize) -> Result<Vec<f64>> {
    let dw = family.node_power_poly(n, Side::Left)?.derivative_t();
    Ok(SingularPoly::new(Side::Left, 0.0, PolyFactor::Power(dw)).factor_roots(4000))
}

fn order_one_limit() -> Result<Outcome> {
    let n = 12;
    let spec = FracSpec::left_rl(1.0 - 1e-6)?;
    let mut worst = 0.0f64;
    for family in NodeFamily::LEGENDRE {
        let set = interp_superpoints(family, n, spec)?;
        let classical = classical_points(family, n)?;
        let interior = &set.points[1..];
        if interior.len() != classical.len() {
            return Ok(Err(format!(
                "{family}: {} interior points vs {} classical",
                interior.len(),
                classical.len()
            )));
        }
        for (a, b) in interior.iter().zip(&classical) {
            worst = worst.max((a - b).abs());
        }
    }
    Ok(check(worst <= 1e-3, format!("max distance {worst:.2e} (tol 1e-3)")))
}

fn mirror() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for family in NodeFamily::ALL {
        for kind in [FracKind::RiemannLiouville, FracKind::Caputo] {
            for mu in [0.3, 0.7] {
                let left = interp_superpoints(family.mirrored(), 8, FracSpec::new(mu, Side::Left, kind)?)?;
                let right = interp_superpoints(family, 8, FracSpec::new(mu, Side::Right, kind)?)?;
                if left.len() != right.len() {
                    return Ok(Err(format!("{family} {kind} μ={mu}: counts differ")));
                }
                for (a, b) in left.points.iter().rev().zip(&right.points) {
                    worst = worst.max((a + b).abs());
                }
            }
        }
    }
    Ok(check(
        worst <= 1e-11,
        format!("max mirror mismatch {worst:.2e} (tol 1e-11)"),
    ))
}

fn interp_gain() -> Result<Outcome> {
    let u = ex31();
    let mut min_gain = f64::INFINITY;
    let mut monotone = true;
    for family in [
        NodeFamily::LegendreGauss,
        NodeFamily::LegendreLobatto,
        NodeFamily::LegendreRadauLeft,
    ] {
        let mut prev = 0.0;
        for mu in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let spec = FracSpec::left_rl(mu)?;
            let du = u.frac_deriv(spec)?;
            let c = frac_error_curve(|x| u.eval(x), |x| du.eval(x), family, 12, spec, 2001)?;
            min_gain = min_gain.min(c.gain_ratio);
            monotone &= c.global_max > prev;
            prev = c.global_max;
        }
    }
    Ok(check(
        min_gain >= 5.0 && monotone,
        format!("min gain {min_gain:.2} (need >= 5), monotone in μ: {monotone}"),
    ))
}

fn pg_oracle(scaling: &dyn Fn(usize, f64) -> Result<f64>) -> Result<Outcome> {
    let n = 8;
    let xs = interior_points(20);
    let mut coeff_err = 0.0f64;
    let mut deriv_err = 0.0f64;
    for s in [0.3, 0.55, 0.8] {
        let params = JacobiParam::new(s, -s);
        let oracle = FracOracle::new(FracSpec::right_rl(s)?, s, 24)?;
        for m in [0usize, 3, 8] {
            let p = FivpProblem::new(move |x| legendre_eval(m, x), s)?;
            let e = solve_fivp_scaled(&p, n, scaling)?;
            let want = gamma(m as f64 + 1.0)? / gamma(m as f64 + s + 1.0)?;
            for (k, &u) in e.coeffs.iter().enumerate() {
                let target = if k == m { want } else { 0.0 };
                coeff_err = coeff_err.max((u - target).abs());
            }
            // D^s u_N by quadrature straight from the GJF coefficients
            let q = |y: f64| {
                e.coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * jacobi_eval(params, k, y))
                    .sum::<f64>()
            };
            let dq = |y: f64| {
                e.coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * jacobi_derivative(params, k, y))
                    .sum::<f64>()
            };
            for &x in &xs {
                deriv_err = deriv_err.max((oracle.eval(&q, &dq, x)? - legendre_eval(m, x)).abs());
            }
        }
    }
    Ok(check(
        coeff_err <= 1e-12 && deriv_err <= 1e-10,
        format!("coefficients {coeff_err:.2e} (tol 1e-12), D^s u_N vs f {deriv_err:.2e} (tol 1e-10)"),
    ))
}

fn pg_superconvergence() -> Result<Outcome> {
    let mut worst_value = 0.0f64;
    let mut worst_deriv = 0.0f64;
    for s in [0.1, 0.3, 0.55, 0.7, 0.9] {
        let p = FivpProblem::new(ex41, s)?;
        worst_value = worst_value.max(pg_error_curves_vs_reference(&p, 9, 41, 1001)?.value_ratio());
        worst_deriv = worst_deriv.max(pg_error_curves_vs_reference(&p, 12, 41, 1001)?.deriv_ratio());
    }
    Ok(check(
        worst_value <= 0.2 && worst_deriv <= 0.2,
        format!("worst value ratio {worst_value:.3}, derivative ratio {worst_deriv:.3} (need <= 0.2)"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        let report = run_all();
        for r in &report.results {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn perturbed_scaling_is_caught() {
        let bad = |n: usize, s: f64| Ok(diagonal_scaling(n, s)? * (1.0 + 1e-6));
        let report = run_all_with_scaling(&bad);
        let pg = report.results.iter().find(|r| r.name == "pg-oracle").unwrap();
        assert!(!pg.passed, "{pg}");
        assert!(!report.all_passed());
    }
}
