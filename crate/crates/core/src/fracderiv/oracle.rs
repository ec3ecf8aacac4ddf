//! Quadrature evaluation of the defining integrals.
//!
//! For `f(s) = t(s)^γ p(s)` (with `γ = 0` for plain functions) the Caputo
//! integral `1/Γ(1-μ) ∫ f'(s) (x-s)^{-μ} ds` is mapped onto `[-1, 1]` by
//! `s = -1 + (1+x)(1+τ)/2`, which turns both endpoint singularities into a
//! Gauss-Jacobi weight `(1-τ)^{-μ} (1+τ)^{γ-1}`. The Riemann-Liouville value
//! adds `f(-1) (1+x)^{-μ} / Γ(1-μ)`. Right-sided derivatives are computed
//! on the reflected function.

use super::{FracKind, FracSpec};
use crate::error::{Error, Result};
use crate::orthopoly::{gauss_jacobi_rule, JacobiParam, QuadRule, Side};
use crate::specialfn::rgamma;

/// Minimum distance from the anchor at which the oracle evaluates.
const ANCHOR_GUARD: f64 = 1e-10;

/// Reusable quadrature oracle for one `(spec, γ)` pair.
#[derive(Debug, Clone)]
pub struct FracOracle {
    spec: FracSpec,
    weight_exponent: f64,
    rule: QuadRule,
}

impl FracOracle {
    /// `points`-node oracle for functions `t^γ p`; exact when `p` is a
    /// polynomial of degree below `2·points`.
    pub fn new(spec: FracSpec, weight_exponent: f64, points: usize) -> Result<Self> {
        if !spec.is_fractional() {
            return Err(Error::Domain(spec.order, "oracle order (0, 1)"));
        }
        if weight_exponent < 0.0 {
            return Err(Error::Domain(weight_exponent, "oracle weight exponent"));
        }
        let beta = if weight_exponent == 0.0 {
            0.0
        } else {
            weight_exponent - 1.0
        };
        let rule = gauss_jacobi_rule(JacobiParam::new(-spec.order, beta), points)?;
        Ok(Self {
            spec,
            weight_exponent,
            rule,
        })
    }

    pub fn spec(&self) -> FracSpec {
        self.spec
    }

    /// Derivative of `t^γ p` at `x`, given `p` and `p'`.
    pub fn eval(&self, p: &dyn Fn(f64) -> f64, dp: &dyn Fn(f64) -> f64, x: f64) -> Result<f64> {
        let (caputo, boundary) = self.parts(p, dp, x)?;
        Ok(match self.spec.kind {
            FracKind::Caputo => caputo,
            FracKind::RiemannLiouville => caputo + boundary * p(self.spec.side.anchor()),
        })
    }

    /// Caputo part and the factor multiplying `f(anchor)` in the RL value.
    fn parts(&self, p: &dyn Fn(f64) -> f64, dp: &dyn Fn(f64) -> f64, x: f64) -> Result<(f64, f64)> {
        let mu = self.spec.order;
        let dist = self.spec.side.distance(x);
        if !(dist >= ANCHOR_GUARD) || dist > 2.0 {
            return Err(Error::TooCloseToAnchor { x, dist });
        }
        // work in the left-anchored variable y; on the right y = -x
        let sign = match self.spec.side {
            Side::Left => 1.0,
            Side::Right => -1.0,
        };
        let pl = |y: f64| p(sign * y);
        let dpl = |y: f64| sign * dp(sign * y);
        let half = 0.5 * dist;
        let g = self.weight_exponent;
        let integral = if g == 0.0 {
            self.rule.integrate(|tau| dpl(-1.0 + half * (1.0 + tau))) * half.powf(1.0 - mu)
        } else {
            self.rule.integrate(|tau| {
                let s = -1.0 + half * (1.0 + tau);
                g * pl(s) + (1.0 + s) * dpl(s)
            }) * half.powf(g - mu)
        };
        let r = rgamma(1.0 - mu);
        let boundary = if g == 0.0 { dist.powf(-mu) * r } else { 0.0 };
        Ok((integral * r, boundary))
    }
}

/// Quadrature value of `D^μ f(x)` for a plain function with `f(anchor)`
/// supplied, using a 64-point rule.
pub fn oracle_frac_deriv(f_prime: &dyn Fn(f64) -> f64, f_at_start: f64, spec: FracSpec, x: f64) -> Result<f64> {
    let oracle = FracOracle::new(spec, 0.0, 64)?;
    let (caputo, boundary) = oracle.parts(&|_| f_at_start, f_prime, x)?;
    Ok(match spec.kind {
        FracKind::Caputo => caputo,
        FracKind::RiemannLiouville => caputo + boundary * f_at_start,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fracderiv::{gjf_eval, gjf_frac_deriv, GjfBasisId};
    use crate::orthopoly::{jacobi_derivative, jacobi_eval, legendre_derivative};
    use crate::specialfn::gamma;
    use approx::assert_relative_eq;

    #[test]
    fn power_rule_cases() {
        let v = oracle_frac_deriv(&|_| 0.0, 1.0, FracSpec::left_rl(0.3).unwrap(), 0.0).unwrap();
        assert_relative_eq!(v, 1.0 / gamma(0.7).unwrap(), max_relative = 1e-14);
        let spec = FracSpec::new(0.5, Side::Left, FracKind::Caputo).unwrap();
        let v = oracle_frac_deriv(&|_| 1.0, 0.0, spec, 0.5).unwrap();
        assert_relative_eq!(v, 1.5f64.sqrt() / gamma(1.5).unwrap(), max_relative = 1e-14);
    }

    #[test]
    fn legendre_seven() {
        // 50-digit reference for the left RL derivative of L_7, μ = 0.55, x = 0.2
        let spec = FracSpec::left_rl(0.55).unwrap();
        let v = oracle_frac_deriv(&|x| legendre_derivative(7, x), -1.0, spec, 0.2).unwrap();
        assert_relative_eq!(v, -0.626_533_831_065_400_944_78, max_relative = 1e-12);
    }

    #[test]
    fn guards() {
        let spec = FracSpec::left_rl(0.5).unwrap();
        assert!(matches!(
            oracle_frac_deriv(&|_| 0.0, 1.0, spec, -1.0 + 1e-12),
            Err(Error::TooCloseToAnchor { .. })
        ));
        assert!(oracle_frac_deriv(&|_| 0.0, 1.0, FracSpec::left_rl(1.0).unwrap(), 0.0).is_err());
    }

    #[test]
    fn minus_gjf_against_closed_form() {
        let s = 0.45;
        let id = GjfBasisId::minus(-s, s, 4);
        let image = gjf_frac_deriv(id).unwrap();
        let p = id.params();
        let oracle = FracOracle::new(FracSpec::left_rl(s).unwrap(), s, 16).unwrap();
        for i in 1..=20 {
            let x = -1.0 + 2.0 * i as f64 / 21.0;
            let v = oracle
                .eval(&|y| jacobi_eval(p, 4, y), &|y| jacobi_derivative(p, 4, y), x)
                .unwrap();
            assert_relative_eq!(v, image.eval(x), max_relative = 1e-8);
        }
        assert!(gjf_eval(id, -1.0).unwrap() == 0.0);
    }

    #[test]
    fn plus_gjf_against_closed_form() {
        let s = 0.7;
        let id = GjfBasisId::plus(s, -s, 6);
        let image = gjf_frac_deriv(id).unwrap();
        let p = id.params();
        let oracle = FracOracle::new(FracSpec::right_rl(s).unwrap(), s, 16).unwrap();
        for i in 1..=20 {
            let x = -1.0 + 2.0 * i as f64 / 21.0;
            let v = oracle
                .eval(&|y| jacobi_eval(p, 6, y), &|y| jacobi_derivative(p, 6, y), x)
                .unwrap();
            assert_relative_eq!(v, image.eval(x), max_relative = 1e-8, epsilon = 1e-12);
        }
    }
}
