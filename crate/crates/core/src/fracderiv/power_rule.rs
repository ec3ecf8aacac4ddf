use twofloat::TwoFloat;

use super::singular::{PolyFactor, SingularPoly};
use super::{FracKind, FracSpec};
use crate::error::{Error, Result};
use crate::orthopoly::{PowerBasisPoly, Side};
use crate::specialfn::{power_rule_coeff, rgamma};

/// Fractional derivative of a shifted-power polynomial.
///
/// `c_k t^k ↦ c_k Γ(k+1)/Γ(k+1-μ) t^{k-μ}`; the Caputo derivative drops the
/// constant term. The result is `t^{-μ+j} q` where `j` leading zero terms
/// have been factored out of `q`.
pub fn frac_deriv_power(poly: &PowerBasisPoly, spec: FracSpec) -> Result<SingularPoly> {
    if poly.anchor() != spec.side {
        return Err(Error::AnchorMismatch);
    }
    let factors = power_rule_factors(poly.coeffs_dd().len(), spec.order);
    let mut coeffs: Vec<TwoFloat> = poly.coeffs_dd().iter().zip(&factors).map(|(&c, &g)| c * g).collect();
    if spec.kind == FracKind::Caputo {
        if let Some(c0) = coeffs.first_mut() {
            *c0 = TwoFloat::from(0.0);
        }
    }
    let lead = coeffs.iter().take_while(|c| c.hi() == 0.0).count();
    if lead == coeffs.len() {
        return Ok(SingularPoly::new(
            spec.side,
            0.0,
            PolyFactor::Power(PowerBasisPoly::zero(spec.side)),
        ));
    }
    coeffs.drain(..lead);
    Ok(SingularPoly::new(
        spec.side,
        lead as f64 - spec.order,
        PolyFactor::Power(PowerBasisPoly::from_dd(spec.side, coeffs)),
    ))
}

/// `Γ(k+1)/Γ(k+1-μ)` for `k < len` in double-double.
///
/// The power coefficients of high-degree polynomials cancel heavily, so the
/// factors must carry more than f64 precision: they are built as
/// `Π_{j≤k} j/(j-μ)` times the common `1/Γ(1-μ)`, whose rounding only scales
/// the whole result.
fn power_rule_factors(len: usize, mu: f64) -> Vec<TwoFloat> {
    let mut out = Vec::with_capacity(len);
    if mu == 1.0 {
        out.extend((0..len).map(|k| TwoFloat::from(k as f64)));
        return out;
    }
    let mut g = TwoFloat::from(rgamma(1.0 - mu));
    for k in 0..len {
        if k > 0 {
            g = dd_div(g * (k as f64), TwoFloat::new_sub(k as f64, mu));
        }
        out.push(g);
    }
    out
}

/// Double-double quotient with one correction step. `twofloat`'s own
/// division only delivers f64 accuracy in the low word.
fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q0 = a.hi() / b.hi();
    let r = a - b * q0;
    let q1 = r.hi() / b.hi();
    let r = r - b * q1;
    let q2 = r.hi() / b.hi();
    TwoFloat::new_add(q0, q1) + q2
}

/// `c · t^p` with `t` the distance from `side`'s endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub coef: f64,
    pub side: Side,
    pub exponent: f64,
}

impl PowerTerm {
    pub fn eval(&self, x: f64) -> f64 {
        let t = self.side.distance(x);
        if self.exponent == 0.0 {
            self.coef
        } else if t == 0.0 && self.exponent > 0.0 {
            0.0
        } else {
            self.coef * t.powf(self.exponent)
        }
    }
}

/// Finite sum of shifted powers `Σ c_i (1 ± x)^{p_i}`; the class of
/// functions whose fractional derivatives are known in closed form.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PowerSum {
    pub terms: Vec<PowerTerm>,
}

impl PowerSum {
    pub fn new(terms: Vec<PowerTerm>) -> Self {
        Self { terms }
    }

    pub fn single(coef: f64, side: Side, exponent: f64) -> Self {
        Self::new(vec![PowerTerm { coef, side, exponent }])
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(x)).sum()
    }

    /// Rewrites terms anchored at the opposite endpoint with nonnegative
    /// integer exponents into powers of `side`'s variable.
    fn expressed_on(&self, side: Side) -> Result<PowerSum> {
        let mut out = Vec::new();
        for term in &self.terms {
            if term.side == side {
                out.push(*term);
                continue;
            }
            let p = term.exponent;
            if p < 0.0 || p.fract() != 0.0 {
                return Err(Error::Unsupported(format!(
                    "{side}-sided derivative of a ({}) power with exponent {p}",
                    term.side
                )));
            }
            // (2 - t)^k = Σ_j C(k,j) 2^{k-j} (-t)^j
            let k = p as usize;
            let mut binom = 1.0;
            for j in 0..=k {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                out.push(PowerTerm {
                    coef: term.coef * binom * 2f64.powi((k - j) as i32) * sign,
                    side,
                    exponent: j as f64,
                });
                binom = binom * (k - j) as f64 / (j + 1) as f64;
            }
        }
        Ok(PowerSum::new(out))
    }

    /// Exact fractional derivative, again as a power sum.
    pub fn frac_deriv(&self, spec: FracSpec) -> Result<PowerSum> {
        let on_side = self.expressed_on(spec.side)?;
        let mu = spec.order;
        let terms = on_side
            .terms
            .into_iter()
            .filter(|t| !(spec.kind == FracKind::Caputo && t.exponent == 0.0))
            .map(|t| PowerTerm {
                coef: t.coef * power_rule_coeff(t.exponent, mu),
                side: t.side,
                exponent: t.exponent - mu,
            })
            .filter(|t| t.coef != 0.0)
            .collect();
        Ok(PowerSum::new(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{jacobi_power_coeffs, JacobiParam};
    use crate::specialfn::gamma;
    use approx::assert_relative_eq;

    #[test]
    fn constant_under_rl_and_caputo() {
        let one = PowerBasisPoly::new(Side::Left, &[1.0]);
        let rl = frac_deriv_power(&one, FracSpec::left_rl(0.5).unwrap()).unwrap();
        assert_eq!(rl.exponent, -0.5);
        assert_relative_eq!(rl.eval(0.0).unwrap(), 1.0 / gamma(0.5).unwrap(), max_relative = 1e-15);
        let cap = FracSpec::new(0.37, Side::Left, FracKind::Caputo).unwrap();
        let c = frac_deriv_power(&one, cap).unwrap();
        assert_eq!(c.eval(0.3).unwrap(), 0.0);
    }

    #[test]
    fn anchor_mismatch_is_rejected() {
        let p = PowerBasisPoly::new(Side::Right, &[1.0, 2.0]);
        assert_eq!(
            frac_deriv_power(&p, FracSpec::left_rl(0.5).unwrap()),
            Err(Error::AnchorMismatch)
        );
    }

    #[test]
    fn first_order_is_symbolic_derivative() {
        let p = jacobi_power_coeffs(JacobiParam::new(0.2, 0.4), 9, Side::Left).unwrap();
        let d = frac_deriv_power(&p, FracSpec::left_rl(1.0).unwrap()).unwrap();
        assert_eq!(d.exponent, 0.0);
        let PolyFactor::Power(q) = &d.factor else { panic!() };
        let want = p.derivative_t().coeffs();
        for (a, b) in q.coeffs().iter().zip(&want) {
            assert_relative_eq!(*a, *b, max_relative = 1e-13);
        }
        // right side: -d/dx
        let r = jacobi_power_coeffs(JacobiParam::new(0.2, 0.4), 5, Side::Right).unwrap();
        let dr = frac_deriv_power(&r, FracSpec::right_rl(1.0).unwrap()).unwrap();
        let h = 1e-6;
        let x = 0.3;
        let fd = -(r.eval(x + h) - r.eval(x - h)) / (2.0 * h);
        assert_relative_eq!(dr.eval(x).unwrap(), fd, max_relative = 1e-8);
    }

    #[test]
    fn power_sum_fractional_exponent() {
        // D^β (1+x)^{10.15}/100 = Γ(11.15)/(100 Γ(11.15-β)) (1+x)^{10.15-β}
        let u = PowerSum::single(0.01, Side::Left, 10.15);
        let beta = 0.3;
        let d = u.frac_deriv(FracSpec::left_rl(beta).unwrap()).unwrap();
        let x: f64 = 0.4;
        let want = gamma(11.15).unwrap() / (100.0 * gamma(11.15 - beta).unwrap()) * (1.0 + x).powf(10.15 - beta);
        assert_relative_eq!(d.eval(x), want, max_relative = 1e-13);
    }

    #[test]
    fn power_sum_reexpands_integer_powers() {
        // (1-x)^2 = 4 - 4t + t^2 with t = 1+x
        let u = PowerSum::single(1.0, Side::Right, 2.0);
        let spec = FracSpec::left_rl(0.5).unwrap();
        let d = u.frac_deriv(spec).unwrap();
        let p = PowerBasisPoly::new(Side::Left, &[4.0, -4.0, 1.0]);
        let q = frac_deriv_power(&p, spec).unwrap();
        for &x in &[-0.6, 0.2, 0.9] {
            assert_relative_eq!(d.eval(x), q.eval(x).unwrap(), max_relative = 1e-13);
        }
        let frac = PowerSum::single(1.0, Side::Right, 2.5);
        assert!(frac.frac_deriv(spec).is_err());
    }

    #[test]
    fn double_double_quotient() {
        let a = TwoFloat::new_sub(13.0, 0.1);
        let q = dd_div(TwoFloat::from(13.0), a);
        assert!((q * a - 13.0).hi().abs() < 1e-30);
        let f = power_rule_factors(14, 0.1);
        assert!((f[13].hi() - power_rule_coeff(13.0, 0.1)).abs() < 1e-14);
    }
}
