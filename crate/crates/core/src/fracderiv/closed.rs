//! Jacobi closed forms for fractional derivatives of Legendre combinations.
//!
//! With `t = 1 + x` and the left Riemann-Liouville derivative of order `μ`:
//!
//! ```text
//! D^μ L_n                 = Γ(n+1)/Γ(n+1-μ) · t^{-μ} P_n^{(μ,-μ)}
//! D^μ (L_{N+1} + L_N)     = Γ(N+2)/Γ(N+2-μ) · t^{1-μ} P_N^{(μ,1-μ)}
//! D^μ (L_{N+1} - L_{N-1}) = (2N+1)/(N+1) · Γ(N+2)/Γ(N+2-μ) · t^{1-μ} P_N^{(μ-1,1-μ)}
//! ```
//!
//! The last two follow from `L_{N+1} + L_N = (1+x) P_N^{(0,1)}`,
//! `L_{N+1} - L_{N-1} = (2N+1)/(N+1) (1+x) P_N^{(-1,1)}` and
//! `D^μ[(1+x)^b P_m^{(a,b)}] = Γ(m+b+1)/Γ(m+b+1-μ) (1+x)^{b-μ} P_m^{(a+μ,b-μ)}`.
//! Right-sided derivatives are obtained by reflection.

use super::power_rule::frac_deriv_power;
use super::singular::{PolyFactor, SingularPoly};
use super::{FracKind, FracSpec};
use crate::error::Result;
use crate::orthopoly::{JacobiParam, NodeFamily, Side};
use crate::specialfn::{gamma_ratio, power_rule_coeff, rgamma};

/// Fractional derivative of `Σ a_n L_n` as `t^{-μ} Σ b_n P_n^{(μ,-μ)}`.
pub fn frac_deriv_legendre_series(coeffs: &[f64], spec: FracSpec) -> SingularPoly {
    match spec.side {
        Side::Left => left_legendre_series(coeffs, spec),
        Side::Right => {
            // q(-y) = Σ (-1)^n a_n L_n(y)
            let mirrored: Vec<f64> = alternate(coeffs);
            left_legendre_series(&mirrored, spec.with_side(Side::Left)).reflected()
        }
    }
}

fn alternate(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .map(|(n, &c)| if n % 2 == 0 { c } else { -c })
        .collect()
}

fn left_legendre_series(coeffs: &[f64], spec: FracSpec) -> SingularPoly {
    let mu = spec.order;
    let mut out: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .map(|(n, &a)| a * power_rule_coeff(n as f64, mu))
        .collect();
    if spec.kind == FracKind::Caputo && !out.is_empty() {
        // subtract q(-1) t^{-μ}/Γ(1-μ); L_n(-1) = (-1)^n
        let at_anchor: f64 = alternate(coeffs).iter().sum();
        out[0] -= at_anchor * rgamma(1.0 - mu);
    }
    SingularPoly::new(
        Side::Left,
        -mu,
        PolyFactor::Jacobi {
            params: JacobiParam::new(mu, -mu),
            coeffs: out,
        },
    )
}

/// Fractional derivative of the node polynomial `w_{N+1}` of `family`.
///
/// Legendre families use the closed forms above; Chebyshev families go
/// through the shifted-power rule.
pub fn frac_deriv_node_poly(family: NodeFamily, n: usize, spec: FracSpec) -> Result<SingularPoly> {
    if !family.is_legendre() {
        let w = family.node_power_poly(n, spec.side)?;
        return frac_deriv_power(&w, spec);
    }
    if spec.side == Side::Right {
        // w(-y) = σ w_m(y)  ⇒  D_right w (x) = σ (D_left w_m)(-x)
        let left = frac_deriv_node_poly(family.mirrored(), n, spec.with_side(Side::Left))?;
        return Ok(left.reflected().scaled(family.mirror_sign(n)));
    }
    let mu = spec.order;
    let nf = n as f64;
    let ratio = gamma_ratio(nf + 2.0, nf + 2.0 - mu)?;
    let single = |params: JacobiParam, c: f64| {
        let mut coeffs = vec![0.0; n + 1];
        coeffs[n] = c;
        SingularPoly::new(Side::Left, 1.0 - mu, PolyFactor::Jacobi { params, coeffs })
    };
    Ok(match family {
        NodeFamily::LegendreLobatto => single(
            JacobiParam::new(mu - 1.0, 1.0 - mu),
            (2.0 * nf + 1.0) / (nf + 1.0) * ratio,
        ),
        NodeFamily::LegendreRadauLeft => single(JacobiParam::new(mu, 1.0 - mu), ratio),
        _ => {
            let mut legendre = vec![0.0; n + 2];
            for (k, c) in family.combination(n) {
                legendre[k] += c;
            }
            frac_deriv_legendre_series(&legendre, spec)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::legendre_derivative;
    use approx::assert_relative_eq;

    fn check_routes(family: NodeFamily, n: usize, spec: FracSpec) {
        let closed = frac_deriv_node_poly(family, n, spec).unwrap();
        let power = frac_deriv_power(&family.node_power_poly(n, spec.side).unwrap(), spec).unwrap();
        let xs: Vec<f64> = (1..100).map(|i| -1.0 + 2.0 * i as f64 / 100.0).collect();
        let scale = xs.iter().map(|&x| closed.eval(x).unwrap().abs()).fold(0.0, f64::max);
        for &x in &xs {
            let (a, b) = (closed.eval(x).unwrap(), power.eval(x).unwrap());
            assert!((a - b).abs() <= 1e-9 * scale, "{family} {spec:?} x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn closed_forms_match_power_rule() {
        for family in NodeFamily::LEGENDRE {
            for mu in [0.1, 0.5, 0.9] {
                for kind in [FracKind::RiemannLiouville, FracKind::Caputo] {
                    for side in [Side::Left, Side::Right] {
                        for n in [2usize, 4, 12] {
                            check_routes(family, n, FracSpec::new(mu, side, kind).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lobatto_exponent() {
        let d = frac_deriv_node_poly(NodeFamily::LegendreLobatto, 12, FracSpec::left_rl(0.5).unwrap()).unwrap();
        assert_eq!(d.exponent, 0.5);
        let r = frac_deriv_node_poly(NodeFamily::LegendreRadauLeft, 7, FracSpec::left_rl(0.3).unwrap()).unwrap();
        assert_eq!(r.eval(-1.0).unwrap(), 0.0);
    }

    #[test]
    fn gauss_at_order_one_is_classical_derivative() {
        let n = 6;
        let d = frac_deriv_node_poly(NodeFamily::LegendreGauss, n, FracSpec::left_rl(1.0).unwrap()).unwrap();
        for &x in &[-0.8, -0.1, 0.5] {
            assert_relative_eq!(d.eval(x).unwrap(), legendre_derivative(n + 1, x), max_relative = 1e-12);
        }
    }
}
