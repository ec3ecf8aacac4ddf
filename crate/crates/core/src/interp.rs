//! Collocation interpolation and fractional-derivative error curves.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fracderiv::{frac_deriv_power, FracSpec, SingularPoly};
use crate::orthopoly::{
    jacobi_eval_all, jacobi_power_coeffs, node_family_points, JacobiParam, NodeFamily, PowerBasisPoly, Side,
};
use crate::superpoints::{interp_superpoints, SuperPointSet};

/// Distance from the anchor kept clear by error grids.
pub const ANCHOR_GUARD: f64 = 1e-6;

/// Errors below this are treated as exact when forming gain ratios.
pub const NOISE_FLOOR: f64 = 1e-12;

/// Degree-`N` interpolant through the nodes of a family.
///
/// Evaluation uses the barycentric formula. Fractional derivatives go
/// through the Legendre coefficients, re-expanded exactly in the shifted
/// power basis of the derivative's anchor.
#[derive(Debug, Clone)]
pub struct Interpolant {
    pub family: NodeFamily,
    pub n: usize,
    pub nodes: Vec<f64>,
    pub values: Vec<f64>,
    /// Shifted-power form anchored at `-1`.
    pub power_form: PowerBasisPoly,
    legendre: Vec<f64>,
    bary: Vec<f64>,
}

/// Interpolates `f` at the `N + 1` nodes of `family`.
pub fn interpolate(f: impl Fn(f64) -> f64, family: NodeFamily, n: usize) -> Result<Interpolant> {
    let nodes = node_family_points(family, n)?;
    let values: Vec<f64> = nodes.iter().map(|&x| f(x)).collect();
    Interpolant::from_samples(family, nodes, values)
}

impl Interpolant {
    fn from_samples(family: NodeFamily, nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let n = nodes.len() - 1;
        let legendre = legendre_coefficients(&nodes, &values)?;
        let bary = barycentric_weights(&nodes);
        let mut u = Self {
            family,
            n,
            nodes,
            values,
            power_form: PowerBasisPoly::zero(Side::Left),
            legendre,
            bary,
        };
        u.power_form = u.build_power_form(Side::Left)?;
        Ok(u)
    }

    /// The constant term is the value at the anchor; when the anchor is a
    /// node it is pinned to the sample so that `u - u_N` vanishes there
    /// exactly and the derivative keeps its `t^{1-μ}` behaviour.
    fn build_power_form(&self, side: Side) -> Result<PowerBasisPoly> {
        let p = power_form(&self.legendre, side)?;
        Ok(match self.nodes.iter().position(|&x| x == side.anchor()) {
            Some(i) => p.with_anchor_value(self.values[i]),
            None => p,
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for ((&xj, &fj), &wj) in self.nodes.iter().zip(&self.values).zip(&self.bary) {
            let d = x - xj;
            if d == 0.0 {
                return fj;
            }
            let t = wj / d;
            num += t * fj;
            den += t;
        }
        num / den
    }

    /// Coefficients in `Σ a_k L_k`.
    pub fn legendre_coeffs(&self) -> &[f64] {
        &self.legendre
    }

    /// Shifted-power form anchored at `side`.
    pub fn power_form_on(&self, side: Side) -> Result<PowerBasisPoly> {
        match side {
            Side::Left => Ok(self.power_form.clone()),
            Side::Right => self.build_power_form(Side::Right),
        }
    }

    pub fn frac_deriv(&self, spec: FracSpec) -> Result<SingularPoly> {
        frac_deriv_power(&self.power_form_on(spec.side)?, spec)
    }
}

fn legendre_coefficients(nodes: &[f64], values: &[f64]) -> Result<Vec<f64>> {
    let m = nodes.len();
    let mut v = DMatrix::<f64>::zeros(m, m);
    for (i, &x) in nodes.iter().enumerate() {
        for (j, l) in jacobi_eval_all(JacobiParam::LEGENDRE, m - 1, x).into_iter().enumerate() {
            v[(i, j)] = l;
        }
    }
    let rhs = DVector::from_column_slice(values);
    let a = v.lu().solve(&rhs).ok_or(Error::Singular(f64::NAN))?;
    Ok(a.iter().copied().collect())
}

fn power_form(legendre: &[f64], side: Side) -> Result<PowerBasisPoly> {
    let mut acc = PowerBasisPoly::zero(side);
    for (k, &a) in legendre.iter().enumerate() {
        if a != 0.0 {
            acc = acc.add_scaled(&jacobi_power_coeffs(JacobiParam::LEGENDRE, k, side)?, a)?;
        }
    }
    Ok(acc)
}

fn barycentric_weights(nodes: &[f64]) -> Vec<f64> {
    let w: Vec<f64> = nodes
        .iter()
        .enumerate()
        .map(|(j, &xj)| {
            let p: f64 = nodes
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .map(|(_, &xk)| xj - xk)
                .product();
            1.0 / p
        })
        .collect();
    // common scaling is irrelevant and keeps the weights in range
    let scale = w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    w.into_iter().map(|v| v / scale).collect()
}

/// `D^μ(u - u_N)` sampled on a guarded grid and at the superpoints.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorCurve {
    pub grid: Vec<f64>,
    pub errors: Vec<f64>,
    pub superpoints: SuperPointSet,
    pub errors_at_superpoints: Vec<f64>,
    pub global_max: f64,
    pub max_at_superpoints: f64,
    pub gain_ratio: f64,
}

/// `size` uniform points on `[-1 + ε, 1]` (left anchor) or `[-1, 1 - ε]`.
pub fn guarded_grid(side: Side, size: usize) -> Vec<f64> {
    let (a, b) = match side {
        Side::Left => (-1.0 + ANCHOR_GUARD, 1.0),
        Side::Right => (-1.0, 1.0 - ANCHOR_GUARD),
    };
    let h = (b - a) / (size - 1) as f64;
    (0..size)
        .map(|i| if i + 1 == size { b } else { a + h * i as f64 })
        .collect()
}

/// Moves a point inside the guard zone to its edge.
fn guarded(side: Side, x: f64) -> f64 {
    if side.distance(x) < ANCHOR_GUARD {
        match side {
            Side::Left => -1.0 + ANCHOR_GUARD,
            Side::Right => 1.0 - ANCHOR_GUARD,
        }
    } else {
        x
    }
}

/// Error curve of the fractional derivative of the family interpolant of
/// `f`, given the exact `D^μ f` (with the same `spec`).
pub fn frac_error_curve(
    f: impl Fn(f64) -> f64,
    exact: impl Fn(f64) -> f64,
    family: NodeFamily,
    n: usize,
    spec: FracSpec,
    grid_size: usize,
) -> Result<ErrorCurve> {
    if grid_size < 2 {
        return Err(Error::Domain(grid_size as f64, "error grid size"));
    }
    let u = interpolate(&f, family, n)?;
    let d = u.frac_deriv(spec)?;
    let err = |x: f64| -> Result<f64> { Ok(exact(x) - d.eval(x)?) };
    let grid = guarded_grid(spec.side, grid_size);
    let errors = grid.iter().map(|&x| err(x)).collect::<Result<Vec<_>>>()?;
    let superpoints = interp_superpoints(family, n, spec)?;
    let errors_at_superpoints = superpoints
        .points
        .iter()
        .map(|&x| {
            // at the anchor the error has a finite limit exactly when both
            // derivatives do; otherwise step back to the guard point
            if x == spec.side.anchor() {
                match err(x) {
                    Ok(v) if v.is_finite() => return Ok(v),
                    _ => {}
                }
            }
            err(guarded(spec.side, x))
        })
        .collect::<Result<Vec<_>>>()?;
    let max_abs = |v: &[f64]| v.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let max_at_superpoints = max_abs(&errors_at_superpoints);
    let global_max = max_abs(&errors).max(max_at_superpoints);
    Ok(ErrorCurve {
        grid,
        errors,
        superpoints,
        errors_at_superpoints,
        global_max,
        max_at_superpoints,
        gain_ratio: gain_ratio(global_max, max_at_superpoints),
    })
}

/// `global / local`, or 1 when the global error is already at rounding
/// level.
pub fn gain_ratio(global_max: f64, local_max: f64) -> f64 {
    if global_max <= NOISE_FLOOR {
        1.0
    } else {
        global_max / local_max.max(f64::MIN_POSITIVE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fracderiv::{FracKind, PowerSum};
    use crate::orthopoly::legendre_eval;

    fn ex31() -> PowerSum {
        PowerSum::single(0.01, Side::Left, 10.15)
    }

    #[test]
    fn reproduces_polynomials() {
        for family in NodeFamily::ALL {
            let u = interpolate(|x| legendre_eval(6, x) - 0.5 * x, family, 6).unwrap();
            for (k, &a) in u.legendre_coeffs().iter().enumerate() {
                let want = match k {
                    6 => 1.0,
                    1 => -0.5,
                    _ => 0.0,
                };
                assert!((a - want).abs() < 1e-10, "{family} k={k}");
            }
            let c = interpolate(|_| 2.5, family, 9).unwrap();
            for &x in &[-0.99, -0.3, 0.77] {
                assert!((c.eval(x) - 2.5).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn nodes_are_reproduced() {
        let f = |x: f64| (x + 1.0).powf(10.15) / 100.0;
        for family in NodeFamily::ALL {
            for n in [3usize, 12, 18] {
                let u = interpolate(f, family, n).unwrap();
                let scale = u.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                for (&x, &v) in u.nodes.iter().zip(&u.values) {
                    assert!((u.eval(x) - v).abs() <= 1e-12 * scale);
                    assert!((u.power_form.eval(x) - v).abs() <= 1e-11 * scale, "{family} N={n}");
                }
            }
        }
    }

    #[test]
    fn polynomial_input_has_no_error() {
        let p = PowerSum::single(1.0, Side::Left, 5.0);
        let spec = FracSpec::left_rl(0.4).unwrap();
        let dp = p.frac_deriv(spec).unwrap();
        let c = frac_error_curve(|x| p.eval(x), |x| dp.eval(x), NodeFamily::LegendreGauss, 8, spec, 401).unwrap();
        assert!(c.global_max <= 1e-11);
        assert_eq!(c.gain_ratio, 1.0);
    }

    #[test]
    fn example_curves_superconverge() {
        let u = ex31();
        let mut prev = 0.0;
        for mu in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let spec = FracSpec::left_rl(mu).unwrap();
            let du = u.frac_deriv(spec).unwrap();
            let c = frac_error_curve(|x| u.eval(x), |x| du.eval(x), NodeFamily::LegendreGauss, 12, spec, 2001).unwrap();
            assert!(c.gain_ratio >= 5.0, "μ={mu} gain {}", c.gain_ratio);
            assert!(c.global_max > prev);
            prev = c.global_max;
        }
    }

    #[test]
    fn gauss_boundary_error_exceeds_lobatto() {
        let u = ex31();
        let spec = FracSpec::left_rl(0.5).unwrap();
        let du = u.frac_deriv(spec).unwrap();
        let edge = |family| {
            let c = frac_error_curve(|x| u.eval(x), |x| du.eval(x), family, 12, spec, 2001).unwrap();
            c.errors[0].abs().max(c.errors[c.errors.len() - 1].abs())
        };
        assert!(edge(NodeFamily::LegendreGauss) > edge(NodeFamily::LegendreLobatto));
    }

    #[test]
    fn right_sided_and_caputo_curves() {
        let u = PowerSum::single(0.01, Side::Right, 10.15);
        let spec = FracSpec::new(0.5, Side::Right, FracKind::Caputo).unwrap();
        let du = u.frac_deriv(spec).unwrap();
        let c = frac_error_curve(
            |x| u.eval(x),
            |x| du.eval(x),
            NodeFamily::LegendreLobatto,
            12,
            spec,
            2001,
        )
        .unwrap();
        assert_eq!(*c.grid.last().unwrap(), 1.0 - ANCHOR_GUARD);
        assert!(c.gain_ratio >= 5.0);
    }

    #[test]
    fn grid_shape() {
        let g = guarded_grid(Side::Left, 2001);
        assert_eq!(g.len(), 2001);
        assert_eq!(g[0], -1.0 + ANCHOR_GUARD);
        assert_eq!(g[2000], 1.0);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }
}
