//! Superconvergence point sets.
//!
//! For interpolation the points are the zeros of `D^μ w_{N+1}`. Where that
//! derivative is a weight times a single Jacobi polynomial the interior
//! zeros come from Golub-Welsch; otherwise the polynomial factor is scanned
//! for sign changes. A positive weight exponent adds the anchor itself.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fracderiv::{frac_deriv_node_poly, frac_deriv_power, FracKind, FracSpec, PolyFactor, SingularPoly};
use crate::orthopoly::{jacobi_roots, JacobiParam, NodeFamily};

/// Panels used by the sign scan when no Jacobi closed form applies.
const SCAN_PANELS: usize = 2000;

/// Where a point set comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointSource {
    Interp(NodeFamily),
    /// Values of the Petrov-Galerkin solution.
    PgValue,
    /// Fractional derivative of the Petrov-Galerkin solution.
    PgFracDeriv,
}

impl fmt::Display for PointSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointSource::Interp(family) => write!(f, "{family}"),
            PointSource::PgValue => f.write_str("pg-value"),
            PointSource::PgFracDeriv => f.write_str("pg-frac"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuperPointSet {
    pub source: PointSource,
    pub order: f64,
    pub kind: FracKind,
    /// Sorted, strictly increasing.
    pub points: Vec<f64>,
    /// For interpolation sets: the anchor endpoint is one of `points`.
    /// For Petrov-Galerkin value sets: `x = 1` is an additional trivial zero
    /// that is not listed in `points`.
    pub includes_anchor: bool,
}

impl SuperPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `D^μ w_{N+1}` for the family, in the form whose zeros are cheapest to
/// locate exactly.
pub fn generating_function(family: NodeFamily, n: usize, spec: FracSpec) -> Result<SingularPoly> {
    let anchor_value = family.node_poly_eval(n, spec.side.anchor());
    if spec.kind == FracKind::Caputo && anchor_value.abs() > 1e-12 {
        // the Caputo derivative carries t^{1-μ}, which the power route
        // factors out exactly
        let w = family.node_power_poly(n, spec.side)?;
        return frac_deriv_power(&w, spec);
    }
    frac_deriv_node_poly(family, n, spec)
}

/// Zeros of `D^μ w_{N+1}` on `[-1, 1]`.
pub fn interp_superpoints(family: NodeFamily, n: usize, spec: FracSpec) -> Result<SuperPointSet> {
    if n < 2 {
        return Err(Error::Domain(n as f64, "interp_superpoints needs N >= 2"));
    }
    if !spec.is_fractional() {
        return Err(Error::Domain(spec.order, "interp_superpoints order in (0, 1)"));
    }
    let g = generating_function(family, n, spec)?;
    let mut points = match single_jacobi(&g.factor) {
        Some((params, m)) => jacobi_roots(params, m)?,
        None => g.factor_roots(SCAN_PANELS),
    };
    let includes_anchor = g.exponent > 0.0;
    if includes_anchor {
        points.push(spec.side.anchor());
    }
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    Ok(SuperPointSet {
        source: PointSource::Interp(family),
        order: spec.order,
        kind: spec.kind,
        points,
        includes_anchor,
    })
}

/// `(params, m)` when the factor is a multiple of one `P_m^{(α,β)}` with
/// quadrature-admissible parameters.
fn single_jacobi(factor: &PolyFactor) -> Option<(JacobiParam, usize)> {
    let PolyFactor::Jacobi { params, coeffs } = factor else {
        return None;
    };
    params.check_quadrature().ok()?;
    let mut nonzero = coeffs.iter().enumerate().filter(|(_, &c)| c != 0.0);
    let (m, _) = nonzero.next()?;
    nonzero.next().is_none().then_some((*params, m))
}

/// Points where the Petrov-Galerkin solution `u_N` superconverges: the
/// `N + 1` zeros of `P_{N+1}^{(s,-s)}`.
pub fn pg_value_superpoints(s: f64, n: usize) -> Result<SuperPointSet> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(s, "pg_value_superpoints s in (0, 1)"));
    }
    Ok(SuperPointSet {
        source: PointSource::PgValue,
        order: s,
        kind: FracKind::RiemannLiouville,
        points: jacobi_roots(JacobiParam::new(s, -s), n + 1)?,
        includes_anchor: true,
    })
}

/// Points where `D^s u_N` superconverges: the Gauss points, for every `s`.
pub fn pg_fracderiv_superpoints(n: usize) -> Result<SuperPointSet> {
    Ok(SuperPointSet {
        source: PointSource::PgFracDeriv,
        order: 0.0,
        kind: FracKind::RiemannLiouville,
        points: jacobi_roots(JacobiParam::LEGENDRE, n + 1)?,
        includes_anchor: false,
    })
}

/// Largest `|q(p)| / max|q|` over the points, with `q` the polynomial
/// factor of the generating function. An anchor point where the weight
/// `t^ρ`, `ρ > 0`, vanishes counts as an exact zero.
pub fn relative_residual(g: &SingularPoly, points: &[f64]) -> f64 {
    let scale = g.factor_max(4000);
    points
        .iter()
        .map(|&p| {
            if p == g.anchor.anchor() && g.vanishes_at_anchor() {
                0.0
            } else {
                g.factor_eval(p).abs() / scale
            }
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{legendre_eval, node_family_points, Side};

    fn check_set(family: NodeFamily, n: usize, spec: FracSpec) -> SuperPointSet {
        let set = interp_superpoints(family, n, spec).unwrap();
        let g = generating_function(family, n, spec).unwrap();
        let interior: Vec<f64> = set.points.iter().copied().filter(|&p| p > -1.0).collect();
        assert!(relative_residual(&g, &interior) < 1e-10, "{family} {spec:?}");
        assert!(set.points.windows(2).all(|w| w[0] < w[1]));
        set
    }

    #[test]
    fn counts_and_residuals() {
        for family in NodeFamily::LEGENDRE {
            for mu in [0.1, 0.5, 0.9] {
                for n in [4usize, 12] {
                    let set = check_set(family, n, FracSpec::left_rl(mu).unwrap());
                    assert_eq!(set.len(), n + 1, "{family} μ={mu} N={n}: {:?}", set.points);
                    let cap = check_set(family, n, FracSpec::new(mu, Side::Left, FracKind::Caputo).unwrap());
                    assert!(cap.includes_anchor && cap.points[0] == -1.0);
                    assert!(cap.len() <= n + 1);
                }
            }
        }
    }

    #[test]
    fn caputo_gauss_loses_interior_zeros_for_small_order() {
        // as μ -> 0 the Caputo derivative tends to L_{N+1} - L_{N+1}(-1) >= 0
        let small = interp_superpoints(
            NodeFamily::LegendreGauss,
            4,
            FracSpec::new(0.1, Side::Left, FracKind::Caputo).unwrap(),
        )
        .unwrap();
        assert_eq!(small.points, vec![-1.0]);
        let large = interp_superpoints(
            NodeFamily::LegendreGauss,
            4,
            FracSpec::new(0.9, Side::Left, FracKind::Caputo).unwrap(),
        )
        .unwrap();
        assert_eq!(large.len(), 5);
    }

    #[test]
    fn anchor_for_lobatto_and_radau_left() {
        let spec = FracSpec::left_rl(0.5).unwrap();
        for family in [NodeFamily::LegendreLobatto, NodeFamily::LegendreRadauLeft] {
            let set = interp_superpoints(family, 12, spec).unwrap();
            assert!(set.includes_anchor);
            assert_eq!(set.points[0], -1.0);
            assert_eq!(set.len(), 13);
        }
        let gauss = interp_superpoints(NodeFamily::LegendreGauss, 12, spec).unwrap();
        assert!(!gauss.includes_anchor);
    }

    #[test]
    fn order_near_one_recovers_classical_points() {
        let n = 12;
        let spec = FracSpec::left_rl(1.0 - 1e-6).unwrap();
        for family in NodeFamily::LEGENDRE {
            let set = interp_superpoints(family, n, spec).unwrap();
            let classical = SingularPoly::new(
                Side::Left,
                0.0,
                PolyFactor::Power(family.node_power_poly(n, Side::Left).unwrap().derivative_t()),
            )
            .factor_roots(4000);
            let interior = &set.points[1..];
            assert_eq!(interior.len(), classical.len(), "{family}");
            for (a, b) in interior.iter().zip(&classical) {
                assert!((a - b).abs() < 1e-3, "{family}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn mirror_sets() {
        for family in NodeFamily::ALL {
            for kind in [FracKind::RiemannLiouville, FracKind::Caputo] {
                let left =
                    interp_superpoints(family.mirrored(), 8, FracSpec::new(0.4, Side::Left, kind).unwrap()).unwrap();
                let right = interp_superpoints(family, 8, FracSpec::new(0.4, Side::Right, kind).unwrap()).unwrap();
                assert_eq!(left.len(), right.len(), "{family} {kind}");
                for (a, b) in left.points.iter().rev().zip(&right.points) {
                    assert!((a + b).abs() < 1e-11, "{family} {kind}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn chebyshev_sets() {
        for family in NodeFamily::ALL.into_iter().filter(|f| !f.is_legendre()) {
            let spec = FracSpec::left_rl(0.5).unwrap();
            let set = interp_superpoints(family, 10, spec).unwrap();
            let g = generating_function(family, 10, spec).unwrap();
            let interior: Vec<f64> = set.points.iter().copied().filter(|&p| p > -1.0).collect();
            assert!(!interior.is_empty());
            assert!(relative_residual(&g, &interior) < 1e-10, "{family}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        let spec = FracSpec::left_rl(0.5).unwrap();
        assert!(interp_superpoints(NodeFamily::LegendreGauss, 1, spec).is_err());
        assert!(interp_superpoints(NodeFamily::LegendreGauss, 4, FracSpec::left_rl(1.0).unwrap()).is_err());
        assert!(pg_value_superpoints(1.0, 3).is_err());
    }

    #[test]
    fn pg_value_points() {
        let one = pg_value_superpoints(0.3, 0).unwrap();
        assert_eq!(one.len(), 1);
        assert!((one.points[0] + 0.3).abs() < 1e-15);
        assert!(one.includes_anchor);
        let p = JacobiParam::new(0.55, -0.55);
        let set = pg_value_superpoints(0.55, 9).unwrap();
        assert_eq!(set.len(), 10);
        for &x in &set.points {
            assert!(crate::orthopoly::jacobi_eval_all(p, 10, x)[10].abs() < 1e-10);
        }
    }

    #[test]
    fn pg_value_points_move_continuously() {
        let n = 9;
        let mut prev = pg_value_superpoints(0.001, n).unwrap().points;
        let mut s = 0.002;
        while s < 0.999 {
            let cur = pg_value_superpoints(s, n).unwrap().points;
            for (a, b) in prev.iter().zip(&cur) {
                assert!((a - b).abs() < 1e-2);
                assert!(b < a, "roots move left as s grows");
            }
            prev = cur;
            s += 1e-3;
        }
    }

    #[test]
    fn pg_derivative_points_are_gauss() {
        let one = pg_fracderiv_superpoints(1).unwrap();
        let r = 1.0 / 3f64.sqrt();
        assert!((one.points[0] + r).abs() < 1e-15 && (one.points[1] - r).abs() < 1e-15);
        assert_eq!(pg_fracderiv_superpoints(0).unwrap().points, vec![0.0]);
        let g = pg_fracderiv_superpoints(12).unwrap();
        assert_eq!(g.points, node_family_points(NodeFamily::LegendreGauss, 12).unwrap());
        for &x in &g.points {
            assert!(legendre_eval(13, x).abs() < 1e-14);
        }
    }
}
