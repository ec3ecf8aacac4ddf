//! Functions of the form `t^ρ q(x)` with `t` the distance from an endpoint.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::orthopoly::{jacobi_series_eval, JacobiParam, PowerBasisPoly, Side};

/// The polynomial part `q` of a [`SingularPoly`].
#[derive(Debug, Clone, PartialEq)]
pub enum PolyFactor {
    /// Shifted-power form, evaluated in double-double.
    Power(PowerBasisPoly),
    /// `Σ c_n P_n^{(α,β)}(x)`.
    Jacobi { params: JacobiParam, coeffs: Vec<f64> },
}

impl PolyFactor {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            PolyFactor::Power(p) => p.eval(x),
            PolyFactor::Jacobi { params, coeffs } => jacobi_series_eval(*params, coeffs, x),
        }
    }

    fn reflected(&self) -> PolyFactor {
        match self {
            PolyFactor::Power(p) => PolyFactor::Power(p.reflected()),
            PolyFactor::Jacobi { params, coeffs } => PolyFactor::Jacobi {
                params: params.swapped(),
                coeffs: coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, &c)| if n % 2 == 0 { c } else { -c })
                    .collect(),
            },
        }
    }

    fn scaled(&self, k: f64) -> PolyFactor {
        match self {
            PolyFactor::Power(p) => PolyFactor::Power(p.scale(k)),
            PolyFactor::Jacobi { params, coeffs } => PolyFactor::Jacobi {
                params: *params,
                coeffs: coeffs.iter().map(|c| c * k).collect(),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            PolyFactor::Power(p) => p.is_zero(),
            PolyFactor::Jacobi { coeffs, .. } => coeffs.iter().all(|&c| c == 0.0),
        }
    }
}

/// `t^ρ · q(x)` where `t = 1 + x` (left anchor) or `t = 1 - x` (right).
///
/// The exponent stays symbolic so that endpoint behaviour is decided
/// exactly: at the anchor the value is `0` for `ρ > 0`, `q(anchor)` for
/// `ρ = 0`, and an error for `ρ < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularPoly {
    pub anchor: Side,
    pub exponent: f64,
    pub factor: PolyFactor,
}

impl SingularPoly {
    pub fn new(anchor: Side, exponent: f64, factor: PolyFactor) -> Self {
        Self {
            anchor,
            exponent,
            factor,
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(Error::Domain(x, "SingularPoly::eval"));
        }
        let t = self.anchor.distance(x);
        if self.factor.is_zero() {
            return Ok(0.0);
        }
        if t == 0.0 {
            return if self.exponent > 0.0 {
                Ok(0.0)
            } else if self.exponent == 0.0 {
                Ok(self.factor.eval(x))
            } else {
                Err(Error::Singular(x))
            };
        }
        let w = if self.exponent == 0.0 {
            1.0
        } else {
            t.powf(self.exponent)
        };
        Ok(w * self.factor.eval(x))
    }

    /// The polynomial part alone.
    pub fn factor_eval(&self, x: f64) -> f64 {
        self.factor.eval(x)
    }

    /// `x ↦ self(-x)`.
    pub fn reflected(&self) -> SingularPoly {
        SingularPoly {
            anchor: self.anchor.flipped(),
            exponent: self.exponent,
            factor: self.factor.reflected(),
        }
    }

    pub fn scaled(&self, k: f64) -> SingularPoly {
        SingularPoly {
            anchor: self.anchor,
            exponent: self.exponent,
            factor: self.factor.scaled(k),
        }
    }

    /// Whether the function vanishes at its anchor through the weight.
    pub fn vanishes_at_anchor(&self) -> bool {
        self.exponent > 0.0
    }

    /// Zeros of the polynomial factor in the open interval `(-1, 1)`, by a
    /// sign scan over `panels` cosine-spaced panels refined with bisection.
    pub fn factor_roots(&self, panels: usize) -> Vec<f64> {
        scan_roots(|x| self.factor.eval(x), panels)
    }

    /// Largest `|q|` on a cosine grid of `[-1, 1]`.
    pub fn factor_max(&self, samples: usize) -> f64 {
        (0..=samples)
            .map(|i| self.factor.eval(-(PI * i as f64 / samples as f64).cos()).abs())
            .fold(0.0, f64::max)
    }
}

/// Sign changes of `f` on cosine-spaced panels of `[-1, 1]`, each refined by
/// bisection to `1e-15`. Exact zeros at the endpoints are not reported.
pub(crate) fn scan_roots(f: impl Fn(f64) -> f64, panels: usize) -> Vec<f64> {
    let mut roots = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..=panels {
        let x = -(PI * i as f64 / panels as f64).cos();
        let fx = f(x);
        if fx == 0.0 {
            if i != 0 && i != panels {
                roots.push(x);
            }
            prev = None;
            continue;
        }
        if let Some((xa, fa)) = prev {
            if fa.signum() != fx.signum() {
                roots.push(bisect(&f, xa, fa, x));
            }
        }
        prev = Some((x, fx));
    }
    roots
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut fa: f64, mut b: f64) -> f64 {
    while b - a > 1e-15 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jac(alpha: f64, beta: f64, coeffs: Vec<f64>) -> PolyFactor {
        PolyFactor::Jacobi {
            params: JacobiParam::new(alpha, beta),
            coeffs,
        }
    }

    #[test]
    fn endpoint_classification() {
        let pos = SingularPoly::new(Side::Left, 0.5, jac(0.0, 0.0, vec![1.0]));
        assert_eq!(pos.eval(-1.0).unwrap(), 0.0);
        let zero = SingularPoly::new(Side::Left, 0.0, jac(0.0, 0.0, vec![2.0, 1.0]));
        assert_eq!(zero.eval(-1.0).unwrap(), 1.0);
        let neg = SingularPoly::new(Side::Left, -0.3, jac(0.0, 0.0, vec![1.0]));
        assert!(matches!(neg.eval(-1.0), Err(Error::Singular(_))));
        assert!((neg.eval(0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(neg.eval(1.5).is_err());
    }

    #[test]
    fn reflection() {
        let p = SingularPoly::new(Side::Left, -0.4, jac(0.3, -0.2, vec![0.5, -1.0, 2.0]));
        let r = p.reflected();
        for &x in &[-0.7, 0.0, 0.45] {
            assert!((p.eval(-x).unwrap() - r.eval(x).unwrap()).abs() < 1e-14);
        }
    }

    #[test]
    fn scan_finds_legendre_zeros() {
        let p = SingularPoly::new(Side::Left, 0.0, jac(0.0, 0.0, vec![0.0, 0.0, 0.0, 1.0]));
        let r = p.factor_roots(2000);
        let z = (3.0f64 / 5.0).sqrt();
        assert_eq!(r.len(), 3);
        assert!((r[0] + z).abs() < 1e-13 && r[1].abs() < 1e-13 && (r[2] - z).abs() < 1e-13);
    }
}
