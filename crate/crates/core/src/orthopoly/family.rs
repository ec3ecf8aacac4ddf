//! Collocation node families and their node polynomials `w_{N+1}`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::power::chebyshev_power_coeffs;
use super::{
    chebyshev_derivative, chebyshev_eval, jacobi_power_coeffs, jacobi_roots, legendre_derivative, legendre_eval,
    JacobiParam, PowerBasisPoly, Side,
};
use crate::error::{Error, Result};

/// Interpolation node families. Each one fixes a node polynomial of degree
/// `N+1` whose zeros are the collocation points:
///
/// | family | `w_{N+1}` |
/// |---|---|
/// | `LegendreGauss` | `L_{N+1}` |
/// | `LegendreLobatto` | `L_{N+1} - L_{N-1}` |
/// | `LegendreRadauLeft` | `L_{N+1} + L_N` |
/// | `LegendreRadauRight` | `L_{N+1} - L_N` |
///
/// and the same four combinations of `T_n` for the Chebyshev tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeFamily {
    LegendreGauss,
    LegendreLobatto,
    LegendreRadauLeft,
    LegendreRadauRight,
    ChebyshevGauss,
    ChebyshevLobatto,
    ChebyshevRadauLeft,
    ChebyshevRadauRight,
}

impl NodeFamily {
    pub const ALL: [NodeFamily; 8] = [
        NodeFamily::LegendreGauss,
        NodeFamily::LegendreLobatto,
        NodeFamily::LegendreRadauLeft,
        NodeFamily::LegendreRadauRight,
        NodeFamily::ChebyshevGauss,
        NodeFamily::ChebyshevLobatto,
        NodeFamily::ChebyshevRadauLeft,
        NodeFamily::ChebyshevRadauRight,
    ];

    pub const LEGENDRE: [NodeFamily; 4] = [
        NodeFamily::LegendreGauss,
        NodeFamily::LegendreLobatto,
        NodeFamily::LegendreRadauLeft,
        NodeFamily::LegendreRadauRight,
    ];

    pub fn is_legendre(self) -> bool {
        matches!(
            self,
            NodeFamily::LegendreGauss
                | NodeFamily::LegendreLobatto
                | NodeFamily::LegendreRadauLeft
                | NodeFamily::LegendreRadauRight
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            NodeFamily::LegendreGauss => "legendre-gauss",
            NodeFamily::LegendreLobatto => "legendre-lobatto",
            NodeFamily::LegendreRadauLeft => "legendre-radau-left",
            NodeFamily::LegendreRadauRight => "legendre-radau-right",
            NodeFamily::ChebyshevGauss => "chebyshev-gauss",
            NodeFamily::ChebyshevLobatto => "chebyshev-lobatto",
            NodeFamily::ChebyshevRadauLeft => "chebyshev-radau-left",
            NodeFamily::ChebyshevRadauRight => "chebyshev-radau-right",
        }
    }

    /// Family whose node polynomial is `w_{N+1}(-x)` up to sign.
    pub fn mirrored(self) -> NodeFamily {
        match self {
            NodeFamily::LegendreRadauLeft => NodeFamily::LegendreRadauRight,
            NodeFamily::LegendreRadauRight => NodeFamily::LegendreRadauLeft,
            NodeFamily::ChebyshevRadauLeft => NodeFamily::ChebyshevRadauRight,
            NodeFamily::ChebyshevRadauRight => NodeFamily::ChebyshevRadauLeft,
            other => other,
        }
    }

    /// Sign `σ` in `w_{N+1}(-x) = σ · w^{mirrored}_{N+1}(x)`.
    pub fn mirror_sign(self, n: usize) -> f64 {
        if (n + 1).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// `(index, coefficient)` pairs of the node polynomial in the family's
    /// own basis (`L_k` or `T_k`).
    pub fn combination(self, n: usize) -> Vec<(usize, f64)> {
        use NodeFamily::*;
        match self {
            LegendreGauss | ChebyshevGauss => vec![(n + 1, 1.0)],
            LegendreLobatto | ChebyshevLobatto => vec![(n + 1, 1.0), (n - 1, -1.0)],
            LegendreRadauLeft | ChebyshevRadauLeft => vec![(n + 1, 1.0), (n, 1.0)],
            LegendreRadauRight | ChebyshevRadauRight => vec![(n + 1, 1.0), (n, -1.0)],
        }
    }

    /// `w_{N+1}(x)`.
    pub fn node_poly_eval(self, n: usize, x: f64) -> f64 {
        let basis = if self.is_legendre() {
            legendre_eval
        } else {
            chebyshev_eval
        };
        self.combination(n).into_iter().map(|(k, c)| c * basis(k, x)).sum()
    }

    /// `w_{N+1}'(x)`.
    pub fn node_poly_derivative(self, n: usize, x: f64) -> f64 {
        let basis = if self.is_legendre() {
            legendre_derivative
        } else {
            chebyshev_derivative
        };
        self.combination(n).into_iter().map(|(k, c)| c * basis(k, x)).sum()
    }

    /// `w_{N+1}` in shifted powers about `anchor`.
    pub fn node_power_poly(self, n: usize, anchor: Side) -> Result<PowerBasisPoly> {
        let mut acc = PowerBasisPoly::zero(anchor);
        for (k, c) in self.combination(n) {
            let term = if self.is_legendre() {
                jacobi_power_coeffs(JacobiParam::LEGENDRE, k, anchor)?
            } else {
                chebyshev_power_coeffs(k, anchor)?
            };
            acc = acc.add_scaled(&term, c)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for NodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NodeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let short = match key.as_str() {
            "gauss" => "legendre-gauss",
            "lobatto" => "legendre-lobatto",
            "radau-left" => "legendre-radau-left",
            "radau-right" => "legendre-radau-right",
            other => other,
        };
        NodeFamily::ALL
            .into_iter()
            .find(|f| f.name() == short)
            .ok_or_else(|| Error::Config(format!("unknown node family '{s}'")))
    }
}

/// The `N+1` sorted zeros of the family's node polynomial.
///
/// Legendre families come from Golub-Welsch on the equivalent Gauss-Jacobi
/// rule plus the endpoints (`L_{N+1} - L_{N-1} ∝ (x^2-1) P_{N-1}^{(1,1)}`,
/// `L_{N+1} ± L_N ∝ (1 ± x) P_N^{(0,1)}` resp. `P_N^{(1,0)}`); Chebyshev
/// families have closed-form cosines.
pub fn node_family_points(f: NodeFamily, n: usize) -> Result<Vec<f64>> {
    use NodeFamily::*;
    if n < 1 {
        return Err(Error::Domain(n as f64, "node_family_points degree"));
    }
    let nf = n as f64;
    let mut pts = match f {
        LegendreGauss => jacobi_roots(JacobiParam::LEGENDRE, n + 1)?,
        LegendreLobatto => {
            let mut v = vec![-1.0];
            v.extend(jacobi_roots(JacobiParam::new(1.0, 1.0), n - 1)?);
            v.push(1.0);
            v
        }
        LegendreRadauLeft => {
            let mut v = vec![-1.0];
            v.extend(jacobi_roots(JacobiParam::new(0.0, 1.0), n)?);
            v
        }
        LegendreRadauRight => {
            let mut v = jacobi_roots(JacobiParam::new(1.0, 0.0), n)?;
            v.push(1.0);
            v
        }
        ChebyshevGauss => (0..=n)
            .map(|j| -((2 * j + 1) as f64 * PI / (2.0 * (nf + 1.0))).cos())
            .collect(),
        ChebyshevLobatto => (0..=n).map(|j| -(j as f64 * PI / nf).cos()).collect(),
        ChebyshevRadauLeft => {
            // T_{N+1} + T_N = 2 cos((N+1/2)θ) cos(θ/2)
            let mut v = vec![-1.0];
            v.extend((0..n).map(|j| ((2 * j + 1) as f64 * PI / (2.0 * nf + 1.0)).cos()));
            v
        }
        ChebyshevRadauRight => {
            // T_{N+1} - T_N = -2 sin((N+1/2)θ) sin(θ/2)
            let mut v = vec![1.0];
            v.extend((1..=n).map(|j| (2.0 * j as f64 * PI / (2.0 * nf + 1.0)).cos()));
            v
        }
    };
    pts.sort_by(f64::total_cmp);
    for p in pts.iter_mut() {
        if p.abs() < 1e-15 {
            *p = 0.0;
        }
    }
    Ok(pts)
}
