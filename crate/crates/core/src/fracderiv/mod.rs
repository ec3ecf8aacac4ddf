//! Riemann-Liouville and Caputo derivatives of order `μ ∈ (0, 1]`.
//!
//! Two independent routes are provided for polynomials:
//!
//! - the shifted-power rule ([`frac_deriv_power`]), which maps
//!   `c_k t^k ↦ c_k Γ(k+1)/Γ(k+1-μ) t^{k-μ}` term by term;
//! - Jacobi closed forms ([`frac_deriv_node_poly`],
//!   [`frac_deriv_legendre_series`]), which write the result as a weight
//!   `t^ρ` times a Jacobi polynomial series.
//!
//! [`FracOracle`] evaluates the defining integrals by Gauss-Jacobi
//! quadrature and is used to cross-check both.

mod closed;
mod gjf;
mod oracle;
mod power_rule;
mod singular;

use std::fmt;
use std::str::FromStr;

pub use closed::{frac_deriv_legendre_series, frac_deriv_node_poly};
pub use gjf::{gjf_eval, gjf_frac_deriv, GjfBasisId, GjfDerivative, GjfVariant};
pub use oracle::{oracle_frac_deriv, FracOracle};
pub use power_rule::{frac_deriv_power, PowerSum, PowerTerm};
pub use singular::{PolyFactor, SingularPoly};

use crate::error::{Error, Result};
use crate::orthopoly::Side;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FracKind {
    #[serde(rename = "rl")]
    RiemannLiouville,
    Caputo,
}

impl fmt::Display for FracKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FracKind::RiemannLiouville => "rl",
            FracKind::Caputo => "caputo",
        })
    }
}

impl FromStr for FracKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rl" | "riemann-liouville" => Ok(FracKind::RiemannLiouville),
            "caputo" | "c" => Ok(FracKind::Caputo),
            other => Err(Error::Config(format!("unknown derivative kind '{other}'"))),
        }
    }
}

/// Order, side and kind of a fractional derivative.
///
/// `Side::Left` integrates from `-1`, `Side::Right` from `+1`. At order 1
/// both kinds reduce to `d/dx` on the left and `-d/dx` on the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracSpec {
    pub order: f64,
    pub side: Side,
    pub kind: FracKind,
}

impl FracSpec {
    pub fn new(order: f64, side: Side, kind: FracKind) -> Result<Self> {
        if !(order > 0.0 && order <= 1.0) {
            return Err(Error::Domain(order, "fractional order (0, 1]"));
        }
        Ok(Self { order, side, kind })
    }

    pub fn left_rl(order: f64) -> Result<Self> {
        Self::new(order, Side::Left, FracKind::RiemannLiouville)
    }

    pub fn right_rl(order: f64) -> Result<Self> {
        Self::new(order, Side::Right, FracKind::RiemannLiouville)
    }

    pub fn with_side(self, side: Side) -> Self {
        Self { side, ..self }
    }

    /// Order strictly inside `(0, 1)`.
    pub fn is_fractional(&self) -> bool {
        self.order < 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(FracSpec::left_rl(0.0).is_err());
        assert!(FracSpec::left_rl(1.2).is_err());
        assert!(FracSpec::left_rl(1.0).is_ok());
        assert!(FracSpec::left_rl(f64::NAN).is_err());
        assert_eq!("caputo".parse::<FracKind>().unwrap(), FracKind::Caputo);
        assert_eq!("RL".parse::<FracKind>().unwrap(), FracKind::RiemannLiouville);
    }
}
