//! Generalized Jacobi functions.
//!
//! `⁺J_n^{(-α,β)}(x) = (1-x)^α P_n^{(α,β)}(x)` for `α > -1`, and
//! `⁻J_n^{(α,-β)}(x) = (1+x)^β P_n^{(α,β)}(x)` for `β > -1`.

use crate::error::{Error, Result};
use crate::orthopoly::{jacobi_eval, JacobiParam, Side};
use crate::specialfn::gamma_ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GjfVariant {
    /// Weight `(1-x)^α`, vanishing at `x = 1`.
    PlusJ,
    /// Weight `(1+x)^β`, vanishing at `x = -1`.
    MinusJ,
}

/// One generalized Jacobi function; `alpha`, `beta` are the parameters of
/// the underlying `P_n^{(α,β)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GjfBasisId {
    pub variant: GjfVariant,
    pub alpha: f64,
    pub beta: f64,
    pub n: usize,
}

impl GjfBasisId {
    pub fn plus(alpha: f64, beta: f64, n: usize) -> Self {
        Self {
            variant: GjfVariant::PlusJ,
            alpha,
            beta,
            n,
        }
    }

    pub fn minus(alpha: f64, beta: f64, n: usize) -> Self {
        Self {
            variant: GjfVariant::MinusJ,
            alpha,
            beta,
            n,
        }
    }

    pub fn params(&self) -> JacobiParam {
        JacobiParam::new(self.alpha, self.beta)
    }

    /// Endpoint where the weight sits.
    pub fn side(&self) -> Side {
        match self.variant {
            GjfVariant::PlusJ => Side::Right,
            GjfVariant::MinusJ => Side::Left,
        }
    }

    /// Exponent of the weight.
    pub fn weight_exponent(&self) -> f64 {
        match self.variant {
            GjfVariant::PlusJ => self.alpha,
            GjfVariant::MinusJ => self.beta,
        }
    }

    fn check(&self) -> Result<()> {
        if self.weight_exponent() > -1.0 {
            Ok(())
        } else {
            Err(Error::JacobiParams {
                alpha: self.alpha,
                beta: self.beta,
                reason: "GJF weight exponent must exceed -1",
            })
        }
    }
}

pub fn gjf_eval(id: GjfBasisId, x: f64) -> Result<f64> {
    id.check()?;
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(x, "gjf_eval"));
    }
    let t = id.side().distance(x);
    let g = id.weight_exponent();
    let w = if g == 0.0 {
        1.0
    } else if t == 0.0 {
        if g > 0.0 {
            return Ok(0.0);
        }
        return Err(Error::Singular(x));
    } else {
        t.powf(g)
    };
    Ok(w * jacobi_eval(id.params(), id.n, x))
}

/// `coeff · P_n^{(params)}`: the image of a GJF under the fractional
/// derivative matching its weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GjfDerivative {
    pub coeff: f64,
    pub params: JacobiParam,
    pub n: usize,
    /// Side and order of the derivative that produces this image.
    pub side: Side,
    pub order: f64,
}

impl GjfDerivative {
    pub fn eval(&self, x: f64) -> f64 {
        self.coeff * jacobi_eval(self.params, self.n, x)
    }
}

/// Closed-form fractional derivative of a GJF.
///
/// - right RL of order `α` of `⁺J_n^{(-α,β)}` is `Γ(n+α+1)/n! P_n^{(0,α+β)}`;
/// - left RL of order `β` of `⁻J_n^{(α,-β)}` is `Γ(n+β+1)/n! P_n^{(α+β,0)}`.
pub fn gjf_frac_deriv(id: GjfBasisId) -> Result<GjfDerivative> {
    let order = id.weight_exponent();
    if !(order > 0.0) {
        return Err(Error::JacobiParams {
            alpha: id.alpha,
            beta: id.beta,
            reason: "derivative order (the weight exponent) must be positive",
        });
    }
    let nf = id.n as f64;
    let coeff = gamma_ratio(nf + order + 1.0, nf + 1.0)?;
    let params = match id.variant {
        GjfVariant::PlusJ => JacobiParam::new(0.0, id.alpha + id.beta),
        GjfVariant::MinusJ => JacobiParam::new(id.alpha + id.beta, 0.0),
    };
    Ok(GjfDerivative {
        coeff,
        params,
        n: id.n,
        side: id.side(),
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialfn::gamma;
    use approx::assert_relative_eq;

    #[test]
    fn trivial_values() {
        let s = 0.4;
        assert_eq!(gjf_eval(GjfBasisId::plus(s, -s, 3), 1.0).unwrap(), 0.0);
        assert_eq!(gjf_eval(GjfBasisId::plus(s, -s, 0), 0.0).unwrap(), 1.0);
        assert!(gjf_eval(GjfBasisId::plus(-1.2, 0.0, 1), 0.0).is_err());
    }

    #[test]
    fn minus_j_value() {
        // 50-digit reference for (1.4)^{0.37} P_3^{(-0.37, 0.37)}(0.4)
        let s = 0.37;
        assert_relative_eq!(
            gjf_eval(GjfBasisId::minus(-s, s, 3), 0.4).unwrap(),
            -0.334_127_489_381_913_390_93,
            max_relative = 1e-14
        );
    }

    #[test]
    fn derivative_images() {
        let s = 0.55;
        let d = gjf_frac_deriv(GjfBasisId::plus(s, -s, 5)).unwrap();
        assert_eq!(d.params, JacobiParam::new(0.0, 0.0));
        assert_relative_eq!(d.coeff, gamma(5.0 + s + 1.0).unwrap() / 120.0, max_relative = 1e-14);
        let d0 = gjf_frac_deriv(GjfBasisId::minus(-0.3, 0.7, 0)).unwrap();
        assert_relative_eq!(d0.coeff, gamma(1.7).unwrap(), max_relative = 1e-14);
        assert!(gjf_frac_deriv(GjfBasisId::plus(0.0, 0.0, 2)).is_err());
    }
}
