//! Gamma-function machinery on top of `libm` (musl's `tgamma`/`lgamma`).
//!
//! Ratios of moderate arguments are taken as a direct quotient, which keeps
//! full relative accuracy; negative non-integer arguments are shifted into
//! the positive axis with `Γ(x) = Γ(x+1)/x`.

use crate::error::{Error, Result};

/// Largest argument for which `Γ` is evaluated directly instead of through logs.
const DIRECT_GAMMA_MAX: f64 = 170.0;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(x, "ln_gamma"));
    }
    Ok(libm::lgamma(x))
}

fn gamma_positive(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `Γ(x)` for any real `x` that is not a pole.
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x.is_nan() {
        return Err(Error::Domain(x, "gamma"));
    }
    let (shifted, divisor) = shift_positive(x);
    Ok(gamma_positive(shifted) / divisor)
}

/// Moves `x` into `(0, ∞)` by repeated `Γ(x) = Γ(x+1)/x`, returning the
/// shifted argument and the accumulated divisor.
fn shift_positive(mut x: f64) -> (f64, f64) {
    let mut divisor = 1.0;
    while x <= 0.0 {
        divisor *= x;
        x += 1.0;
    }
    (x, divisor)
}

/// `1 / Γ(x)`, which is entire: zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        0.0
    } else {
        let (shifted, divisor) = shift_positive(x);
        divisor / gamma_positive(shifted)
    }
}

/// `Γ(a) / Γ(b)`.
///
/// Moderate arguments use a direct quotient, large ones the difference of
/// `ln Γ`. Arguments at or below zero are lifted with the recurrence first.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    if is_nonpositive_integer(a) {
        return Err(Error::Pole(a));
    }
    if is_nonpositive_integer(b) {
        return Err(Error::Pole(b));
    }
    if a == b {
        return Ok(1.0);
    }
    let (a_pos, a_div) = shift_positive(a);
    let (b_pos, b_div) = shift_positive(b);
    let core = if a_pos <= DIRECT_GAMMA_MAX && b_pos <= DIRECT_GAMMA_MAX {
        gamma_positive(a_pos) / gamma_positive(b_pos)
    } else {
        (ln_gamma(a_pos)? - ln_gamma(b_pos)?).exp()
    };
    Ok(core * b_div / a_div)
}

/// Coefficient of the fractional power rule, `Γ(p+1) / Γ(p+1-μ)`.
///
/// Vanishes when `p+1-μ` is a pole (e.g. the constant term under a first
/// derivative).
pub fn power_rule_coeff(p: f64, mu: f64) -> f64 {
    let num = p + 1.0;
    let den = p + 1.0 - mu;
    if is_nonpositive_integer(den) {
        return 0.0;
    }
    gamma_ratio(num, den).unwrap_or(0.0)
}
