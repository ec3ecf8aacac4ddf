//! Benchmark functions and a small parser for sums of shifted powers.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fracderiv::{PowerSum, PowerTerm};
use crate::orthopoly::{jacobi_power_coeffs, JacobiParam, Side};
use crate::specialfn::gamma_ratio;

/// `(1+x)^{10.15} / 100`, the interpolation benchmark.
pub fn ex31() -> PowerSum {
    PowerSum::single(0.01, Side::Left, 10.15)
}

/// `1 + x + cos x + sin x`.
pub fn ex41(x: f64) -> f64 {
    1.0 + x + x.cos() + x.sin()
}

/// `exp(sin x + 2)`.
pub fn ex42(x: f64) -> f64 {
    (x.sin() + 2.0).exp()
}

/// `(1+x)^{7.89}`.
pub fn ex43(x: f64) -> f64 {
    (1.0 + x).powf(7.89)
}

/// Target solution `(1-x)^{12+s}` of the reaction problem.
pub fn remark45_solution(s: f64) -> PowerSum {
    PowerSum::single(1.0, Side::Right, 12.0 + s)
}

/// `D^s u + u` for [`remark45_solution`]:
/// `Γ(13+s)/12! (1-x)^{12} + (1-x)^{12+s}`.
pub fn remark45_rhs(s: f64) -> Result<PowerSum> {
    Ok(PowerSum::new(vec![
        PowerTerm {
            coef: gamma_ratio(13.0 + s, 13.0)?,
            side: Side::Right,
            exponent: 12.0,
        },
        PowerTerm {
            coef: 1.0,
            side: Side::Right,
            exponent: 12.0 + s,
        },
    ]))
}

/// Right-hand sides accepted by the Petrov-Galerkin driver.
#[derive(Debug, Clone, PartialEq)]
pub enum PgRhs {
    Ex41,
    Ex42,
    Ex43,
    /// The reaction problem with a known solution.
    Remark45,
    Expr(PowerSum),
}

impl PgRhs {
    pub fn name(&self) -> String {
        match self {
            PgRhs::Ex41 => "ex41".into(),
            PgRhs::Ex42 => "ex42".into(),
            PgRhs::Ex43 => "ex43".into(),
            PgRhs::Remark45 => "remark45".into(),
            PgRhs::Expr(_) => "expression".into(),
        }
    }

    /// The right-hand side for order `s`.
    pub fn function(&self, s: f64) -> Result<Box<dyn Fn(f64) -> f64>> {
        Ok(match self {
            PgRhs::Ex41 => Box::new(ex41),
            PgRhs::Ex42 => Box::new(ex42),
            PgRhs::Ex43 => Box::new(ex43),
            PgRhs::Remark45 => {
                let f = remark45_rhs(s)?;
                Box::new(move |x| f.eval(x))
            }
            PgRhs::Expr(p) => {
                let p = p.clone();
                Box::new(move |x| p.eval(x))
            }
        })
    }

    pub fn has_reaction(&self) -> bool {
        matches!(self, PgRhs::Remark45)
    }
}

impl FromStr for PgRhs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().strip_prefix("builtin:").unwrap_or(s.trim());
        match key.to_ascii_lowercase().as_str() {
            "ex41" => Ok(PgRhs::Ex41),
            "ex42" => Ok(PgRhs::Ex42),
            "ex43" => Ok(PgRhs::Ex43),
            "remark45" => Ok(PgRhs::Remark45),
            _ if s.trim().starts_with("builtin:") => Err(Error::Config(format!("unknown builtin `{s}`"))),
            _ => Ok(PgRhs::Expr(parse_power_sum(s)?)),
        }
    }
}

/// Functions for the interpolation driver: `builtin:ex31` or an expression.
pub fn parse_interp_function(s: &str) -> Result<PowerSum> {
    match s.trim() {
        "builtin:ex31" | "ex31" => Ok(ex31()),
        other if other.starts_with("builtin:") => Err(Error::Config(format!("unknown builtin `{other}`"))),
        other => parse_power_sum(other),
    }
}

/// Parses sums like `0.01*(1+x)^10.15 - 2*(1-x)^3 + 4 + L3`.
///
/// A term is an optional coefficient followed by `(1+x)`, `(1-x)` (with an
/// optional `^p`), `x`, or `L<m>` (Legendre polynomial), or a bare number.
pub fn parse_power_sum(src: &str) -> Result<PowerSum> {
    let text: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Config("empty expression".into()));
    }
    let mut terms = Vec::new();
    for (sign, body) in split_terms(&text)? {
        terms.extend(parse_term(body, sign).map_err(|e| Error::Config(format!("in `{body}`: {e}")))?);
    }
    Ok(PowerSum::new(terms))
}

/// Splits at top-level `+`/`-`, skipping exponent signs (`e-3`, `^-0.5`).
fn split_terms(text: &str) -> Result<Vec<(f64, &str)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut sign = 1.0;
    for i in 0..bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let prev = if i == 0 { None } else { Some(bytes[i - 1]) };
                if matches!(prev, Some(b'e' | b'E' | b'^' | b'*')) {
                    continue;
                }
                if i > start {
                    out.push((sign, &text[start..i]));
                } else if i != 0 {
                    return Err(Error::Config(format!("dangling operator in `{text}`")));
                }
                sign = if bytes[i] == b'-' { -1.0 } else { 1.0 };
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Config(format!("unbalanced parentheses in `{text}`")));
        }
    }
    if depth != 0 || start >= text.len() {
        return Err(Error::Config(format!("malformed expression `{text}`")));
    }
    out.push((sign, &text[start..]));
    Ok(out)
}

fn number(s: &str) -> std::result::Result<f64, String> {
    s.parse::<f64>().map_err(|_| format!("bad number `{s}`"))
}

fn parse_term(body: &str, sign: f64) -> std::result::Result<Vec<PowerTerm>, String> {
    let (coef, factor) = match body.rfind('*') {
        Some(i) => (number(&body[..i])?, &body[i + 1..]),
        None => match body.find(['(', 'x', 'L']) {
            Some(0) => (1.0, body),
            Some(i) => (number(&body[..i])?, &body[i..]),
            None => return Ok(vec![term(sign * number(body)?, Side::Left, 0.0)]),
        },
    };
    let c = sign * coef;
    if factor == "x" {
        return Ok(vec![term(c, Side::Left, 1.0), term(-c, Side::Left, 0.0)]);
    }
    if let Some(m) = factor.strip_prefix('L') {
        let m: usize = m.parse().map_err(|_| format!("bad Legendre degree `{m}`"))?;
        let p = jacobi_power_coeffs(JacobiParam::LEGENDRE, m, Side::Left).map_err(|e| e.to_string())?;
        return Ok(p
            .coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, a)| *a != 0.0)
            .map(|(k, a)| term(c * a, Side::Left, k as f64))
            .collect());
    }
    let (base, exponent) = match factor.split_once('^') {
        Some((b, e)) => (b, number(e.trim_start_matches('(').trim_end_matches(')'))?),
        None => (factor, 1.0),
    };
    let side = match base {
        "(1+x)" | "(x+1)" => Side::Left,
        "(1-x)" => Side::Right,
        _ => return Err(format!("expected (1+x) or (1-x), got `{base}`")),
    };
    Ok(vec![term(c, side, exponent)])
}

fn term(coef: f64, side: Side, exponent: f64) -> PowerTerm {
    PowerTerm { coef, side, exponent }
}
