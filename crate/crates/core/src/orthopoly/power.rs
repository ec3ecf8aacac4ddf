//! Polynomials in shifted powers `t = 1 + x` or `t = 1 - x`.
//!
//! The change of basis from Jacobi to shifted powers is badly conditioned
//! (coefficients grow like `(3 + 2√2)^n`), so coefficients are held in
//! double-double arithmetic and evaluation runs Horner's rule in the same
//! precision.

use std::fmt;
use std::str::FromStr;

use twofloat::TwoFloat;

use super::{binomial, JacobiParam};
use crate::error::{Error, Result};

/// Highest degree for which shifted-power expansions are built.
pub const MAX_POWER_DEGREE: usize = 25;

/// Endpoint of `[-1, 1]` a quantity is anchored at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Anchored at `x = -1`, variable `t = 1 + x`.
    Left,
    /// Anchored at `x = +1`, variable `t = 1 - x`.
    Right,
}

impl Side {
    pub fn anchor(self) -> f64 {
        match self {
            Side::Left => -1.0,
            Side::Right => 1.0,
        }
    }

    /// Distance from the anchor, i.e. the shifted variable `t`.
    pub fn distance(self, x: f64) -> f64 {
        match self {
            Side::Left => 1.0 + x,
            Side::Right => 1.0 - x,
        }
    }

    pub fn flipped(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            other => Err(Error::Config(format!("unknown side '{other}'"))),
        }
    }
}

fn dd(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

/// `Σ c_k t^k` with `t` the distance from `anchor`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerBasisPoly {
    anchor: Side,
    coeffs: Vec<TwoFloat>,
}

impl PowerBasisPoly {
    pub fn new(anchor: Side, coeffs: &[f64]) -> Self {
        Self::from_dd(anchor, coeffs.iter().map(|&c| dd(c)).collect())
    }

    pub(crate) fn from_dd(anchor: Side, coeffs: Vec<TwoFloat>) -> Self {
        let mut p = Self { anchor, coeffs };
        p.trim();
        p
    }

    pub fn zero(anchor: Side) -> Self {
        Self {
            anchor,
            coeffs: Vec::new(),
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.hi() == 0.0) {
            self.coeffs.pop();
        }
    }

    pub fn anchor(&self) -> Side {
        self.anchor
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients rounded to `f64`.
    pub fn coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.hi()).collect()
    }

    pub(crate) fn coeffs_dd(&self) -> &[TwoFloat] {
        &self.coeffs
    }

    /// Evaluate at `x`.
    pub fn eval(&self, x: f64) -> f64 {
        self.eval_t(Self::shifted(self.anchor, x)).hi()
    }

    /// Evaluate in the shifted variable directly.
    pub(crate) fn eval_t(&self, t: TwoFloat) -> TwoFloat {
        self.coeffs.iter().rev().fold(dd(0.0), |acc, &c| acc * t + c)
    }

    /// Distance from the anchor computed in double-double, so that points
    /// near the far endpoint keep their full precision.
    pub(crate) fn shifted(anchor: Side, x: f64) -> TwoFloat {
        match anchor {
            Side::Left => TwoFloat::new_add(1.0, x),
            Side::Right => TwoFloat::new_sub(1.0, x),
        }
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::from_dd(self.anchor, self.coeffs.iter().map(|&c| c * k).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &PowerBasisPoly, k: f64) -> Result<Self> {
        if self.anchor != other.anchor {
            return Err(Error::AnchorMismatch);
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or_default();
                let b = other.coeffs.get(i).copied().unwrap_or_default();
                a + b * k
            })
            .collect();
        Ok(Self::from_dd(self.anchor, coeffs))
    }

    /// Symbolic `d/dt`.
    pub fn derivative_t(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Self::from_dd(self.anchor, coeffs)
    }

    /// The same polynomial written in the opposite shifted variable,
    /// `t' = 2 - t`.
    pub fn reanchored(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![dd(0.0); n];
        // t^k = (2 - t')^k = Σ_j C(k,j) 2^{k-j} (-t')^j
        for (k, &c) in self.coeffs.iter().enumerate() {
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                let w = binomial(k as f64, j) * 2f64.powi((k - j) as i32) * sign;
                *slot += c * w;
            }
        }
        Self::from_dd(self.anchor.flipped(), out)
    }

    /// Reflection `x -> -x`: `q(x) ↦ q(-x)`. The coefficients are unchanged;
    /// only the anchor flips.
    /// Same polynomial with its value at the anchor replaced by `c`.
    pub fn with_anchor_value(mut self, c: f64) -> Self {
        if self.coeffs.is_empty() {
            self.coeffs.push(dd(c));
        } else {
            self.coeffs[0] = dd(c);
        }
        self
    }

    pub fn reflected(&self) -> Self {
        Self {
            anchor: self.anchor.flipped(),
            coeffs: self.coeffs.clone(),
        }
    }
}

/// Multiply a coefficient vector by `(a t + b)`.
fn mul_linear(c: &[TwoFloat], a: f64, b: f64) -> Vec<TwoFloat> {
    let mut out = vec![dd(0.0); c.len() + 1];
    for (k, &ck) in c.iter().enumerate() {
        out[k] += ck * b;
        out[k + 1] += ck * a;
    }
    out
}

/// Expansion of `P_n^{(α,β)}` in powers of the distance from `anchor`,
/// obtained by running the three-term recurrence on coefficient vectors.
pub fn jacobi_power_coeffs(p: JacobiParam, n: usize, anchor: Side) -> Result<PowerBasisPoly> {
    if n > MAX_POWER_DEGREE {
        return Err(Error::DegreeLimit {
            degree: n,
            limit: MAX_POWER_DEGREE,
        });
    }
    // x = t - 1 on the left, x = 1 - t on the right
    let (xa, xb) = match anchor {
        Side::Left => (1.0, -1.0),
        Side::Right => (-1.0, 1.0),
    };
    if p.is_degenerate(n) {
        return Ok(explicit_power_coeffs(p, n, anchor, xa, xb));
    }
    let mut prev = vec![dd(1.0)];
    if n == 0 {
        return Ok(PowerBasisPoly::from_dd(anchor, prev));
    }
    let (l, c) = p.first();
    let mut cur = mul_linear(&prev, l * xa, l * xb + c);
    for k in 2..=n {
        let (a, b, cc) = p.recurrence(k).expect("not degenerate");
        let mut next = mul_linear(&cur, a * xa, a * xb + b);
        for (slot, &v) in next.iter_mut().zip(&prev) {
            *slot -= v * cc;
        }
        prev = cur;
        cur = next;
    }
    Ok(PowerBasisPoly::from_dd(anchor, cur))
}

fn explicit_power_coeffs(p: JacobiParam, n: usize, anchor: Side, xa: f64, xb: f64) -> PowerBasisPoly {
    let nf = n as f64;
    let mut total = vec![dd(0.0); n + 1];
    for k in 0..=n {
        let w = binomial(nf + p.alpha, n - k) * binomial(nf + p.beta, k);
        // ((x-1)/2)^k ((x+1)/2)^{n-k} with x = xa t + xb
        let mut term = vec![dd(w)];
        for _ in 0..k {
            term = mul_linear(&term, 0.5 * xa, 0.5 * (xb - 1.0));
        }
        for _ in 0..n - k {
            term = mul_linear(&term, 0.5 * xa, 0.5 * (xb + 1.0));
        }
        for (slot, v) in total.iter_mut().zip(term) {
            *slot += v;
        }
    }
    PowerBasisPoly::from_dd(anchor, total)
}

/// Chebyshev `T_n` in shifted powers.
pub(crate) fn chebyshev_power_coeffs(n: usize, anchor: Side) -> Result<PowerBasisPoly> {
    if n > MAX_POWER_DEGREE {
        return Err(Error::DegreeLimit {
            degree: n,
            limit: MAX_POWER_DEGREE,
        });
    }
    let (xa, xb) = match anchor {
        Side::Left => (1.0, -1.0),
        Side::Right => (-1.0, 1.0),
    };
    let mut prev = vec![dd(1.0)];
    if n == 0 {
        return Ok(PowerBasisPoly::from_dd(anchor, prev));
    }
    let mut cur = mul_linear(&prev, xa, xb);
    for _ in 2..=n {
        let mut next = mul_linear(&cur, 2.0 * xa, 2.0 * xb);
        for (slot, &v) in next.iter_mut().zip(&prev) {
            *slot -= v;
        }
        prev = cur;
        cur = next;
    }
    Ok(PowerBasisPoly::from_dd(anchor, cur))
}
