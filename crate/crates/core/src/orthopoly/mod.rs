//! Jacobi, Legendre and Chebyshev polynomials.
//!
//! Evaluation uses the classical three-term recurrences. The submodules add
//! shifted-power expansions, Gauss-Jacobi rules and the collocation node
//! families used for interpolation.

mod family;
mod power;
mod quad;

pub use family::{node_family_points, NodeFamily};
pub use power::{jacobi_power_coeffs, PowerBasisPoly, Side, MAX_POWER_DEGREE};
pub use quad::{gauss_jacobi_rule, gauss_legendre, interpolatory_weights, jacobi_roots, legendre_expand, QuadRule};

use crate::error::{Error, Result};

/// Parameters `(α, β)` of `P_n^{(α,β)}`.
///
/// Any real pair is accepted for evaluation; quadrature additionally needs
/// `α, β > -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParam {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParam {
    pub const LEGENDRE: JacobiParam = JacobiParam { alpha: 0.0, beta: 0.0 };

    pub fn new(alpha: f64, beta: f64) -> Self {
        Self { alpha, beta }
    }

    /// Parameters after `x -> -x`.
    pub fn swapped(self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    pub fn check_quadrature(self) -> Result<Self> {
        if self.alpha > -1.0 && self.beta > -1.0 {
            Ok(self)
        } else {
            Err(Error::JacobiParams {
                alpha: self.alpha,
                beta: self.beta,
                reason: "quadrature needs alpha > -1 and beta > -1",
            })
        }
    }

    /// Coefficients `(a, b, c)` of `P_n = (a x + b) P_{n-1} - c P_{n-2}`, valid
    /// for `n >= 2`. `None` when the recurrence degenerates.
    pub(crate) fn recurrence(self, n: usize) -> Option<(f64, f64, f64)> {
        let (a, b) = (self.alpha, self.beta);
        let n = n as f64;
        let s = 2.0 * n + a + b;
        let den = 2.0 * n * (n + a + b) * (s - 2.0);
        if den == 0.0 {
            return None;
        }
        let lin = (s - 1.0) * s * (s - 2.0) / den;
        let cst = (s - 1.0) * (a * a - b * b) / den;
        let prev = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s / den;
        Some((lin, cst, prev))
    }

    /// `P_1(x) = lin * x + cst`.
    pub(crate) fn first(self) -> (f64, f64) {
        (0.5 * (self.alpha + self.beta + 2.0), 0.5 * (self.alpha - self.beta))
    }

    fn is_degenerate(self, n: usize) -> bool {
        (2..=n).any(|k| self.recurrence(k).is_none())
    }
}

/// `P_n^{(α,β)}(x)`.
pub fn jacobi_eval(p: JacobiParam, n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    if p.is_degenerate(n) {
        return jacobi_eval_explicit(p, n, x);
    }
    let (l, c) = p.first();
    let mut prev = 1.0;
    let mut cur = l * x + c;
    for k in 2..=n {
        let (a, b, cc) = p.recurrence(k).expect("checked above");
        let next = (a * x + b) * cur - cc * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// All values `P_0(x), ..., P_n(x)`.
pub fn jacobi_eval_all(p: JacobiParam, n: usize, x: f64) -> Vec<f64> {
    if p.is_degenerate(n) {
        return (0..=n).map(|k| jacobi_eval_explicit(p, k, x)).collect();
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    let (l, c) = p.first();
    out.push(l * x + c);
    for k in 2..=n {
        let (a, b, cc) = p.recurrence(k).expect("checked above");
        let v = (a * x + b) * out[k - 1] - cc * out[k - 2];
        out.push(v);
    }
    out
}

/// `d/dx P_n^{(α,β)}(x) = (n+α+β+1)/2 · P_{n-1}^{(α+1,β+1)}(x)`.
pub fn jacobi_derivative(p: JacobiParam, n: usize, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let shifted = JacobiParam::new(p.alpha + 1.0, p.beta + 1.0);
    0.5 * (n as f64 + p.alpha + p.beta + 1.0) * jacobi_eval(shifted, n - 1, x)
}

/// Generalized binomial `C(z, j)` as a falling-factorial product, finite for
/// every real `z`.
pub(crate) fn binomial(z: f64, j: usize) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * (z - i as f64) / (i as f64 + 1.0))
}

/// Explicit sum `Σ C(n+α, n-k) C(n+β, k) ((x-1)/2)^k ((x+1)/2)^{n-k}`, used
/// where the recurrence divides by zero.
fn jacobi_eval_explicit(p: JacobiParam, n: usize, x: f64) -> f64 {
    let nf = n as f64;
    let (xm, xp) = (0.5 * (x - 1.0), 0.5 * (x + 1.0));
    (0..=n)
        .map(|k| binomial(nf + p.alpha, n - k) * binomial(nf + p.beta, k) * xm.powi(k as i32) * xp.powi((n - k) as i32))
        .sum()
}

/// Sum `Σ c_n P_n^{(α,β)}(x)`.
pub fn jacobi_series_eval(p: JacobiParam, coeffs: &[f64], x: f64) -> f64 {
    if coeffs.is_empty() {
        return 0.0;
    }
    jacobi_eval_all(p, coeffs.len() - 1, x)
        .iter()
        .zip(coeffs)
        .map(|(v, c)| v * c)
        .sum()
}

/// Legendre polynomial `L_n(x)`.
pub fn legendre_eval(n: usize, x: f64) -> f64 {
    jacobi_eval(JacobiParam::LEGENDRE, n, x)
}

/// `L_n'(x)`.
pub fn legendre_derivative(n: usize, x: f64) -> f64 {
    jacobi_derivative(JacobiParam::LEGENDRE, n, x)
}

/// Chebyshev polynomial of the first kind, `T_n(1) = 1`.
pub fn chebyshev_eval(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut prev, mut cur) = (1.0, x);
            for _ in 2..=n {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `T_n'(x) = n U_{n-1}(x)`.
pub fn chebyshev_derivative(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    // U_{n-1} by its own recurrence
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if n == 1 {
        return 1.0;
    }
    for _ in 2..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    n as f64 * cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Hypergeometric form `(α+1)_n/n! · 2F1(-n, n+α+β+1; α+1; (1-x)/2)`.
    /// Evaluated on whichever side of zero keeps the series short of
    /// cancellation, using `P_n^{(α,β)}(-x) = (-1)^n P_n^{(β,α)}(x)`.
    fn jacobi_hypergeometric(a: f64, b: f64, n: usize, x: f64) -> f64 {
        if x < 0.0 {
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            return sign * jacobi_hypergeometric(b, a, n, -x);
        }
        let z = 0.5 * (1.0 - x);
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 0..n {
            let kf = k as f64;
            term *= (kf - n as f64) * (n as f64 + a + b + 1.0 + kf) / ((a + 1.0 + kf) * (kf + 1.0)) * z;
            sum += term;
        }
        let pre: f64 = (0..n).map(|k| (a + 1.0 + k as f64) / (k as f64 + 1.0)).product();
        pre * sum
    }

    #[test]
    fn trivial_values() {
        assert_eq!(jacobi_eval(JacobiParam::LEGENDRE, 2, 1.0), 1.0);
        assert_eq!(jacobi_eval(JacobiParam::new(0.3, 2.0), 0, -0.4), 1.0);
        let p = JacobiParam::new(0.5, -0.5);
        assert_relative_eq!(jacobi_eval(p, 1, 0.3), 0.3 + 0.5, max_relative = 1e-15);
    }

    #[test]
    fn matches_hypergeometric_series() {
        assert_relative_eq!(
            jacobi_eval(JacobiParam::new(0.5, -0.5), 3, 0.3),
            jacobi_hypergeometric(0.5, -0.5, 3, 0.3),
            max_relative = 1e-14
        );
        // 50-digit reference
        assert_relative_eq!(
            jacobi_eval(JacobiParam::new(0.5, -0.5), 3, 0.3),
            -0.5075,
            max_relative = 1e-14
        );
        // 40-digit references
        let table: [(f64, f64, usize, f64, f64); 36] = [
            (0.2, 0.7, 3, -0.9, -1.7362779375000001006),
            (0.2, 0.7, 3, -0.2, 0.53011599999999999489),
            (0.2, 0.7, 3, 0.35, -0.4531000078124999834),
            (0.2, 0.7, 3, 0.8, 0.11251350000000021819),
            (0.2, 0.7, 7, -0.9, 0.19886506476735964477),
            (0.2, 0.7, 7, -0.2, 0.37732554470318398825),
            (0.2, 0.7, 7, 0.35, -0.23302589789783458334),
            (0.2, 0.7, 7, 0.8, -0.3106811341114843676),
            (0.2, 0.7, 11, -0.9, 0.92532527984955861802),
            (0.2, 0.7, 11, -0.2, 0.11605058775001725424),
            (0.2, 0.7, 11, 0.35, 0.20713097716539718577),
            (0.2, 0.7, 11, 0.8, 0.3702395525623767769),
            (-0.45, 1.45, 3, -0.9, -4.5123750000000001583),
            (-0.45, 1.45, 3, -0.2, 0.64356249999999998633),
            (-0.45, 1.45, 3, 0.35, -0.010421874999999961494),
            (-0.45, 1.45, 3, 0.8, -0.27831249999999992474),
            (-0.45, 1.45, 7, -0.9, -2.808825933417970154),
            (-0.45, 1.45, 7, -0.2, 0.056921767626953092157),
            (-0.45, 1.45, 7, 0.35, -0.31028293418090819487),
            (-0.45, 1.45, 7, 0.8, 0.079948064599609236576),
            (-0.45, 1.45, 11, -0.9, 2.5605195893254472122),
            (-0.45, 1.45, 11, -0.2, -0.27330940324432249879),
            (-0.45, 1.45, 11, 0.35, -0.078273193406163446875),
            (-0.45, 1.45, 11, 0.8, 0.04411356405920445676),
            (1.5, -0.3, 3, -0.9, -0.04277400000000009481),
            (1.5, -0.3, 3, -0.2, -0.24970799999999997168),
            (1.5, -0.3, 3, 0.35, -0.41229900000000007286),
            (1.5, -0.3, 3, 0.8, 3.1542120000000006068),
            (1.5, -0.3, 7, -0.9, 0.28545843418286402723),
            (1.5, -0.3, 7, -0.2, 0.10090471956340803599),
            (1.5, -0.3, 7, 0.35, 0.57740973141202642033),
            (1.5, -0.3, 7, 0.8, -1.3271531841882713624),
            (1.5, -0.3, 11, -0.9, -0.092907537041233926055),
            (1.5, -0.3, 11, -0.2, 0.26370108821167726449),
            (1.5, -0.3, 11, 0.35, 0.30136439382521204962),
            (1.5, -0.3, 11, 0.8, 0.095608263569472880384),
        ];
        for (a, b, n, x, want) in table {
            assert_relative_eq!(
                jacobi_eval(JacobiParam::new(a, b), n, x),
                want,
                max_relative = 1e-13,
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn degenerate_parameters_use_explicit_sum() {
        // classical P_2^{(-1,-1)}(x) = (x^2 - 1)/4
        let p = JacobiParam::new(-1.0, -1.0);
        for &x in &[-0.7, 0.0, 0.4] {
            assert_relative_eq!(jacobi_eval(p, 2, x), 0.25 * (x * x - 1.0), epsilon = 1e-15);
        }
    }

    #[test]
    fn reflection_symmetry() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let p = JacobiParam::new(0.3, -0.6);
        for _ in 0..100 {
            let x: f64 = rng.gen_range(-1.0..1.0);
            let n = rng.gen_range(0..15);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((jacobi_eval(p, n, -x) - sign * jacobi_eval(p.swapped(), n, x)).abs() < 1e-12);
        }
    }

    #[test]
    fn derivative_against_finite_difference() {
        let p = JacobiParam::new(0.4, -0.2);
        let h = 1e-6;
        for n in 1..8 {
            let x = 0.37;
            let fd = (jacobi_eval(p, n, x + h) - jacobi_eval(p, n, x - h)) / (2.0 * h);
            assert_relative_eq!(jacobi_derivative(p, n, x), fd, max_relative = 1e-7);
        }
    }

    #[test]
    fn chebyshev_matches_cosine() {
        for n in 0..10 {
            let t: f64 = 0.7;
            assert_relative_eq!(chebyshev_eval(n, t.cos()), (n as f64 * t).cos(), epsilon = 1e-14);
            let du = n as f64 * (n as f64 * t).sin() / t.sin();
            assert_relative_eq!(chebyshev_derivative(n, t.cos()), du, epsilon = 1e-12);
        }
    }
}
