//! Fractional derivatives of orthogonal-polynomial interpolants and their
//! superconvergence points, plus a generalized-Jacobi-function Petrov-Galerkin
//! solver for fractional initial-value problems.
//!
//! The crate is organized bottom-up:
//!
//! - [`specialfn`]: `ln Γ`, `Γ`, and the ratios that appear in every
//!   fractional-derivative coefficient.
//! - [`orthopoly`]: Jacobi/Legendre/Chebyshev evaluation, shifted-power
//!   expansions, Gauss-Jacobi quadrature and collocation node families.
//! - [`fracderiv`]: exact Riemann-Liouville and Caputo derivatives of
//!   polynomials and generalized Jacobi functions, with an independent
//!   quadrature oracle.
//! - [`superpoints`]: superconvergence point sets.
//! - [`interp`]: collocation interpolation and fractional error curves.
//! - [`pgsolver`]: the Petrov-Galerkin solver and its error curves.
//! - [`builtins`]: the benchmark functions and a parser for sums of
//!   shifted powers.
//! - [`validate`]: self-check suites.
//! - [`cli`]: the `fracsuper` command-line front end.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

// `!(x > 0.0)` is used on purpose so that NaN lands in the error branch;
// reference values are frozen with more digits than f64 holds.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod builtins;
pub mod cli;
pub mod error;
pub mod fracderiv;
pub mod interp;
pub mod orthopoly;
pub mod pgsolver;
pub mod specialfn;
pub mod superpoints;
pub mod validate;

pub use error::{Error, Result};
pub use fracderiv::{FracKind, FracSpec};
pub use orthopoly::{JacobiParam, NodeFamily, Side};
