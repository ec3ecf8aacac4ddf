use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {0} is outside the domain of {1}")]
    Domain(f64, &'static str),

    #[error("gamma function pole at {0}")]
    Pole(f64),

    #[error("degree {degree} exceeds the supported limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },

    #[error("invalid Jacobi parameters alpha={alpha}, beta={beta}: {reason}")]
    JacobiParams {
        alpha: f64,
        beta: f64,
        reason: &'static str,
    },

    #[error("polynomial anchor does not match the derivative side")]
    AnchorMismatch,

    #[error("no closed form for {0}")]
    Unsupported(String),

    #[error("singular evaluation at x={0}")]
    Singular(f64),

    #[error("evaluation point {x} is within {dist:e} of the anchor")]
    TooCloseToAnchor { x: f64, dist: f64 },

    #[error("linear system is singular or ill-conditioned (condition estimate {0:e})")]
    IllConditioned(f64),

    #[error("eigenvalue iteration failed to converge")]
    NoConvergence,

    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
