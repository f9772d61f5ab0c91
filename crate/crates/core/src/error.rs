use thiserror::Error;

use crate::quadrature::QuadratureResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The order `n` is zero or negative; the integral picks up an infinite constant at `x = 0`.
    #[error("divergent: order n = {n} must be positive")]
    NonPositiveOrder { n: f64 },

    #[error("overflow: gamma({n}) exceeds double precision range, use log_gamma")]
    GammaOverflow { n: f64 },

    #[error("domain error: decay rate p = {p} is negative; exp(-p x) does not vanish at infinity")]
    NegativeDecay { p: f64 },

    #[error("domain error: oscillation rate q = {q} must be {expected}")]
    InvalidFrequency { q: f64, expected: &'static str },

    #[error("degenerate input: p and q are both zero")]
    DegenerateInput,

    #[error("domain error: p = {p} exceeds the modulus f = {f}")]
    InconsistentHalfAngle { p: f64, f: f64 },

    #[error("divergent: {0}")]
    Divergent(String),

    #[error("logarithmically divergent: the cosine integral with n = 0 is infinitely large")]
    LogarithmicallyDivergent,

    #[error("oscillator mismatch: {operation} expects the {expected} oscillator")]
    OscillatorMismatch {
        operation: &'static str,
        expected: &'static str,
    },

    #[error("domain error: {0}")]
    InvalidArgument(String),

    #[error("evaluation budget exceeded: best estimate {} (error estimate {:e}, {} evaluations)", best.value, best.abs_error_estimate, best.function_evals)]
    BudgetExceeded { best: QuadratureResult },

    #[error("oracle inconsistency: half-period series is not alternating at segment {segment}")]
    NonAlternatingTail { segment: usize },

    #[error("insufficient data: series acceleration needs at least 3 terms, got {len}")]
    InsufficientTerms { len: usize },
}

impl Error {
    /// True for errors caused by arguments outside the convergence domain of an integral.
    pub fn is_domain(&self) -> bool {
        !matches!(
            self,
            Error::BudgetExceeded { .. }
                | Error::NonAlternatingTail { .. }
                | Error::InsufficientTerms { .. }
        )
    }
}

pub(crate) fn require_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} = {value} is not finite")))
    }
}
