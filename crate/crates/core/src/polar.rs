//! Modulus–angle form of the decay/oscillation pair `(p, q)`.
//!
//! With `p = f cos θ` and `q = f sin θ`, the complex rate `p + iq` raised to
//! the power `n` becomes `fⁿ (cos nθ + i sin nθ)`, which is what turns the
//! Laplace transform of `x^{n−1}` into the cosine and sine integrals.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarDecomposition {
    /// `√(p² + q²)`.
    pub f: f64,
    /// `arctan(q / p)` in `[0, π/2]`.
    pub theta: f64,
}

impl PolarDecomposition {
    /// Reconstructs `(p, q)`.
    pub fn to_cartesian(&self) -> (f64, f64) {
        (self.f * self.theta.cos(), self.f * self.theta.sin())
    }
}

pub fn to_polar(p: f64, q: f64) -> Result<PolarDecomposition> {
    require_finite("p", p)?;
    require_finite("q", q)?;
    if p < 0.0 {
        return Err(Error::NegativeDecay { p });
    }
    if q < 0.0 {
        return Err(Error::InvalidFrequency {
            q,
            expected: "nonnegative",
        });
    }
    if p == 0.0 && q == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let theta = if p == 0.0 { FRAC_PI_2 } else { q.atan2(p) };
    Ok(PolarDecomposition {
        f: p.hypot(q),
        theta,
    })
}

/// `(sin θ/2, cos θ/2)` from `√((f − p)/2f)` and `√((f + p)/2f)`.
///
/// `f − p` is formed as `q² / (f + p)` so that small angles keep full
/// relative precision.
pub fn half_angle(d: &PolarDecomposition, p: f64) -> Result<(f64, f64)> {
    require_finite("p", p)?;
    if p < 0.0 {
        return Err(Error::NegativeDecay { p });
    }
    let f = d.f;
    if f.is_nan() || f <= 0.0 || p > f * (1.0 + 4.0 * f64::EPSILON) {
        return Err(Error::InconsistentHalfAngle { p, f });
    }
    let p = p.min(f);
    let q = f * d.theta.sin();
    let f_minus_p = q * (q / (f + p));
    let sin_half = (f_minus_p / (2.0 * f)).sqrt().min(1.0);
    let cos_half = ((f + p) / (2.0 * f)).sqrt().min(1.0);
    Ok((sin_half, cos_half))
}
