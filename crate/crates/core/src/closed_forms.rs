//! Closed-form values of the improper integrals on `[0, ∞)`.
//!
//! All of them come from `∫₀^∞ y^{n−1} e^{−ky} dy = Γ(n) / kⁿ` with the rate
//! `k = p ± iq` taken complex. Writing `p + iq = f e^{iθ}` gives
//!
//! ```text
//! ∫₀^∞ x^{n−1} e^{−px} cos(qx) dx = Γ(n) cos(nθ) / fⁿ
//! ∫₀^∞ x^{n−1} e^{−px} sin(qx) dx = Γ(n) sin(nθ) / fⁿ
//! ```
//!
//! and the `n → 0` limit of the sine form, `∫₀^∞ e^{−px} sin(qx) / x dx = θ`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, Error, Result};
use crate::gamma::{gamma, log_gamma, GAMMA_MAX_ARG};
use crate::polar::{half_angle, to_polar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Oscillator {
    Cosine,
    Sine,
}

impl Oscillator {
    pub fn eval(self, arg: f64) -> f64 {
        match self {
            Oscillator::Cosine => arg.cos(),
            Oscillator::Sine => arg.sin(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Oscillator::Cosine => "cos",
            Oscillator::Sine => "sin",
        }
    }
}

impl fmt::Display for Oscillator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Oscillator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cos" | "cosine" => Ok(Oscillator::Cosine),
            "sin" | "sine" => Ok(Oscillator::Sine),
            other => Err(Error::InvalidArgument(format!("unknown oscillator `{other}`"))),
        }
    }
}

/// One integral `∫₀^∞ x^{n−1} e^{−px} osc(qx) dx`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralSpec {
    pub n: f64,
    pub p: f64,
    pub q: f64,
    pub oscillator: Oscillator,
}

impl IntegralSpec {
    pub fn new(n: f64, p: f64, q: f64, oscillator: Oscillator) -> Self {
        IntegralSpec { n, p, q, oscillator }
    }

    pub fn cosine(n: f64, p: f64, q: f64) -> Self {
        Self::new(n, p, q, Oscillator::Cosine)
    }

    pub fn sine(n: f64, p: f64, q: f64) -> Self {
        Self::new(n, p, q, Oscillator::Sine)
    }

    /// Checks that the integral converges.
    ///
    /// Requires `n > 0`, `p ≥ 0`, `q ≥ 0`; with `p = 0` the integral only
    /// converges for `0 < n < 1` and `q > 0`.
    pub fn validate(&self) -> Result<()> {
        require_finite("n", self.n)?;
        require_finite("p", self.p)?;
        require_finite("q", self.q)?;
        if self.n == 0.0 && self.oscillator == Oscillator::Cosine {
            return Err(Error::LogarithmicallyDivergent);
        }
        if self.n <= 0.0 {
            return Err(Error::NonPositiveOrder { n: self.n });
        }
        if self.p < 0.0 {
            return Err(Error::NegativeDecay { p: self.p });
        }
        if self.q < 0.0 {
            return Err(Error::InvalidFrequency {
                q: self.q,
                expected: "nonnegative",
            });
        }
        if self.p == 0.0 {
            if self.n >= 1.0 {
                return Err(Error::Divergent(format!(
                    "with p = 0 the integral needs 0 < n < 1, got n = {}",
                    self.n
                )));
            }
            if self.q == 0.0 {
                return Err(Error::Divergent(
                    "with p = q = 0 the integrand x^(n-1) is not integrable at infinity".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Parameters of `∫₀^∞ x^{m−1} / (1 + x^{n_exp}) dx`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaSpec {
    pub m: f64,
    pub n_exp: f64,
}

impl BetaSpec {
    pub fn new(m: f64, n_exp: f64) -> Self {
        BetaSpec { m, n_exp }
    }

    pub fn validate(&self) -> Result<()> {
        require_finite("m", self.m)?;
        require_finite("nexp", self.n_exp)?;
        if !(self.m > 0.0 && self.m < self.n_exp) {
            return Err(Error::Divergent(format!(
                "the integral needs 0 < m < nexp, got m = {}, nexp = {}",
                self.m, self.n_exp
            )));
        }
        Ok(())
    }
}

/// `Γ(n) · trig(nθ) / fⁿ`, in log space when the direct quotient would leave range.
fn weighted_trig(spec: &IntegralSpec) -> Result<f64> {
    spec.validate()?;
    // sin(0) = 0 exactly, and the integrand is identically zero.
    if spec.q == 0.0 && spec.oscillator == Oscillator::Sine {
        return Ok(0.0);
    }
    let polar = to_polar(spec.p, spec.q)?;
    let trig = spec.oscillator.eval(spec.n * polar.theta);
    let magnitude = if spec.n <= GAMMA_MAX_ARG {
        let direct = gamma(spec.n)? / polar.f.powf(spec.n);
        if direct.is_finite() && direct > 0.0 {
            Some(direct)
        } else {
            None
        }
    } else {
        None
    };
    let magnitude = match magnitude {
        Some(m) => m,
        None => (log_gamma(spec.n)? - spec.n * polar.f.ln()).exp(),
    };
    Ok(magnitude * trig)
}

/// `∫₀^∞ x^{n−1} e^{−px} cos(qx) dx = Γ(n) cos(nθ) / fⁿ`.
pub fn theorem1_cos(spec: &IntegralSpec) -> Result<f64> {
    if spec.oscillator != Oscillator::Cosine {
        return Err(Error::OscillatorMismatch {
            operation: "theorem1_cos",
            expected: "cosine",
        });
    }
    weighted_trig(spec)
}

/// `∫₀^∞ x^{n−1} e^{−px} sin(qx) dx = Γ(n) sin(nθ) / fⁿ`.
pub fn theorem2_sin(spec: &IntegralSpec) -> Result<f64> {
    if spec.oscillator != Oscillator::Sine {
        return Err(Error::OscillatorMismatch {
            operation: "theorem2_sin",
            expected: "sine",
        });
    }
    weighted_trig(spec)
}

/// Dispatches on the oscillator of `spec`.
pub fn closed_form(spec: &IntegralSpec) -> Result<f64> {
    match spec.oscillator {
        Oscillator::Cosine => theorem1_cos(spec),
        Oscillator::Sine => theorem2_sin(spec),
    }
}

/// `∫₀^∞ e^{−px} sin(qx) / x dx = arctan(q / p)`.
pub fn theorem3_log_sine(p: f64, q: f64) -> Result<f64> {
    require_finite("p", p)?;
    require_finite("q", q)?;
    if q <= 0.0 {
        return Err(Error::InvalidFrequency {
            q,
            expected: "positive",
        });
    }
    Ok(to_polar(p, q)?.theta)
}

/// Values of `∫₀^∞ x^{−1/2} e^{−px} sin(qx) dx` and `∫₀^∞ x^{−1/2} e^{−px} cos(qx) dx`,
/// returned as `(sine, cosine)`:
///
/// ```text
/// (√π / f) · √((f − p) / 2),   (√π / f) · √((f + p) / 2)
/// ```
pub fn fresnel_general(p: f64, q: f64) -> Result<(f64, f64)> {
    let polar = to_polar(p, q)?;
    if p == 0.0 && q == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let (sin_half, cos_half) = half_angle(&polar, p)?;
    // √((f ∓ p)/2) / f = sin(θ/2) / √f, cos(θ/2) / √f
    let scale = PI.sqrt() / polar.f.sqrt();
    Ok((scale * sin_half, scale * cos_half))
}

/// `∫₀^∞ x^{m−1} / (1 + x^{n_exp}) dx = π / (n_exp sin(mπ / n_exp))`.
pub fn beta_reciprocal(spec: &BetaSpec) -> Result<f64> {
    spec.validate()?;
    Ok(PI / (spec.n_exp * (spec.m * PI / spec.n_exp).sin()))
}
