//! The Gamma function on the positive real axis.
//!
//! `gamma(n)` is the product `1 · 2 · 3 ⋯ (n − 1)` extended to real `n > 0`,
//! i.e. the value of `∫₀^∞ x^{n−1} e^{−x} dx`. Integer arguments are computed
//! as exact factorial products; other arguments use a Lanczos approximation
//! (g = 7, nine coefficients) with reflection below one half.

// Coefficients are kept at their published precision.
#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest argument accepted by [`gamma`]; beyond it the value leaves double range.
pub const GAMMA_MAX_ARG: f64 = 170.0;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Validated argument of the Gamma function.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GammaArgument(f64);

impl GammaArgument {
    pub fn new(n: f64) -> Result<Self> {
        if n.is_nan() || n <= 0.0 {
            return Err(Error::NonPositiveOrder { n });
        }
        if n.is_infinite() {
            return Err(Error::GammaOverflow { n });
        }
        Ok(GammaArgument(n))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Lanczos series `A_g(z)` evaluated at `z = x + 1`, together with `t = x + g + 1/2`.
fn lanczos_sum(x: f64) -> (f64, f64) {
    let mut sum = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (x + i as f64);
    }
    (sum, x + LANCZOS_G + 0.5)
}

/// Lanczos evaluation for `z ≥ 1/2`.
fn lanczos_gamma(z: f64) -> f64 {
    let x = z - 1.0;
    let (sum, t) = lanczos_sum(x);
    // t^(x+1/2) overflows before the product does, so split the power.
    let half_pow = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * sum * half_pow * (half_pow * (-t).exp())
}

fn lanczos_log_gamma(z: f64) -> f64 {
    let x = z - 1.0;
    let (sum, t) = lanczos_sum(x);
    0.5 * (2.0 * PI).ln() + sum.ln() + (x + 0.5) * t.ln() - t
}

fn factorial_product(n: u32) -> f64 {
    (2..n).fold(1.0, |acc, k| acc * k as f64)
}

fn gamma_unchecked(n: f64) -> f64 {
    if n.fract() == 0.0 {
        return factorial_product(n as u32);
    }
    if n < 0.5 {
        PI / ((PI * n).sin() * lanczos_gamma(1.0 - n))
    } else {
        lanczos_gamma(n)
    }
}

/// `Γ(n)` for `0 < n ≤ 170`.
pub fn gamma(n: f64) -> Result<f64> {
    let arg = GammaArgument::new(n)?;
    if arg.get() > GAMMA_MAX_ARG {
        return Err(Error::GammaOverflow { n });
    }
    Ok(gamma_unchecked(arg.get()))
}

/// `ln Γ(n)` for any finite `n > 0`.
pub fn log_gamma(n: f64) -> Result<f64> {
    let n = GammaArgument::new(n)?.get();
    if n > GAMMA_MAX_ARG {
        return Ok(lanczos_log_gamma(n));
    }
    let value = gamma_unchecked(n);
    if value.is_finite() {
        Ok(value.ln())
    } else {
        // Only reachable for subnormal n, where Γ(n) ≈ 1/n.
        Ok(gamma_unchecked(1.0 + n).ln() - n.ln())
    }
}
