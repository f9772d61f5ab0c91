//! Numerical oracle for the integrals in [`crate::closed_forms`].
//!
//! Nothing here calls into the closed forms or the Gamma function: values are
//! produced purely by quadrature so they can be used to cross-check them.
//!
//! * `p > 0`: the integrand decays like `e^{−px}`; the range is truncated at a
//!   point where an analytic tail bound drops below half the tolerance.
//! * `p = 0`: `[0, ∞)` is cut at `kπ/q`, each half-period is integrated on its
//!   own, and the resulting alternating series is summed with
//!   [`euler_transform`].
//!
//! The `x^{n−1}` singularity at the origin for `n < 1` is removed with
//! `x = u^{1/n}`, under which `x^{n−1} dx = du / n`.

mod adaptive;
mod series;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{BetaSpec, IntegralSpec, Oscillator};
use crate::error::{require_finite, Error, Result};

pub use adaptive::{
    integrate as adaptive_integrate, integrate_partition, Tolerance, DEFAULT_EVAL_BUDGET,
};
pub use series::{euler_transform, SeriesTail};

/// Maximum number of half-period segments summed before acceleration.
pub const MAX_HALF_PERIODS: usize = 200;

/// Oracle output.
///
/// For the half-period integrators `segments` counts half-periods; everywhere
/// else it counts adaptive subintervals.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub function_evals: u64,
    pub segments: usize,
}

impl QuadratureResult {
    fn zero() -> Self {
        QuadratureResult::default()
    }

    fn scaled(self, factor: f64) -> Self {
        QuadratureResult {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            ..self
        }
    }

    fn combine(self, other: QuadratureResult) -> Self {
        QuadratureResult {
            value: self.value + other.value,
            abs_error_estimate: self.abs_error_estimate + other.abs_error_estimate,
            function_evals: self.function_evals + other.function_evals,
            segments: self.segments + other.segments,
        }
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "tolerance must be positive and finite, got {tol}"
        )))
    }
}

/// Adaptive Gauss–Kronrod integration of `integrand` over `[a, b]` to absolute
/// tolerance `tol`, within [`DEFAULT_EVAL_BUDGET`] evaluations.
pub fn adaptive_segment<F: Fn(f64) -> f64>(
    integrand: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    check_tol(tol)?;
    adaptive::integrate(&integrand, a, b, Tolerance::absolute(tol), DEFAULT_EVAL_BUDGET)
}

/// `∫₀^{a} x^{n−1} g(x) dx` for `0 < n < 1`, as `(1/n) ∫₀^{aⁿ} g(u^{1/n}) du`.
fn power_weight_head<G: Fn(f64) -> f64>(
    g: &G,
    n: f64,
    a: f64,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    let inv_n = 1.0 / n;
    let h = |u: f64| g(u.powf(inv_n));
    // tighten by n so that the 1/n rescaling lands on the requested tolerance
    let inner = adaptive::integrate(&h, 0.0, a.powf(n), tol.scaled(n), DEFAULT_EVAL_BUDGET)?;
    Ok(inner.scaled(inv_n))
}

/// Upper bound for `∫_X^∞ x^{n−1} e^{−px} dx`, valid once `pX > n − 1`.
fn gamma_tail_bound(n: f64, p: f64, x: f64) -> f64 {
    let envelope = x.powf(n - 1.0) * (-p * x).exp() / p;
    if n <= 1.0 {
        envelope
    } else {
        envelope / (1.0 - (n - 1.0) / (p * x))
    }
}

/// Breakpoints `0 < X₀ < X₀·1.05 < … < X` of a truncated range, where
/// `X₀ = max(2n, 20) / p` and `X` is the first rung that is at least
/// `ln(1/tol) / p` with `tail(X) ≤ tol / 2`. The rungs do not depend on `tol`,
/// so a tighter tolerance only appends intervals. Returns the rungs and the
/// tail bound at the last one.
fn truncation_ladder(n: f64, p: f64, tol: f64, tail: impl Fn(f64) -> f64) -> (Vec<f64>, f64) {
    let min_x = (1.0 / tol).ln() / p;
    let mut x = (2.0 * n).max(20.0) / p;
    let mut rungs = vec![x];
    let mut bound = tail(x);
    while x < min_x || bound > 0.5 * tol {
        x *= 1.05;
        rungs.push(x);
        bound = tail(x);
    }
    (rungs, bound)
}

/// Integrates `x^{n−1} e^{−px} osc(qx)` over `[0, ∞)` for `p > 0`.
pub fn integrate_decaying(spec: &IntegralSpec, tol: f64) -> Result<QuadratureResult> {
    check_tol(tol)?;
    spec.validate()?;
    if spec.p <= 0.0 {
        return Err(Error::InvalidArgument(
            "integrate_decaying needs p > 0; use integrate_oscillatory_alternating for p = 0".into(),
        ));
    }
    if spec.q == 0.0 && spec.oscillator == Oscillator::Sine {
        return Ok(QuadratureResult::zero());
    }
    let IntegralSpec { n, p, q, oscillator } = *spec;
    let (rungs, tail) = truncation_ladder(n, p, tol, |x| gamma_tail_bound(n, p, x));
    let g = |x: f64| (-p * x).exp() * oscillator.eval(q * x);
    let weighted = |x: f64| x.powf(n - 1.0) * g(x);
    let part_tol = Tolerance::mixed(0.25 * tol);

    let body = if n < 1.0 {
        // below the first rung since 1/p < 20/p
        let split = 1.0 / p.max(q);
        let head = power_weight_head(&g, n, split, part_tol)?;
        let breaks: Vec<f64> = std::iter::once(split).chain(rungs).collect();
        let rest = adaptive::integrate_partition(&weighted, &breaks, part_tol, DEFAULT_EVAL_BUDGET)?;
        head.combine(rest)
    } else {
        let breaks: Vec<f64> = std::iter::once(0.0).chain(rungs).collect();
        adaptive::integrate_partition(&weighted, &breaks, part_tol.scaled(2.0), DEFAULT_EVAL_BUDGET)?
    };
    Ok(QuadratureResult {
        abs_error_estimate: body.abs_error_estimate + tail,
        ..body
    })
}

/// Sums the half-period integrals produced by `segment(k)` and accelerates
/// the resulting alternating series.
fn half_period_series<S>(tol: f64, mut segment: S) -> Result<QuadratureResult>
where
    S: FnMut(usize, Tolerance) -> Result<QuadratureResult>,
{
    let seg_tol = Tolerance::mixed(tol / (4.0 * MAX_HALF_PERIODS as f64));
    let mut tail = SeriesTail::default();
    let mut quad_error = 0.0;
    let mut evals = 0;
    for k in 0..MAX_HALF_PERIODS {
        let r = segment(k, seg_tol)?;
        tail.push(r.value);
        quad_error += r.abs_error_estimate;
        evals += r.function_evals;
        if r.value.abs() < 0.1 * tol {
            break;
        }
    }
    if let Some(k) = tail.first_sign_violation(3) {
        return Err(Error::NonAlternatingTail { segment: k });
    }
    let (value, series_error) = if tail.len() >= 4 {
        series::euler_transform_with_estimate(&tail)?
    } else {
        (tail.partial_sum(), tail.terms.last().map_or(0.0, |t| t.abs()))
    };
    Ok(QuadratureResult {
        value,
        abs_error_estimate: quad_error + series_error,
        function_evals: evals,
        segments: tail.len(),
    })
}

/// Integrates `x^{n−1} osc(qx)` over `[0, ∞)` for `p = 0`, `0 < n < 1`, by
/// cutting at `kπ/q` and accelerating the alternating half-period series.
pub fn integrate_oscillatory_alternating(spec: &IntegralSpec, tol: f64) -> Result<QuadratureResult> {
    check_tol(tol)?;
    spec.validate()?;
    if spec.p != 0.0 {
        return Err(Error::InvalidArgument(
            "integrate_oscillatory_alternating needs p = 0; use integrate_decaying for p > 0".into(),
        ));
    }
    let IntegralSpec { n, q, oscillator, .. } = *spec;
    let half_period = PI / q;
    let g = |x: f64| oscillator.eval(q * x);
    let weighted = |x: f64| x.powf(n - 1.0) * g(x);
    half_period_series(tol, |k, seg_tol| {
        if k == 0 {
            power_weight_head(&g, n, half_period, seg_tol)
        } else {
            let a = k as f64 * half_period;
            adaptive::integrate(&weighted, a, a + half_period, seg_tol, DEFAULT_EVAL_BUDGET)
        }
    })
}

/// Oracle for any convergent [`IntegralSpec`], choosing by `p`.
pub fn integrate_spec(spec: &IntegralSpec, tol: f64) -> Result<QuadratureResult> {
    if spec.p == 0.0 {
        integrate_oscillatory_alternating(spec, tol)
    } else {
        integrate_decaying(spec, tol)
    }
}

/// Integrates `e^{−px} sin(qx) / x` over `[0, ∞)`.
pub fn integrate_log_sine(p: f64, q: f64, tol: f64) -> Result<QuadratureResult> {
    check_tol(tol)?;
    require_finite("p", p)?;
    require_finite("q", q)?;
    if p < 0.0 {
        return Err(Error::NegativeDecay { p });
    }
    if q <= 0.0 {
        return Err(Error::InvalidFrequency {
            q,
            expected: "positive",
        });
    }
    let integrand = |x: f64| {
        if x == 0.0 {
            q
        } else {
            (-p * x).exp() * (q * x).sin() / x
        }
    };
    if p > 0.0 {
        let (rungs, tail) = truncation_ladder(0.0, p, tol, |x| (-p * x).exp() / (p * x));
        let breaks: Vec<f64> = std::iter::once(0.0).chain(rungs).collect();
        let body = adaptive::integrate_partition(
            &integrand,
            &breaks,
            Tolerance::mixed(0.5 * tol),
            DEFAULT_EVAL_BUDGET,
        )?;
        Ok(QuadratureResult {
            abs_error_estimate: body.abs_error_estimate + tail,
            ..body
        })
    } else {
        let half_period = PI / q;
        half_period_series(tol, |k, seg_tol| {
            let a = k as f64 * half_period;
            adaptive::integrate(&integrand, a, a + half_period, seg_tol, DEFAULT_EVAL_BUDGET)
        })
    }
}

/// Integrates `x^{m−1} / (1 + x^{n_exp})` over `[0, ∞)`.
///
/// `[0, 1]` uses `x = u^{1/m}` and `[1, ∞)` uses `x = u^{−1/(n_exp − m)}`,
/// which map both halves to bounded integrands on `[0, 1]`.
pub fn integrate_beta_reciprocal(spec: &BetaSpec, tol: f64) -> Result<QuadratureResult> {
    check_tol(tol)?;
    spec.validate()?;
    let BetaSpec { m, n_exp } = *spec;
    let head_exp = n_exp / m;
    let tail_exp = n_exp / (n_exp - m);
    let part = Tolerance::mixed(0.5 * tol);
    let head = adaptive::integrate(
        &|u: f64| 1.0 / (1.0 + u.powf(head_exp)),
        0.0,
        1.0,
        part.scaled(m),
        DEFAULT_EVAL_BUDGET,
    )?
    .scaled(1.0 / m);
    let tail = adaptive::integrate(
        &|u: f64| 1.0 / (1.0 + u.powf(tail_exp)),
        0.0,
        1.0,
        part.scaled(n_exp - m),
        DEFAULT_EVAL_BUDGET,
    )?
    .scaled(1.0 / (n_exp - m));
    Ok(head.combine(tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn adaptive_segment_examples() {
        let r = adaptive_segment(|_| 1.0, 0.0, 1.0, 1e-10).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
        assert!(r.abs_error_estimate <= 1e-10);

        let r = adaptive_segment(f64::cos, 0.0, FRAC_PI_2, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() <= 1e-11);

        let r = adaptive_segment(|x| 1.0 / (1.0 + x * x), 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - FRAC_PI_4).abs() <= 1e-11);
        assert!(r.function_evals >= r.segments as u64);
    }

    #[test]
    fn decaying_examples() {
        let r = integrate_decaying(&IntegralSpec::cosine(1.0, 1.0, 0.0), 1e-10).unwrap();
        assert!((r.value - 1.0).abs() <= 1e-9);
        let r = integrate_decaying(&IntegralSpec::cosine(5.0, 1.0, 0.0), 1e-9).unwrap();
        assert!((r.value - 24.0).abs() <= 24e-8);
        let r = integrate_decaying(&IntegralSpec::cosine(0.5, 1.0, 0.0), 1e-9).unwrap();
        assert!((r.value - PI.sqrt()).abs() <= 1e-8);
    }

    #[test]
    fn decaying_rejects_p_zero_and_divergent_specs() {
        assert!(integrate_decaying(&IntegralSpec::cosine(0.5, 0.0, 1.0), 1e-9).is_err());
        assert!(integrate_decaying(&IntegralSpec::cosine(-1.0, 1.0, 1.0), 1e-9).is_err());
        assert!(integrate_decaying(&IntegralSpec::cosine(1.0, 1.0, 1.0), 0.0).is_err());
    }

    #[test]
    fn alternating_examples() {
        let root_half_pi = FRAC_PI_2.sqrt();
        for osc in [Oscillator::Cosine, Oscillator::Sine] {
            let r = integrate_oscillatory_alternating(&IntegralSpec::new(0.5, 0.0, 1.0, osc), 1e-8)
                .unwrap();
            assert!((r.value - root_half_pi).abs() <= 1e-8, "{osc}: {}", r.value);
            assert!(r.segments <= MAX_HALF_PERIODS);
        }
        // λ = 4 scaling of the sine value: √(π/2) / √4
        let r = integrate_oscillatory_alternating(&IntegralSpec::sine(0.5, 0.0, 4.0), 1e-8).unwrap();
        assert!((r.value - (PI / 8.0).sqrt()).abs() <= 1e-8);
    }

    #[test]
    fn alternating_rejects_positive_p() {
        assert!(integrate_oscillatory_alternating(&IntegralSpec::sine(0.5, 1.0, 1.0), 1e-8).is_err());
        assert!(integrate_oscillatory_alternating(&IntegralSpec::sine(1.5, 0.0, 1.0), 1e-8).is_err());
    }

    #[test]
    fn non_alternating_series_is_flagged() {
        // a series with same-sign terms from the fourth on
        let err = half_period_series(1e-8, |k, _| {
            Ok(QuadratureResult {
                value: if k < 3 { (-1f64).powi(k as i32) } else { 1.0 / k as f64 },
                abs_error_estimate: 0.0,
                function_evals: 15,
                segments: 1,
            })
        })
        .unwrap_err();
        assert!(matches!(err, Error::NonAlternatingTail { segment: 3 }));
    }

    #[test]
    fn log_sine_examples() {
        let r = integrate_log_sine(0.0, 1.0, 1e-6).unwrap();
        assert!((r.value - FRAC_PI_2).abs() <= 1e-6);
        let r = integrate_log_sine(1.0, 1.0, 1e-9).unwrap();
        assert!((r.value - FRAC_PI_4).abs() <= 1e-8);
        // arctan(1e-4 / 2), checked separately to 20 digits
        let r = integrate_log_sine(2.0, 1e-4, 1e-9).unwrap();
        assert!((r.value - 4.999_999_995_833_333_3e-5).abs() <= 1e-9);
        assert!(integrate_log_sine(1.0, 0.0, 1e-9).is_err());
        assert!(integrate_log_sine(-1.0, 1.0, 1e-9).is_err());
    }

    #[test]
    fn beta_oracle() {
        let r = integrate_beta_reciprocal(&BetaSpec::new(1.0, 2.0), 1e-10).unwrap();
        assert!((r.value - FRAC_PI_2).abs() <= 1e-9);
        let r = integrate_beta_reciprocal(&BetaSpec::new(0.3, 1.7), 1e-10).unwrap();
        let expected = PI / (1.7 * (0.3 * PI / 1.7).sin());
        assert!((r.value - expected).abs() <= 1e-9);
    }

    #[test]
    fn tail_bound_dominates_true_tail() {
        // ∫_X^∞ x e^{−x} dx = (X + 1) e^{−X}
        for x in [5.0_f64, 20.0, 40.0] {
            let exact = (x + 1.0) * (-x).exp();
            assert!(gamma_tail_bound(2.0, 1.0, x) >= exact);
        }
        // ∫_X^∞ e^{−x} dx = e^{−X}
        assert!((gamma_tail_bound(1.0, 1.0, 3.0) - (-3f64).exp()).abs() < 1e-16);
    }
}
