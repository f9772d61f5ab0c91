//! Globally adaptive Gauss–Kronrod (7, 15) integration on a finite interval.

// Coefficients are kept at their published precision.
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureResult;

/// Default cap on integrand evaluations for one adaptive run.
pub const DEFAULT_EVAL_BUDGET: u64 = 1_000_000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5]` and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const EVALS_PER_RULE: u64 = 15;

/// Target accuracy: an absolute floor combined with a relative part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub fn absolute(abs: f64) -> Self {
        Tolerance { abs, rel: 0.0 }
    }

    pub fn mixed(tol: f64) -> Self {
        Tolerance { abs: tol, rel: tol }
    }

    pub fn scaled(self, factor: f64) -> Self {
        Tolerance {
            abs: self.abs * factor,
            rel: self.rel * factor,
        }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    // insertion order, used to break ties deterministically
    seq: u64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// One Gauss–Kronrod 7/15 evaluation. The error estimate is the raw
/// Kronrod–Gauss difference, floored at the rounding level of the rule.
fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;
    let mut abs_sum = kronrod.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let value = kronrod * half;
    if !value.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "integrand is not finite on [{a}, {b}]"
        )));
    }
    let raw = ((kronrod - gauss) * half).abs();
    let floor = 50.0 * f64::EPSILON * abs_sum * half.abs();
    Ok((value, raw.max(floor)))
}

fn is_splittable(a: f64, b: f64) -> bool {
    let mid = 0.5 * (a + b);
    mid > a && mid < b && (b - a) > 1e3 * f64::EPSILON * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Adaptive integration of `f` over `[a, b]`.
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate meets `tol`. Subdivision order does not depend on `tol`, so a
/// tighter tolerance always continues the same refinement sequence.
pub fn integrate<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: Tolerance,
    eval_budget: u64,
) -> Result<QuadratureResult> {
    integrate_partition(f, &[a, b], tol, eval_budget)
}

/// As [`integrate`], starting from the partition given by the increasing
/// `breaks`, which span `[breaks[0], breaks[last]]`.
pub fn integrate_partition<F: Fn(f64) -> f64>(
    f: &F,
    breaks: &[f64],
    tol: Tolerance,
    eval_budget: u64,
) -> Result<QuadratureResult> {
    if breaks.len() < 2
        || breaks
            .windows(2)
            .any(|w| !(w[0].is_finite() && w[1].is_finite() && w[0] < w[1]))
    {
        return Err(Error::InvalidArgument(format!(
            "integration breakpoints {breaks:?} must be finite and strictly increasing"
        )));
    }
    if !(tol.abs.is_finite() && tol.rel.is_finite() && tol.abs >= 0.0 && tol.rel >= 0.0)
        || (tol.abs == 0.0 && tol.rel == 0.0)
    {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive and finite, got {tol:?}"
        )));
    }

    let mut evals = 0;
    let mut seq = 0u64;
    let mut heap = BinaryHeap::new();
    let mut frozen = Vec::new();
    let mut total = 0.0;
    let mut total_err = 0.0;
    for w in breaks.windows(2) {
        let (value, error) = gauss_kronrod(f, w[0], w[1])?;
        evals += EVALS_PER_RULE;
        total += value;
        total_err += error;
        heap.push(Segment { a: w[0], b: w[1], value, error, seq });
        seq += 1;
    }
    let mut exhausted = false;
    while total_err > tol.target(total) {
        let Some(worst) = heap.pop() else {
            exhausted = true;
            break;
        };
        if !is_splittable(worst.a, worst.b) {
            frozen.push(worst);
            continue;
        }
        if evals + 2 * EVALS_PER_RULE > eval_budget {
            heap.push(worst);
            exhausted = true;
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = gauss_kronrod(f, worst.a, mid)?;
        let (v2, e2) = gauss_kronrod(f, mid, worst.b)?;
        evals += 2 * EVALS_PER_RULE;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        seq += 1;
        heap.push(Segment { a: worst.a, b: mid, value: v1, error: e1, seq });
        seq += 1;
        heap.push(Segment { a: mid, b: worst.b, value: v2, error: e2, seq });
    }

    let mut segments: Vec<Segment> = heap.into_vec();
    segments.extend(frozen);
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value: f64 = segments.iter().map(|s| s.value).sum();
    let abs_error_estimate: f64 = segments.iter().map(|s| s.error).sum();
    let result = QuadratureResult {
        value,
        abs_error_estimate,
        function_evals: evals,
        segments: segments.len(),
    };
    if exhausted && abs_error_estimate > tol.target(value) {
        return Err(Error::BudgetExceeded { best: result });
    }
    Ok(result)
}
