//! Acceleration of alternating series by repeated averaging of partial sums.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Signed terms of a series, typically the integrals over successive half-periods.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SeriesTail {
    pub terms: Vec<f64>,
}

impl SeriesTail {
    pub fn new(terms: Vec<f64>) -> Self {
        SeriesTail { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, term: f64) {
        self.terms.push(term);
    }

    pub fn partial_sum(&self) -> f64 {
        self.terms.iter().sum()
    }

    /// Index of the first term (from `start` on) whose sign does not flip
    /// relative to its predecessor. Zero terms are treated as sign-neutral.
    pub fn first_sign_violation(&self, start: usize) -> Option<usize> {
        (start.max(1)..self.terms.len()).find(|&k| {
            let (prev, cur) = (self.terms[k - 1], self.terms[k]);
            prev != 0.0 && cur != 0.0 && prev.signum() == cur.signum()
        })
    }
}

/// Number of averaging passes applied to `len` partial sums.
fn averaging_depth(len: usize) -> usize {
    2 * (len - 1) / 3
}

fn averaged(terms: &[f64]) -> f64 {
    let mut sums: Vec<f64> = terms
        .iter()
        .scan(0.0, |acc, t| {
            *acc += t;
            Some(*acc)
        })
        .collect();
    for _ in 0..averaging_depth(terms.len()) {
        for i in 0..sums.len() - 1 {
            sums[i] = 0.5 * (sums[i] + sums[i + 1]);
        }
        sums.pop();
    }
    *sums.last().expect("at least one partial sum")
}

/// Euler transform of an alternating series.
///
/// The partial sums `S₀ … S_{N−1}` are replaced by the means of neighbours,
/// `⌊2(N−1)/3⌋` times; each pass is one forward-difference step of the
/// classical transform. The last surviving entry is returned.
pub fn euler_transform(tail: &SeriesTail) -> Result<f64> {
    if tail.len() < 3 {
        return Err(Error::InsufficientTerms { len: tail.len() });
    }
    Ok(averaged(&tail.terms))
}

/// Accelerated sum together with a convergence estimate, the change from
/// dropping the last quarter of the terms.
pub(crate) fn euler_transform_with_estimate(tail: &SeriesTail) -> Result<(f64, f64)> {
    let value = euler_transform(tail)?;
    let n = tail.len();
    let shorter = (n - (n / 4).max(1)).max(3);
    let estimate = if shorter >= n {
        tail.terms.last().map_or(0.0, |t| t.abs())
    } else {
        (value - averaged(&tail.terms[..shorter])).abs()
    };
    Ok((value, estimate))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_harmonic_to_ln2() {
        let tail = SeriesTail::new((0..20).map(|k| (-1f64).powi(k) / (k + 1) as f64).collect());
        let v = euler_transform(&tail).unwrap();
        assert!((v - 2f64.ln()).abs() <= 1e-9, "{v}");
        // the raw partial sum is far off
        assert!((tail.partial_sum() - 2f64.ln()).abs() > 1e-2);
    }

    #[test]
    fn terminated_series() {
        let tail = SeriesTail::new(vec![1.0, 0.0, 0.0]);
        assert_eq!(euler_transform(&tail).unwrap(), 1.0);
    }

    #[test]
    fn alternating_geometric() {
        let tail = SeriesTail::new((0..20).map(|k| (-0.9f64).powi(k)).collect());
        let v = euler_transform(&tail).unwrap();
        assert!((v - 1.0 / 1.9).abs() <= 1e-12, "{v}");
    }

    #[test]
    fn too_few_terms() {
        let tail = SeriesTail::new(vec![1.0, -0.5]);
        assert!(matches!(
            euler_transform(&tail),
            Err(Error::InsufficientTerms { len: 2 })
        ));
    }

    #[test]
    fn sign_violation_detection() {
        let tail = SeriesTail::new(vec![1.0, 0.5, -0.3, 0.2, 0.1]);
        assert_eq!(tail.first_sign_violation(3), Some(4));
        assert_eq!(tail.first_sign_violation(0), Some(1));
        let ok = SeriesTail::new(vec![1.0, -0.5, 0.3, -0.2]);
        assert_eq!(ok.first_sign_violation(1), None);
    }

    #[test]
    fn estimate_shrinks_with_more_terms() {
        let make = |n: i32| SeriesTail::new((0..n).map(|k| (-1f64).powi(k) / (k + 1) as f64).collect());
        let (_, e10) = euler_transform_with_estimate(&make(10)).unwrap();
        let (_, e40) = euler_transform_with_estimate(&make(40)).unwrap();
        assert!(e40 < e10);
    }
}
