//! Shannon entropy of probability vectors, in bits.
//!
//! Every entropy in this crate uses base-2 logarithms and the convention
//! `0 log 0 = 0`.

use crate::error::{CoherenceError, Result};
use crate::tolerance::Tolerances;

/// `x log2 x`, with `0 log 0 = 0`.
#[inline]
pub fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Binary entropy `H2(x) = -x log2 x - (1-x) log2 (1-x)`.
#[inline]
pub fn binary_entropy(x: f64) -> f64 {
    -xlog2x(x) - xlog2x(1.0 - x)
}

/// Neumaier compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// A list of probabilities plus a bound on the mass it does not list.
///
/// Entries within `-tol.norm` of zero are clamped to zero on construction;
/// anything more negative is rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector {
    entries: Vec<f64>,
    tail_bound: f64,
}

impl ProbVector {
    /// A complete distribution: entries must sum to 1.
    pub fn full(entries: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(entries, 0.0, &Tolerances::DEFAULT)
    }

    /// A truncated distribution whose omitted mass is at most `tail_bound`.
    pub fn partial(entries: Vec<f64>, tail_bound: f64) -> Result<Self> {
        Self::with_tolerance(entries, tail_bound, &Tolerances::DEFAULT)
    }

    pub fn with_tolerance(
        mut entries: Vec<f64>,
        tail_bound: f64,
        tol: &Tolerances,
    ) -> Result<Self> {
        if !(tail_bound >= 0.0) || !tail_bound.is_finite() {
            return Err(CoherenceError::InvalidParameter {
                name: "tail_bound",
                value: tail_bound,
                reason: "must be finite and nonnegative",
            });
        }
        for (index, p) in entries.iter_mut().enumerate() {
            if !p.is_finite() || *p < -tol.norm {
                return Err(CoherenceError::NegativeProbability { index, value: *p });
            }
            if *p < 0.0 {
                *p = 0.0;
            }
        }
        let total: f64 = entries.iter().copied().collect::<CompensatedSum>().value();
        if total > 1.0 + tol.norm || total + tail_bound < 1.0 - tol.norm {
            return Err(CoherenceError::NotNormalized {
                total: total + tail_bound,
                tol: tol.norm,
            });
        }
        Ok(Self {
            entries,
            tail_bound,
        })
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.entries
            .iter()
            .copied()
            .collect::<CompensatedSum>()
            .value()
    }
}

/// `-sum p_i log2 p_i` over the listed entries.
pub fn shannon_entropy(p: &ProbVector) -> f64 {
    let s = p
        .entries
        .iter()
        .map(|&x| -xlog2x(x))
        .collect::<CompensatedSum>()
        .value();
    s.max(0.0)
}
