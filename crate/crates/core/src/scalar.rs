//! Scalar (bosonic) field.
//!
//! Tracing out region II leaves a state that is block diagonal in the
//! Rindler occupation number `n`. Block `n` lives on `{|0,n>, |1,n+1>}` with
//! weight `w_n = tanh^{2n} r / cosh^2 r` and is rank one:
//!
//! ```text
//! w_n * [ a^2                          a b sqrt(n+1) / cosh r ]
//!       [ a b sqrt(n+1) / cosh r       b^2 (n+1) / cosh^2 r    ]
//! ```
//!
//! with `a = alpha`, `b = sqrt(1 - alpha^2)`. Writing `p0`, `p1` for the two
//! diagonal entries and `lam = p0 + p1` for the nonzero eigenvalue, the
//! coherence is
//!
//! ```text
//! C = sum_n [-p0 log p0 - p1 log p1 + lam log lam] = sum_n lam_n H2(p0_n / lam_n)
//! ```
//!
//! which is a sum of nonnegative terms each at most `lam_n`.
//!
//! # Truncation
//!
//! With `q = tanh^2 r`, `s = 1 - q` and `M` summed blocks, the omitted
//! masses have closed forms:
//!
//! ```text
//! sum_{n>=M} w_n                  = q^M
//! sum_{n>=M} w_n (n+1) / cosh^2 r = q^M (1 + M s)
//! ```
//!
//! `M` is the smallest count for which the larger of the two falls below
//! the requested tolerance. Every omitted term of `C` is at most
//! `lam_n H2(x_n)` with `x_n = p0_n / lam_n` decreasing in `n`, so the
//! omitted coherence lies in `[0, m * h]` where `m` is the omitted
//! eigenvalue mass and `h = H2(x_M)` if `x_M <= 1/2`, otherwise 1. That
//! product is reported as `tail_guarantee`; the truncated value is a
//! lower bound on the exact one.

use std::f64::consts::LN_2;

use nalgebra::{DMatrix, Matrix2};

use crate::coherence::CoherenceReport;
use crate::density::{DensityMatrix, C64};
use crate::entropy::{binary_entropy, CompensatedSum};
use crate::error::{CoherenceError, Result};
use crate::frames::ScalarFrame;
use crate::mode::ModeParameters;

/// Default cap on the number of summed blocks.
pub const DEFAULT_MAX_TERMS: u64 = 500_000_000;

/// Default bound on omitted probability mass.
pub const DEFAULT_SERIES_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    pub tol: f64,
    pub max_terms: u64,
}

impl SeriesOptions {
    pub fn new(tol: f64) -> Self {
        Self {
            tol,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self::new(DEFAULT_SERIES_TOL)
    }
}

/// One `2x2` block of the reduced state, already multiplied by its weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarBlock {
    pub n: u64,
    /// `tanh^{2n} r / cosh^2 r`.
    pub weight: f64,
    /// Diagonal mass on `|0,n>`.
    pub p0: f64,
    /// Diagonal mass on `|1,n+1>`.
    pub p1: f64,
    /// Nonzero eigenvalue of the block, `p0 + p1`.
    pub lam: f64,
    /// Off-diagonal element `<0,n| rho |1,n+1>`.
    pub coherence: f64,
}

impl ScalarBlock {
    pub fn unnormalized(&self) -> Matrix2<f64> {
        Matrix2::new(self.p0, self.coherence, self.coherence, self.p1)
    }
}

/// `ln w_n`, with `w_0 = sech^2 r` exactly.
fn ln_weight(ln_sech2: f64, ln_q: f64, n: u64) -> f64 {
    if n == 0 {
        ln_sech2
    } else {
        ln_sech2 + n as f64 * ln_q
    }
}

pub fn scalar_block(mode: ModeParameters, frame: &ScalarFrame, n: u64) -> ScalarBlock {
    let sech2 = frame.sech2();
    let weight = ln_weight(sech2.ln(), frame.ln_tanh2(), n).exp();
    let occupation = (n + 1) as f64;
    let p0 = weight * mode.p_vacuum();
    let p1 = weight * mode.p_excited() * occupation * sech2;
    ScalarBlock {
        n,
        weight,
        p0,
        p1,
        lam: p0 + p1,
        coherence: weight * mode.coupling() * (occupation * sech2).sqrt(),
    }
}

/// Block `n` renormalized to unit trace.
pub fn scalar_block_matrix(
    mode: ModeParameters,
    frame: &ScalarFrame,
    n: u64,
) -> Result<DensityMatrix> {
    let block = scalar_block(mode, frame, n);
    if !(block.lam > 0.0) {
        return Err(CoherenceError::ZeroWeightBlock { n });
    }
    let m = block.unnormalized() / block.lam;
    DensityMatrix::new(DMatrix::from_fn(2, 2, |i, j| C64::new(m[(i, j)], 0.0)))
}

/// Truncated block spectrum with certified bounds on the omitted mass.
///
/// Blocks are generated on demand; at large `r` there can be ~10^8 of them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarSpectrum {
    mode: ModeParameters,
    frame: ScalarFrame,
    terms: u64,
    /// Omitted mass of `sum_n w_n`.
    tail_weight: f64,
    /// Omitted mass of `sum_n w_n (n+1) / cosh^2 r`.
    tail_excited: f64,
}

impl ScalarSpectrum {
    pub fn new(mode: ModeParameters, frame: ScalarFrame, opts: SeriesOptions) -> Result<Self> {
        if !(opts.tol > 0.0) {
            return Err(CoherenceError::InvalidParameter {
                name: "series_tol",
                value: opts.tol,
                reason: "series tolerance must be > 0",
            });
        }
        if opts.max_terms == 0 {
            return Err(CoherenceError::InvalidParameter {
                name: "max_terms",
                value: 0.0,
                reason: "term cap must be positive",
            });
        }
        if frame.r() == 0.0 {
            return Ok(Self {
                mode,
                frame,
                terms: 1,
                tail_weight: 0.0,
                tail_excited: 0.0,
            });
        }
        let terms = terms_for_tolerance(&frame, opts)?;
        let (ln_a, ln_b) = ln_tails(&frame, terms);
        Ok(Self {
            mode,
            frame,
            terms,
            tail_weight: ln_a.exp(),
            tail_excited: ln_b.exp(),
        })
    }

    pub fn mode(&self) -> ModeParameters {
        self.mode
    }

    pub fn frame(&self) -> &ScalarFrame {
        &self.frame
    }

    /// Number of blocks, `N + 1`.
    pub fn terms(&self) -> u64 {
        self.terms
    }

    pub fn tail_mass_p0(&self) -> f64 {
        self.mode.p_vacuum() * self.tail_weight
    }

    pub fn tail_mass_p1(&self) -> f64 {
        self.mode.p_excited() * self.tail_excited
    }

    pub fn tail_mass_lam(&self) -> f64 {
        self.tail_mass_p0() + self.tail_mass_p1()
    }

    pub fn blocks(&self) -> impl Iterator<Item = ScalarBlock> + '_ {
        (0..self.terms).map(move |n| scalar_block(self.mode, &self.frame, n))
    }
}

/// `(ln q^M, ln q^M (1 + M s))` for `M` summed blocks.
fn ln_tails(frame: &ScalarFrame, terms: u64) -> (f64, f64) {
    let m = terms as f64;
    let ln_a = m * frame.ln_tanh2();
    (ln_a, ln_a + (m * frame.sech2()).ln_1p())
}

/// Smallest `M` with both omitted masses below `opts.tol`. The excited
/// tail dominates and is strictly decreasing in `M`.
fn terms_for_tolerance(frame: &ScalarFrame, opts: SeriesOptions) -> Result<u64> {
    let target = opts.tol.ln();
    let ok = |m: u64| ln_tails(frame, m).1 < target;
    if !ok(opts.max_terms) {
        return Err(CoherenceError::ToleranceInfeasible {
            requested: opts.tol,
            achievable: ln_tails(frame, opts.max_terms).1.exp(),
            r: frame.r(),
            max_terms: opts.max_terms,
        });
    }
    if ok(1) {
        return Ok(1);
    }
    let (mut lo, mut hi) = (1u64, opts.max_terms);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

pub fn scalar_spectrum(
    mode: ModeParameters,
    frame: &ScalarFrame,
    tol: f64,
) -> Result<ScalarSpectrum> {
    ScalarSpectrum::new(mode, *frame, SeriesOptions::new(tol))
}

pub fn scalar_coherence(
    mode: ModeParameters,
    frame: &ScalarFrame,
    tol: f64,
) -> Result<CoherenceReport> {
    scalar_coherence_with(mode, frame, SeriesOptions::new(tol))
}

/// Sums the block series in ascending `n`.
///
/// Per block, with `u = (1 - alpha^2) (n+1) / cosh^2 r`:
/// `p0 = w alpha^2`, `p1 = w u`, `lam = w (alpha^2 + u)` and
/// `lam H2(p0/lam) = w [alpha^2 ln(1 + u/alpha^2) + u ln(1 + alpha^2/u)]` (nats).
pub fn scalar_coherence_with(
    mode: ModeParameters,
    frame: &ScalarFrame,
    opts: SeriesOptions,
) -> Result<CoherenceReport> {
    let spectrum = ScalarSpectrum::new(mode, *frame, opts)?;
    let terms = spectrum.terms();

    let a2 = mode.p_vacuum();
    let sech2 = frame.sech2();
    let ln_sech2 = sech2.ln();
    let ln_q = frame.ln_tanh2();
    let beta = mode.p_excited() * sech2;
    let ln_a2 = a2.ln();
    let ln_beta = beta.ln();

    let mut value = CompensatedSum::new();
    let mut s_diag = CompensatedSum::new();
    let mut s_rho = CompensatedSum::new();

    let q = ln_q.exp();
    let mut w = 0.0;
    for n in 0..terms {
        let ln_w = ln_weight(ln_sech2, ln_q, n);
        // Geometric recurrence, re-anchored to the exact weight every 64 blocks.
        w = if n % 64 == 0 { ln_w.exp() } else { w * q };
        if w == 0.0 {
            // Underflow; the remaining blocks carry less than f64::MIN_POSITIVE each.
            break;
        }
        let occupation = (n + 1) as f64;
        if mode.p_excited() == 0.0 {
            // alpha = 1: only |0,n> is populated.
            let h = -w * ln_w;
            s_diag.add(h);
            s_rho.add(h);
        } else if a2 == 0.0 {
            // alpha = 0: only |1,n+1> is populated.
            let p1 = w * beta * occupation;
            let h = -p1 * (ln_w + ln_beta + occupation.ln());
            s_diag.add(h);
            s_rho.add(h);
        } else {
            let u = beta * occupation;
            let ln_up = (u / a2).ln_1p();
            let ln_down = (a2 / u).ln_1p();
            let p0 = w * a2;
            let p1 = w * u;
            let ln_p0 = ln_w + ln_a2;
            let ln_lam = ln_p0 + ln_up;
            let ln_p1 = ln_lam - ln_down;
            value.add(w * (a2 * ln_up + u * ln_down));
            s_diag.add(-p0 * ln_p0 - p1 * ln_p1);
            s_rho.add(-(p0 + p1) * ln_lam);
        }
    }

    let tail_guarantee = if mode.is_degenerate() {
        0.0
    } else {
        let x_next = a2 / (a2 + beta * (terms + 1) as f64);
        let h_sup = if x_next <= 0.5 {
            binary_entropy(x_next)
        } else {
            1.0
        };
        spectrum.tail_mass_lam() * h_sup
    };

    Ok(CoherenceReport {
        value: value.value() / LN_2,
        s_diag: s_diag.value() / LN_2,
        s_rho: s_rho.value() / LN_2,
        terms_used: terms,
        tail_guarantee,
    })
}
