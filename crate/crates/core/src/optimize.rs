//! Maximization over the amplitude at fixed acceleration.
//!
//! Coherence is smooth in `alpha` but its slope diverges at `alpha = 0, 1`,
//! so the search is derivative-free: a coarse scan locates the peak and
//! checks there is only one, then golden-section search refines it.

use serde::{Deserialize, Serialize};

use crate::dirac::{dirac_coherence, dirac_coherence_loss, dirac_limit_coherence};
use crate::error::{CoherenceError, Result};
use crate::frames::{DiracFrame, FieldKind};
use crate::mode::ModeParameters;
use crate::scalar::SeriesOptions;
use crate::sweep::{coherence_at, Acceleration, Grid};

/// Number of intervals in the unimodality scan.
pub const SCAN_INTERVALS: usize = 64;

/// `(sqrt(5) - 1) / 2`, the interval reduction per golden-section step.
pub const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Differences below this are treated as flat in the unimodality scan.
const SCAN_FLAT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
/// Stops once the bracket is narrower than `tol_x`.
pub fn golden_section_max<F>(mut f: F, mut lo: f64, mut hi: f64, tol_x: f64) -> Result<Maximum>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol_x > 0.0) {
        return Err(CoherenceError::InvalidParameter {
            name: "tol_x",
            value: tol_x,
            reason: "tolerance must be > 0",
        });
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let mut iterations = 0;
    while hi - lo > tol_x {
        iterations += 1;
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        }
    }
    let x = 0.5 * (lo + hi);
    let value = f(x)?;
    // Keep the best evaluated point; f is flat to rounding near the peak.
    let best = [(x, value), (x1, f1), (x2, f2)]
        .into_iter()
        .fold((x, value), |acc, p| if p.1 > acc.1 { p } else { acc });
    Ok(Maximum {
        x: best.0,
        value: best.1,
        iterations,
    })
}

/// Counts local maxima of a sampled curve, endpoints included.
fn count_local_maxima(values: &[f64]) -> usize {
    let signs: Vec<i8> = values
        .windows(2)
        .filter_map(|w| {
            let d = w[1] - w[0];
            if d > SCAN_FLAT {
                Some(1)
            } else if d < -SCAN_FLAT {
                Some(-1)
            } else {
                None
            }
        })
        .collect();
    if signs.is_empty() {
        return 1;
    }
    let interior = signs.windows(2).filter(|w| w[0] > 0 && w[1] < 0).count();
    interior + usize::from(signs[0] < 0) + usize::from(signs[signs.len() - 1] > 0)
}

/// Maximizes `f(alpha)` over `[0, 1]`, failing if the coarse scan sees
/// more than one peak.
pub fn maximize_over_alpha<F>(mut f: F, tol_x: f64) -> Result<Maximum>
where
    F: FnMut(f64) -> Result<f64>,
{
    let xs: Vec<f64> = (0..=SCAN_INTERVALS)
        .map(|i| i as f64 / SCAN_INTERVALS as f64)
        .collect();
    let ys = xs.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
    let maxima = count_local_maxima(&ys);
    if maxima > 1 {
        return Err(CoherenceError::NotUnimodal { maxima });
    }
    let best = ys
        .iter()
        .enumerate()
        .fold(0, |b, (i, &y)| if y > ys[b] { i } else { b });
    let lo = xs[best.saturating_sub(1)];
    let hi = xs[(best + 1).min(SCAN_INTERVALS)];
    golden_section_max(|x| f(x.clamp(0.0, 1.0)), lo, hi, tol_x)
}

/// A point on the maximal-coherence ridge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RidgePoint {
    pub param: f64,
    pub alpha_star: f64,
    pub coherence_max: f64,
}

/// The amplitude that maximizes coherence at a fixed acceleration
/// parameter. A Dirac `param` of exactly `pi/4` uses the limit formula.
pub fn maximize_alpha(
    field: FieldKind,
    param: f64,
    tol_x: f64,
    series: SeriesOptions,
) -> Result<RidgePoint> {
    let accel = Acceleration::new(field, param);
    let m = match accel {
        Acceleration::Dirac(theta) => {
            let frame = DiracFrame::from_parameter(theta)?;
            maximize_over_alpha(
                |a| Ok(dirac_coherence(ModeParameters::new(a)?, &frame).value),
                tol_x,
            )?
        }
        Acceleration::DiracLimit => maximize_over_alpha(
            |a| Ok(dirac_limit_coherence(ModeParameters::new(a)?)),
            tol_x,
        )?,
        Acceleration::Scalar(_) => maximize_over_alpha(
            |a| Ok(coherence_at(ModeParameters::new(a)?, accel, series)?.value),
            tol_x,
        )?,
    };
    Ok(RidgePoint {
        param,
        alpha_star: m.x,
        coherence_max: m.value,
    })
}

/// [`maximize_alpha`] at every grid value, in grid order.
pub fn ridge(
    field: FieldKind,
    grid: &Grid,
    tol_x: f64,
    series: SeriesOptions,
) -> Result<Vec<RidgePoint>> {
    grid.validate()?;
    grid.values()
        .into_iter()
        .map(|p| maximize_alpha(field, p, tol_x, series))
        .collect()
}

/// Dirac coherence at rest and in the infinite-acceleration limit, and the loss between them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LossPoint {
    pub alpha: f64,
    pub c_at_0: f64,
    pub c_at_limit: f64,
    pub delta: f64,
}

pub fn loss_curve(alphas: &[f64]) -> Result<Vec<LossPoint>> {
    let rest = DiracFrame::from_parameter(0.0)?;
    alphas
        .iter()
        .map(|&alpha| {
            let mode = ModeParameters::new(alpha)?;
            Ok(LossPoint {
                alpha,
                c_at_0: dirac_coherence(mode, &rest).value,
                c_at_limit: dirac_limit_coherence(mode),
                delta: dirac_coherence_loss(mode),
            })
        })
        .collect()
}

/// The amplitude suffering the largest coherence loss.
pub fn maximize_loss(tol_x: f64) -> Result<Maximum> {
    maximize_over_alpha(|a| Ok(dirac_coherence_loss(ModeParameters::new(a)?)), tol_x)
}
