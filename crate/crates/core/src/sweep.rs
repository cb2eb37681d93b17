//! Parameter sweeps over the amplitude and the acceleration parameter.

use std::f64::consts::FRAC_PI_4;

use serde::{Deserialize, Serialize};

use crate::coherence::CoherenceReport;
use crate::dirac::{dirac_coherence, dirac_limit_report};
use crate::error::{CoherenceError, Result};
use crate::frames::{DiracFrame, FieldKind, ScalarFrame};
use crate::mode::ModeParameters;
use crate::scalar::{scalar_coherence_with, SeriesOptions};

/// An acceleration parameter tagged with its field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Acceleration {
    Scalar(f64),
    Dirac(f64),
    /// `theta -> pi/4`, evaluated by the limit formula.
    DiracLimit,
}

impl Acceleration {
    /// Maps `(field, param)`; a Dirac `param` of exactly `pi/4` selects the limit.
    pub fn new(field: FieldKind, param: f64) -> Self {
        match field {
            FieldKind::Scalar => Acceleration::Scalar(param),
            FieldKind::Dirac if param == FRAC_PI_4 => Acceleration::DiracLimit,
            FieldKind::Dirac => Acceleration::Dirac(param),
        }
    }

    pub fn param(&self) -> f64 {
        match *self {
            Acceleration::Scalar(p) | Acceleration::Dirac(p) => p,
            Acceleration::DiracLimit => FRAC_PI_4,
        }
    }
}

pub fn coherence_at(
    mode: ModeParameters,
    accel: Acceleration,
    series: SeriesOptions,
) -> Result<CoherenceReport> {
    match accel {
        Acceleration::Scalar(r) => {
            scalar_coherence_with(mode, &ScalarFrame::from_parameter(r)?, series)
        }
        Acceleration::Dirac(theta) => {
            Ok(dirac_coherence(mode, &DiracFrame::from_parameter(theta)?))
        }
        Acceleration::DiracLimit => Ok(dirac_limit_report(mode)),
    }
}

/// `count` evenly spaced points from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        let g = Self { start, stop, count };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.start.is_finite() || !self.stop.is_finite() || self.start > self.stop {
            return Err(CoherenceError::InvalidParameter {
                name: "grid",
                value: self.start,
                reason: "grid needs finite start <= stop",
            });
        }
        if self.count == 0 || (self.count == 1 && self.start != self.stop) {
            return Err(CoherenceError::InvalidParameter {
                name: "grid.count",
                value: self.count as f64,
                reason: "grid needs at least two points, or one point with start == stop",
            });
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + i as f64 * step
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub field_kind: FieldKind,
    pub alpha_values: Vec<f64>,
    pub param_grid: Grid,
    pub series_tol: f64,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        self.param_grid.validate()?;
        for &a in &self.alpha_values {
            ModeParameters::new(a)?;
        }
        if self.param_grid.start < 0.0 {
            return Err(CoherenceError::InvalidParameter {
                name: "grid.start",
                value: self.param_grid.start,
                reason: "acceleration parameter must be >= 0",
            });
        }
        if self.field_kind == FieldKind::Dirac && self.param_grid.stop > FRAC_PI_4 {
            return Err(CoherenceError::InvalidParameter {
                name: "grid.stop",
                value: self.param_grid.stop,
                reason: "theta cannot exceed pi/4",
            });
        }
        if !(self.series_tol > 0.0) {
            return Err(CoherenceError::InvalidParameter {
                name: "series_tol",
                value: self.series_tol,
                reason: "series tolerance must be > 0",
            });
        }
        Ok(())
    }
}

/// One sample of a coherence curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub alpha: f64,
    /// `r` or `theta`.
    pub param: f64,
    pub coherence: f64,
    pub tail_guarantee: f64,
}

/// Evaluates every `(alpha, param)` pair, ordered by alpha then grid index.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<CurvePoint>> {
    spec.validate()?;
    let params = spec.param_grid.values();
    let series = SeriesOptions::new(spec.series_tol);
    let mut out = Vec::with_capacity(spec.alpha_values.len() * params.len());
    for &alpha in &spec.alpha_values {
        let mode = ModeParameters::new(alpha)?;
        for &param in &params {
            let rep = coherence_at(mode, Acceleration::new(spec.field_kind, param), series)?;
            out.push(CurvePoint {
                alpha,
                param,
                coherence: rep.value,
                tail_guarantee: rep.tail_guarantee,
            });
        }
    }
    Ok(out)
}
