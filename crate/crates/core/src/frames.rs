//! Dimensionless acceleration parameters.
//!
//! The scalar field is parameterized by `r` with `tanh r = exp(-pi |k| c / a)`
//! and the Dirac field by `theta` with `cos theta = (1 + exp(-2 pi omega c / a))^(-1/2)`.
//! Zero acceleration is the continuous limit `r = theta = 0`.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::error::{CoherenceError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Scalar,
    Dirac,
}

impl std::fmt::Display for FieldKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FieldKind::Scalar => "scalar",
            FieldKind::Dirac => "dirac",
        })
    }
}

impl std::str::FromStr for FieldKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "scalar" => Ok(FieldKind::Scalar),
            "dirac" => Ok(FieldKind::Dirac),
            other => Err(format!(
                "unknown field kind `{other}` (expected scalar or dirac)"
            )),
        }
    }
}

/// Physical inputs. Natural units (`|k| = omega = c = 1`) by default.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    pub acceleration: f64,
    pub wave_number: f64,
    pub frequency: f64,
    pub light_speed: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self {
            acceleration: 0.0,
            wave_number: 1.0,
            frequency: 1.0,
            light_speed: 1.0,
        }
    }
}

impl PhysicalParams {
    pub fn with_acceleration(acceleration: f64) -> Self {
        Self {
            acceleration,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.acceleration >= 0.0) || !self.acceleration.is_finite() {
            return Err(invalid(
                "acceleration",
                self.acceleration,
                "must be finite and >= 0",
            ));
        }
        for (name, value) in [
            ("wave_number", self.wave_number),
            ("frequency", self.frequency),
            ("light_speed", self.light_speed),
        ] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(invalid(name, value, "must be finite and > 0"));
            }
        }
        Ok(())
    }
}

fn invalid(name: &'static str, value: f64, reason: &'static str) -> CoherenceError {
    CoherenceError::InvalidParameter {
        name,
        value,
        reason,
    }
}

/// Scalar-field acceleration parameter `r >= 0`, with `tanh r` and `cosh^2 r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarFrame {
    r: f64,
    t: f64,
    cosh2: f64,
}

impl ScalarFrame {
    pub fn from_parameter(r: f64) -> Result<Self> {
        if !(r >= 0.0) || !r.is_finite() {
            return Err(invalid(
                "r",
                r,
                "scalar acceleration parameter must be finite and >= 0",
            ));
        }
        let c = r.cosh();
        Ok(Self {
            r,
            t: r.tanh(),
            cosh2: c * c,
        })
    }

    pub fn from_tanh(t: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&t) {
            return Err(invalid("t", t, "tanh r must lie in [0, 1)"));
        }
        Self::from_parameter(t.atanh())
    }

    pub fn from_acceleration(p: &PhysicalParams) -> Result<Self> {
        p.validate()?;
        if p.acceleration == 0.0 {
            return Self::from_parameter(0.0);
        }
        let x = PI * p.wave_number * p.light_speed / p.acceleration;
        // r = artanh(t) = (ln(1 + t) - ln(1 - t)) / 2 with t = e^-x
        let t = (-x).exp();
        let ln_one_minus_t = if t < 0.5 {
            (-t).ln_1p()
        } else {
            (-(-x).exp_m1()).ln()
        };
        let r = 0.5 * (t.ln_1p() - ln_one_minus_t);
        Self::from_parameter(r)
    }

    /// Inverse of [`ScalarFrame::from_acceleration`] for the given `|k|` and `c`.
    pub fn acceleration(&self, p: &PhysicalParams) -> f64 {
        if self.r == 0.0 {
            return 0.0;
        }
        PI * p.wave_number * p.light_speed / -self.ln_tanh()
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn tanh(&self) -> f64 {
        self.t
    }

    pub fn cosh2(&self) -> f64 {
        self.cosh2
    }

    /// `1 / cosh^2 r = 1 - tanh^2 r`, accurate when `tanh r` is close to 1.
    pub fn sech2(&self) -> f64 {
        let e = (-2.0 * self.r).exp();
        4.0 * e / ((1.0 + e) * (1.0 + e))
    }

    /// `ln tanh^2 r`, accurate for large `r`; `-inf` at `r = 0`.
    pub fn ln_tanh2(&self) -> f64 {
        2.0 * self.ln_tanh()
    }

    fn ln_tanh(&self) -> f64 {
        if self.r < 1.0 {
            return self.t.ln();
        }
        let e = (-2.0 * self.r).exp();
        (-e).ln_1p() - e.ln_1p()
    }
}

/// Dirac-field acceleration angle `theta` in `[0, pi/4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracFrame {
    theta: f64,
    cos2: f64,
    sin2: f64,
}

impl DiracFrame {
    pub fn from_parameter(theta: f64) -> Result<Self> {
        if !(0.0..FRAC_PI_4).contains(&theta) {
            return Err(invalid(
                "theta",
                theta,
                "Dirac acceleration angle must lie in [0, pi/4)",
            ));
        }
        let (s, c) = theta.sin_cos();
        Ok(Self {
            theta,
            cos2: c * c,
            sin2: s * s,
        })
    }

    pub fn from_acceleration(p: &PhysicalParams) -> Result<Self> {
        p.validate()?;
        if p.acceleration == 0.0 {
            return Self::from_parameter(0.0);
        }
        let x = 2.0 * PI * p.frequency * p.light_speed / p.acceleration;
        let e = (-x).exp();
        if e >= 1.0 {
            return Err(invalid(
                "acceleration",
                p.acceleration,
                "too large to resolve theta below pi/4 in double precision",
            ));
        }
        Ok(Self {
            // tan^2 theta = e^-x
            theta: (-0.5 * x).exp().atan(),
            cos2: 1.0 / (1.0 + e),
            sin2: e / (1.0 + e),
        })
    }

    /// Inverse of [`DiracFrame::from_acceleration`] for the given `omega` and `c`.
    pub fn acceleration(&self, p: &PhysicalParams) -> f64 {
        if self.theta == 0.0 {
            return 0.0;
        }
        PI * p.frequency * p.light_speed / -self.theta.tan().ln()
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn cos2(&self) -> f64 {
        self.cos2
    }

    pub fn sin2(&self) -> f64 {
        self.sin2
    }

    pub fn cos(&self) -> f64 {
        self.cos2.sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Frame {
    Scalar(ScalarFrame),
    Dirac(DiracFrame),
}

/// Builds a frame directly from `r` or `theta`, bypassing physical units.
pub fn frame_from_parameter(value: f64, kind: FieldKind) -> Result<Frame> {
    match kind {
        FieldKind::Scalar => ScalarFrame::from_parameter(value).map(Frame::Scalar),
        FieldKind::Dirac => DiracFrame::from_parameter(value).map(Frame::Dirac),
    }
}

/// Builds a frame from a physical acceleration.
pub fn frame_from_acceleration(p: &PhysicalParams, kind: FieldKind) -> Result<Frame> {
    match kind {
        FieldKind::Scalar => ScalarFrame::from_acceleration(p).map(Frame::Scalar),
        FieldKind::Dirac => DiracFrame::from_acceleration(p).map(Frame::Dirac),
    }
}
