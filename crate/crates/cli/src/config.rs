//! Run configuration, as read from `--config` or assembled from flags.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use std::path::PathBuf;
use std::str::FromStr;

use coherence_core::scalar::DEFAULT_SERIES_TOL;
use coherence_core::{frame_from_acceleration, FieldKind, Frame, Grid, PhysicalParams};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Amplitudes used for the fixed-alpha curve datasets.
pub const CAPTION_ALPHAS: [f64; 5] = [
    FRAC_1_SQRT_2,
    0.5,
    0.866_025_403_784_438_6, // sqrt(3/4)
    0.353_553_390_593_273_8, // 1/sqrt(8)
    0.935_414_346_693_485_4, // sqrt(7/8)
];

pub const DEFAULT_TOL_X: f64 = 1e-10;
pub const DEFAULT_POINTS: usize = 81;
pub const DEFAULT_TRIALS: usize = 1000;
pub const SCALAR_AXIS_STOP: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Point,
    Sweep,
    Maximize,
    Ridge,
    Loss,
    Figures,
    Axioms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "unknown output format `{other}` (expected csv or json)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphaSpec {
    One(f64),
    List(Vec<f64>),
    Grid(Grid),
}

impl AlphaSpec {
    pub fn values(&self) -> Result<Vec<f64>, CliError> {
        match self {
            AlphaSpec::One(a) => Ok(vec![*a]),
            AlphaSpec::List(v) if v.is_empty() => Err(CliError::config("alpha list is empty")),
            AlphaSpec::List(v) => Ok(v.clone()),
            AlphaSpec::Grid(g) => {
                g.validate()?;
                Ok(g.values())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Keyword {
    /// `theta -> pi/4`.
    Limit,
}

/// A physical acceleration; unset constants default to natural units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhysicalSpec {
    pub acceleration: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wave_number: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequency: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub light_speed: Option<f64>,
}

impl PhysicalSpec {
    pub fn params(&self) -> PhysicalParams {
        let d = PhysicalParams::default();
        PhysicalParams {
            acceleration: self.acceleration,
            wave_number: self.wave_number.unwrap_or(d.wave_number),
            frequency: self.frequency.unwrap_or(d.frequency),
            light_speed: self.light_speed.unwrap_or(d.light_speed),
        }
    }
}

/// The acceleration axis: `r` for scalar fields, `theta` for Dirac fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamSpec {
    Value(f64),
    Grid(Grid),
    Physical(PhysicalSpec),
    Keyword(Keyword),
}

impl ParamSpec {
    /// Resolves a single parameter value. Grids are rejected.
    pub fn single(&self, field: FieldKind) -> Result<f64, CliError> {
        match self {
            ParamSpec::Value(v) => Ok(*v),
            ParamSpec::Keyword(Keyword::Limit) => match field {
                FieldKind::Dirac => Ok(FRAC_PI_4),
                FieldKind::Scalar => Err(CliError::config(
                    "the `limit` parameter is only defined for dirac fields",
                )),
            },
            ParamSpec::Physical(p) => {
                let params = p.params();
                params.validate()?;
                Ok(match frame_from_acceleration(&params, field)? {
                    Frame::Scalar(f) => f.r(),
                    Frame::Dirac(f) => f.theta(),
                })
            }
            ParamSpec::Grid(_) => Err(CliError::config(
                "this command takes a single parameter, not a grid",
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default)]
    pub field_kind: Option<FieldKind>,
    #[serde(default)]
    pub alpha: Option<AlphaSpec>,
    #[serde(default)]
    pub param: Option<ParamSpec>,
    #[serde(default = "default_series_tol")]
    pub series_tol: f64,
    #[serde(default = "default_tol_x")]
    pub tol_x: f64,
    #[serde(default)]
    pub output_format: OutputFormat,
    /// Output file, or the output directory for `figures`. Standard output if unset.
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    /// Samples per axis for `figures`.
    #[serde(default)]
    pub points: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub trials: Option<usize>,
}

fn default_series_tol() -> f64 {
    DEFAULT_SERIES_TOL
}

fn default_tol_x() -> f64 {
    DEFAULT_TOL_X
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            field_kind: None,
            alpha: None,
            param: None,
            series_tol: DEFAULT_SERIES_TOL,
            tol_x: DEFAULT_TOL_X,
            output_format: OutputFormat::Csv,
            output_path: None,
            points: None,
            seed: None,
            trials: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::config(e.to_string()))
    }

    pub fn field(&self) -> FieldKind {
        match self.command {
            Command::Loss => FieldKind::Dirac,
            _ => self.field_kind.unwrap_or(FieldKind::Scalar),
        }
    }

    /// Checks that the fields make sense together for the chosen command.
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.series_tol > 0.0 && self.series_tol < 1.0) {
            return Err(CliError::config(format!(
                "series_tol must be in (0, 1), got {}",
                self.series_tol
            )));
        }
        if !(self.tol_x > 0.0 && self.tol_x < 0.5) {
            return Err(CliError::config(format!(
                "tol_x must be in (0, 0.5), got {}",
                self.tol_x
            )));
        }
        let forbid = |present: bool, what: &str| {
            if present {
                Err(CliError::config(
                    format!("`{what}` is not used by {:?}", self.command).to_lowercase(),
                ))
            } else {
                Ok(())
            }
        };
        match self.command {
            Command::Point => {
                if self.alpha.is_none() {
                    return Err(CliError::config("point requires alpha"));
                }
                if self.param.is_none() {
                    return Err(CliError::config("point requires a parameter"));
                }
            }
            Command::Sweep => {
                if matches!(self.param, Some(ref p) if !matches!(p, ParamSpec::Grid(_))) {
                    return Err(CliError::config("sweep takes a parameter grid"));
                }
            }
            Command::Maximize => {
                forbid(self.alpha.is_some(), "alpha")?;
                if self.param.is_none() {
                    return Err(CliError::config("maximize requires a parameter"));
                }
            }
            Command::Ridge => {
                forbid(self.alpha.is_some(), "alpha")?;
                if matches!(self.param, Some(ref p) if !matches!(p, ParamSpec::Grid(_))) {
                    return Err(CliError::config("ridge takes a parameter grid"));
                }
            }
            Command::Loss => {
                if self.field_kind == Some(FieldKind::Scalar) {
                    return Err(CliError::config("loss is only defined for dirac fields"));
                }
                forbid(self.param.is_some(), "param")?;
            }
            Command::Figures => {
                forbid(self.alpha.is_some(), "alpha")?;
                forbid(self.param.is_some(), "param")?;
                forbid(self.field_kind.is_some(), "field_kind")?;
                if self.output_format != OutputFormat::Csv {
                    return Err(CliError::config("figures always writes csv"));
                }
                if matches!(self.points, Some(n) if n < 2) {
                    return Err(CliError::config("points must be at least 2"));
                }
            }
            Command::Axioms => {
                forbid(self.alpha.is_some(), "alpha")?;
                forbid(self.param.is_some(), "param")?;
                if self.trials == Some(0) {
                    return Err(CliError::config("trials must be positive"));
                }
            }
        }
        if self.command != Command::Figures {
            forbid(self.points.is_some(), "points")?;
        }
        if self.command != Command::Axioms {
            forbid(self.seed.is_some() || self.trials.is_some(), "seed/trials")?;
        }
        Ok(())
    }
}

/// Default acceleration axis: `[0, 8]` for `r`, half-open `[0, pi/4)` for `theta`.
pub fn default_axis(field: FieldKind, points: usize) -> Grid {
    match field {
        FieldKind::Scalar => Grid {
            start: 0.0,
            stop: SCALAR_AXIS_STOP,
            count: points,
        },
        FieldKind::Dirac => Grid {
            start: 0.0,
            stop: FRAC_PI_4 * (points - 1) as f64 / points as f64,
            count: points,
        },
    }
}
