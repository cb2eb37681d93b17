use serde::{Deserialize, Serialize};

use crate::error::{CoherenceError, Result};

/// Superposition amplitude of the shared state
/// `alpha |0>|0> + sqrt(1 - alpha^2) |1>|1>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ModeParameters {
    alpha: f64,
    p_vacuum: f64,
    p_excited: f64,
}

impl ModeParameters {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(CoherenceError::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "amplitude must lie in [0, 1]",
            });
        }
        Ok(Self {
            alpha,
            p_vacuum: alpha * alpha,
            p_excited: (1.0 - alpha) * (1.0 + alpha),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `alpha^2`.
    pub fn p_vacuum(&self) -> f64 {
        self.p_vacuum
    }

    /// `1 - alpha^2`.
    pub fn p_excited(&self) -> f64 {
        self.p_excited
    }

    /// `alpha sqrt(1 - alpha^2)`.
    pub fn coupling(&self) -> f64 {
        self.alpha * self.p_excited.sqrt()
    }

    /// True when the initial state is a product state (`alpha` is 0 or 1).
    pub fn is_degenerate(&self) -> bool {
        self.p_vacuum == 0.0 || self.p_excited == 0.0
    }
}

impl TryFrom<f64> for ModeParameters {
    type Error = CoherenceError;

    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

impl From<ModeParameters> for f64 {
    fn from(m: ModeParameters) -> f64 {
        m.alpha
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain() {
        assert!(ModeParameters::new(-1e-9).is_err());
        assert!(ModeParameters::new(1.0 + 1e-9).is_err());
        assert!(ModeParameters::new(f64::NAN).is_err());
        assert!(ModeParameters::new(0.0).unwrap().is_degenerate());
        assert!(ModeParameters::new(1.0).unwrap().is_degenerate());
        let m = ModeParameters::new(0.6).unwrap();
        assert!((m.p_vacuum() + m.p_excited() - 1.0).abs() < 1e-16);
        assert!((m.coupling() - 0.48).abs() < 1e-15);
    }
}
