/// Numerical tolerances shared by the density-matrix kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Allowed drift of traces and probability sums from 1.
    pub norm: f64,
    /// Allowed deviation of `rho` from `rho^dag`, entrywise.
    pub herm: f64,
    /// Eigenvalues down to `-psd` are treated as rounding noise.
    pub psd: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        norm: 1e-10,
        herm: 1e-10,
        psd: 1e-10,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
