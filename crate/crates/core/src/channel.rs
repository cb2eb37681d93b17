//! Incoherent quantum channels in Kraus form.

use crate::coherence::rel_ent_coherence_matrix;
use crate::density::{CMatrix, DensityMatrix, C64};
use crate::error::{CoherenceError, Result};

/// A Kraus set `{K_n}` with `sum K_n^dag K_n = 1` that maps incoherent states
/// to incoherent states.
#[derive(Debug, Clone)]
pub struct IncoherentChannel {
    kraus: Vec<CMatrix>,
    dim: usize,
}

impl IncoherentChannel {
    pub fn new(kraus: Vec<CMatrix>, tol: f64) -> Result<Self> {
        let dim = kraus.first().map(|k| k.nrows()).unwrap_or(0);
        if dim == 0 {
            return Err(CoherenceError::InvalidParameter {
                name: "kraus",
                value: 0.0,
                reason: "need at least one nonempty Kraus operator",
            });
        }
        for k in &kraus {
            if k.nrows() != dim || k.ncols() != dim {
                return Err(CoherenceError::DimensionMismatch {
                    expected: dim,
                    actual: k.nrows().max(k.ncols()),
                });
            }
        }
        let mut completeness = CMatrix::zeros(dim, dim);
        for k in &kraus {
            completeness += k.adjoint() * k;
        }
        let deviation = (completeness - CMatrix::identity(dim, dim))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if deviation > tol {
            return Err(CoherenceError::KrausIncomplete { deviation });
        }
        // K |j><j| K^dag must be diagonal for every basis state j.
        for (index, k) in kraus.iter().enumerate() {
            for j in 0..dim {
                let col = k.column(j);
                let image = col * col.adjoint();
                let coherent =
                    (0..dim).any(|a| (0..dim).any(|b| a != b && image[(a, b)].norm() > tol));
                if coherent {
                    return Err(CoherenceError::KrausNotIncoherent { index });
                }
            }
        }
        Ok(Self { kraus, dim })
    }

    /// Projectors onto the computational basis states.
    pub fn dephasing(dim: usize) -> Self {
        let kraus = (0..dim)
            .map(|i| {
                let mut k = CMatrix::zeros(dim, dim);
                k[(i, i)] = C64::new(1.0, 0.0);
                k
            })
            .collect();
        Self { kraus, dim }
    }

    /// The unitary `|perm[j]><j|`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let dim = perm.len();
        let mut seen = vec![false; dim];
        for &p in perm {
            if p >= dim || seen[p] {
                return Err(CoherenceError::InvalidParameter {
                    name: "perm",
                    value: p as f64,
                    reason: "not a permutation",
                });
            }
            seen[p] = true;
        }
        let mut k = CMatrix::zeros(dim, dim);
        for (j, &p) in perm.iter().enumerate() {
            k[(p, j)] = C64::new(1.0, 0.0);
        }
        Ok(Self {
            kraus: vec![k],
            dim,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            kraus: vec![CMatrix::identity(dim, dim)],
            dim,
        }
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `sum K rho K^dag`, renormalized to unit trace.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        self.check_dim(rho)?;
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for k in &self.kraus {
            out += k * rho.matrix() * k.adjoint();
        }
        let trace = out.trace().re;
        out.unscale_mut(trace);
        DensityMatrix::with_tolerance(out, rho.tolerances())
    }

    /// `sum_n p_n C(rho_n)` with `rho_n = K_n rho K_n^dag / p_n`; outcomes
    /// with `p_n` below `rho`'s trace tolerance are skipped.
    pub fn average_post_selected_coherence(&self, rho: &DensityMatrix) -> Result<f64> {
        self.check_dim(rho)?;
        let tol = rho.tolerances();
        let mut total = 0.0;
        for k in &self.kraus {
            let mut out = k * rho.matrix() * k.adjoint();
            let p = out.trace().re;
            if p <= tol.norm {
                continue;
            }
            out.unscale_mut(p);
            let branch = DensityMatrix::with_tolerance(out, tol)?;
            total += p * rel_ent_coherence_matrix(&branch)?.value;
        }
        Ok(total)
    }

    fn check_dim(&self, rho: &DensityMatrix) -> Result<()> {
        if rho.dim() != self.dim {
            return Err(CoherenceError::DimensionMismatch {
                expected: self.dim,
                actual: rho.dim(),
            });
        }
        Ok(())
    }
}

/// Validates `kraus` as an incoherent channel and applies it to `rho`.
pub fn apply_incoherent_channel(rho: &DensityMatrix, kraus: &[CMatrix]) -> Result<DensityMatrix> {
    IncoherentChannel::new(kraus.to_vec(), rho.tolerances().norm)?.apply(rho)
}
