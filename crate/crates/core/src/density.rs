//! Small dense density matrices and the entropy kernels built on them.
//!
//! These are the finite-dimensional reference implementation: the Dirac
//! state is four-dimensional and each scalar-field block is two-dimensional,
//! so everything here is sized for `dim <= 8` and uses a full Hermitian
//! eigendecomposition.

use nalgebra::{Complex, DMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::entropy::{shannon_entropy, CompensatedSum, ProbVector};
use crate::error::{CoherenceError, Result};
use crate::tolerance::Tolerances;

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
    tol: Tolerances,
}

impl DensityMatrix {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, Tolerances::DEFAULT)
    }

    pub fn with_tolerance(matrix: CMatrix, tol: Tolerances) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows != cols || rows == 0 {
            return Err(CoherenceError::NotSquare { rows, cols });
        }
        let deviation = hermitian_deviation(&matrix);
        if deviation > tol.herm {
            return Err(CoherenceError::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > tol.norm || trace.im.abs() > tol.norm {
            return Err(CoherenceError::BadTrace { trace: trace.re });
        }
        let rho = Self { matrix, tol };
        if let Some(&min) = rho.eigenvalues().first() {
            if min < -tol.psd {
                return Err(CoherenceError::NotPositive { eigenvalue: min });
            }
        }
        Ok(rho)
    }

    /// Builds a density matrix from real entries given row by row.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let mut m = CMatrix::zeros(dim, dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(CoherenceError::NotSquare {
                    rows: dim,
                    cols: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = C64::new(x, 0.0);
            }
        }
        Self::new(m)
    }

    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        let dim = diag.len();
        let mut m = CMatrix::zeros(dim, dim);
        for (i, &p) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(p, 0.0);
        }
        Self::new(m)
    }

    /// The projector onto `psi / |psi|`.
    pub fn from_pure(psi: &[C64]) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if !(norm2 > 0.0) {
            return Err(CoherenceError::InvalidParameter {
                name: "psi",
                value: norm2,
                reason: "state vector must be nonzero",
            });
        }
        let dim = psi.len();
        let m = CMatrix::from_fn(dim, dim, |i, j| psi[i] * psi[j].conj() / norm2);
        Self::new(m)
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::from_diagonal(&vec![1.0 / dim as f64; dim])
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.matrix[(i, j)]
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.matrix[(i, i)].re).collect()
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let herm = (&self.matrix + self.matrix.adjoint()).scale(0.5);
        let mut ev: Vec<f64> = herm.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// `p * self + (1 - p) * other`.
    pub fn mix(&self, other: &DensityMatrix, p: f64) -> Result<DensityMatrix> {
        if self.dim() != other.dim() {
            return Err(CoherenceError::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(CoherenceError::InvalidParameter {
                name: "p",
                value: p,
                reason: "mixing weight must lie in [0, 1]",
            });
        }
        Self::with_tolerance(self.matrix.scale(p) + other.matrix.scale(1.0 - p), self.tol)
    }
}

fn hermitian_deviation(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut dev = 0.0f64;
    for i in 0..n {
        for j in 0..=i {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Spectrum of `rho` as a probability vector, after tolerance filtering.
///
/// Eigenvalues are clamped into `[0, 1]` and renormalized when the total
/// drift is below `tol.norm`.
pub fn spectrum(rho: &DensityMatrix) -> Result<ProbVector> {
    let tol = rho.tol;
    let mut ev = rho.eigenvalues();
    for &x in &ev {
        if x < -tol.psd {
            return Err(CoherenceError::NotPositive { eigenvalue: x });
        }
    }
    for x in ev.iter_mut() {
        *x = x.clamp(0.0, 1.0);
    }
    let total = ev.iter().copied().collect::<CompensatedSum>().value();
    if (total - 1.0).abs() > tol.norm {
        return Err(CoherenceError::NotNormalized {
            total,
            tol: tol.norm,
        });
    }
    for x in ev.iter_mut() {
        *x /= total;
    }
    ProbVector::with_tolerance(ev, 0.0, &tol)
}

/// Von Neumann entropy `S(rho) = -tr rho log2 rho`, in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(shannon_entropy(&spectrum(rho)?))
}

/// Removes every off-diagonal element.
pub fn dephase(rho: &DensityMatrix) -> DensityMatrix {
    let dim = rho.dim();
    let mut m = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        m[(i, i)] = C64::new(rho.matrix[(i, i)].re, 0.0);
    }
    DensityMatrix {
        matrix: m,
        tol: rho.tol,
    }
}

/// True iff every off-diagonal magnitude is at most `tol`.
pub fn is_incoherent(rho: &DensityMatrix, tol: f64) -> bool {
    let dim = rho.dim();
    (0..dim).all(|i| (0..dim).all(|j| i == j || rho.matrix[(i, j)].norm() <= tol))
}

/// A full-rank random state `G G^dag / tr(G G^dag)` with complex Gaussian `G`.
///
/// Deterministic in `seed`.
pub fn random_density_matrix(dim: usize, seed: u64) -> Result<DensityMatrix> {
    if dim < 1 {
        return Err(CoherenceError::InvalidParameter {
            name: "dim",
            value: dim as f64,
            reason: "dimension must be at least 1",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = CMatrix::from_fn(dim, dim, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        C64::new(re, im)
    });
    let mut m = &g * g.adjoint();
    let trace = m.trace().re;
    m.unscale_mut(trace);
    // Exact Hermitian symmetry; the product leaves rounding-level asymmetry.
    let m = (&m + m.adjoint()).scale(0.5);
    DensityMatrix::new(m)
}
