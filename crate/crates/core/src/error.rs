use thiserror::Error;

/// Errors produced by the coherence kernels and the field models.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoherenceError {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("negative probability {value} at index {index}")]
    NegativeProbability { index: usize, value: f64 },

    #[error("probability mass {total} is not normalized (tolerance {tol})")]
    NotNormalized { total: f64, tol: f64 },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max deviation {deviation}")]
    NotHermitian { deviation: f64 },

    #[error("matrix trace {trace} differs from 1")]
    BadTrace { trace: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue}")]
    NotPositive { eigenvalue: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("Kraus operators are not complete: max deviation of sum K^dag K from identity is {deviation}")]
    KrausIncomplete { deviation: f64 },

    #[error("Kraus operator {index} maps an incoherent basis state to a coherent one")]
    KrausNotIncoherent { index: usize },

    #[error("block {n} has zero weight")]
    ZeroWeightBlock { n: u64 },

    #[error(
        "series tolerance {requested:e} at r = {r} needs more than {max_terms} terms; \
         best achievable tolerance with that cap is {achievable:e}"
    )]
    ToleranceInfeasible {
        requested: f64,
        achievable: f64,
        r: f64,
        max_terms: u64,
    },

    #[error("objective is not unimodal on [0, 1]: {maxima} local maxima found by coarse scan")]
    NotUnimodal { maxima: usize },
}

pub type Result<T> = std::result::Result<T, CoherenceError>;
