//! Relative entropy of coherence of a two-mode state shared between an
//! inertial and a uniformly accelerated observer, for scalar and Dirac
//! field quantizations.
//!
//! All entropies and coherences are in bits.

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod coherence;
pub mod density;
pub mod dirac;
pub mod entropy;
pub mod error;
pub mod frames;
pub mod mode;
pub mod optimize;
pub mod scalar;
pub mod sweep;
pub mod tolerance;

pub use channel::{apply_incoherent_channel, IncoherentChannel};
pub use coherence::{rel_ent_coherence_matrix, CoherenceReport};
pub use density::{
    dephase, is_incoherent, random_density_matrix, von_neumann_entropy, CMatrix, DensityMatrix, C64,
};
pub use dirac::{
    dirac_coherence, dirac_coherence_loss, dirac_eigenvalues, dirac_limit_coherence, dirac_state,
    DiracState,
};
pub use entropy::{binary_entropy, shannon_entropy, ProbVector};
pub use error::{CoherenceError, Result};
pub use frames::{
    frame_from_acceleration, frame_from_parameter, DiracFrame, FieldKind, Frame, PhysicalParams,
    ScalarFrame,
};
pub use mode::ModeParameters;
pub use optimize::{golden_section_max, loss_curve, maximize_alpha, ridge, LossPoint, RidgePoint};
pub use scalar::{
    scalar_block, scalar_block_matrix, scalar_coherence, scalar_coherence_with, scalar_spectrum,
    ScalarBlock, ScalarSpectrum, SeriesOptions,
};
pub use sweep::{coherence_at, sweep, Acceleration, CurvePoint, Grid, SweepSpec};
pub use tolerance::Tolerances;
