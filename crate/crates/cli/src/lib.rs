//! Command-line front end for `coherence-core`: point evaluation, sweeps,
//! maximization over the amplitude, and figure data in CSV or JSON.

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod output;
pub mod run;

pub use config::{AlphaSpec, Command, Keyword, OutputFormat, ParamSpec, PhysicalSpec, RunConfig};
pub use error::CliError;
pub use output::{format_float, Cell, Table};
pub use run::{load_config, render, run, Rendered};
