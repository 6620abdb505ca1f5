//! Bias corrections for model selection with Gaussian and Laplace models.
//!
//! When a two-parameter location/scale model is fitted by maximum likelihood,
//! the maximised log-likelihood overestimates the expected log-likelihood on
//! fresh data. This crate computes that bias for every combination of
//! Gaussian/Laplace data and Gaussian/Laplace model, by several routes:
//!
//! - [`montecarlo`]: the decomposition-based Monte Carlo ground truth;
//! - [`analytic`]: the parameter-count penalty, its finite-sample correction,
//!   and scenario-specific series expansions in powers of 1/n;
//! - [`infomat`]: the information-matrix trace tr(I J^-1), analytic and
//!   plug-in;
//! - [`resampling`]: a variance-reduced nonparametric bootstrap.
//!
//! Everything is deterministic: replications draw from counter-based streams
//! ([`rng`]) and reductions run in a fixed order, so results are
//! bit-identical across runs and thread counts. With the default `parallel`
//! feature, replications fan out over a rayon thread pool; without it the
//! same chunks run on one thread.

pub mod analytic;
pub mod dist;
pub mod error;
pub mod infomat;
pub mod models;
pub mod montecarlo;
pub mod report;
pub mod resampling;
pub mod rng;
pub mod special;
pub mod stats;

pub use error::{Error, Result};
