//! Model fitting and log-likelihood evaluation.
//!
//! Both candidate models have two parameters (location, scale). Maximum
//! likelihood estimates are closed-form: mean and 1/N variance for the
//! Gaussian, median and mean absolute deviation for the Laplace. The Laplace
//! median uses the midpoint of the central pair for even sizes, which keeps
//! the estimator symmetric in the observations.

use crate::dist::{Family, Sample, TruthSpec};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Location/scale parameters of a candidate model.
///
/// `scale` is the variance for a Gaussian model and the mean absolute
/// deviation for a Laplace model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub family: Family,
    pub location: f64,
    pub scale: f64,
}

impl ModelParams {
    pub fn new(family: Family, location: f64, scale: f64) -> Result<Self> {
        if !location.is_finite() || !scale.is_finite() {
            return Err(Error::NonFinite { context: "model parameter" });
        }
        if scale <= 0.0 {
            return Err(Error::NonPositiveScale { value: scale });
        }
        Ok(ModelParams { family, location, scale })
    }
}

/// A model fitted to a particular sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FittedModel {
    pub params: ModelParams,
    pub n: usize,
}

/// Maximum-likelihood fit of `family` to `sample`.
///
/// Needs at least two observations and a sample that is not entirely
/// constant (otherwise the scale estimate collapses).
pub fn fit(family: Family, sample: &Sample) -> Result<FittedModel> {
    let xs = sample.as_slice();
    let n = xs.len();
    if n < 2 {
        return Err(Error::InsufficientData { min: 2, got: n });
    }
    if sample.is_degenerate() {
        return Err(Error::DegenerateSample);
    }
    let nf = n as f64;
    let (location, scale) = match family {
        Family::Gaussian => {
            let mean = xs.iter().sum::<f64>() / nf;
            let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / nf;
            (mean, var)
        }
        Family::Laplace => {
            let med = median(xs);
            let mad = xs.iter().map(|x| (x - med).abs()).sum::<f64>() / nf;
            (med, mad)
        }
    };
    Ok(FittedModel { params: ModelParams::new(family, location, scale)?, n })
}

/// Median with the even-size midpoint convention; O(n) via selection.
fn median(xs: &[f64]) -> f64 {
    let n = xs.len();
    let mut buf = xs.to_vec();
    let (low, kth, _) = buf.select_nth_unstable_by(n / 2, f64::total_cmp);
    if n % 2 == 1 {
        *kth
    } else {
        // midpoint of the central pair: the largest element below position n/2
        let below = low.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        0.5 * (below + *kth)
    }
}

/// Maximised log-likelihood of a fitted model over its own sample.
pub fn max_loglik(fit: &FittedModel) -> f64 {
    let n = fit.n as f64;
    match fit.params.family {
        Family::Gaussian => -0.5 * n * ((2.0 * PI * fit.params.scale).ln() + 1.0),
        Family::Laplace => -n * ((2.0 * fit.params.scale).ln() + 1.0),
    }
}

/// Log-likelihood of arbitrary parameters over an arbitrary sample.
pub fn loglik(params: &ModelParams, sample: &Sample) -> f64 {
    let xs = sample.as_slice();
    let n = xs.len() as f64;
    match params.family {
        Family::Gaussian => {
            let ss: f64 = xs.iter().map(|x| (x - params.location) * (x - params.location)).sum();
            -0.5 * n * (2.0 * PI * params.scale).ln() - ss / (2.0 * params.scale)
        }
        Family::Laplace => {
            let sa: f64 = xs.iter().map(|x| (x - params.location).abs()).sum();
            -n * (2.0 * params.scale).ln() - sa / params.scale
        }
    }
}

/// Per-observation expected log-likelihood E[log f(Y | params)] under `truth`,
/// in closed form for all four family combinations.
pub fn expected_loglik(params: &ModelParams, truth: &TruthSpec) -> f64 {
    match params.family {
        Family::Gaussian => {
            // E (Y - xi)^2 = (mu - xi)^2 + Var(Y)
            let d = truth.location - params.location;
            let second = d * d + truth.variance();
            -0.5 * (2.0 * PI * params.scale).ln() - second / (2.0 * params.scale)
        }
        Family::Laplace => {
            -(2.0 * params.scale).ln() - truth.abs_moment_about(params.location) / params.scale
        }
    }
}

/// Parameters that maximise the expected log-likelihood of `family` under
/// `truth` (the projection of the truth onto the model).
pub fn pseudo_true(family: Family, truth: &TruthSpec) -> ModelParams {
    let (location, scale) = match (family, truth.family) {
        // matching family: the projection is the truth itself
        (Family::Gaussian, Family::Gaussian) => (truth.location, truth.scale),
        (Family::Laplace, Family::Laplace) => (truth.location, truth.scale),
        // Gaussian model absorbs the Laplace variance 2 b^2
        (Family::Gaussian, Family::Laplace) => (truth.location, 2.0 * truth.scale * truth.scale),
        // Laplace model matches the Gaussian mean absolute deviation
        (Family::Laplace, Family::Gaussian) => (truth.location, (2.0 * truth.scale / PI).sqrt()),
    };
    // scale > 0 follows from truth.scale > 0
    ModelParams { family, location, scale }
}
