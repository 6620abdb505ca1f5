//! Fisher-type information matrices and the trace correction tr(I J^{-1}).
//!
//! `I` is the covariance of the score and `J` the negated expected Hessian,
//! both evaluated at the projection of the truth onto the model. For the
//! Laplace model the location coordinate of the expected Hessian vanishes
//! (the score is a step function), so `J` is structurally singular and the
//! trace correction does not exist.

use crate::analytic::Scenario;
use crate::dist::{Family, Sample, TruthSpec};
use crate::error::{Error, Result};
use crate::models;

/// Score covariance `I` and negated expected Hessian `J`, row-major 2x2 in
/// (location, scale) order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoMatrices {
    pub i: [[f64; 2]; 2],
    pub j: [[f64; 2]; 2],
    /// Set when `J` is singular by construction, not merely numerically.
    pub singular_j: bool,
}

/// Matrices for a Gaussian model with variance `tau2`, under a truth whose
/// central moments about the model location are `mu3` and `mu4`.
///
/// Requires `tau2 > 0` and `mu4 >= tau2^2` (any distribution satisfies the
/// latter with equality only in the degenerate two-point case).
pub fn info_gauss_model(tau2: f64, mu3: f64, mu4: f64) -> Result<InfoMatrices> {
    if !(tau2.is_finite() && mu3.is_finite() && mu4.is_finite()) {
        return Err(Error::NonFinite { context: "moment argument" });
    }
    if tau2 <= 0.0 {
        return Err(Error::NonPositiveScale { value: tau2 });
    }
    if mu4 < tau2 * tau2 {
        return Err(Error::InvalidArgument(format!(
            "fourth moment {mu4} below squared variance {}",
            tau2 * tau2
        )));
    }
    let t4 = tau2 * tau2;
    let t6 = t4 * tau2;
    let t8 = t4 * t4;
    let i = [
        [1.0 / tau2, mu3 / (2.0 * t6)],
        [mu3 / (2.0 * t6), mu4 / (4.0 * t8) - 1.0 / (4.0 * t4)],
    ];
    let j = [[1.0 / tau2, 0.0], [0.0, 1.0 / (2.0 * t4)]];
    Ok(InfoMatrices { i, j, singular_j: false })
}

/// Matrices for a Laplace model with scale `tau`, under a truth with mean
/// absolute deviation `delta1` and second moment `mu2` about the model
/// location.
pub fn info_laplace_model(tau: f64, delta1: f64, mu2: f64) -> Result<InfoMatrices> {
    if !(tau.is_finite() && delta1.is_finite() && mu2.is_finite()) {
        return Err(Error::NonFinite { context: "moment argument" });
    }
    if tau <= 0.0 {
        return Err(Error::NonPositiveScale { value: tau });
    }
    let t2 = tau * tau;
    let t3 = t2 * tau;
    let t4 = t2 * t2;
    let i = [
        [1.0 / t2, 0.0],
        [0.0, 1.0 / t2 - 2.0 * delta1 / t3 + mu2 / t4],
    ];
    // location-location entry of the expected Hessian is identically zero
    let j = [[0.0, 0.0], [0.0, -1.0 / t2 + 2.0 * delta1 / t3]];
    Ok(InfoMatrices { i, j, singular_j: true })
}

/// Matrices of `scenario`'s model at the projection of the standard truth.
pub fn scenario_matrices(scenario: Scenario) -> Result<InfoMatrices> {
    let truth = TruthSpec::standard(scenario.truth);
    let theta0 = models::pseudo_true(scenario.model, &truth);
    match scenario.model {
        Family::Gaussian => {
            // model location equals the truth location, so moments about the
            // location are the truth's central moments
            info_gauss_model(theta0.scale, truth.central_moment3(), truth.central_moment4())
        }
        Family::Laplace => {
            info_laplace_model(theta0.scale, truth.mean_abs_deviation(), truth.variance())
        }
    }
}

/// tr(I J^{-1}); fails with [`Error::SingularHessian`] when `J` has no
/// inverse.
pub fn tic_trace(m: &InfoMatrices) -> Result<f64> {
    let det = m.j[0][0] * m.j[1][1] - m.j[0][1] * m.j[1][0];
    if m.singular_j || det == 0.0 || !det.is_finite() {
        return Err(Error::SingularHessian);
    }
    // tr(I adj(J)) / det(J)
    let tr = m.i[0][0] * m.j[1][1] - m.i[0][1] * m.j[1][0] - m.i[1][0] * m.j[0][1]
        + m.i[1][1] * m.j[0][0];
    Ok(tr / det)
}

/// Plug-in trace estimate for the Gaussian model on one sample:
/// (1 + m4_hat / var_hat^2) / 2, with maximum-likelihood moment estimates
/// centered at the sample mean.
pub fn empirical_tic_gauss(sample: &Sample) -> Result<f64> {
    let fit = models::fit(Family::Gaussian, sample)?;
    let xs = sample.as_slice();
    let n = xs.len() as f64;
    let mean = fit.params.location;
    let var = fit.params.scale;
    let m4 = xs.iter().map(|x| (x - mean).powi(4)).sum::<f64>() / n;
    Ok(0.5 * (1.0 + m4 / (var * var)))
}
