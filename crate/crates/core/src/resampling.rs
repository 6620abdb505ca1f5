//! Nonparametric bootstrap estimate of the log-likelihood bias.
//!
//! Each resample X* of the observed sample X contributes three differences
//! that telescope to the resampled bias l_{X*}(theta*) - l_X(theta*):
//!
//! - d1 = l_{X*}(theta*) - l_{X*}(theta_hat)
//! - d2 = l_{X*}(theta_hat) - l_X(theta_hat)
//! - d3 = l_X(theta_hat) - l_X(theta*)
//!
//! d2 has mean exactly zero over resamples and a variance that grows with n,
//! so the reduced average of d1 + d3 estimates the same quantity with far
//! less noise.

use crate::dist::{Family, Sample};
use crate::error::{Error, Result};
use crate::models::{self, FittedModel};
use crate::rng::StreamKey;

/// Maximum consecutive degenerate draws tolerated before giving up.
pub const MAX_REDRAW_ATTEMPTS: u32 = 100;

/// Bootstrap configuration: number of resamples and the key whose child
/// streams drive them (resample `i` uses `base_key.child(i)`).
#[derive(Debug, Clone, Copy)]
pub struct BootstrapConfig {
    pub nb: usize,
    pub base_key: StreamKey,
}

/// The three telescoping differences of one resample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResampleTerms {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl ResampleTerms {
    /// Full bias contribution d1 + d2 + d3.
    pub fn total(&self) -> f64 {
        self.d1 + self.d2 + self.d3
    }

    /// Variance-reduced contribution d1 + d3.
    pub fn reduced(&self) -> f64 {
        self.d1 + self.d3
    }
}

/// Bootstrap output: both bias averages plus the per-resample terms.
#[derive(Debug, Clone)]
pub struct BootstrapResult {
    /// Mean of d1 + d2 + d3 over resamples.
    pub c_star: f64,
    /// Mean of d1 + d3 over resamples.
    pub c_star_reduced: f64,
    pub terms: Vec<ResampleTerms>,
    /// Degenerate resamples that had to be redrawn.
    pub redraws: u64,
}

/// Estimate the bias of `family`'s maximised log-likelihood on `sample` by
/// iid resampling with replacement.
///
/// A resample whose observations are all equal cannot be fitted; it is
/// redrawn from the next child stream (`base_key.child(i + a * nb)` for
/// attempt `a`), and after [`MAX_REDRAW_ATTEMPTS`] consecutive failures the
/// whole call errors out.
pub fn bootstrap_bias(
    sample: &Sample,
    family: Family,
    cfg: &BootstrapConfig,
) -> Result<BootstrapResult> {
    if cfg.nb == 0 {
        return Err(Error::InvalidArgument("need at least one bootstrap resample".into()));
    }
    let base_fit = models::fit(family, sample)?;
    let ll_x_base = models::loglik(&base_fit.params, sample);

    let mut terms = Vec::with_capacity(cfg.nb);
    let mut redraws = 0u64;
    let mut buf = vec![0.0; sample.len()];
    for i in 0..cfg.nb {
        let (star_fit, star_sample) =
            draw_and_fit(sample, family, cfg, i, &mut redraws, &mut buf)?;
        let d1 = models::max_loglik(&star_fit) - models::loglik(&base_fit.params, &star_sample);
        let d2 = models::loglik(&base_fit.params, &star_sample) - ll_x_base;
        let d3 = ll_x_base - models::loglik(&star_fit.params, sample);
        terms.push(ResampleTerms { d1, d2, d3 });
    }

    let nb = cfg.nb as f64;
    let c_star = terms.iter().map(ResampleTerms::total).sum::<f64>() / nb;
    let c_star_reduced = terms.iter().map(ResampleTerms::reduced).sum::<f64>() / nb;
    Ok(BootstrapResult { c_star, c_star_reduced, terms, redraws })
}

/// Draw resample `i`, refitting until non-degenerate.
fn draw_and_fit(
    sample: &Sample,
    family: Family,
    cfg: &BootstrapConfig,
    i: usize,
    redraws: &mut u64,
    buf: &mut [f64],
) -> Result<(FittedModel, Sample)> {
    let xs = sample.as_slice();
    let n = xs.len();
    for attempt in 0..MAX_REDRAW_ATTEMPTS {
        let key = cfg.base_key.child((i + attempt as usize * cfg.nb) as u64);
        let mut stream = key.stream();
        for slot in buf.iter_mut() {
            *slot = xs[stream.next_index(n)];
        }
        let star = Sample::new(buf.to_vec()).expect("resample of finite data is finite");
        match models::fit(family, &star) {
            Ok(fit) => return Ok((fit, star)),
            Err(Error::DegenerateSample) => *redraws += 1,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ResamplingFailed { attempts: MAX_REDRAW_ATTEMPTS })
}
