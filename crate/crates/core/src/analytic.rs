//! Closed-form penalty terms: the classical count-of-parameters penalty, its
//! finite-sample correction, and the scenario-specific expansions of the
//! exact bias in powers of 1/n.
//!
//! All values are on the bias scale (the additive correction to the maximised
//! log-likelihood); multiply by two for the conventional criterion scale.

use crate::dist::Family;
use crate::error::{Error, Result};
use std::f64::consts::{PI, SQRT_2};

/// A (data family, model family) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scenario {
    pub truth: Family,
    pub model: Family,
}

impl Scenario {
    pub fn new(truth: Family, model: Family) -> Self {
        Scenario { truth, model }
    }

    /// All four combinations, Gaussian-first.
    pub fn all() -> [Scenario; 4] {
        [
            Scenario::new(Family::Gaussian, Family::Gaussian),
            Scenario::new(Family::Gaussian, Family::Laplace),
            Scenario::new(Family::Laplace, Family::Gaussian),
            Scenario::new(Family::Laplace, Family::Laplace),
        ]
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} data / {} model", self.truth, self.model)
    }
}

/// Number of series terms retained beyond the leading constant.
///
/// Order p keeps refinements up to 1/n^p where the scenario's expansion
/// provides them; scenarios with an exact closed form ignore the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesOrder(u32);

impl SeriesOrder {
    pub const MAX_POWER: u32 = 3;

    pub fn new(power: u32) -> Result<Self> {
        if (1..=Self::MAX_POWER).contains(&power) {
            Ok(SeriesOrder(power))
        } else {
            Err(Error::InvalidArgument(format!(
                "series order must be between 1 and {}, got {power}",
                Self::MAX_POWER
            )))
        }
    }

    pub fn max() -> Self {
        SeriesOrder(Self::MAX_POWER)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Parameter-count penalty on the bias scale.
pub fn aic_penalty(k: usize) -> f64 {
    k as f64
}

/// Finite-sample corrected penalty on the criterion scale: 2 n k / (n - k - 2).
pub fn sugiura_correction(n: usize, k: usize) -> Result<f64> {
    Ok(2.0 * sugiura_bias(n, k)?)
}

/// Finite-sample corrected penalty on the bias scale: n k / (n - k - 2).
pub fn sugiura_bias(n: usize, k: usize) -> Result<f64> {
    if n <= k + 2 {
        return Err(Error::UndefinedCorrection { n, k });
    }
    Ok((n * k) as f64 / (n - k - 2) as f64)
}

// Coefficients of the per-observation expansion for a Laplace model fitted to
// Gaussian data; the bias is n * (A1/n + A2/n^2 + A3/n^3 + ...).
const GL_A1: f64 = (2.0 * SQRT_2 + 1.0) * PI / 4.0 - 1.0;
const GL_A2: f64 =
    (4.0 * SQRT_2 + 31.0) * PI * PI / 32.0 - (2.0 * SQRT_2 + 13.0) * PI / 4.0 + 3.0;
const GL_A3: f64 = (46.0 * SQRT_2 + 217.0) * PI * PI * PI / 128.0
    - (44.0 * SQRT_2 + 339.0) * PI * PI / 32.0
    + (6.0 * SQRT_2 + 87.0) * PI / 4.0
    - 15.0;

/// Scenario-specific finite-sample bias value at sample size `n`, truncated
/// at `order`.
///
/// - Gaussian data, Gaussian model: exact, 2n/(n-3); requires n > 3.
/// - Laplace data, Gaussian model: 7/2 + 27/(2n), plus 67/(2n^2) at order >= 2.
/// - Laplace data, Laplace model: 2 - sqrt(2)/(3 sqrt(pi n)) + 45/(8n).
/// - Gaussian data, Laplace model: A1 + A2/n + A3/n^2, truncated at `order`.
pub fn cn(scenario: Scenario, n: usize, order: SeriesOrder) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample size must be positive".into()));
    }
    let nf = n as f64;
    match (scenario.truth, scenario.model) {
        (Family::Gaussian, Family::Gaussian) => {
            if n <= 3 {
                return Err(Error::UndefinedForSampleSize { n, min: 4 });
            }
            Ok(2.0 * nf / (nf - 3.0))
        }
        (Family::Laplace, Family::Gaussian) => {
            let mut v = 3.5 + 27.0 / (2.0 * nf);
            if order.get() >= 2 {
                v += 67.0 / (2.0 * nf * nf);
            }
            Ok(v)
        }
        (Family::Laplace, Family::Laplace) => {
            Ok(2.0 - SQRT_2 / (3.0 * (PI * nf).sqrt()) + 45.0 / (8.0 * nf))
        }
        (Family::Gaussian, Family::Laplace) => {
            let mut v = GL_A1;
            if order.get() >= 2 {
                v += GL_A2 / nf;
            }
            if order.get() >= 3 {
                v += GL_A3 / (nf * nf);
            }
            Ok(v)
        }
    }
}

/// The truncation each scenario's reference table was computed with: the
/// exact form where it exists, first order for Laplace data under a Gaussian
/// model, and the full printed series otherwise.
pub fn table_order(scenario: Scenario) -> SeriesOrder {
    match (scenario.truth, scenario.model) {
        (Family::Laplace, Family::Gaussian) => SeriesOrder(1),
        _ => SeriesOrder::max(),
    }
}

/// `cn` at the table truncation — the value the reproduction tables print.
pub fn cn_table(scenario: Scenario, n: usize) -> Result<f64> {
    cn(scenario, n, table_order(scenario))
}
