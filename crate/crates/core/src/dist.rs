//! Data-generating distributions: Gaussian and Laplace.
//!
//! Scale conventions used throughout the crate: the Gaussian is parameterised
//! by its variance, the Laplace by its scale (= mean absolute deviation from
//! the location). [`TruthSpec`] describes the process that generates data;
//! model-side parameters live in [`crate::models`].

use crate::error::{Error, Result};
use crate::rng::{Stream, StreamKey};
use crate::special::erf;
use std::f64::consts::PI;
use std::fmt;

/// Distribution family, used both for the truth and for fitted models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Gaussian,
    Laplace,
}

impl Family {
    /// Short machine-readable name, also used in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            Family::Gaussian => "gauss",
            Family::Laplace => "laplace",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gauss" | "gaussian" | "normal" => Ok(Family::Gaussian),
            "laplace" => Ok(Family::Laplace),
            other => Err(Error::InvalidArgument(format!("unknown family '{other}'"))),
        }
    }
}

/// The true data-generating distribution.
///
/// `scale` is the variance for a Gaussian truth and the Laplace scale for a
/// Laplace truth; it is validated to be finite and strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruthSpec {
    pub family: Family,
    pub location: f64,
    pub scale: f64,
}

impl TruthSpec {
    fn new(family: Family, location: f64, scale: f64) -> Result<Self> {
        if !location.is_finite() || !scale.is_finite() {
            return Err(Error::NonFinite { context: "distribution parameter" });
        }
        if scale <= 0.0 {
            return Err(Error::NonPositiveScale { value: scale });
        }
        Ok(TruthSpec { family, location, scale })
    }

    /// Gaussian truth with mean `mu` and variance `var`.
    pub fn gaussian(mu: f64, var: f64) -> Result<Self> {
        Self::new(Family::Gaussian, mu, var)
    }

    /// Laplace truth with location `mu` and scale `b`.
    pub fn laplace(mu: f64, b: f64) -> Result<Self> {
        Self::new(Family::Laplace, mu, b)
    }

    /// Standard (location 0, unit scale) truth of the given family.
    pub fn standard(family: Family) -> Self {
        TruthSpec { family, location: 0.0, scale: 1.0 }
    }

    /// Variance of the truth: sigma^2 for Gaussian, 2 b^2 for Laplace.
    pub fn variance(&self) -> f64 {
        match self.family {
            Family::Gaussian => self.scale,
            Family::Laplace => 2.0 * self.scale * self.scale,
        }
    }

    /// Third central moment (both families are symmetric).
    pub fn central_moment3(&self) -> f64 {
        0.0
    }

    /// Fourth central moment: 3 sigma^4 for Gaussian, 24 b^4 for Laplace.
    pub fn central_moment4(&self) -> f64 {
        match self.family {
            Family::Gaussian => 3.0 * self.scale * self.scale,
            Family::Laplace => {
                let b2 = self.scale * self.scale;
                24.0 * b2 * b2
            }
        }
    }

    /// Mean absolute deviation from the location: sqrt(2 sigma^2 / pi) for
    /// Gaussian, b for Laplace.
    pub fn mean_abs_deviation(&self) -> f64 {
        match self.family {
            Family::Gaussian => (2.0 * self.scale / PI).sqrt(),
            Family::Laplace => self.scale,
        }
    }

    /// E|X - c| for an arbitrary point `c`.
    pub fn abs_moment_about(&self, c: f64) -> f64 {
        match self.family {
            Family::Gaussian => abs_moment_gauss(c, self.location, self.scale),
            Family::Laplace => abs_moment_laplace(c, self.location, self.scale),
        }
    }

    /// Log density of one observation.
    pub fn logpdf(&self, x: f64) -> f64 {
        match self.family {
            Family::Gaussian => {
                let d = x - self.location;
                -0.5 * (2.0 * PI * self.scale).ln() - d * d / (2.0 * self.scale)
            }
            Family::Laplace => -(2.0 * self.scale).ln() - (x - self.location).abs() / self.scale,
        }
    }

    /// One draw from an open stream.
    pub fn draw(&self, stream: &mut Stream) -> f64 {
        match self.family {
            Family::Gaussian => self.location + self.scale.sqrt() * stream.next_standard_normal(),
            Family::Laplace => {
                // inverse CDF: x = mu - b * sign(u - 1/2) * ln(1 - 2|u - 1/2|);
                // u is strictly inside (0,1), so the log argument is in (0,1].
                let u = stream.next_uniform01() - 0.5;
                self.location - self.scale * u.signum() * (1.0 - 2.0 * u.abs()).ln()
            }
        }
    }
}

/// E|X - xi| when X ~ N(mu, sigma2).
pub fn abs_moment_gauss(xi: f64, mu: f64, sigma2: f64) -> f64 {
    let d = xi - mu;
    let s = (2.0 * sigma2).sqrt();
    d * erf(d / s) + (2.0 * sigma2 / PI).sqrt() * (-d * d / (2.0 * sigma2)).exp()
}

/// E|X - xi| when X ~ Laplace(mu, b).
pub fn abs_moment_laplace(xi: f64, mu: f64, b: f64) -> f64 {
    let d = (xi - mu).abs();
    d + b * (-d / b).exp()
}

/// Gaussian log density with explicit parameters (variance `tau2`).
pub fn gaussian_logpdf(x: f64, xi: f64, tau2: f64) -> Result<f64> {
    if !(x.is_finite() && xi.is_finite() && tau2.is_finite()) {
        return Err(Error::NonFinite { context: "gaussian_logpdf argument" });
    }
    if tau2 <= 0.0 {
        return Err(Error::NonPositiveScale { value: tau2 });
    }
    let d = x - xi;
    Ok(-0.5 * (2.0 * PI * tau2).ln() - d * d / (2.0 * tau2))
}

/// Laplace log density with explicit parameters (scale `tau`).
pub fn laplace_logpdf(x: f64, xi: f64, tau: f64) -> Result<f64> {
    if !(x.is_finite() && xi.is_finite() && tau.is_finite()) {
        return Err(Error::NonFinite { context: "laplace_logpdf argument" });
    }
    if tau <= 0.0 {
        return Err(Error::NonPositiveScale { value: tau });
    }
    Ok(-(2.0 * tau).ln() - (x - xi).abs() / tau)
}

/// An ordered collection of real observations.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    data: Vec<f64>,
}

impl Sample {
    /// Wrap raw observations; every value must be finite and there must be at
    /// least one.
    pub fn new(data: Vec<f64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::InsufficientData { min: 1, got: 0 });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite { context: "observation" });
        }
        Ok(Sample { data })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// True when every observation equals the first: scale estimates would
    /// collapse to zero.
    pub fn is_degenerate(&self) -> bool {
        self.data.iter().all(|&x| x == self.data[0])
    }
}

impl AsRef<[f64]> for Sample {
    fn as_ref(&self) -> &[f64] {
        &self.data
    }
}

/// Draw `n` observations from `truth` on the stream identified by `key`.
pub fn sample(truth: &TruthSpec, n: usize, key: StreamKey) -> Result<Sample> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot draw an empty sample".into()));
    }
    let mut stream = key.stream();
    let data = (0..n).map(|_| truth.draw(&mut stream)).collect();
    Sample::new(data)
}
