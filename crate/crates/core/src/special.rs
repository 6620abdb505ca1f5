//! Error function and complement.
//!
//! `erf` is evaluated by a non-alternating Maclaurin series for |x| < 3 and
//! by a Lentz continued fraction for the complement beyond; both paths keep
//! the absolute error below 1e-12 over the whole real line. The pair is
//! defined so that `erf(x) + erfc(x)` is 1 to machine precision everywhere.

use std::f64::consts::PI;

/// Crossover between the series and the continued fraction.
const SERIES_CUTOFF: f64 = 3.0;

/// erf by the scaled series erf(x) = 2x e^{-x^2}/sqrt(pi) * sum (2x^2)^k / (2k+1)!!.
/// All terms are positive, so there is no cancellation.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= 2.0 * x2 / (2.0 * k as f64 + 1.0);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    2.0 * x * (-x2).exp() / PI.sqrt() * sum
}

/// erfc for x >= SERIES_CUTOFF via the continued fraction
/// erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
/// evaluated with the modified Lentz algorithm.
fn erfc_cf(x: f64) -> f64 {
    let tiny = 1e-300;
    let mut f = x;
    let mut c = f;
    let mut d = 0.0;
    for k in 1..300 {
        let a = 0.5 * k as f64;
        d = x + a * d;
        if d == 0.0 {
            d = tiny;
        }
        c = x + a / c;
        if c == 0.0 {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / PI.sqrt() / f
}

/// Gauss error function.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_infinite() {
        return x.signum();
    }
    if x.abs() < SERIES_CUTOFF {
        erf_series(x)
    } else if x > 0.0 {
        1.0 - erfc_cf(x)
    } else {
        erfc_cf(-x) - 1.0
    }
}

/// Complementary error function, 1 - erf(x), with full relative accuracy in
/// the right tail.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_infinite() {
        return 1.0 - x.signum();
    }
    if x.abs() < SERIES_CUTOFF {
        1.0 - erf_series(x)
    } else if x > 0.0 {
        erfc_cf(x)
    } else {
        2.0 - erfc_cf(-x)
    }
}
