//! Densities and absolute moments against the quadrature oracle, and sampler
//! moments against the families' closed forms.

use icbench_core::dist::{
    abs_moment_gauss, abs_moment_laplace, gaussian_logpdf, laplace_logpdf, sample, Family,
    TruthSpec,
};
use icbench_core::rng::StreamKey;
use icbench_testutil::{integrate, integrate_split, mean, variance_ml};

#[test]
fn gaussian_density_has_unit_mass() {
    for (xi, tau2) in [(0.0, 1.0), (1.0, 4.0), (-2.5, 0.3), (10.0, 7.7f64)] {
        let sd = tau2.sqrt();
        let mass = integrate(
            |x| gaussian_logpdf(x, xi, tau2).unwrap().exp(),
            xi - 40.0 * sd,
            xi + 40.0 * sd,
            1e-10,
        );
        assert!((mass - 1.0).abs() < 1e-8, "mass({xi}, {tau2}) = {mass}");
    }
}

#[test]
fn laplace_density_has_unit_mass() {
    for (xi, tau) in [(0.0, 1.0), (1.0, 2.0), (-3.0, 0.25)] {
        let mass = integrate_split(
            |x| laplace_logpdf(x, xi, tau).unwrap().exp(),
            xi - 60.0 * tau,
            xi + 60.0 * tau,
            &[xi],
            1e-10,
        );
        assert!((mass - 1.0).abs() < 1e-8, "mass({xi}, {tau}) = {mass}");
    }
}

#[test]
fn gaussian_abs_moment_matches_quadrature() {
    for (xi, mu, sigma2) in [
        (0.0, 0.0, 1.0),
        (1.0, 0.0, 1.0),
        (0.3, -0.5, 2.0),
        (-4.0, 1.0, 0.5),
        (2.0, 2.0, 9.0f64),
    ] {
        let sd = sigma2.sqrt();
        // interior anchors keep the adaptive rule from sampling only the
        // integrand's zeros (it vanishes at the kink and in both tails)
        let q = integrate_split(
            |x| (x - xi).abs() * gaussian_logpdf(x, mu, sigma2).unwrap().exp(),
            mu - 12.0 * sd,
            mu + 12.0 * sd,
            &[xi, mu - 2.0 * sd, mu - 0.5 * sd, mu + 0.5 * sd, mu + 2.0 * sd],
            1e-11,
        );
        let got = abs_moment_gauss(xi, mu, sigma2);
        assert!((got - q).abs() < 1e-8, "E|x-{xi}| = {got}, quadrature {q}");
    }
}

#[test]
fn laplace_abs_moment_matches_quadrature() {
    for (xi, mu, b) in [
        (0.0, 0.0, 1.0),
        (1.0, 0.0, 1.0),
        (-0.7, 0.4, 2.5),
        (3.0, -1.0, 0.5),
    ] {
        let q = integrate_split(
            |x| (x - xi).abs() * laplace_logpdf(x, mu, b).unwrap().exp(),
            mu - 40.0 * b,
            mu + 40.0 * b,
            &[xi, mu, mu - b, mu + b],
            1e-11,
        );
        let got = abs_moment_laplace(xi, mu, b);
        assert!((got - q).abs() < 1e-8, "E|x-{xi}| = {got}, quadrature {q}");
    }
}

#[test]
fn abs_moment_tail_and_center_limits() {
    // centered: half-normal mean; far off-center: |xi - mu|
    assert!((abs_moment_gauss(0.0, 0.0, 1.0) - (2.0 / std::f64::consts::PI).sqrt()).abs() < 1e-15);
    assert!((abs_moment_gauss(100.0, 0.0, 1.0) - 100.0).abs() < 1e-12);
    assert!((abs_moment_laplace(0.0, 0.0, 1.0) - 1.0).abs() < 1e-15);
    assert!((abs_moment_laplace(1.0, 0.0, 1.0) - (1.0 + (-1.0f64).exp())).abs() < 1e-15);
}

#[test]
fn gaussian_sampler_moments() {
    let truth = TruthSpec::standard(Family::Gaussian);
    let s = sample(&truth, 1_000_000, StreamKey::new(101, 0)).unwrap();
    let xs = s.as_slice();
    let m = mean(xs);
    let v = variance_ml(xs);
    let m4 = xs.iter().map(|x| (x - m).powi(4)).sum::<f64>() / xs.len() as f64;
    assert!(m.abs() < 0.005, "mean = {m}");
    assert!((v - 1.0).abs() < 0.01, "var = {v}");
    assert!((m4 - 3.0).abs() < 0.05, "m4 = {m4}");
}

#[test]
fn laplace_sampler_moments() {
    let truth = TruthSpec::standard(Family::Laplace);
    let s = sample(&truth, 1_000_000, StreamKey::new(103, 0)).unwrap();
    let xs = s.as_slice();
    let m = mean(xs);
    let v = variance_ml(xs);
    let abs1 = xs.iter().map(|x| (x - m).abs()).sum::<f64>() / xs.len() as f64;
    let m4 = xs.iter().map(|x| (x - m).powi(4)).sum::<f64>() / xs.len() as f64;
    assert!(m.abs() < 0.005, "mean = {m}");
    assert!((abs1 - 1.0).abs() < 0.005, "E|x| = {abs1}");
    assert!((v - 2.0).abs() < 0.02, "var = {v}");
    assert!((m4 - 24.0).abs() < 1.0, "m4 = {m4}");
}

#[test]
fn scaled_laplace_sampler_moments() {
    // scale b: variance 2 b^2, mean absolute deviation b
    let truth = TruthSpec::laplace(5.0, 3.0).unwrap();
    let s = sample(&truth, 400_000, StreamKey::new(105, 0)).unwrap();
    let xs = s.as_slice();
    let m = mean(xs);
    let v = variance_ml(xs);
    assert!((m - 5.0).abs() < 0.03, "mean = {m}");
    assert!((v - 18.0).abs() < 0.3, "var = {v}");
}
