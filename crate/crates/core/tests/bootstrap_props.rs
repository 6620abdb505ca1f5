//! Distributional properties of the bootstrap terms: the middle difference
//! averages to zero, and dropping it shrinks the resample variance without
//! moving the mean.

use icbench_core::dist::{sample, Family, TruthSpec};
use icbench_core::resampling::{bootstrap_bias, BootstrapConfig, ResampleTerms};
use icbench_core::rng::StreamKey;

fn var(xs: &[f64]) -> f64 {
    let m = xs.iter().sum::<f64>() / xs.len() as f64;
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64
}

#[test]
fn mean_d2_is_compatible_with_zero() {
    // E*[d2] = 0 exactly (the resample mean of l_X(theta_hat) terms cancels),
    // so c_star and c_star_reduced estimate the same quantity
    for (truth_family, model) in [
        (Family::Gaussian, Family::Gaussian),
        (Family::Laplace, Family::Laplace),
        (Family::Laplace, Family::Gaussian),
    ] {
        let truth = TruthSpec::standard(truth_family);
        let s = sample(&truth, 50, StreamKey::new(71, model as u64)).unwrap();
        let cfg = BootstrapConfig { nb: 4000, base_key: StreamKey::new(71, 99).child(0) };
        let r = bootstrap_bias(&s, model, &cfg).unwrap();
        let d2s: Vec<f64> = r.terms.iter().map(|t| t.d2).collect();
        let mean_d2 = d2s.iter().sum::<f64>() / d2s.len() as f64;
        let se = (var(&d2s) / d2s.len() as f64).sqrt();
        assert!(mean_d2.abs() < 3.5 * se, "mean d2 = {mean_d2} (se {se})");
        assert!((r.c_star - r.c_star_reduced - mean_d2).abs() < 1e-10);
    }
}

#[test]
fn dropping_d2_reduces_resample_variance() {
    // at n >= 100 the d2 variance dominates, so the reduction must be strict
    // for every truth/model combination
    for truth_family in [Family::Gaussian, Family::Laplace] {
        for model in [Family::Gaussian, Family::Laplace] {
            let truth = TruthSpec::standard(truth_family);
            let s = sample(&truth, 100, StreamKey::new(73, model as u64)).unwrap();
            let cfg = BootstrapConfig { nb: 2000, base_key: StreamKey::new(73, 7).child(0) };
            let r = bootstrap_bias(&s, model, &cfg).unwrap();
            let reduced: Vec<f64> = r.terms.iter().map(ResampleTerms::reduced).collect();
            let total: Vec<f64> = r.terms.iter().map(ResampleTerms::total).collect();
            assert!(
                var(&reduced) < var(&total),
                "{truth_family:?}/{model:?}: var {} !< {}",
                var(&reduced),
                var(&total)
            );
        }
    }
}

#[test]
fn reduction_gain_grows_with_sample_size() {
    // var(d2) is proportional to n while var(d1 + d3) stays O(1)
    let truth = TruthSpec::standard(Family::Gaussian);
    let mut ratios = Vec::new();
    for n in [25usize, 100, 400] {
        let s = sample(&truth, n, StreamKey::new(79, n as u64)).unwrap();
        let cfg = BootstrapConfig { nb: 3000, base_key: StreamKey::new(79, 0).child(0) };
        let r = bootstrap_bias(&s, Family::Gaussian, &cfg).unwrap();
        let reduced: Vec<f64> = r.terms.iter().map(ResampleTerms::reduced).collect();
        let total: Vec<f64> = r.terms.iter().map(ResampleTerms::total).collect();
        ratios.push(var(&total) / var(&reduced));
    }
    assert!(
        ratios[0] < ratios[1] && ratios[1] < ratios[2],
        "variance ratios should grow with n: {ratios:?}"
    );
}
