//! Statistical checks on the stream generator: marginal moments, open-range
//! guarantees, and independence between adjacent streams.

use icbench_core::rng::{standard_normal, uniform01, StreamKey};

use proptest::prelude::*;

#[test]
fn uniform_mean_over_many_draws() {
    let mut stream = StreamKey::new(2024, 0).stream();
    let n = 100_000;
    let mean = (0..n).map(|_| stream.next_uniform01()).sum::<f64>() / n as f64;
    assert!((mean - 0.5).abs() < 0.01, "mean = {mean}");
}

#[test]
fn uniform_equidistribution_over_streams() {
    // one draw per stream must be as uniform as many draws from one stream
    let n = 100_000u64;
    let mut counts = [0u32; 10];
    for id in 0..n {
        let u = uniform01(StreamKey::new(5, id));
        counts[(u * 10.0) as usize] += 1;
    }
    let expected = n as f64 / 10.0;
    for (bin, &c) in counts.iter().enumerate() {
        let z = (c as f64 - expected) / (expected * 0.9).sqrt();
        assert!(z.abs() < 5.0, "bin {bin} count {c} (z = {z:.2})");
    }
}

#[test]
fn normal_variance_and_skewness() {
    let mut stream = StreamKey::new(7, 3).stream();
    let n = 1_000_000usize;
    let draws: Vec<f64> = (0..n).map(|_| stream.next_standard_normal()).collect();
    let mean = draws.iter().sum::<f64>() / n as f64;
    let var = draws.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n as f64;
    let m3 = draws.iter().map(|x| (x - mean).powi(3)).sum::<f64>() / n as f64;
    let skew = m3 / var.powf(1.5);
    assert!(mean.abs() < 0.005, "mean = {mean}");
    assert!((var - 1.0).abs() < 0.01, "var = {var}");
    assert!(skew.abs() < 0.02, "skew = {skew}");
}

#[test]
fn adjacent_streams_are_uncorrelated() {
    // lag-1 cross-correlation between streams i and i+1
    let n = 100_000u64;
    let xs: Vec<f64> = (0..=n).map(|id| uniform01(StreamKey::new(11, id))).collect();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / xs.len() as f64;
    let cov = xs
        .windows(2)
        .map(|w| (w[0] - mean) * (w[1] - mean))
        .sum::<f64>()
        / (xs.len() - 1) as f64;
    let corr = cov / var;
    assert!(corr.abs() < 0.01, "corr = {corr}");
}

#[test]
fn sequential_draws_within_stream_are_uncorrelated() {
    let mut stream = StreamKey::new(13, 0).stream();
    let xs: Vec<f64> = (0..100_000).map(|_| stream.next_uniform01()).collect();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / xs.len() as f64;
    let cov = xs
        .windows(2)
        .map(|w| (w[0] - mean) * (w[1] - mean))
        .sum::<f64>()
        / (xs.len() - 1) as f64;
    assert!((cov / var).abs() < 0.01, "corr = {}", cov / var);
}

proptest! {
    #[test]
    fn uniform_is_strictly_inside_unit_interval(seed: u64, id: u64) {
        let mut stream = StreamKey::new(seed, id).stream();
        for _ in 0..64 {
            let u = stream.next_uniform01();
            prop_assert!(u > 0.0 && u < 1.0, "u = {u}");
        }
    }

    #[test]
    fn keyed_draws_are_reproducible(seed: u64, id: u64) {
        prop_assert_eq!(
            uniform01(StreamKey::new(seed, id)).to_bits(),
            uniform01(StreamKey::new(seed, id)).to_bits()
        );
        prop_assert_eq!(
            standard_normal(StreamKey::new(seed, id)).to_bits(),
            standard_normal(StreamKey::new(seed, id)).to_bits()
        );
    }

    #[test]
    fn child_streams_differ_from_parent(seed: u64, id in 0u64..1_000_000) {
        let key = StreamKey::new(seed, id);
        let parent = uniform01(key);
        // a few children; collisions would break replication/bootstrap nesting
        for c in 0..8 {
            prop_assert_ne!(uniform01(key.child(c)).to_bits(), parent.to_bits());
        }
    }
}
