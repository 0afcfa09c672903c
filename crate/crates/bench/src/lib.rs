//! Shared input builders for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spike_quant::{ContinuousSignal, DiscreteSignal, Segment};

/// Uniform random samples in [-scale, scale], reproducible per seed.
pub fn random_discrete(n: usize, scale: f64, seed: u64) -> DiscreteSignal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DiscreteSignal::new((0..n).map(|_| rng.random_range(-scale..scale)).collect())
        .expect("nonempty finite samples")
}

/// Piecewise-constant signal with `m` unit-length segments of random value.
pub fn random_piecewise_constant(m: usize, scale: f64, seed: u64) -> ContinuousSignal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let segments = (0..m)
        .map(|k| Segment {
            start: k as f64,
            end: (k + 1) as f64,
            value: rng.random_range(-scale..scale),
        })
        .collect();
    ContinuousSignal::new(segments, Vec::new()).expect("contiguous segments")
}
