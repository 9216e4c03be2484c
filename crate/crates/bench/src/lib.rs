//! Shared fixtures for the benchmarks.

use meandiv::corpus::{random_pairs, random_scalar_pairs};
use meandiv::Distribution;

pub const SEED: u64 = 0x5eed;

pub fn scalar_fixture(count: usize) -> Vec<(f64, f64)> {
    random_scalar_pairs(SEED, count)
}

/// One pair per support size.
pub fn distribution_fixture(len: usize) -> (Distribution, Distribution) {
    let mut rng = meandiv::corpus::rng(SEED ^ len as u64);
    (
        meandiv::corpus::random_distribution(&mut rng, len),
        meandiv::corpus::random_distribution(&mut rng, len),
    )
}

pub fn mixed_fixture(count: usize) -> Vec<(Distribution, Distribution)> {
    random_pairs(SEED, count)
}
