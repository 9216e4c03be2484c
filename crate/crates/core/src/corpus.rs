//! Seeded random inputs for property checks and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::distribution::Distribution;

/// Entries below this are redrawn so every generated distribution is
/// comfortably strictly positive.
pub const MIN_ENTRY: f64 = 1e-9;
pub const MIN_SUPPORT: usize = 2;
pub const MAX_SUPPORT: usize = 64;
pub const SCALAR_LO: f64 = 1e-6;
pub const SCALAR_HI: f64 = 1e6;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Normalized exponential draws, i.e. a uniform sample from the simplex.
pub fn random_distribution<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Distribution {
    assert!(len > 0, "support must be non-empty");
    loop {
        let raw: Vec<f64> = (0..len).map(|_| rng.sample::<f64, _>(Exp1)).collect();
        let total: f64 = raw.iter().sum();
        let probs: Vec<f64> = raw.iter().map(|x| x / total).collect();
        if probs.iter().all(|&x| x >= MIN_ENTRY) {
            return Distribution::new(probs).expect("normalized draws are valid");
        }
    }
}

/// `count` pairs on a common support drawn from `MIN_SUPPORT..=MAX_SUPPORT`.
pub fn random_pairs(seed: u64, count: usize) -> Vec<(Distribution, Distribution)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let len = rng.random_range(MIN_SUPPORT..=MAX_SUPPORT);
            (
                random_distribution(&mut rng, len),
                random_distribution(&mut rng, len),
            )
        })
        .collect()
}

/// Log-uniform draw in `(SCALAR_LO, SCALAR_HI)`.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let (lo, hi) = (SCALAR_LO.ln(), SCALAR_HI.ln());
    rng.random_range(lo..hi).exp()
}

pub fn random_scalar_pairs(seed: u64, count: usize) -> Vec<(f64, f64)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| (random_scalar(&mut rng), random_scalar(&mut rng)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        assert_eq!(random_pairs(7, 3), random_pairs(7, 3));
        assert_ne!(random_pairs(7, 3), random_pairs(8, 3));
    }

    #[test]
    fn pairs_are_valid() {
        for (p, q) in random_pairs(1, 50) {
            assert_eq!(p.len(), q.len());
            assert!((MIN_SUPPORT..=MAX_SUPPORT).contains(&p.len()));
            assert!((p.sum() - 1.0).abs() < 1e-12);
            assert!(p.probs().iter().chain(q.probs()).all(|&x| x >= MIN_ENTRY));
        }
    }

    #[test]
    fn scalars_in_range() {
        for (a, b) in random_scalar_pairs(3, 200) {
            for x in [a, b] {
                assert!(x > SCALAR_LO * 0.999 && x < SCALAR_HI * 1.001, "{x}");
            }
        }
    }
}
