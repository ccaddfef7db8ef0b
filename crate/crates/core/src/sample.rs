//! Seeded parameter sampling shared by the verification driver and tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rational::{rat, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero `p/q` with `1 ≤ |p| ≤ max` and `1 ≤ q ≤ max`.
pub fn nonzero_rational<R: Rng>(rng: &mut R, max: i64) -> Rational {
    let p = rng.gen_range(1..=max) * if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(p, rng.gen_range(1..=max))
}

/// `count` pairs of nonzero rationals with height at most 9.
pub fn random_pairs(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut r = rng(seed);
    (0..count).map(|_| (nonzero_rational(&mut r, 9), nonzero_rational(&mut r, 9))).collect()
}

/// `count` triples `(a, b, x)`, all nonzero.
pub fn random_triples(seed: u64, count: usize) -> Vec<(Rational, Rational, Rational)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| (nonzero_rational(&mut r, 9), nonzero_rational(&mut r, 9), nonzero_rational(&mut r, 9)))
        .collect()
}

/// Angles uniform in `(0, π)`.
pub fn thetas(seed: u64, count: usize) -> Vec<f64> {
    let mut r = rng(seed);
    (0..count).map(|_| r.gen_range(1e-3..std::f64::consts::PI - 1e-3)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn deterministic_and_nonzero() {
        assert_eq!(random_pairs(7, 20), random_pairs(7, 20));
        assert_ne!(random_pairs(7, 20), random_pairs(8, 20));
        assert!(random_triples(3, 50).iter().all(|(a, b, x)| !a.is_zero() && !b.is_zero() && !x.is_zero()));
    }
}
