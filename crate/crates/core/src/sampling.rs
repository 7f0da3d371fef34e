//! Seeded sampling of rational test points.
//!
//! Identities that are symbolic in `(a, b, c)` are certified by exact
//! evaluation at sampled rational triples. Sampling uses ChaCha8 so a seed
//! reproduces the same triples on every platform.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergeom::HypergeomParams;
use crate::rational::{is_nonpositive_integer, Rational};

pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// `p/q` with `|p| <= 12`, `1 <= q <= 6`.
    pub fn rational(&mut self) -> Rational {
        let p: i64 = self.rng.gen_range(-12..=12);
        let q: i64 = self.rng.gen_range(1..=6);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != Rational::from_integer(0.into()) {
                return r;
            }
        }
    }

    /// A triple with none of `a`, `b`, `c` a non-positive integer, so every
    /// `phi_k` is defined and nonzero at any order.
    pub fn params(&mut self) -> HypergeomParams {
        let mut generic = || loop {
            let r = self.rational();
            if !is_nonpositive_integer(&r) {
                return r;
            }
        };
        let a = generic();
        let b = generic();
        let c = generic();
        HypergeomParams::new(a, b, c)
    }

    pub fn index(&mut self, max_inclusive: usize) -> usize {
        self.rng.gen_range(0..=max_inclusive)
    }
}

/// The first `count` triples drawn from `seed`.
pub fn sample_params(seed: u64, count: usize) -> Vec<HypergeomParams> {
    let mut s = RationalSampler::new(seed);
    (0..count).map(|_| s.params()).collect()
}
