//! Seeded generator for fixtures.
//!
//! SplitMix64: the state advances by `0x9E3779B97F4A7C15` and each output is
//! the state pushed through two xor-shift-multiply rounds and a final
//! xor-shift. Floats take the top 53 bits.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

pub struct FixtureRng(SplitMix64);

impl FixtureRng {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }
}
