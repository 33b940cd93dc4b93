//! Seeded random stream used for all matrix sampling.
//!
//! Reproducibility contract: the stream is ChaCha12 keyed from a single
//! 64-bit seed (`ChaCha12Rng::seed_from_u64`, a fixed, portable expansion).
//! Uniform doubles take the top 53 bits of each 64-bit word, so `u ∈ [0, 1)`
//! is `(x >> 11) · 2⁻⁵³`. Gaussians come from the Box–Muller transform on
//! consecutive uniforms, one pair of normals per pair of uniforms. Bounded
//! integers use rejection sampling on the raw 64-bit words. None of these
//! mappings is platform dependent, so a seed identifies an instance exactly.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

pub(crate) struct SeededStream {
    rng: ChaCha12Rng,
}

impl SeededStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha12Rng::seed_from_u64(seed),
        }
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in [0, 1): 53 random mantissa bits.
    fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in (0, 1]; keeps the logarithm below finite.
    fn uniform_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// One Box–Muller pair: r·cosθ and r·sinθ with r = √(−2 ln u₁), θ = 2π u₂.
    fn gaussian_pair(&mut self) -> (f64, f64) {
        let u1 = self.uniform_open();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = std::f64::consts::TAU * u2;
        (r * theta.cos(), r * theta.sin())
    }

    /// Fills a buffer with independent standard normals.
    pub fn fill_gaussian(&mut self, out: &mut [f64]) {
        let mut chunks = out.chunks_exact_mut(2);
        for pair in &mut chunks {
            let (a, b) = self.gaussian_pair();
            pair[0] = a;
            pair[1] = b;
        }
        if let [last] = chunks.into_remainder() {
            *last = self.gaussian_pair().0;
        }
    }

    /// Unbiased integer in [0, bound): rejection on the largest multiple of
    /// `bound` below 2⁶⁴.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}
