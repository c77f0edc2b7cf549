//! Deterministic counter-based random stream for trajectory sampling.
//!
//! Streams are value-semantic and splittable: trajectory i of a run seeded
//! with s draws from `GaussianStream::new(s, i)`, so results do not depend on
//! how trajectories are scheduled across workers.

use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

/// A seeded, counter-based source of uniform and Gaussian deviates.
///
/// Backed by the ChaCha12 counter-mode stream cipher: the (seed, stream)
/// pair fully determines the sequence on every platform. Gaussian pairs come
/// from the Box-Muller transform, which consumes exactly two uniforms per
/// pair and so keeps the stream position predictable.
#[derive(Debug, Clone)]
pub struct GaussianStream {
    rng: ChaCha12Rng,
}

impl GaussianStream {
    /// Stream `stream_index` of the family identified by `seed`.
    pub fn new(seed: u64, stream_index: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(stream_index);
        Self { rng }
    }

    /// Uniform deviate in the half-open interval [0, 1).
    pub fn uniform(&mut self) -> f64 {
        // 53 random bits into the mantissa.
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform deviate in the half-open interval (0, 1].
    fn uniform_open_left(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) as f64 + 1.0) * (1.0 / (1u64 << 53) as f64)
    }

    /// Two independent standard-normal deviates (Box-Muller).
    pub fn gaussian_pair(&mut self) -> (f64, f64) {
        let u1 = self.uniform_open_left();
        let u2 = self.uniform();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        (radius * angle.cos(), radius * angle.sin())
    }
}
