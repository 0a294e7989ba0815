//! One master seed, split into named, independent ChaCha8 substreams.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Named consumers of randomness within a single run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stream {
    EnvInit = 1,
    Validation = 2,
    Epsilon = 3,
    Replay = 4,
    Shots = 5,
    ModelInit = 6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngStreams {
    seed: u64,
}

impl RngStreams {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// A fresh generator for `stream`; calling twice yields identical sequences.
    pub fn stream(&self, stream: Stream) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream as u64);
        rng
    }
}
