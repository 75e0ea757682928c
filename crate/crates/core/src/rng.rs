//! Seeded randomness. Every sampler in the crate takes a `ChaCha8Rng` so
//! reports are reproducible across platforms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed used when none is given on the command line.
pub const DEFAULT_SEED: u64 = 0x5EED_C4A2;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream derived from a base seed and a label, so suites do not
/// perturb each other's samples.
pub fn substream(seed: u64, label: &str) -> SeededRng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}
