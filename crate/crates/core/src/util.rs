//! Seed derivation and stable hashing.
//!
//! Every random choice in the pipeline is drawn from a `ChaCha8Rng` whose
//! seed is derived from the experiment's top-level seed plus a short
//! purpose tag. The derivation is a fixed FNV-1a mix, so sub-seeds do not
//! depend on `std` hasher internals and stay identical across processes,
//! platforms, and releases.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// FNV-1a over raw bytes. Used for seed derivation and OOV vectors;
/// must never change.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = FNV_OFFSET;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

/// Derive a sub-seed from the top-level seed and a purpose tag,
/// e.g. `derive_seed(seed, "split")` or `derive_seed(seed, "fold3.net")`.
pub fn derive_seed(seed: u64, tag: &str) -> u64 {
    let mut hash = fnv1a64(tag.as_bytes());
    // Mix in the seed bytes through the same FNV stream.
    for b in seed.to_le_bytes() {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

/// ChaCha8 RNG for the given (seed, tag) pair.
pub fn rng_for(seed: u64, tag: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, tag))
}

/// Fisher-Yates permutation of `0..n` drawn from `rng`.
pub fn shuffled_indices(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        idx.swap(i, j);
    }
    idx
}
