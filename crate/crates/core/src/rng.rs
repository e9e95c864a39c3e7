//! Deterministic randomness. Everything random in this crate flows through
//! ChaCha8 keyed from a caller-supplied 64-bit seed (expanded by SplitMix64,
//! the documented `seed_from_u64` scheme), so identical seeds reproduce
//! identical streams on every platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unbiased draw from `0..bound` by rejection: 64-bit words from the top of
/// the biased zone are discarded, the rest reduced modulo `bound`.
pub(crate) fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    // 2^64 mod bound, i.e. the size of the biased tail
    let tail = (u64::MAX % bound).wrapping_add(1) % bound;
    loop {
        let x = rng.next_u64();
        if tail == 0 || x <= u64::MAX - tail {
            return x % bound;
        }
    }
}
