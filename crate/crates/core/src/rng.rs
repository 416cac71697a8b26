//! Deterministic random-number streams.
//!
//! Every Monte-Carlo trial gets its own generator, derived from the pair
//! `(master_seed, stream)` where `stream` is the trial id (or a worker
//! index). Derivation goes through SplitMix64 so that nearby stream ids
//! produce statistically independent ChaCha keys, and the resulting
//! sequence depends only on the pair — never on thread scheduling or
//! worker count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// SplitMix64 step; the standard seed expander.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives the generator for one logical stream of the run.
///
/// The same `(master_seed, stream)` pair always yields the same sequence,
/// on every platform and for any number of workers.
pub fn derive_rng(master_seed: u64, stream: u64) -> ChaCha12Rng {
    let mut state = master_seed ^ stream.wrapping_mul(0xa076_1d64_78bd_642f);
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha12Rng::from_seed(seed)
}
