//! Counter-based sub-seeding.
//!
//! Sample `n` of check `name` under suite seed `s` draws from a ChaCha8
//! stream seeded with
//!
//! ```text
//! mix(mix(s ^ fnv1a(name)) + n)
//! ```
//!
//! where `mix` is the SplitMix64 finalizer. A sample's inputs depend only on
//! `(s, name, n)`, never on evaluation order or on which other checks ran.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

pub fn sample_seed(seed: u64, name: &str, index: u64) -> u64 {
    mix(mix(seed ^ fnv1a(name)).wrapping_add(index))
}

pub fn sample_rng(seed: u64, name: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(sample_seed(seed, name, index))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a(""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a("a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn seeds_separate_checks_and_samples() {
        assert_ne!(sample_seed(1, "P1", 0), sample_seed(1, "P2", 0));
        assert_ne!(sample_seed(1, "P1", 0), sample_seed(1, "P1", 1));
        assert_eq!(sample_seed(9, "P4", 17), sample_seed(9, "P4", 17));
    }
}
