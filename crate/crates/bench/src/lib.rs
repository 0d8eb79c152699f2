//! Shared inputs for the benchmarks.

use circnut::GeneratorSet;

/// Odd `t` whose `S_t` is universal, small to large.
pub const UNIVERSAL_T: [u64; 3] = [7, 49, 99];

/// Replacement sets whose search needs several candidates.
pub const REPLACEMENT_T: [u64; 3] = [15, 33, 51];

pub fn almost_consecutive(t: u64) -> GeneratorSet {
    GeneratorSet::almost_consecutive(t).expect("t >= 1")
}
