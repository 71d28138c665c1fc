//! Deterministic sample generation for the property checkers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::projections::BoxSet;

/// A generator for sample `index` under master `seed`. Distinct indices use
/// distinct ChaCha streams, so samples are independent and the result of a
/// sampling pass does not depend on how indices are scheduled over threads.
pub(crate) fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform draw from a bounded box.
pub(crate) fn uniform_in_box(rng: &mut ChaCha8Rng, b: &BoxSet) -> Vec<f64> {
    b.lower()
        .iter()
        .zip(b.upper())
        .map(|(lo, hi)| if lo == hi { *lo } else { rng.gen_range(*lo..*hi) })
        .collect()
}

/// Uniform draw from `[lo, hi]^dim`.
pub(crate) fn uniform_coords(rng: &mut ChaCha8Rng, dim: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..dim).map(|_| rng.gen_range(lo..hi)).collect()
}
