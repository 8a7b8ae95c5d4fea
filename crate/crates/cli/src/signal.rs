//! Seeded benchmark inputs.
//!
//! Inputs come from ChaCha8 (`rand_chacha::ChaCha8Rng`), a counter-based
//! generator, seeded through `SeedableRng::seed_from_u64`. Real and imaginary
//! parts are drawn independently and uniformly from `[-1, 1]`, real part
//! first, element by element.

use pafft::ComplexBuffer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_buffer<R: Rng>(len: usize, rng: &mut R) -> ComplexBuffer {
    let mut re = Vec::with_capacity(len);
    let mut im = Vec::with_capacity(len);
    for _ in 0..len {
        re.push(rng.random_range(-1.0..=1.0));
        im.push(rng.random_range(-1.0..=1.0));
    }
    ComplexBuffer::from_parts(re, im).expect("equal lengths")
}
