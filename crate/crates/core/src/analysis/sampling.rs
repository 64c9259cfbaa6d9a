//! Seeded random streams. Every sampled unit (claim, n, sample index) gets
//! its own generator derived from the run seed, so results do not depend on
//! evaluation order or thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyring::Coeff;

pub type SampleRng = ChaCha8Rng;

/// Integer sampling range for roots, `λ` and `b_j`.
pub const SAMPLE_RANGE: i64 = 9;

/// Redraws allowed per sample before it is reported as degenerate.
pub const RETRY_BOUND: usize = 100;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn unit_rng(seed: u64, tag: &str, n: usize, index: usize) -> SampleRng {
    let mut h = splitmix(seed);
    for byte in tag.bytes() {
        h = splitmix(h ^ byte as u64);
    }
    h = splitmix(h ^ n as u64);
    h = splitmix(h ^ index as u64);
    ChaCha8Rng::seed_from_u64(h)
}

pub(crate) fn small_int(rng: &mut SampleRng) -> i64 {
    rng.random_range(-SAMPLE_RANGE..=SAMPLE_RANGE)
}

pub(crate) fn small_coeff(rng: &mut SampleRng) -> Coeff {
    Coeff::from(small_int(rng))
}

pub(crate) fn small_nonzero(rng: &mut SampleRng) -> Coeff {
    loop {
        let c = small_int(rng);
        if c != 0 {
            return Coeff::from(c);
        }
    }
}

/// Draws until `accept` succeeds, at most [`RETRY_BOUND`] times.
pub(crate) fn draw<T>(
    rng: &mut SampleRng,
    mut make: impl FnMut(&mut SampleRng) -> T,
    mut accept: impl FnMut(&T) -> bool,
) -> Option<T> {
    for _ in 0..RETRY_BOUND {
        let candidate = make(rng);
        if accept(&candidate) {
            return Some(candidate);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let take = |mut r: SampleRng| (0..8).map(|_| small_int(&mut r)).collect::<Vec<_>>();
        assert_eq!(take(unit_rng(42, "t", 4, 0)), take(unit_rng(42, "t", 4, 0)));
        assert_ne!(take(unit_rng(42, "t", 4, 0)), take(unit_rng(42, "t", 4, 1)));
        assert_ne!(take(unit_rng(42, "t", 4, 0)), take(unit_rng(43, "t", 4, 0)));
        assert_ne!(take(unit_rng(42, "t", 4, 0)), take(unit_rng(42, "u", 4, 0)));
    }

    #[test]
    fn draw_respects_bound() {
        let mut rng = unit_rng(1, "d", 0, 0);
        assert!(draw(&mut rng, small_int, |&c| c > 100).is_none());
        assert!(draw(&mut rng, small_int, |&c| c != 0).is_some_and(|c| c != 0));
    }
}
