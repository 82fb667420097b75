//! Seed derivation and order-independent trial counting.
//!
//! Trial `i` of a run seeded with `seed` draws from its own generator seeded
//! with [`trial_seed`]`(seed, i)`. Estimators only ever sum integer counts,
//! so results are bit-identical for any thread count or scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub type TrialRng = ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `index` within a run.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ index)
}

/// Seed of an independent sub-run (one per scanned parameter, say).
pub fn stream_seed(seed: u64, stream: u64) -> u64 {
    splitmix64(seed.rotate_left(17) ^ splitmix64(stream ^ 0x5851_F42D_4C95_7F2D))
}

pub fn trial_rng(trial_seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(trial_seed)
}

/// Number of trials `0..trials` for which `f(trial_seed)` holds.
pub fn count_trials<F>(seed: u64, trials: u64, f: F) -> Result<u64>
where
    F: Fn(u64) -> Result<bool> + Sync,
{
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    (0..trials)
        .into_par_iter()
        .map(|i| f(trial_seed(seed, i)).map(u64::from))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

/// Elementwise sums of `K` counters over all trials.
pub fn tally_trials<const K: usize, F>(seed: u64, trials: u64, f: F) -> Result<[u64; K]>
where
    F: Fn(u64) -> Result<[bool; K]> + Sync,
{
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    (0..trials)
        .into_par_iter()
        .map(|i| f(trial_seed(seed, i)).map(|flags| flags.map(u64::from)))
        .try_reduce(
            || [0; K],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )
}
