//! The latitude operator `j_theta`.
//!
//! Output element `n` is `+1` when the real whose binary digits are the
//! input tail starting at `n` is at least `(1 - sin theta) / 2`. The tail is
//! truncated to a `w`-bit window; a window exactly equal to the truncated
//! threshold counts as `+1` and is recorded as a tie.

use std::f64::consts::FRAC_PI_2;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::sequence::{BitSequence, SequenceStats};

pub const DEFAULT_WINDOW_BITS: usize = 64;
pub const MIN_WINDOW_BITS: usize = 8;
pub const MAX_WINDOW_BITS: usize = 128;

/// Extra fixed-point digits carried beyond the window when evaluating the threshold.
const GUARD_BITS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdSpec {
    theta: f64,
    window_bits: usize,
    threshold: u128,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LatitudeResult {
    pub output: BitSequence,
    pub tie_count: u64,
}

impl ThresholdSpec {
    pub fn new(theta: f64, window_bits: usize) -> Result<Self> {
        if !(MIN_WINDOW_BITS..=MAX_WINDOW_BITS).contains(&window_bits) {
            return Err(Error::InvalidWindow(window_bits));
        }
        if !(theta.abs() <= FRAC_PI_2) {
            return Err(Error::InvalidLatitude(theta));
        }
        Ok(Self {
            theta,
            window_bits,
            threshold: threshold_prefix(theta, window_bits),
        })
    }

    /// Spec for the latitude whose sine is exactly `sine`, so thresholds such
    /// as `sin theta = 1/2` are not perturbed by rounding `theta`.
    pub fn from_sine(sine: f64, window_bits: usize) -> Result<Self> {
        if !(MIN_WINDOW_BITS..=MAX_WINDOW_BITS).contains(&window_bits) {
            return Err(Error::InvalidWindow(window_bits));
        }
        if !(sine.abs() <= 1.0) {
            return Err(Error::InvalidLatitude(sine.asin()));
        }
        let precision = window_bits + GUARD_BITS;
        Ok(Self {
            theta: sine.asin(),
            window_bits,
            threshold: threshold_from_sine(&to_fixed(sine.abs(), precision), sine < 0.0, window_bits),
        })
    }

    pub fn with_default_window(theta: f64) -> Result<Self> {
        Self::new(theta, DEFAULT_WINDOW_BITS)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn window_bits(&self) -> usize {
        self.window_bits
    }

    /// The truncated threshold as a `w`-bit integer, first digit most significant.
    pub fn threshold_value(&self) -> u128 {
        self.threshold
    }

    /// First `w` binary digits of `(1 - sin theta) / 2`, truncated.
    pub fn threshold_bits(&self) -> Vec<u8> {
        let w = self.window_bits;
        (0..w).map(|i| ((self.threshold >> (w - 1 - i)) & 1) as u8).collect()
    }
}

/// Truncated `w`-digit prefix of `(1 - sin theta) / 2`.
///
/// `theta` is an exact binary fraction, so the sine is evaluated by a
/// fixed-point Taylor series with `w + 64` fractional bits. A threshold of
/// one is represented by the expansion `0.111...`.
fn threshold_prefix(theta: f64, w: usize) -> u128 {
    let precision = w + GUARD_BITS;
    let x = to_fixed(theta.abs(), precision);
    threshold_from_sine(&fixed_sin(&x, precision), theta < 0.0, w)
}

/// Threshold digits from `|sin theta|` in fixed point with `w + GUARD_BITS` bits.
fn threshold_from_sine(sine: &BigUint, negative: bool, w: usize) -> u128 {
    let precision = w + GUARD_BITS;
    let one = BigUint::from(1u8) << precision;
    let doubled = if !negative {
        if *sine >= one {
            BigUint::from(0u8)
        } else {
            &one - sine
        }
    } else {
        &one + sine
    };
    // doubled / 2 in fixed point, then keep the top w fractional digits.
    let digits: BigUint = doubled >> (precision - w + 1);
    let cap = if w == 128 { u128::MAX } else { (1u128 << w) - 1 };
    let digits = digits.to_u64_digits();
    let value = match digits.len() {
        0 => 0u128,
        1 => digits[0] as u128,
        2 => digits[0] as u128 | (digits[1] as u128) << 64,
        _ => u128::MAX,
    };
    value.min(cap)
}

fn to_fixed(x: f64, precision: usize) -> BigUint {
    if x == 0.0 {
        return BigUint::from(0u8);
    }
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mantissa, exp) = if biased == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), biased - 1075)
    };
    let shift = precision as i64 + exp;
    let m = BigUint::from(mantissa);
    if shift >= 0 {
        m << shift as usize
    } else {
        m >> (-shift) as usize
    }
}

/// `sin(x)` for `0 <= x <= pi/2`, both in fixed point with `precision` fractional bits.
fn fixed_sin(x: &BigUint, precision: usize) -> BigUint {
    let x2: BigUint = (x * x) >> precision;
    let mut term = x.clone();
    let mut pos = x.clone();
    let mut neg = BigUint::from(0u8);
    let mut k = 1u64;
    loop {
        term = ((&term * &x2) >> precision) / BigUint::from((2 * k) * (2 * k + 1));
        if term.bits() == 0 {
            break;
        }
        if k % 2 == 1 {
            neg += &term;
        } else {
            pos += &term;
        }
        k += 1;
    }
    if neg > pos {
        BigUint::from(0u8)
    } else {
        pos - neg
    }
}

pub fn threshold_bits(spec: &ThresholdSpec) -> Vec<u8> {
    spec.threshold_bits()
}

pub fn apply_j(spec: &ThresholdSpec, s: &BitSequence) -> Result<LatitudeResult> {
    let w = spec.window_bits;
    let len = s.len();
    if len <= w {
        return Err(Error::SequenceTooShort { len, window: w });
    }
    let out_len = len - w + 1;
    let mask = if w == 128 { u128::MAX } else { (1u128 << w) - 1 };
    let mut words = vec![0u64; out_len.div_ceil(64)];
    let mut ties = 0u64;
    let mut window = s.window(0, w);
    for n in 0..out_len {
        if window >= spec.threshold {
            words[n / 64] |= 1 << (n % 64);
            ties += (window == spec.threshold) as u64;
        }
        if n + w < len {
            window = ((window << 1) | s.bit(n + w) as u128) & mask;
        }
    }
    Ok(LatitudeResult {
        output: BitSequence::from_words(words, out_len),
        tie_count: ties,
    })
}

pub fn latitude_stats(spec: &ThresholdSpec, s: &BitSequence) -> Result<SequenceStats> {
    Ok(apply_j(spec, s)?.output.stats())
}
