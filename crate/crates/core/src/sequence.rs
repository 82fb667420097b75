//! Finite prefixes of bivalent (±1) sequences and the `i^q` operator family.
//!
//! Elements are packed one per bit, least-significant bit first inside each
//! 64-bit word; bit 1 stores `+1`, bit 0 stores `-1`. Bits past `len` in the
//! last word are always zero.
//!
//! The root operator `i^(1/2^n)` acts on consecutive `2^(n+1)`-tuplets. On a
//! tuplet `[A, B]` split into halves it produces `[i^(1/2^(n-1))(B), A]`,
//! bottoming out at `i([a, b]) = [-b, a]`. Read through bit-reversed positions
//! this is a shift by one place with a sign flip on wrap-around, so `i^(k/2^n)`
//! is a shift by `k` places and needs no repeated composition.

use std::fmt;

use rand::RngCore;

use crate::dyadic::DyadicExponent;
use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSequence {
    words: Vec<u64>,
    len: usize,
}

/// Population mean and variance of a sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SequenceStats {
    pub mean: f64,
    pub variance: f64,
    pub count: usize,
}

impl SequenceStats {
    /// Stats of `count` ±1 values of which `ones` are `+1`.
    pub fn from_counts(ones: u64, count: u64) -> Self {
        let mean = (2.0 * ones as f64 - count as f64) / count as f64;
        Self {
            mean,
            variance: 1.0 - mean * mean,
            count: count as usize,
        }
    }

    pub fn std_dev(&self) -> f64 {
        self.variance.max(0.0).sqrt()
    }
}

/// Binary interval `[lo, hi)` that contains the real of every infinite extension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrefixInterval {
    pub lo: f64,
    pub hi: f64,
}

impl BitSequence {
    fn zeroed(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    /// Binary digits to elements: `1 -> +1`, `0 -> -1`.
    pub fn from_real_bits(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut s = Self::zeroed(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => s.set_bit(i, true),
                other => return Err(Error::InvalidDigit(other)),
            }
        }
        Ok(s)
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut s = Self::zeroed(signs.len());
        for (i, &a) in signs.iter().enumerate() {
            match a {
                1 => s.set_bit(i, true),
                -1 => {}
                other => return Err(Error::InvalidElement(other as i64)),
            }
        }
        Ok(s)
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut s = Self::zeroed(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            s.set_bit(i, b);
        }
        Ok(s)
    }

    /// The constant `+1` sequence (north pole).
    pub fn ones(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyInput);
        }
        let mut s = Self::zeroed(len);
        s.words.iter_mut().for_each(|w| *w = u64::MAX);
        s.clear_padding();
        Ok(s)
    }

    /// A generic (uniformly random) sequence drawn from `rng`.
    pub fn random<R: RngCore + ?Sized>(len: usize, rng: &mut R) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyInput);
        }
        let mut s = Self::zeroed(len);
        s.words.iter_mut().for_each(|w| *w = rng.next_u64());
        s.clear_padding();
        Ok(s)
    }

    /// Rebuilds a sequence from packed words; padding bits are cleared.
    pub(crate) fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(WORD), 0);
        let mut s = Self { words, len };
        s.clear_padding();
        s
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; a `BitSequence` holds at least one element.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// True when element `i` (0-based) is `+1`.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    /// Element `i` (0-based) as `+1` or `-1`.
    pub fn get(&self, i: usize) -> i8 {
        if self.bit(i) {
            1
        } else {
            -1
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = i8> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    pub fn to_signs(&self) -> Vec<i8> {
        self.iter().collect()
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Elements `start..` as a new sequence.
    pub fn tail(&self, start: usize) -> Result<Self> {
        self.slice(start, self.len)
    }

    /// Elements `start..end` as a new sequence.
    pub fn slice(&self, start: usize, end: usize) -> Result<Self> {
        if start >= end || end > self.len {
            return Err(Error::EmptyInput);
        }
        let mut out = Self::zeroed(end - start);
        for i in start..end {
            if self.bit(i) {
                out.set_bit(i - start, true);
            }
        }
        Ok(out)
    }

    /// `w` elements starting at `start` read as a binary integer, first element
    /// most significant (`+1 -> 1`). Requires `w <= 128`.
    pub fn window(&self, start: usize, w: usize) -> u128 {
        debug_assert!(w <= 128 && start + w <= self.len);
        (start..start + w).fold(0u128, |acc, i| (acc << 1) | self.bit(i) as u128)
    }

    /// Largest `n` for which `i^(1/2^n)` is defined, i.e. `2^(n+1)` divides the length.
    pub fn max_root_level(&self) -> Option<u32> {
        let tz = self.len.trailing_zeros();
        tz.checked_sub(1)
    }

    pub fn prefix_real(&self) -> PrefixInterval {
        // Digits beyond f64 precision cannot change `lo`.
        let mut lo = 0.0;
        let mut scale = 0.5;
        for i in 0..self.len.min(1100) {
            if self.bit(i) {
                lo += scale;
            }
            scale *= 0.5;
        }
        let width = if self.len >= 1100 { 0.0 } else { (-(self.len as f64)).exp2() };
        PrefixInterval { lo, hi: lo + width }
    }

    /// Elementwise sign flip (the antipodal point).
    pub fn negate(&self) -> Self {
        let mut out = Self {
            words: self.words.iter().map(|w| !w).collect(),
            len: self.len,
        };
        out.clear_padding();
        out
    }

    fn check_block(&self, block: usize) -> Result<()> {
        if self.len % block != 0 {
            Err(Error::LengthNotAligned { len: self.len, block })
        } else {
            Ok(())
        }
    }

    /// `i`: each pair `(a, b)` becomes `(-b, a)`.
    pub fn apply_i(&self) -> Result<Self> {
        self.apply_i_root(0)
    }

    /// `i^(1/2^n)` on consecutive `2^(n+1)`-tuplets.
    pub fn apply_i_root(&self, n: u32) -> Result<Self> {
        let q = DyadicExponent::root(n)?;
        self.apply_i_power(q)
    }

    /// `i^q` for a dyadic `q`, reduced modulo 4.
    pub fn apply_i_power(&self, q: DyadicExponent) -> Result<Self> {
        let q = q.reduced_mod4();
        let n = q.log2_denominator();
        let block = 2usize
            .checked_shl(n)
            .filter(|b| *b != 0)
            .ok_or(Error::LengthNotAligned { len: self.len, block: usize::MAX })?;
        self.check_block(block)?;
        if q.numerator() == 0 {
            return Ok(self.clone());
        }
        let plan = ShiftPlan::new(n + 1, q.numerator());
        let mut out = Self::zeroed(self.len);
        for base in (0..self.len).step_by(block) {
            for (j, &(src, flip)) in plan.sources.iter().enumerate() {
                let v = self.bit(base + src as usize) ^ flip;
                if v {
                    out.set_bit(base + j, true);
                }
            }
        }
        Ok(out)
    }

    pub fn stats(&self) -> SequenceStats {
        SequenceStats::from_counts(self.count_ones(), self.len as u64)
    }
}

/// Source position and sign flip for every output position of one tuplet.
struct ShiftPlan {
    sources: Vec<(u32, bool)>,
}

impl ShiftPlan {
    /// Tuplet of `2^bits` elements shifted by `k` places in bit-reversed order.
    fn new(bits: u32, k: u64) -> Self {
        let size = 1usize << bits;
        let rev = |p: usize| p.reverse_bits() >> (usize::BITS - bits);
        let mut sources = vec![(0u32, false); size];
        for p in 0..size {
            let shifted = rev(p) as u64 + k;
            let wraps = shifted >> bits;
            let dest = rev((shifted & (size as u64 - 1)) as usize);
            sources[dest] = (p as u32, wraps & 1 == 1);
        }
        Self { sources }
    }
}

impl fmt::Debug for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOW: usize = 64;
        write!(f, "BitSequence[{}]{{", self.len)?;
        for i in 0..self.len.min(SHOW) {
            f.write_str(if self.bit(i) { "+" } else { "-" })?;
        }
        if self.len > SHOW {
            f.write_str("...")?;
        }
        f.write_str("}")
    }
}
