//! Exact dyadic exponents `q = k / 2^n` for the operator family `i^q`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest denominator exponent accepted. `4 * 2^n` must fit in a `u64`.
pub const MAX_LOG2_DENOMINATOR: u32 = 60;

/// Denominator search depth used when recovering a dyadic from a float.
pub const FLOAT_SEARCH_DEPTH: u32 = 24;

/// Absolute tolerance (relative for |q| > 1) when recovering a dyadic from a float.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// A non-negative dyadic rational `numerator / 2^log2_denominator` in lowest terms.
///
/// Lowest terms means the numerator is odd, or the denominator exponent is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyadicExponent {
    numerator: u64,
    log2_denominator: u32,
}

impl DyadicExponent {
    pub const ZERO: Self = Self { numerator: 0, log2_denominator: 0 };

    pub fn new(numerator: u64, log2_denominator: u32) -> Result<Self> {
        if log2_denominator > MAX_LOG2_DENOMINATOR {
            return Err(Error::InvalidExponent(format!(
                "{numerator}/2^{log2_denominator}"
            )));
        }
        let mut k = numerator;
        let mut n = log2_denominator;
        if k == 0 {
            n = 0;
        }
        while n > 0 && k % 2 == 0 {
            k /= 2;
            n -= 1;
        }
        Ok(Self { numerator: k, log2_denominator: n })
    }

    pub fn integer(k: u64) -> Self {
        Self { numerator: k, log2_denominator: 0 }
    }

    /// `1 / 2^n`, the exponent of the root operator `i^(1/2^n)`.
    pub fn root(n: u32) -> Result<Self> {
        Self::new(1, n)
    }

    /// Builds `k / 2^n` for a signed `k`; negative values are taken modulo 4.
    pub fn from_signed(numerator: i64, log2_denominator: u32) -> Result<Self> {
        if log2_denominator > MAX_LOG2_DENOMINATOR {
            return Err(Error::InvalidExponent(format!(
                "{numerator}/2^{log2_denominator}"
            )));
        }
        if numerator >= 0 {
            return Self::new(numerator as u64, log2_denominator);
        }
        let period = 4i128 << log2_denominator;
        let k = (numerator as i128).rem_euclid(period) as u64;
        Self::new(k, log2_denominator)
    }

    /// Recovers the dyadic nearest to `q` with denominator at most `2^FLOAT_SEARCH_DEPTH`.
    pub fn from_f64(q: f64) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::NonDyadicExponent(q.to_string()));
        }
        let tol = FLOAT_TOLERANCE * q.abs().max(1.0);
        for n in 0..=FLOAT_SEARCH_DEPTH {
            let scaled = q * (1u64 << n) as f64;
            let k = scaled.round();
            if (q - k / (1u64 << n) as f64).abs() <= tol && k.abs() < i64::MAX as f64 {
                return Self::from_signed(k as i64, n);
            }
        }
        Err(Error::NonDyadicExponent(q.to_string()))
    }

    pub fn numerator(self) -> u64 {
        self.numerator
    }

    pub fn log2_denominator(self) -> u32 {
        self.log2_denominator
    }

    /// Representative in `[0, 4)`; `i^4` is the identity.
    pub fn reduced_mod4(self) -> Self {
        let period = 4u64 << self.log2_denominator;
        Self { numerator: self.numerator % period, ..self }
            .normalized()
    }

    fn normalized(self) -> Self {
        // Cannot fail: the exponent only shrinks.
        Self::new(self.numerator, self.log2_denominator).unwrap()
    }

    /// Length of the tuplet the root operator `i^(1/2^n)` acts on, `2^(n+1)`.
    pub fn block_len(self) -> usize {
        2usize << self.reduced_mod4().log2_denominator
    }

    pub fn value(self) -> f64 {
        self.numerator as f64 / (1u64 << self.log2_denominator) as f64
    }

    /// Equatorial longitude `pi * q / 2`, wrapped into `[0, 2pi)`.
    pub fn longitude(self) -> f64 {
        std::f64::consts::FRAC_PI_2 * self.reduced_mod4().value()
    }
}

impl Add for DyadicExponent {
    type Output = DyadicExponent;

    /// Sum modulo 4.
    fn add(self, rhs: Self) -> Self {
        let a = self.reduced_mod4();
        let b = rhs.reduced_mod4();
        let n = a.log2_denominator.max(b.log2_denominator);
        let ka = a.numerator << (n - a.log2_denominator);
        let kb = b.numerator << (n - b.log2_denominator);
        let period = 4u64 << n;
        // Both terms are below `period`, which is at most 2^62.
        Self::new((ka + kb) % period, n).unwrap()
    }
}

impl fmt::Display for DyadicExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_denominator == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.log2_denominator)
        }
    }
}

impl FromStr for DyadicExponent {
    type Err = Error;

    /// Accepts `k`, `k/2^n` and `k/m` with `m` a power of two. A leading `-`
    /// is reduced modulo 4.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = || Error::InvalidExponent(s.to_string());
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (text, None),
        };
        let k: i64 = num.parse().map_err(|_| bad())?;
        let n = match den {
            None => 0,
            Some(d) => {
                if let Some(exp) = d.strip_prefix("2^") {
                    exp.trim().parse::<u32>().map_err(|_| bad())?
                } else {
                    let m: u64 = d.parse().map_err(|_| bad())?;
                    if m == 0 {
                        return Err(bad());
                    }
                    if !m.is_power_of_two() {
                        // k/m may still reduce to a dyadic, e.g. 3/6.
                        let g = gcd(k.unsigned_abs(), m);
                        let m = m / g;
                        if !m.is_power_of_two() {
                            return Err(Error::NonDyadicExponent(s.to_string()));
                        }
                        return Self::from_signed(k / g as i64, m.trailing_zeros());
                    }
                    m.trailing_zeros()
                }
            }
        };
        Self::from_signed(k, n)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
