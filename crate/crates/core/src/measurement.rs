//! The measurement rule, Born statistics, longitude evolution, and the
//! uncertainty identity.
//!
//! A measurement returns `+1` iff the state's real is at least one half,
//! which on a prefix is decided by the first element alone.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::dyadic::DyadicExponent;
use crate::error::{Error, Result};
use crate::latitude::{apply_j, ThresholdSpec, DEFAULT_WINDOW_BITS};
use crate::montecarlo::{count_trials, stream_seed, trial_rng};
use crate::report::StatReport;
use crate::sequence::BitSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub fn value(self) -> i8 {
        match self {
            Outcome::Plus => 1,
            Outcome::Minus => -1,
        }
    }

    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Outcome::Plus
        } else {
            Outcome::Minus
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Outcome::Plus => Outcome::Minus,
            Outcome::Minus => Outcome::Plus,
        }
    }
}

impl std::ops::Mul for Outcome {
    type Output = Outcome;

    fn mul(self, rhs: Outcome) -> Outcome {
        Outcome::from_bit(self == rhs)
    }
}

pub fn measure(s: &BitSequence) -> Outcome {
    Outcome::from_bit(s.bit(0))
}

/// Fraction of `+1` outcomes of `measure(j_theta(s))` over fresh generic `s`.
pub fn born_estimate(theta: f64, trials: u64, seed: u64) -> Result<StatReport> {
    born_estimate_with(&ThresholdSpec::new(theta, DEFAULT_WINDOW_BITS)?, trials, seed)
}

pub fn born_estimate_with(spec: &ThresholdSpec, trials: u64, seed: u64) -> Result<StatReport> {
    let plus = count_latitude_plus(spec, trials, seed)?;
    Ok(StatReport::proportion("born", plus, trials, seed)
        .with_param("theta", spec.theta())
        .with_param("window_bits", spec.window_bits() as u64))
}

/// Trials whose first `j_theta` output element is `+1`. Each trial uses a
/// fresh sequence of `w + 1` elements.
fn count_latitude_plus(spec: &ThresholdSpec, trials: u64, seed: u64) -> Result<u64> {
    let len = spec.window_bits() + 1;
    count_trials(seed, trials, |ts| {
        let s = BitSequence::random(len, &mut trial_rng(ts))?;
        Ok(measure(&apply_j(spec, &s)?.output) == Outcome::Plus)
    })
}

/// Constant-rate rotation about the measuring axis between `t0` and `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionSpec {
    omega: f64,
    t0: f64,
    t: f64,
    exponent: DyadicExponent,
}

impl EvolutionSpec {
    /// Fails with `NonDyadicExponent` unless `(2 omega / pi)(t - t0)` is dyadic.
    pub fn new(omega: f64, t0: f64, t: f64) -> Result<Self> {
        let q = 2.0 * omega * (t - t0) / PI;
        let exponent = DyadicExponent::from_f64(q)?;
        Ok(Self { omega, t0, t, exponent })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn exponent(&self) -> DyadicExponent {
        self.exponent
    }

    /// `omega (t - t0)`.
    pub fn longitude_advance(&self) -> f64 {
        self.omega * (self.t - self.t0)
    }
}

pub fn evolve(spec: &EvolutionSpec, s: &BitSequence) -> Result<BitSequence> {
    s.apply_i_power(spec.exponent)
}

/// Fraction of generic sequences whose outcome changes under `i^(1/2^n)`.
pub fn flip_fraction(n: u32, trials: u64, seed: u64) -> Result<StatReport> {
    let len = 2usize << n;
    let flips = count_trials(seed, trials, |ts| {
        let s = BitSequence::random(len, &mut trial_rng(ts))?;
        Ok(measure(&s.apply_i_root(n)?) != measure(&s))
    })?;
    Ok(StatReport::proportion("noncomputability", flips, trials, seed).with_param("n", n as u64))
}

/// Co-latitude relative to a pole rotated onto the equator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedColatitude {
    pub cos_colat: f64,
    pub colat: f64,
}

/// `cos theta~' = sin theta~ sin lambda`.
pub fn uncertainty_trig(colat: f64, lon: f64) -> Result<RotatedColatitude> {
    if !(0.0..=PI).contains(&colat) {
        return Err(Error::InvalidAngle(colat));
    }
    if !(0.0..TAU).contains(&lon) {
        return Err(Error::InvalidAngle(lon));
    }
    let cos_colat = (colat.sin() * lon.sin()).clamp(-1.0, 1.0);
    Ok(RotatedColatitude { cos_colat, colat: cos_colat.acos() })
}

#[derive(Debug, Clone, PartialEq)]
pub struct UncertaintyReport {
    pub sigma_colat: StatReport,
    pub sigma_lon: StatReport,
    pub mu_rotated: StatReport,
    pub product: f64,
    pub product_std_error: f64,
    /// Exact `|cos theta~'|`.
    pub expected: f64,
}

impl UncertaintyReport {
    pub fn discrepancy(&self) -> f64 {
        (self.product - self.mu_rotated.estimate.abs()).abs()
    }

    pub fn reports(&self) -> [&StatReport; 3] {
        [&self.sigma_colat, &self.sigma_lon, &self.mu_rotated]
    }
}

/// Monte-Carlo `(sigma_colat, sigma_lon, mu_rotated)`.
///
/// Each is measured on the `j` output at the matching latitude:
/// `pi/2 - colat`, `pi/2 - lon`, and `pi/2 - colat'`. A longitude past `pi`
/// is folded to `2 pi - lon`, which has the same `|sin|`.
pub fn uncertainty_mc(colat: f64, lon: f64, trials: u64, seed: u64) -> Result<UncertaintyReport> {
    uncertainty_mc_with(colat, lon, DEFAULT_WINDOW_BITS, trials, seed)
}

pub fn uncertainty_mc_with(
    colat: f64,
    lon: f64,
    window_bits: usize,
    trials: u64,
    seed: u64,
) -> Result<UncertaintyReport> {
    let rotated = uncertainty_trig(colat, lon)?;
    let lon_colat = if lon > PI { TAU - lon } else { lon };

    let sigma = |op: &str, c: f64, stream: u64| -> Result<StatReport> {
        let spec = ThresholdSpec::new(latitude_of_colat(c), window_bits)?;
        let s = stream_seed(seed, stream);
        let plus = count_latitude_plus(&spec, trials, s)?;
        let mean = StatReport::signed_mean(op, plus, trials, s);
        let sd = (1.0 - mean.estimate * mean.estimate).max(0.0).sqrt();
        // Delta method on sqrt(1 - m^2).
        let se = if sd > 0.0 && trials > 1 {
            mean.estimate.abs() / ((trials - 1) as f64).sqrt()
        } else {
            0.0
        };
        Ok(StatReport { estimate: sd, std_error: se, ..mean }.with_param("colatitude", c))
    };
    let sigma_colat = sigma("uncertainty.sigma_colat", colat, 0)?;
    let sigma_lon = sigma("uncertainty.sigma_lon", lon_colat, 1)?;

    let spec = ThresholdSpec::new(latitude_of_colat(rotated.colat), window_bits)?;
    let s = stream_seed(seed, 2);
    let plus = count_latitude_plus(&spec, trials, s)?;
    let mu_rotated = StatReport::signed_mean("uncertainty.mu_rotated", plus, trials, s)
        .with_param("colatitude", rotated.colat);

    let product = sigma_colat.estimate * sigma_lon.estimate;
    let product_std_error = ((sigma_lon.estimate * sigma_colat.std_error).powi(2)
        + (sigma_colat.estimate * sigma_lon.std_error).powi(2))
    .sqrt();
    Ok(UncertaintyReport {
        sigma_colat,
        sigma_lon,
        mu_rotated,
        product,
        product_std_error,
        expected: rotated.cos_colat.abs(),
    })
}

/// Latitude `pi/2 - colat`, clamped into the valid range against rounding.
fn latitude_of_colat(colat: f64) -> f64 {
    (FRAC_PI_2 - colat).clamp(-FRAC_PI_2, FRAC_PI_2)
}
