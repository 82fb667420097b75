//! Entangled-pair sampling and the correlation `C(delta_theta)`.
//!
//! Each pair is built from one fresh generic sequence `s`. The first outcome
//! is `o = measure(s)`. The partner is `o' = -o * c`, where the agreement
//! sign `c` is the measured `j` output at latitude `theta_c` on the tail of
//! `s` after its first element, with `sin theta_c = cos delta_theta`. Hence
//! `P(o' = -o) = cos^2(delta_theta / 2)`, both marginals are fair, and
//! `E[o o'] = -cos delta_theta`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::latitude::{apply_j, ThresholdSpec, DEFAULT_WINDOW_BITS};
use crate::measurement::{measure, Outcome};
use crate::montecarlo::{stream_seed, tally_trials, trial_rng, trial_seed};
use crate::report::StatReport;
use crate::sequence::BitSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSample {
    pub o: Outcome,
    pub o_prime: Outcome,
    pub trial_seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EprSpec {
    delta_theta: f64,
    trials: u64,
    seed: u64,
    window_bits: usize,
}

impl EprSpec {
    pub fn new(delta_theta: f64, trials: u64, seed: u64) -> Result<Self> {
        Self::with_window(delta_theta, trials, seed, DEFAULT_WINDOW_BITS)
    }

    pub fn with_window(delta_theta: f64, trials: u64, seed: u64, window_bits: usize) -> Result<Self> {
        check_delta(delta_theta)?;
        if trials == 0 {
            return Err(Error::NoTrials);
        }
        Ok(Self { delta_theta, trials, seed, window_bits })
    }

    pub fn delta_theta(&self) -> f64 {
        self.delta_theta
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn check_delta(delta_theta: f64) -> Result<()> {
    if !(0.0..=PI).contains(&delta_theta) {
        return Err(Error::InvalidAngle(delta_theta));
    }
    Ok(())
}

/// Reusable sampler for one relative orientation.
#[derive(Debug, Clone, Copy)]
pub struct PairSampler {
    agreement: ThresholdSpec,
}

impl PairSampler {
    pub fn new(delta_theta: f64, window_bits: usize) -> Result<Self> {
        check_delta(delta_theta)?;
        Ok(Self { agreement: ThresholdSpec::from_sine(delta_theta.cos(), window_bits)? })
    }

    pub fn sample(&self, trial_seed: u64) -> Result<PairSample> {
        let len = self.agreement.window_bits() + 2;
        let s = BitSequence::random(len, &mut trial_rng(trial_seed))?;
        let o = measure(&s);
        let c = measure(&apply_j(&self.agreement, &s.tail(1)?)?.output);
        Ok(PairSample { o, o_prime: (o * c).flipped(), trial_seed })
    }
}

pub fn sample_pair(delta_theta: f64, trial_seed: u64) -> Result<PairSample> {
    PairSampler::new(delta_theta, DEFAULT_WINDOW_BITS)?.sample(trial_seed)
}

/// The pair stream of a run, in trial order.
pub fn pair_stream(spec: &EprSpec) -> Result<Vec<PairSample>> {
    let sampler = PairSampler::new(spec.delta_theta, spec.window_bits)?;
    (0..spec.trials)
        .map(|i| sampler.sample(trial_seed(spec.seed, i)))
        .collect()
}

/// Correlation together with both marginal `+1` fractions.
#[derive(Debug, Clone, PartialEq)]
pub struct EprRun {
    pub correlation: StatReport,
    pub marginal_o: StatReport,
    pub marginal_o_prime: StatReport,
}

pub fn epr_run(spec: &EprSpec) -> Result<EprRun> {
    let sampler = PairSampler::new(spec.delta_theta, spec.window_bits)?;
    let [agree, o_plus, o_prime_plus] = tally_trials(spec.seed, spec.trials, |ts| {
        let p = sampler.sample(ts)?;
        Ok([p.o == p.o_prime, p.o == Outcome::Plus, p.o_prime == Outcome::Plus])
    })?;
    let (n, seed, d) = (spec.trials, spec.seed, spec.delta_theta);
    Ok(EprRun {
        correlation: StatReport::signed_mean("epr", agree, n, seed).with_param("delta_theta", d),
        marginal_o: StatReport::proportion("epr.marginal_o", o_plus, n, seed).with_param("delta_theta", d),
        marginal_o_prime: StatReport::proportion("epr.marginal_o_prime", o_prime_plus, n, seed)
            .with_param("delta_theta", d),
    })
}

/// `(1/M) sum o_n o'_n`.
pub fn correlation_estimate(spec: &EprSpec) -> Result<StatReport> {
    Ok(epr_run(spec)?.correlation)
}

/// Relative orientation of two detector settings, folded into `[0, pi]`.
pub fn relative_angle(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    if d > PI {
        TAU - d
    } else {
        d
    }
}

/// `|C(a,b) - C(a,b')| + |C(a',b) + C(a',b')|` from correlations in the
/// order `[C(a,b), C(a,b'), C(a',b), C(a',b')]`.
pub fn chsh_combination(c: [f64; 4]) -> f64 {
    (c[0] - c[1]).abs() + (c[2] + c[3]).abs()
}

/// CHSH value for settings `[a, b, a', b']`.
pub fn bell_chsh_scan(settings: [f64; 4], trials: u64, seed: u64) -> Result<StatReport> {
    bell_chsh_scan_with(settings, DEFAULT_WINDOW_BITS, trials, seed)
}

pub fn bell_chsh_scan_with(settings: [f64; 4], window_bits: usize, trials: u64, seed: u64) -> Result<StatReport> {
    let [a, b, a2, b2] = settings;
    let pairs = [(a, b), (a, b2), (a2, b), (a2, b2)];
    let mut values = [0.0; 4];
    let mut var = 0.0;
    for (k, &(x, y)) in pairs.iter().enumerate() {
        let spec = EprSpec::with_window(relative_angle(x, y), trials, stream_seed(seed, k as u64), window_bits)?;
        let c = correlation_estimate(&spec)?;
        values[k] = c.estimate;
        var += c.std_error * c.std_error;
    }
    Ok(StatReport::new("chsh", chsh_combination(values), var.sqrt(), trials, seed)
        .with_param("a", a)
        .with_param("b", b)
        .with_param("a_prime", a2)
        .with_param("b_prime", b2)
        .with_param("c_ab", values[0])
        .with_param("c_ab_prime", values[1])
        .with_param("c_a_prime_b", values[2])
        .with_param("c_a_prime_b_prime", values[3]))
}
