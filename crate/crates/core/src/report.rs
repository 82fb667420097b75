//! Monte-Carlo estimates and their machine-readable forms.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// A Monte-Carlo estimate. Serializes to the flat object
/// `{"op", "estimate", "std_error", "samples", "seed", "params"}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatReport {
    pub op: String,
    pub estimate: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    pub params: BTreeMap<String, Value>,
}

impl StatReport {
    pub fn new(op: &str, estimate: f64, std_error: f64, samples: u64, seed: u64) -> Self {
        Self {
            op: op.to_string(),
            estimate,
            std_error,
            samples,
            seed,
            params: BTreeMap::new(),
        }
    }

    /// Fraction of `hits` among `samples` 0/1 trials, with the sample standard
    /// error `s / sqrt(samples)`.
    pub fn proportion(op: &str, hits: u64, samples: u64, seed: u64) -> Self {
        let p = hits as f64 / samples as f64;
        let se = if samples > 1 {
            (p * (1.0 - p) / (samples - 1) as f64).sqrt()
        } else {
            0.0
        };
        Self::new(op, p, se, samples, seed)
    }

    /// Mean of `samples` values in {+1, -1}, `plus` of which are `+1`.
    pub fn signed_mean(op: &str, plus: u64, samples: u64, seed: u64) -> Self {
        let p = Self::proportion(op, plus, samples, seed);
        Self {
            estimate: 2.0 * p.estimate - 1.0,
            std_error: 2.0 * p.std_error,
            ..p
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// `|estimate - expected| <= k * std_error`.
    pub fn agrees_with(&self, expected: f64, k: f64) -> bool {
        (self.estimate - expected).abs() <= k * self.std_error
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("StatReport is always serializable")
    }
}
