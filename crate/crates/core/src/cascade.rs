//! Predictability time of a self-similar cascade.
//!
//! With `E(k) ~ k^s` the eddy turnover time is `tau(k) = k^(-3/2) E(k)^(-1/2)
//! = k^(-(3+s)/2)`. Uncertainty starting at wavenumber `2^N k_L` reaches
//! `k_L` after `Omega(N) = sum_{n<N} tau(2^n k_L)`, a geometric series with
//! ratio `2^(-gamma)`, `gamma = (3+s)/2`. It converges iff `gamma > 0`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Kolmogorov inertial-range slope.
pub const KOLMOGOROV_SLOPE: f64 = -5.0 / 3.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CascadeSpec {
    slope: f64,
    k_l: f64,
    levels: u32,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OmegaLimit {
    Finite(f64),
    Divergent,
}

impl OmegaLimit {
    pub fn finite(self) -> Option<f64> {
        match self {
            OmegaLimit::Finite(v) => Some(v),
            OmegaLimit::Divergent => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CascadeRow {
    pub n: u32,
    pub k: f64,
    pub tau: f64,
    pub omega_partial: f64,
}

impl CascadeSpec {
    pub fn new(slope: f64, k_l: f64, levels: u32) -> Result<Self> {
        if !(k_l > 0.0) || !k_l.is_finite() {
            return Err(Error::InvalidWavenumber(k_l));
        }
        if levels == 0 {
            return Err(Error::InvalidCascade("level count must be at least 1".into()));
        }
        if !slope.is_finite() {
            return Err(Error::InvalidCascade(format!("slope {slope}")));
        }
        Ok(Self { slope, k_l, levels })
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn k_l(&self) -> f64 {
        self.k_l
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    /// `(3 + s) / 2`.
    pub fn gamma(&self) -> f64 {
        (3.0 + self.slope) / 2.0
    }

    pub fn with_levels(&self, levels: u32) -> Result<Self> {
        Self::new(self.slope, self.k_l, levels)
    }
}

pub fn turnover_time(k: f64, slope: f64) -> Result<f64> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::InvalidWavenumber(k));
    }
    Ok(k.powf(-(3.0 + slope) / 2.0))
}

/// One row per octave with the running partial sum.
pub fn octave_rows(spec: &CascadeSpec) -> Vec<CascadeRow> {
    let mut total = 0.0;
    (0..spec.levels)
        .map(|n| {
            let k = spec.k_l * 2f64.powi(n as i32);
            let tau = turnover_time(k, spec.slope).expect("octave wavenumbers are positive");
            total += tau;
            CascadeRow { n, k, tau, omega_partial: total }
        })
        .collect()
}

pub fn omega_sum(spec: &CascadeSpec) -> f64 {
    octave_rows(spec).last().map_or(0.0, |r| r.omega_partial)
}

/// `tau(k_L) / (1 - 2^(-gamma))`, or `Divergent` when `gamma <= 0`.
pub fn omega_limit(spec: &CascadeSpec) -> OmegaLimit {
    let gamma = spec.gamma();
    if gamma <= 0.0 {
        return OmegaLimit::Divergent;
    }
    let tau = turnover_time(spec.k_l, spec.slope).expect("k_L validated positive");
    OmegaLimit::Finite(tau / (1.0 - (-gamma).exp2()))
}

/// `tau(k_L) 2^(-gamma N) / (1 - 2^(-gamma))`, the gap left after `N` octaves.
pub fn tail_bound(spec: &CascadeSpec) -> Option<f64> {
    let gamma = spec.gamma();
    let limit = omega_limit(spec).finite()?;
    Some(limit * (-gamma * spec.levels as f64).exp2())
}

pub fn rows_to_csv(rows: &[CascadeRow]) -> String {
    let mut out = String::from("n,k,tau,omega_partial\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.k, r.tau, r.omega_partial));
    }
    out
}
