//! Experiment runners behind the `bivalent experiment` command.
//!
//! Every runner returns its full report as a string. JSON output is one flat
//! object per line; CSV output has a header row. Reports depend only on the
//! experiment parameters and [`RunConfig`], never on the thread count.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};
use std::fmt::Write as _;

use serde_json::json;

use crate::cascade::{self, CascadeSpec};
use crate::entanglement::{bell_chsh_scan_with, epr_run, EprSpec};
use crate::error::{Error, Result};
use crate::latitude::{ThresholdSpec, DEFAULT_WINDOW_BITS};
use crate::measurement::{born_estimate_with, flip_fraction, uncertainty_mc_with};
use crate::montecarlo::stream_seed;
use crate::report::StatReport;
use crate::sphere::{grid_overlap_count, GridSpec};

pub const DEFAULT_SEED: u64 = 20_040_101;
pub const DEFAULT_TRIALS: u64 = 100_000;
pub const DEFAULT_SEQUENCE_LENGTH: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: u64,
    pub sequence_length: usize,
    pub window_bits: usize,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            sequence_length: DEFAULT_SEQUENCE_LENGTH,
            window_bits: DEFAULT_WINDOW_BITS,
            output_format: OutputFormat::Json,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Experiment {
    Born { thetas: Vec<f64> },
    Epr { delta_thetas: Vec<f64> },
    Chsh { settings: [f64; 4] },
    Uncertainty { colat: f64, lon: f64 },
    Cascade { slope: f64, k_l: f64, levels: u32 },
    Noncomputability { max_n: u32 },
    GridOverlap { meridians: Vec<u32>, tilt: f64 },
}

impl Experiment {
    pub fn name(&self) -> &'static str {
        match self {
            Experiment::Born { .. } => "born",
            Experiment::Epr { .. } => "epr",
            Experiment::Chsh { .. } => "chsh",
            Experiment::Uncertainty { .. } => "uncertainty",
            Experiment::Cascade { .. } => "cascade",
            Experiment::Noncomputability { .. } => "noncomputability",
            Experiment::GridOverlap { .. } => "grid-overlap",
        }
    }
}

pub fn default_born_thetas() -> Vec<f64> {
    vec![-FRAC_PI_2, -FRAC_PI_3, 0.0, FRAC_PI_6, FRAC_PI_4, FRAC_PI_2]
}

/// `k pi / 12` for `k = 0..=12`.
pub fn default_epr_grid() -> Vec<f64> {
    (0..=12).map(|k| if k == 12 { PI } else { PI * k as f64 / 12.0 }).collect()
}

pub const DEFAULT_CHSH_SETTINGS: [f64; 4] = [0.0, FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4];

pub fn run(experiment: &Experiment, config: &RunConfig) -> Result<String> {
    if config.trials == 0 {
        return Err(Error::NoTrials);
    }
    let csv = config.output_format == OutputFormat::Csv;
    let mut out = String::new();
    let w = config.window_bits;
    match experiment {
        Experiment::Born { thetas } => {
            if csv {
                out.push_str("theta,estimate,std_error,samples\n");
            }
            for (k, &theta) in thetas.iter().enumerate() {
                let spec = ThresholdSpec::new(theta, w)?;
                let r = born_estimate_with(&spec, config.trials, stream_seed(config.seed, k as u64))?;
                let expected = (1.0 + theta.sin()) / 2.0;
                let r = r.with_param("expected", expected);
                emit(&mut out, csv, &r, &format!("{theta}"));
            }
        }
        Experiment::Epr { delta_thetas } => {
            if csv {
                out.push_str("delta_theta,estimate,std_error,samples\n");
            }
            for (k, &d) in delta_thetas.iter().enumerate() {
                let spec = EprSpec::with_window(d, config.trials, stream_seed(config.seed, k as u64), w)?;
                let run = epr_run(&spec)?;
                let r = run
                    .correlation
                    .with_param("expected", -d.cos())
                    .with_param("marginal_o", run.marginal_o.estimate)
                    .with_param("marginal_o_prime", run.marginal_o_prime.estimate);
                emit(&mut out, csv, &r, &format!("{d}"));
            }
        }
        Experiment::Chsh { settings } => {
            if csv {
                out.push_str("estimate,std_error,samples\n");
            }
            let r = bell_chsh_scan_with(*settings, w, config.trials, config.seed)?;
            if csv {
                writeln!(out, "{},{},{}", r.estimate, r.std_error, r.samples).unwrap();
            } else {
                writeln!(out, "{}", r.to_json()).unwrap();
            }
        }
        Experiment::Uncertainty { colat, lon } => {
            if csv {
                out.push_str("quantity,estimate,std_error,samples\n");
            }
            let u = uncertainty_mc_with(*colat, *lon, w, config.trials, config.seed)?;
            let product = StatReport::new("uncertainty.product", u.product, u.product_std_error, config.trials, config.seed)
                .with_param("colatitude", *colat)
                .with_param("longitude", *lon)
                .with_param("expected", u.expected);
            for r in u.reports().into_iter().chain([&product]) {
                let quantity = r.op.trim_start_matches("uncertainty.").to_string();
                emit(&mut out, csv, r, &quantity);
            }
        }
        Experiment::Cascade { slope, k_l, levels } => {
            let spec = CascadeSpec::new(*slope, *k_l, *levels)?;
            let rows = cascade::octave_rows(&spec);
            if csv {
                out.push_str(&cascade::rows_to_csv(&rows));
            } else {
                let limit = cascade::omega_limit(&spec).finite();
                let report = json!({
                    "op": "cascade",
                    "params": { "slope": slope, "k_l": k_l, "levels": levels },
                    "rows": rows,
                    "omega_limit": limit,
                    "divergent": limit.is_none(),
                });
                writeln!(out, "{report}").unwrap();
            }
        }
        Experiment::Noncomputability { max_n } => {
            if csv {
                out.push_str("n,estimate,std_error,samples\n");
            }
            for n in 0..=*max_n {
                let r = flip_fraction(n, config.trials, stream_seed(config.seed, n as u64))?;
                emit(&mut out, csv, &r, &n.to_string());
            }
        }
        Experiment::GridOverlap { meridians, tilt } => {
            if csv {
                out.push_str("meridians,tilt,count,grid_points\n");
            }
            for &n in meridians {
                let grid = GridSpec::new(n)?;
                let count = grid_overlap_count(&grid, *tilt);
                if csv {
                    writeln!(out, "{n},{tilt},{count},{}", grid.point_count()).unwrap();
                } else {
                    let r = StatReport::new("grid-overlap", count as f64, 0.0, grid.point_count() as u64, config.seed)
                        .with_param("meridians", n)
                        .with_param("tilt", *tilt);
                    writeln!(out, "{}", r.to_json()).unwrap();
                }
            }
        }
    }
    Ok(out)
}

fn emit(out: &mut String, csv: bool, r: &StatReport, key: &str) {
    if csv {
        writeln!(out, "{key},{},{},{}", r.estimate, r.std_error, r.samples).unwrap();
    } else {
        writeln!(out, "{}", r.to_json()).unwrap();
    }
}

/// Runs on a dedicated pool of `threads` workers.
pub fn run_parallel(experiment: &Experiment, config: &RunConfig, threads: usize) -> Result<String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    pool.install(|| run(experiment, config))
}
