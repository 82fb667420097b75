//! Bivalent sequences as a model of a two-state quantum system.
//!
//! A state is a ±1 sequence, read as the binary expansion of a real in
//! `[0, 1]`. Dyadic powers `i^q` of a self-similar signed permutation move a
//! sequence along the equator (longitude `pi q / 2`), the threshold operator
//! `j_theta` moves it to latitude `theta`, and a measurement returns `+1`
//! exactly when the real is at least one half. The crate implements these
//! operators exactly on finite prefixes and provides seeded Monte-Carlo
//! estimators for the statistics they induce: Born probabilities, the
//! uncertainty identity and the entangled-pair correlation. A closed-form
//! two-level oracle ([`oracle`]) is the reference for all of them.
//!
//! ```
//! use bivalent::{BitSequence, DyadicExponent};
//!
//! let s = BitSequence::from_real_bits(&[1, 0, 0, 1, 1, 1, 0, 1]).unwrap();
//! let half: DyadicExponent = "1/2".parse().unwrap();
//! let twice = s.apply_i_power(half).unwrap().apply_i_power(half).unwrap();
//! assert_eq!(twice, s.apply_i().unwrap());
//! ```

pub mod bsq;
pub mod cascade;
pub mod dyadic;
pub mod entanglement;
pub mod error;
pub mod experiment;
pub mod latitude;
pub mod measurement;
pub mod montecarlo;
pub mod oracle;
pub mod report;
pub mod sequence;
pub mod sphere;

pub use dyadic::DyadicExponent;
pub use error::{Error, Result};
pub use latitude::{apply_j, latitude_stats, threshold_bits, LatitudeResult, ThresholdSpec};
pub use measurement::{measure, Outcome};
pub use report::StatReport;
pub use sequence::{BitSequence, SequenceStats};
pub use sphere::{GridSpec, SpherePoint};
