use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("invalid binary digit {0} (expected 0 or 1)")]
    InvalidDigit(u8),

    #[error("invalid sequence element {0} (expected +1 or -1)")]
    InvalidElement(i64),

    #[error("sequence length {len} is not a multiple of the block size {block}")]
    LengthNotAligned { len: usize, block: usize },

    #[error("exponent {0} is not a dyadic rational")]
    NonDyadicExponent(String),

    #[error("unparseable exponent literal {0:?}")]
    InvalidExponent(String),

    #[error("sequence of length {len} is too short for a {window}-bit window")]
    SequenceTooShort { len: usize, window: usize },

    #[error("window width {0} is outside the supported range 8..=128")]
    InvalidWindow(usize),

    #[error("latitude {0} is outside [-pi/2, pi/2]")]
    InvalidLatitude(f64),

    #[error("angle {0} is outside the permitted range")]
    InvalidAngle(f64),

    #[error("grid index (m={m}, n={n}) is outside a {meridians}-meridian grid")]
    GridIndex { m: u32, n: u32, meridians: u32 },

    #[error("wavenumber must be positive, got {0}")]
    InvalidWavenumber(f64),

    #[error("invalid cascade parameters: {0}")]
    InvalidCascade(String),

    #[error("state norm {0} differs from 1 by more than 1e-9")]
    UnnormalizedState(f64),

    #[error("trial count must be at least 1")]
    NoTrials,

    #[error("malformed sequence file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
