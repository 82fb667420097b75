//! Sphere coordinates and rotations of the reference pole.
//!
//! The computable grid holds `N` meridians `lambda = 2 pi n / N` (`n = 1..=N`)
//! crossed with `2N + 1` latitude circles `theta = ±pi m / 2N` (`m = 0..=N`).
//! The equator appears once per meridian, every other circle twice, so the
//! grid has `N (2N + 1)` (meridian, circle) points. Poles are counted once per
//! meridian.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};

/// Absolute tolerance on `sin theta'` when matching rotated latitudes to the grid.
pub const LATITUDE_MATCH_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    theta: f64,
    lambda: f64,
}

impl SpherePoint {
    pub fn new(theta: f64, lambda: f64) -> Result<Self> {
        if !(theta.abs() <= FRAC_PI_2) {
            return Err(Error::InvalidLatitude(theta));
        }
        if !lambda.is_finite() {
            return Err(Error::InvalidAngle(lambda));
        }
        Ok(Self { theta, lambda: normalize_longitude(lambda) })
    }

    /// Point with co-latitude `colat` in `[0, pi]`.
    pub fn from_colatitude(colat: f64, lambda: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&colat) {
            return Err(Error::InvalidAngle(colat));
        }
        Self::new(FRAC_PI_2 - colat, lambda)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn colatitude(&self) -> f64 {
        FRAC_PI_2 - self.theta
    }

    pub fn antipode(&self) -> Self {
        Self { theta: -self.theta, lambda: normalize_longitude(self.lambda + PI) }
    }

    pub fn to_cartesian(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sl, cl) = self.lambda.sin_cos();
        [ct * cl, ct * sl, st]
    }
}

fn normalize_longitude(lambda: f64) -> f64 {
    let l = lambda.rem_euclid(TAU);
    if l >= TAU {
        0.0
    } else {
        l
    }
}

/// Central angle between two points.
pub fn colatitude_between(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let a = p.to_cartesian();
    let b = q.to_cartesian();
    let dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let cross = [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ];
    let norm = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
    norm.atan2(dot)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    meridians: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hemisphere {
    North,
    South,
}

/// One (meridian, latitude circle) point of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    pub m: u32,
    pub n: u32,
    pub hemisphere: Hemisphere,
}

impl GridSpec {
    pub fn new(meridians: u32) -> Result<Self> {
        if meridians == 0 {
            return Err(Error::GridIndex { m: 0, n: 0, meridians });
        }
        Ok(Self { meridians })
    }

    pub fn meridians(&self) -> u32 {
        self.meridians
    }

    pub fn point_count(&self) -> usize {
        let n = self.meridians as usize;
        n * (2 * n + 1)
    }

    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        let big_n = self.meridians;
        (1..=big_n).flat_map(move |n| {
            (0..=big_n).flat_map(move |m| {
                let north = GridPoint { m, n, hemisphere: Hemisphere::North };
                let south = (m > 0).then_some(GridPoint { m, n, hemisphere: Hemisphere::South });
                std::iter::once(north).chain(south)
            })
        })
    }

    /// `pi m / 2N`.
    pub fn circle_latitude(&self, m: u32) -> f64 {
        PI * m as f64 / (2.0 * self.meridians as f64)
    }

    /// `2 pi n / N`.
    pub fn meridian_longitude(&self, n: u32) -> f64 {
        TAU * n as f64 / self.meridians as f64
    }

    pub fn point(&self, p: GridPoint) -> SpherePoint {
        let lat = self.circle_latitude(p.m);
        let theta = match p.hemisphere {
            Hemisphere::North => lat,
            Hemisphere::South => -lat,
        };
        SpherePoint::new(theta, self.meridian_longitude(p.n))
            .expect("grid latitudes lie in [-pi/2, pi/2]")
    }

    fn check(&self, m: u32, n: u32) -> Result<()> {
        if m > self.meridians || n == 0 || n > self.meridians {
            return Err(Error::GridIndex { m, n, meridians: self.meridians });
        }
        Ok(())
    }

    /// Sines of every grid latitude `±pi m' / 2N`, ascending.
    pub fn circle_sines(&self) -> Vec<f64> {
        let big_n = self.meridians as i64;
        (-big_n..=big_n)
            .map(|m| (PI * m as f64 / (2.0 * big_n as f64)).sin())
            .collect()
    }
}

/// Both rotated latitudes of the grid pair `(±pi m / 2N, 2 pi n / N)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedLatitudes {
    /// `sin theta'` for the northern point (`+` root).
    pub sin_north: f64,
    /// `sin theta'` for the southern point (`-` root).
    pub sin_south: f64,
}

impl RotatedLatitudes {
    pub fn north(&self) -> f64 {
        self.sin_north.clamp(-1.0, 1.0).asin()
    }

    pub fn south(&self) -> f64 {
        self.sin_south.clamp(-1.0, 1.0).asin()
    }
}

/// Latitudes relative to a pole moved to latitude `pole_latitude` on the
/// meridian `lambda = 0`:
///
/// `sin theta' = cos(pi m/2N) cos(2 pi n/N) cos theta0 ± sin(pi m/2N) sin theta0`.
pub fn rotate_latitude(m: u32, n: u32, spec: &GridSpec, pole_latitude: f64) -> Result<RotatedLatitudes> {
    let (sin0, cos0) = pole_latitude.sin_cos();
    rotate_with(m, n, spec, sin0, cos0)
}

fn rotate_with(m: u32, n: u32, spec: &GridSpec, sin0: f64, cos0: f64) -> Result<RotatedLatitudes> {
    spec.check(m, n)?;
    let (sm, cm) = spec.circle_latitude(m).sin_cos();
    let cn = spec.meridian_longitude(n).cos();
    let common = cm * cn * cos0;
    Ok(RotatedLatitudes {
        sin_north: common + sm * sin0,
        sin_south: common - sm * sin0,
    })
}

fn matches_circle(sines: &[f64], value: f64) -> bool {
    let idx = sines.partition_point(|&s| s < value);
    [idx.checked_sub(1), Some(idx)]
        .into_iter()
        .flatten()
        .filter_map(|i| sines.get(i))
        .any(|s| (s - value).abs() <= LATITUDE_MATCH_TOLERANCE)
}

fn overlap_with(spec: &GridSpec, sin0: f64, cos0: f64) -> usize {
    let sines = spec.circle_sines();
    spec.points()
        .filter(|p| {
            let r = rotate_with(p.m, p.n, spec, sin0, cos0).expect("grid point in range");
            let v = match p.hemisphere {
                Hemisphere::North => r.sin_north,
                Hemisphere::South => r.sin_south,
            };
            matches_circle(&sines, v)
        })
        .count()
}

/// Grid points whose latitude relative to a pole tilted by `tilt` (toward
/// `lambda = 0`) lands on a grid latitude circle. `tilt = 0` is the identity.
pub fn grid_overlap_count(spec: &GridSpec, tilt: f64) -> usize {
    let (sin_t, cos_t) = tilt.sin_cos();
    // Pole latitude is pi/2 - tilt.
    overlap_with(spec, cos_t, sin_t)
}

/// As [`grid_overlap_count`], parameterized by the rotated pole's latitude.
pub fn grid_overlap_count_for_pole(spec: &GridSpec, pole_latitude: f64) -> usize {
    let (sin0, cos0) = pole_latitude.sin_cos();
    overlap_with(spec, sin0, cos0)
}
