//! Closed-form two-level reference used to check the sequence statistics.

use crate::error::{Error, Result};
use crate::sphere::SpherePoint;
use std::f64::consts::PI;

/// Amplitudes on `|+1>` and `|-1>`, complex numbers as `(re, im)` pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector2 {
    pub amp_up: (f64, f64),
    pub amp_down: (f64, f64),
}

impl StateVector2 {
    pub fn norm_sqr(&self) -> f64 {
        let sq = |(re, im): (f64, f64)| re * re + im * im;
        sq(self.amp_up) + sq(self.amp_down)
    }
}

/// `cos(colat/2) |+1> + e^{i lambda} sin(colat/2) |-1>`.
pub fn state_from_point(p: &SpherePoint) -> StateVector2 {
    let half = p.colatitude() / 2.0;
    let (s, c) = half.sin_cos();
    let (sl, cl) = p.lambda().sin_cos();
    StateVector2 {
        amp_up: (c, 0.0),
        amp_down: (cl * s, sl * s),
    }
}

pub fn prob_up(v: &StateVector2) -> Result<f64> {
    let norm = v.norm_sqr();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::UnnormalizedState(norm));
    }
    let (re, im) = v.amp_up;
    Ok(re * re + im * im)
}

/// Singlet spin correlation `-cos(delta_theta)`.
pub fn singlet_correlation(delta_theta: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&delta_theta) {
        return Err(Error::InvalidAngle(delta_theta));
    }
    Ok(-delta_theta.cos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

    fn at(theta: f64, lambda: f64) -> StateVector2 {
        state_from_point(&SpherePoint::new(theta, lambda).unwrap())
    }

    #[test]
    fn amplitudes() {
        let v = at(FRAC_PI_2, 0.0);
        assert_eq!(v.amp_up, (1.0, 0.0));
        assert_eq!(v.amp_down, (0.0, 0.0));
        let v = at(0.0, 0.0);
        let h = 2f64.sqrt() / 2.0;
        assert!((v.amp_up.0 - h).abs() < 1e-15 && (v.amp_down.0 - h).abs() < 1e-15);
        assert_eq!(v.amp_down.1, 0.0);
        let v = at(-FRAC_PI_2, 0.0);
        assert!(v.amp_up.0.abs() < 1e-16);
        assert!((v.amp_down.0 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn born_probabilities() {
        assert_eq!(prob_up(&at(FRAC_PI_2, 0.3)).unwrap(), 1.0);
        assert!((prob_up(&at(0.0, 1.0)).unwrap() - 0.5).abs() < 1e-15);
        assert!((prob_up(&at(FRAC_PI_6, 2.0)).unwrap() - 0.75).abs() < 1e-15);
        let bad = StateVector2 { amp_up: (1.0, 0.0), amp_down: (0.1, 0.0) };
        assert!(matches!(prob_up(&bad), Err(Error::UnnormalizedState(_))));
    }

    #[test]
    fn phase_does_not_change_probability() {
        for k in 0..40 {
            let theta = -1.5 + 0.075 * k as f64;
            let p0 = prob_up(&at(theta, 0.0)).unwrap();
            for l in 1..10 {
                let v = at(theta, 0.6 * l as f64);
                assert!((v.norm_sqr() - 1.0).abs() < 1e-12);
                assert_eq!(prob_up(&v).unwrap(), p0);
            }
            assert!((p0 - (1.0 + theta.sin()) / 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn singlet_values() {
        assert_eq!(singlet_correlation(0.0).unwrap(), -1.0);
        assert!(singlet_correlation(FRAC_PI_2).unwrap().abs() < 1e-16);
        assert!((singlet_correlation(FRAC_PI_3).unwrap() + 0.5).abs() < 1e-15);
        assert!(singlet_correlation(4.0).is_err());
    }
}
