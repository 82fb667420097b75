//! Born probabilities from the sequence model against the two-level oracle.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

use bivalent::measurement::born_estimate;
use bivalent::oracle::{prob_up, state_from_point};
use bivalent::SpherePoint;

fn main() -> bivalent::Result<()> {
    for (k, theta) in [-FRAC_PI_3, 0.0, FRAC_PI_6, FRAC_PI_4].into_iter().enumerate() {
        let r = born_estimate(theta, 100_000, k as u64)?;
        let p = prob_up(&state_from_point(&SpherePoint::new(theta, 0.0)?))?;
        println!("theta {theta:+.4}: P(+1) = {:.4} +/- {:.4}, oracle {p:.4}", r.estimate, r.std_error);
    }
    Ok(())
}
