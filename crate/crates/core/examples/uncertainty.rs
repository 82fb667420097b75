//! Spread product against the rotated mean, by Monte Carlo and in closed form.

use bivalent::measurement::{uncertainty_mc, uncertainty_trig};

fn main() -> bivalent::Result<()> {
    for (k, (colat, lon)) in [(0.4, 1.0), (1.0, 0.6), (2.2, 4.0)].into_iter().enumerate() {
        let u = uncertainty_mc(colat, lon, 200_000, k as u64)?;
        let t = uncertainty_trig(colat, lon)?;
        println!(
            "colat {colat}, lon {lon}: sigma product {:.4}, |mu'| {:.4}, exact {:.4}",
            u.product,
            u.mu_rotated.estimate.abs(),
            t.cos_colat.abs()
        );
    }
    Ok(())
}
