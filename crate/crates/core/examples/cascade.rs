//! Predictability time summed over octaves of a power-law spectrum.

use bivalent::cascade::{octave_rows, omega_limit, CascadeSpec, KOLMOGOROV_SLOPE};

fn main() -> bivalent::Result<()> {
    let spec = CascadeSpec::new(KOLMOGOROV_SLOPE, 1.0, 30)?;
    for row in octave_rows(&spec).iter().step_by(5) {
        println!("n {:>2}  k {:>12.0}  tau {:.3e}  omega {:.6}", row.n, row.k, row.tau, row.omega_partial);
    }
    println!("limit: {:?}", omega_limit(&spec));
    println!("slope -3: {:?}", omega_limit(&CascadeSpec::new(-3.0, 1.0, 30)?));
    Ok(())
}
