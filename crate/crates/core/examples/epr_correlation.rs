//! Entangled-pair correlation over a grid of orientations, and the CHSH value.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use bivalent::entanglement::{bell_chsh_scan, epr_run, EprSpec};

fn main() -> bivalent::Result<()> {
    for k in 0..=6 {
        let d = PI * k as f64 / 6.0;
        let run = epr_run(&EprSpec::new(d, 50_000, k)?)?;
        println!(
            "delta {d:.4}: C = {:+.4} (expected {:+.4}), marginals {:.3} {:.3}",
            run.correlation.estimate,
            -d.cos(),
            run.marginal_o.estimate,
            run.marginal_o_prime.estimate
        );
    }
    let s = bell_chsh_scan([0.0, FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4], 200_000, 9)?;
    println!("CHSH = {:.4} +/- {:.4} (classical bound 2)", s.estimate, s.std_error);
    Ok(())
}
