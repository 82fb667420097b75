//! Moving a generic sequence off the equator with `j_theta`.

use bivalent::{latitude_stats, threshold_bits, BitSequence, ThresholdSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bivalent::Result<()> {
    let s = BitSequence::random(200_000, &mut ChaCha8Rng::seed_from_u64(1))?;
    println!("{:>8} {:>10} {:>10} {:>10} {:>10}", "theta", "mean", "sin", "std", "|cos|");
    for theta in [-1.2, -0.5, 0.0, 0.5, 1.0, 1.5] {
        let spec = ThresholdSpec::with_default_window(theta)?;
        let st = latitude_stats(&spec, &s)?;
        println!(
            "{theta:>8.3} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
            st.mean,
            f64::sin(theta),
            st.std_dev(),
            f64::cos(theta).abs()
        );
    }
    let quarter = ThresholdSpec::from_sine(0.5, 16)?;
    let digits: String = threshold_bits(&quarter).iter().map(|d| char::from(b'0' + d)).collect();
    println!("threshold digits at sin theta = 1/2: 0.{digits}");
    Ok(())
}
