//! Writing, reading and transforming BSQ1 sequence files.

use bivalent::{bsq, BitSequence, DyadicExponent};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let dir = std::env::temp_dir().join("bivalent-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("generic.bsq");

    let s = BitSequence::random(1 << 12, &mut ChaCha8Rng::seed_from_u64(42))?;
    bsq::write_file(&path, &s)?;
    let bytes = std::fs::read(&path)?;
    println!("{} elements -> {} bytes, header {:?}", s.len(), bytes.len(), &bytes[..8]);

    let back = bsq::read_file(&path)?;
    let half: DyadicExponent = "1/2".parse()?;
    let turned = back.apply_i_power(half)?.apply_i_power(half)?;
    println!("round trip equal: {}", back == s);
    println!("i^(1/2) twice equals i: {}", turned == s.apply_i()?);
    println!("mean {:+.4}", back.stats().mean);
    Ok(())
}
