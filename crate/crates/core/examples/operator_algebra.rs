//! Dyadic powers of `i` on a short sequence and the algebra they satisfy.

use bivalent::{BitSequence, DyadicExponent};

fn show(label: &str, s: &BitSequence) {
    let signs: Vec<String> = s.iter().map(|v| format!("{v:+}")).collect();
    println!("{label:>12}: {}", signs.join(" "));
}

fn main() -> bivalent::Result<()> {
    let s = BitSequence::from_signs(&[1, -1, -1, 1, 1, 1, -1, 1])?;
    show("s", &s);
    show("i(s)", &s.apply_i()?);
    show("i^2(s)", &s.apply_i()?.apply_i()?);
    show("i^(1/2)(s)", &s.apply_i_root(1)?);
    show("i^(1/4)(s)", &s.apply_i_root(2)?);

    let (a, b): (DyadicExponent, DyadicExponent) = ("3/4".parse()?, "7/2".parse()?);
    let sum = a + b;
    let composed = s.apply_i_power(b)?.apply_i_power(a)?;
    println!("{a} + {b} = {sum} (mod 4): {}", composed == s.apply_i_power(sum)?);
    println!("longitude of {a}: {:.4} rad", a.longitude());
    Ok(())
}
