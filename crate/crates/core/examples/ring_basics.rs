//! Builds a few short Gorenstein rings and prints their multiplication
//! data.
//!
//! Usage: `cargo run --example ring_basics`

use gorlab::ring::{FormChoice, ShortGorensteinRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn show(ring: &ShortGorensteinRing) -> anyhow::Result<()> {
    println!("{ring}");
    println!("  hilbert series {:?}", ring.hilbert());
    let e = ring.e();
    for i in 0..e {
        let row: Vec<String> = (0..e)
            .map(|j| Ok(format!("{:>3}", ring.x(i).mul(&ring.x(j))?.coeffs()[e + 1])))
            .collect::<anyhow::Result<_>>()?;
        println!("  x{} * x_j = w * [{}]", i + 1, row.join(" "));
    }
    // every linear form has a partner with nonzero product: the socle is w
    let v = ring.x(0).add(&ring.x(e - 1))?;
    println!("  (x1 + x{e})^2 = {:?}", v.mul(&v)?.coeffs());
    Ok(())
}

fn main() -> anyhow::Result<()> {
    show(&ShortGorensteinRing::identity(101, 3)?)?;
    show(&ShortGorensteinRing::hyperbolic(101, 2)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    show(&ShortGorensteinRing::with_choice(
        1009,
        4,
        FormChoice::RandomNondegenerate,
        &mut rng,
    )?)?;

    match ShortGorensteinRing::new(101, 2, &[[1, 1], [1, 1]]) {
        Ok(_) => println!("unexpectedly accepted a degenerate form"),
        Err(err) => println!("degenerate form rejected: {err}"),
    }
    Ok(())
}
