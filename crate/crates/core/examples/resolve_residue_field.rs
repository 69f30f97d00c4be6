//! Resolves the residue field over `R` and compares the Betti numbers with
//! the coefficients of `1/(1 - e t + t^2)`.
//!
//! Usage: `cargo run --example resolve_residue_field -- [e] [steps]`

use std::time::Instant;

use gorlab::module::FiniteModule;
use gorlab::resolution::resolve;
use gorlab::ring::ShortGorensteinRing;

fn main() -> anyhow::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let e = args.first().copied().unwrap_or(3);
    let steps = args.get(1).copied().unwrap_or(7);
    let ring = ShortGorensteinRing::identity(101, e)?;
    let k = FiniteModule::residue_field(&ring);

    let start = Instant::now();
    let res = resolve(&k, steps)?;
    let elapsed = start.elapsed();

    let mut expected = vec![1i128, e as i128];
    while expected.len() <= steps {
        let n = expected.len();
        expected.push(e as i128 * expected[n - 1] - expected[n - 2]);
    }
    println!("ring {ring}");
    println!("{:>3} {:>12} {:>12}", "i", "beta_i(k)", "expansion");
    for (i, b) in res.betti().iter().enumerate() {
        println!("{i:>3} {b:>12} {:>12}", expected[i]);
    }
    println!("resolved {steps} steps in {:.2?}", elapsed);
    Ok(())
}
