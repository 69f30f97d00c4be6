//! Poincaré series of random modules over `R` with `e = 3`, each written
//! as `q(t) / (1 - 3t + t^2)` with an explicit tail start.
//!
//! Usage: `cargo run --example rationality_certificates -- [count] [steps]`

use gorlab::module::{from_presentation, random_presentation};
use gorlab::ring::ShortGorensteinRing;
use gorlab::series::{certify_rational, poincare_series, DEFAULT_MARGIN};

fn main() -> anyhow::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let count = args.first().copied().unwrap_or(6) as u64;
    let steps = args.get(1).copied().unwrap_or(7);
    let r = ShortGorensteinRing::identity(101, 3)?;

    for seed in 0..count {
        let (m, _) = from_presentation(&random_presentation(
            &r,
            1 + seed as usize % 2,
            1 + seed as usize % 3,
            seed,
        ));
        let p = poincare_series(&m, steps)?;
        let betti: Vec<String> = p.coefficients.iter().map(|c| c.to_string()).collect();
        print!(
            "seed {seed:>2} dim {:>2}  P = {}  ",
            m.dim(),
            betti.join(" ")
        );
        match certify_rational(&p, 3, DEFAULT_MARGIN) {
            Ok(c) => {
                let q: Vec<String> = c.numerator.iter().map(|x| x.to_string()).collect();
                println!("q = [{}], tail from {}", q.join(", "), c.s);
                assert_eq!(c.expand(), p.coefficients);
            }
            Err(err) => println!("{err}"),
        }
    }
    Ok(())
}
