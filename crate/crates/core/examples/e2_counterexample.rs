//! Over `k[x,y]/(x^2, y^2)` the module `R/(x)` is its own first syzygy,
//! so `Tor_i(R/(x), R/(x))` never becomes annihilated by `m` and the map
//! induced by `mM -> M` keeps rank 1.
//!
//! Usage: `cargo run --example e2_counterexample -- [degree]`

use gorlab::homology::tor_induced;
use gorlab::module::{cyclic_module, radical_submodule};
use gorlab::resolution::resolve;
use gorlab::ring::ShortGorensteinRing;
use gorlab::series::series_identity_check;

fn main() -> anyhow::Result<()> {
    let deg: usize = std::env::args().nth(1).map_or(Ok(10), |a| a.parse())?;
    let r = ShortGorensteinRing::hyperbolic(101, 2)?;
    let m = cyclic_module(&r, &[r.x(0)])?;

    println!("betti numbers {:?}", &resolve(&m, deg)?.betti()[..=deg]);
    let (_, iota) = radical_submodule(&m);
    let ranks: Vec<usize> = tor_induced(&iota, &m, deg)?
        .iter()
        .map(|x| x.rank)
        .collect();
    let rep = series_identity_check(&m, &m, deg)?;
    println!("{:>3} {:>6} {:>3} {:>5}", "i", "length", "nu", "iota");
    for i in 0..=deg {
        println!(
            "{i:>3} {:>6} {:>3} {:>5}",
            rep.lengths[i], rep.nus[i], ranks[i]
        );
    }
    println!(
        "length identity holds through {:?}; consistent with the ranks: {}",
        rep.length_equal_through,
        rep.consistent()
    );
    Ok(())
}
