//! Tor and Ext tables between a few modules over `R` with `e = 3`,
//! including the ranks of the maps induced by `mM -> M`.
//!
//! Usage: `cargo run --example tor_ext_tables -- [degree]`

use gorlab::homology::{ext, tor, tor_induced, HomologyTable};
use gorlab::module::{cyclic_module, radical_square_quotient, radical_submodule, FiniteModule};
use gorlab::ring::ShortGorensteinRing;

fn print_table(title: &str, t: &HomologyTable, ranks: &[usize]) {
    println!("{title}");
    println!(
        "  {:>2} {:>6} {:>4} {:>8} {:>6}",
        "i", "length", "nu", "m-killed", "iota"
    );
    for d in &t.degrees {
        println!(
            "  {:>2} {:>6} {:>4} {:>8} {:>6}",
            d.i, d.length, d.nu, d.m_annihilated, ranks[d.i]
        );
    }
}

fn main() -> anyhow::Result<()> {
    let deg: usize = std::env::args().nth(1).map_or(Ok(5), |a| a.parse())?;
    let r = ShortGorensteinRing::identity(101, 3)?;
    let k = FiniteModule::residue_field(&r);
    let m1 = cyclic_module(&r, &[r.x(0)])?;
    let q = radical_square_quotient(&r);

    for (name, m, n) in [
        ("M1, k", &m1, &k),
        ("M1, M1", &m1, &m1),
        ("R/m^2, M1", &q, &m1),
    ] {
        let (_, iota) = radical_submodule(m);
        let ranks: Vec<usize> = tor_induced(&iota, n, deg)?.iter().map(|x| x.rank).collect();
        print_table(&format!("Tor({name})"), &tor(m, n, deg)?, &ranks);
        let e = ext(m, n, deg)?;
        println!("Ext({name}) lengths {:?}", e.lengths());
    }
    Ok(())
}
