//! Koszulness verdicts with witnesses for the standard examples and for
//! the negative syzygies of `k`.
//!
//! Usage: `cargo run --example koszul_verdicts`

use gorlab::koszul::{koszul_series_check, witness_is_valid, KoszulContext};
use gorlab::module::{cyclic_module, radical_square_quotient, FiniteModule};
use gorlab::ring::ShortGorensteinRing;

fn main() -> anyhow::Result<()> {
    let r = ShortGorensteinRing::identity(101, 3)?;
    let ctx = KoszulContext::new(&r);
    let mut cases = vec![
        ("k".to_string(), FiniteModule::residue_field(&r)),
        ("R/(x1)".into(), cyclic_module(&r, &[r.x(0)])?),
        ("R/(x1,x2)".into(), cyclic_module(&r, &[r.x(0), r.x(1)])?),
        ("R/m^2".into(), radical_square_quotient(&r)),
    ];
    for i in 1..=2 {
        cases.push((format!("k_-{i}"), (*ctx.k_negative(i)?).clone()));
    }
    for (name, m) in &cases {
        let v = ctx.is_koszul(m)?;
        match &v.witness {
            None => println!("{name:<10} koszul       (i_max {})", v.i_max),
            Some(w) => println!(
                "{name:<10} not koszul   k splits off M_{}; witness valid: {}",
                w.j,
                witness_is_valid(m, w)?
            ),
        }
    }

    let q = radical_square_quotient(&r);
    let rep = koszul_series_check(&q, 6)?;
    println!(
        "R/m^2: P(t) = H(-t)/H_R(-t) first fails at degree {:?}",
        rep.first_mismatch
    );
    Ok(())
}
