//! The standard modules over `R` with `e = 3`, their invariants, and a
//! JSON round trip through the file format used by the CLI.
//!
//! Usage: `cargo run --example module_constructions`

use gorlab::io::{parse_module, to_canonical, ModuleDoc};
use gorlab::module::{
    cyclic_module, from_presentation, matlis_dual, radical_square_quotient, random_presentation,
    socle, FiniteModule,
};
use gorlab::resolution::canonical_presentation;
use gorlab::ring::ShortGorensteinRing;
use gorlab::series::hilbert_series;

fn describe(name: &str, m: &FiniteModule) {
    let h: Vec<String> = hilbert_series(m)
        .coefficients
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!(
        "{name:<12} dim {:>2}  nu {:>2}  hilbert [{}]  socle {:>2}  m^2M=0 {}",
        m.dim(),
        m.nu(),
        h.join(", "),
        socle(m).0.dim(),
        m.radical_square_zero(),
    );
}

fn main() -> anyhow::Result<()> {
    let r = ShortGorensteinRing::identity(101, 3)?;
    let x = |i| r.x(i);

    describe("k", &FiniteModule::residue_field(&r));
    describe("R", &FiniteModule::free(&r, 1));
    describe("R/(x1)", &cyclic_module(&r, &[x(0)])?);
    describe("R/(x1,x2)", &cyclic_module(&r, &[x(0), x(1)])?);
    describe("R/m^2", &radical_square_quotient(&r));

    let (m, _) = from_presentation(&random_presentation(&r, 2, 3, 11));
    describe("random", &m);
    let dual = matlis_dual(&m);
    describe("dual", &dual);
    assert_eq!(matlis_dual(&dual).fingerprint(), m.fingerprint());

    let doc = ModuleDoc::inline(canonical_presentation(&m)?);
    let text = to_canonical(&doc.to_json());
    println!("stored: {}", text.trim_end());
    let back = parse_module(&serde_json::from_str(&text)?, None)?.module();
    println!(
        "round trip keeps dim {} and nu {}",
        back.dim() == m.dim(),
        back.nu() == m.nu()
    );
    Ok(())
}
