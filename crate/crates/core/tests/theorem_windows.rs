//! The structure theorems on degree windows that fit the default budget.

mod common;

use gorlab::homology::{ext_from_resolution, tor_from_resolution, tor_induced_balanced};
use gorlab::koszul::is_koszul;
use gorlab::module::{cyclic_module, matlis_dual, radical_submodule, FiniteModule};
use gorlab::resolution::resolve;
use gorlab::series::{
    certify_rational, expand_rational, poincare_from_resolution, series_from_table, SeriesKind,
};
use num_bigint::BigInt;

#[test]
fn residue_field_betti_numbers() {
    for (e, n) in [(2, 20), (3, 8), (4, 6), (5, 5)] {
        let k = FiniteModule::residue_field(&common::ring(e));
        let betti: Vec<BigInt> = resolve(&k, n)
            .unwrap()
            .betti()
            .iter()
            .map(|&b| b.into())
            .collect();
        assert_eq!(betti, expand_rational(&[BigInt::from(1)], e, n), "e = {e}");
    }
}

#[test]
fn poincare_series_are_rational() {
    let ring = common::ring(3);
    let mut seen = 0;
    for seed in 0..12 {
        let Some(m) = common::module(&ring, 1 + seed as usize % 2, 2, seed) else {
            continue;
        };
        let res = resolve(&m, 7).unwrap();
        let cert = certify_rational(&poincare_from_resolution(&res, 7), 3, 5).unwrap();
        assert!(cert.s <= 2);
        seen += 1;
    }
    assert!(seen >= 10);
}

#[test]
fn tor_and_ext_tails() {
    let ring = common::ring(3);
    for seed in 0..6 {
        let (Some(m), Some(n)) = (
            common::module(&ring, 1, 2, seed),
            common::module(&ring, 1, 1, 100 + seed),
        ) else {
            continue;
        };
        let res = resolve(&m, 8).unwrap();
        let tor = tor_from_resolution(&res, &n, 7).unwrap();
        let ext = ext_from_resolution(&res, &n, 7).unwrap();
        for table in [&tor, &ext] {
            assert!(
                table.degrees[2..]
                    .iter()
                    .all(|d| d.m_annihilated && d.length == d.nu),
                "seed {seed}"
            );
        }
        for (table, kind) in [
            (&tor, SeriesKind::TorNu),
            (&tor, SeriesKind::TorLength),
            (&ext, SeriesKind::ExtNu),
            (&ext, SeriesKind::ExtLength),
        ] {
            certify_rational(&series_from_table(table, kind), 3, 4).unwrap();
        }
    }
}

#[test]
fn cyclic_koszul_modules_kill_iota_past_the_bound() {
    let ring = common::ring(3);
    let modules = [
        cyclic_module(&ring, &[ring.x(0)]).unwrap(),
        cyclic_module(&ring, &[ring.x(0), ring.x(1)]).unwrap(),
        FiniteModule::residue_field(&ring),
    ];
    for seed in 0..4 {
        let Some(n) = common::module(&ring, 2, 2, seed) else {
            continue;
        };
        let bound = matlis_dual(&n).nu();
        let res_n = resolve(&n, 8).unwrap();
        for m in &modules {
            assert!(is_koszul(m).unwrap().is_koszul());
            let (_, iota) = radical_submodule(m);
            let ranks = tor_induced_balanced(&iota, &res_n, 7).unwrap();
            assert!(
                ranks.iter().skip(bound + 1).all(|r| r.rank == 0),
                "seed {seed}"
            );
        }
    }
}
