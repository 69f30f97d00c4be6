mod common;

use gorlab::homology::tor_induced;
use gorlab::koszul::{is_koszul, witness_is_valid, KoszulContext};
use gorlab::module::{cyclic_module, radical_submodule, FiniteModule};
use gorlab::resolution::resolve;
use gorlab::ring::RingElement;
use proptest::prelude::*;

fn linear(ring: &gorlab::ring::ShortGorensteinRing, c: &[i64], w: i64) -> RingElement {
    let mut v = vec![0];
    v.extend_from_slice(c);
    v.push(w);
    ring.element(&v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn koszul_modules_have_koszul_syzygies(g in 1usize..=2, r in 0usize..=3, seed: u64) {
        let ring = common::ring(3);
        let Some(m) = common::module(&ring, g, r, seed) else { return Ok(()) };
        let ctx = KoszulContext::new(&ring);
        let v = ctx.is_koszul(&m).unwrap();
        match &v.witness {
            Some(w) => prop_assert!(witness_is_valid(&m, w).unwrap()),
            None => {
                let res = resolve(&m, 3).unwrap();
                for i in 1..=3 {
                    prop_assert!(ctx.is_koszul(&res.syzygy(i)).unwrap().is_koszul());
                }
            }
        }
    }

    #[test]
    fn verdict_matches_tor_against_k(g in 1usize..=2, r in 0usize..=3, seed: u64) {
        let ring = common::ring(3);
        let Some(m) = common::module(&ring, g, r, seed) else { return Ok(()) };
        prop_assume!(m.radical_square_zero());
        let k = FiniteModule::residue_field(&ring);
        let (_, iota) = radical_submodule(&m);
        let zero = tor_induced(&iota, &k, 5).unwrap().iter().all(|x| x.rank == 0);
        prop_assert_eq!(is_koszul(&m).unwrap().is_koszul(), zero);
    }

    #[test]
    fn cyclic_modules_are_koszul_unless_the_ideal_is_m2(
        gens in proptest::collection::vec((proptest::collection::vec(0i64..101, 3), 0i64..101), 1..=3),
    ) {
        let ring = common::ring(3);
        let elems: Vec<RingElement> = gens.iter().map(|(c, w)| linear(&ring, c, *w)).collect();
        let m = cyclic_module(&ring, &elems).unwrap();
        let is_m2 = m.dim() == 4;
        prop_assert_eq!(is_koszul(&m).unwrap().is_koszul(), !is_m2);
    }
}

#[test]
fn ideal_m2_is_the_only_non_koszul_cyclic_module() {
    let ring = common::ring(3);
    assert!(!is_koszul(&cyclic_module(&ring, &[ring.w()]).unwrap())
        .unwrap()
        .is_koszul());
    assert!(
        is_koszul(&cyclic_module(&ring, &[ring.x(0), ring.x(1), ring.x(2)]).unwrap())
            .unwrap()
            .is_koszul()
    );
}
