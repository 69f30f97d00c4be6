mod common;

use gorlab::homology::{ext, ext_from_resolution, tor, tor_from_resolution, tor_induced};
use gorlab::linalg::FMatrix;
use gorlab::module::{hom_space, matlis_dual, radical_submodule, FiniteModule};
use gorlab::resolution::resolve;
use proptest::prelude::*;

/// `dim_k (M ⊗_R N)` straight from the actions: `M ⊗_k N` modulo the
/// span of `x m ⊗ n - m ⊗ x n`.
fn tensor_dim(m: &FiniteModule, n: &FiniteModule) -> usize {
    let f = m.ring().field();
    let (a, b) = (m.dim(), n.dim());
    let mut rel = FMatrix::zeros(f, 0, a * b);
    for i in 0..m.ring().e() {
        let lhs = m.x(i).kron(&FMatrix::identity(f, b));
        let rhs = FMatrix::identity(f, a).kron(n.x(i));
        rel = rel.vstack(&lhs.sub(&rhs).transpose());
    }
    a * b - rel.rank()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tor_is_balanced(e in 2usize..=3, s1: u64, s2: u64) {
        let ring = common::ring(e);
        let (Some(m), Some(n)) = (common::module(&ring, 1, 2, s1), common::module(&ring, 2, 2, s2)) else {
            return Ok(());
        };
        let deg = 3;
        let a = tor_from_resolution(&resolve(&m, deg + 1).unwrap(), &n, deg).unwrap();
        let b = tor_from_resolution(&resolve(&n, deg + 1).unwrap(), &m, deg).unwrap();
        prop_assert_eq!(a.lengths(), b.lengths());
        prop_assert_eq!(a.degrees[0].length, tensor_dim(&m, &n));
    }

    #[test]
    fn ext_matches_dual_tor(e in 2usize..=3, s1: u64, s2: u64) {
        let ring = common::ring(e);
        let (Some(m), Some(n)) = (common::module(&ring, 2, 2, s1), common::module(&ring, 1, 1, s2)) else {
            return Ok(());
        };
        let deg = 3;
        let res = resolve(&m, deg + 1).unwrap();
        let x = ext_from_resolution(&res, &n, deg).unwrap();
        let t = tor_from_resolution(&res, &matlis_dual(&n), deg).unwrap();
        prop_assert_eq!(x.lengths(), t.lengths());
        prop_assert_eq!(x.degrees[0].length, hom_space(&m, &n).unwrap().len());
    }

    #[test]
    fn hom_into_r_has_the_dimension_of_the_dual(e in 2usize..=4, g in 1usize..=3, s: u64) {
        let ring = common::ring(e);
        let Some(m) = common::module(&ring, g, 3, s) else { return Ok(()) };
        let homs = hom_space(&m, &FiniteModule::free(&ring, 1)).unwrap();
        prop_assert_eq!(homs.len(), matlis_dual(&m).dim());
    }
}

#[test]
fn tor_of_k_with_k_is_the_betti_sequence() {
    let r = common::ring(3);
    let k = FiniteModule::residue_field(&r);
    let t = tor(&k, &k, 5).unwrap();
    assert_eq!(t.lengths(), vec![1, 3, 8, 21, 55, 144]);
    assert!(t
        .degrees
        .iter()
        .all(|d| d.m_annihilated && d.nu == d.length));
}

#[test]
fn ext_into_k_counts_generators() {
    let r = common::ring(3);
    let k = FiniteModule::residue_field(&r);
    let m = gorlab::module::cyclic_module(&r, &[r.x(0)]).unwrap();
    let betti = resolve(&m, 5).unwrap().betti()[..=4].to_vec();
    assert_eq!(ext(&m, &k, 4).unwrap().lengths(), betti);
}

#[test]
fn free_modules_have_no_higher_tor() {
    let r = common::ring(3);
    let free = FiniteModule::free(&r, 2);
    let n = common::module(&r, 2, 2, 5).unwrap();
    let t = tor(&free, &n, 3).unwrap();
    assert_eq!(t.degrees[0].length, 2 * n.dim());
    assert!(t.degrees[1..].iter().all(|d| d.length == 0));
}

#[test]
fn inclusion_of_the_radical_of_k_is_zero() {
    let r = common::ring(3);
    let k = FiniteModule::residue_field(&r);
    let (_, iota) = radical_submodule(&k);
    let m = common::module(&r, 2, 2, 9).unwrap();
    assert!(tor_induced(&iota, &m, 3)
        .unwrap()
        .iter()
        .all(|x| x.rank == 0));
}
