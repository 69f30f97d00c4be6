mod common;

use gorlab::linalg::FMatrix;
use gorlab::module::{matlis_dual, radical_submodule};
use gorlab::resolution::resolve;
use gorlab::series::{certify_rational, expand_rational, hilbert_series};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_minimal_and_exact(e in 2usize..=4, g in 1usize..=2, r in 0usize..=3, seed: u64) {
        let ring = common::ring(e);
        let Some(m) = common::module(&ring, g, r, seed) else { return Ok(()) };
        let res = resolve(&m, 3).unwrap();
        res.audit().unwrap();
        prop_assert_eq!(res.betti()[0], m.nu());
        for d in res.differentials() {
            prop_assert!(d.in_radical());
        }
        // F_i -> M_i -> 0 with kernel M_{i+1}
        for i in 0..3 {
            let lhs = (e + 2) * res.betti()[i];
            prop_assert_eq!(lhs, res.syzygy(i).dim() + res.syzygy(i + 1).dim());
        }
    }

    #[test]
    fn first_syzygy_of_square_zero_modules(e in 2usize..=4, g in 1usize..=2, r in 0usize..=3, seed: u64) {
        let ring = common::ring(e);
        let Some(m) = common::module(&ring, g, r, seed) else { return Ok(()) };
        let res = resolve(&m, 1).unwrap();
        let m1 = res.syzygy(1);
        prop_assert_eq!(m1.dim(), (e + 2) * m.nu() - m.dim());
        prop_assert_eq!(res.betti()[1], m1.nu());
    }

    #[test]
    fn hilbert_series_adds_up(e in 2usize..=4, g in 1usize..=3, r in 0usize..=4, seed: u64) {
        let ring = common::ring(e);
        let Some(m) = common::module(&ring, g, r, seed) else { return Ok(()) };
        let h = hilbert_series(&m);
        let total: BigInt = h.coefficients.iter().sum();
        prop_assert_eq!(total, BigInt::from(m.dim()));
        prop_assert_eq!(h.coefficients[0].clone(), BigInt::from(m.nu()));
        prop_assert_eq!(radical_submodule(&m).0.dim(), m.dim() - m.nu());
    }

    #[test]
    fn matlis_dual_is_an_involution(e in 2usize..=4, g in 1usize..=3, r in 0usize..=4, seed: u64) {
        let ring = common::ring(e);
        let Some(m) = common::module(&ring, g, r, seed) else { return Ok(()) };
        let d = matlis_dual(&m);
        prop_assert_eq!(d.dim(), m.dim());
        let dd = matlis_dual(&d);
        prop_assert_eq!(dd.acts(), m.acts());
        // socle of M* has the dimension of M/mM
        let soc = gorlab::module::socle_rows(&d).rows();
        prop_assert_eq!(soc, m.nu());
    }

    #[test]
    fn certificates_recover_numerators(
        e in 2usize..=5,
        q in proptest::collection::vec(-5i64..=5, 1..4),
        extra in 6usize..12,
    ) {
        let q: Vec<BigInt> = q.into_iter().map(BigInt::from).collect();
        let n = q.len() + extra;
        let c = expand_rational(&q, e, n);
        let series = gorlab::series::TruncatedIntegerSeries::new(gorlab::series::SeriesKind::Poincare, c.clone());
        let cert = certify_rational(&series, e, 5).unwrap();
        prop_assert!(cert.s < q.len().max(1));
        prop_assert_eq!(cert.expand(), c);
    }
}

#[test]
fn kernel_basis_is_a_kernel() {
    let f = gorlab::linalg::PrimeField::new(101).unwrap();
    let a = FMatrix::from_rows(f, &[[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]);
    let k = a.kernel_basis();
    assert_eq!(k.rows(), 2);
    assert!(a.mul(&k.transpose()).is_zero());
}
