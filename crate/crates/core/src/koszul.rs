//! Koszulness of modules over a short Gorenstein ring, decided by the
//! socle test on finitely many syzygies.
//!
//! A non-Koszul `M` has a summand `k_{-j}` for some `j >= 1`, and then
//! `M_j` splits off `k`. Since `dim k_{-j} = dim k_j`, only the `j` with
//! `dim k_j <= dim M` can occur; beyond that bound no check can fire.
//! Free summands of `M` do not change any `M_j`, `j >= 1`, so they need
//! no separate treatment.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Budget, RowSpace};
use crate::module::{socle_rows, FiniteModule};
use crate::resolution::{
    negative_syzygy, resolve_with_budget, MinimalFreeResolution, ResolutionCache,
};
use crate::ring::ShortGorensteinRing;
use crate::series::{hilbert_series, koszul_formula_mismatch, poincare_from_resolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Koszul,
    NotKoszul,
}

/// A socle element of `M_j` outside `m M_j`, in the coordinates of
/// `F_{j-1}` (generator-major).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub j: usize,
    pub element: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulVerdict {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub i_max: usize,
}

impl KoszulVerdict {
    pub fn is_koszul(&self) -> bool {
        self.verdict == Verdict::Koszul
    }
}

/// `dim k_j` for `j = 0, 1, ..` while it stays `<= bound`, from the Betti
/// numbers of a resolution of `k`.
fn residue_syzygy_dims(k_betti: &[usize], e2: usize, bound: usize) -> Vec<usize> {
    let mut dims = vec![1];
    for j in 1..=k_betti.len() {
        let d = e2 * k_betti[j - 1] - dims[j - 1];
        if d > bound {
            break;
        }
        dims.push(d);
    }
    dims
}

/// Per-ring state: the resolution of `k` and the modules `k_{-i}`.
#[derive(Debug)]
pub struct KoszulContext {
    ring: ShortGorensteinRing,
    budget: Budget,
    residue: ResolutionCache,
    negatives: RwLock<HashMap<usize, Arc<FiniteModule>>>,
}

impl KoszulContext {
    pub fn new(ring: &ShortGorensteinRing) -> Self {
        Self::with_budget(ring, Budget::default())
    }

    pub fn with_budget(ring: &ShortGorensteinRing, budget: Budget) -> Self {
        KoszulContext {
            ring: ring.clone(),
            budget,
            residue: ResolutionCache::new(budget),
            negatives: RwLock::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &ShortGorensteinRing {
        &self.ring
    }

    /// `max { j : dim k_j <= dim M }`.
    pub fn i_max(&self, dim: usize) -> Result<usize> {
        let k = FiniteModule::residue_field(&self.ring);
        let e2 = self.ring.dim();
        let mut n = 1;
        loop {
            let res = self.residue.get(&k, n)?;
            let dims = residue_syzygy_dims(&res.betti()[..n], e2, dim);
            if dims.len() <= n {
                return Ok(dims.len() - 1);
            }
            n *= 2;
        }
    }

    pub fn is_koszul(&self, m: &FiniteModule) -> Result<KoszulVerdict> {
        if m.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let i_max = self.i_max(m.dim())?;
        let res = resolve_with_budget(m, i_max, self.budget)?;
        Ok(verdict_from_resolution(&res, i_max))
    }

    /// `k_{-i}` for `i >= 1`.
    pub fn k_negative(&self, i: usize) -> Result<Arc<FiniteModule>> {
        assert!(i >= 1, "negative syzygies start at 1");
        if let Some(m) = self.negatives.read().expect("cache lock poisoned").get(&i) {
            return Ok(m.clone());
        }
        let m = Arc::new(negative_syzygy(
            &FiniteModule::residue_field(&self.ring),
            i,
        )?);
        let mut map = self.negatives.write().expect("cache lock poisoned");
        Ok(map.entry(i).or_insert(m).clone())
    }
}

/// Runs the socle test on `M_1 .. M_{i_max}`; `res.length() >= i_max`.
pub fn verdict_from_resolution(res: &MinimalFreeResolution, i_max: usize) -> KoszulVerdict {
    for j in 1..=i_max {
        if let Some(element) = res.split_socle_vector(j) {
            return KoszulVerdict {
                verdict: Verdict::NotKoszul,
                witness: Some(Witness { j, element }),
                i_max,
            };
        }
    }
    KoszulVerdict {
        verdict: Verdict::Koszul,
        witness: None,
        i_max,
    }
}

pub fn is_koszul(m: &FiniteModule) -> Result<KoszulVerdict> {
    KoszulContext::new(m.ring()).is_koszul(m)
}

pub fn k_negative(ring: &ShortGorensteinRing, i: usize) -> Result<FiniteModule> {
    assert!(i >= 1, "negative syzygies start at 1");
    negative_syzygy(&FiniteModule::residue_field(ring), i)
}

/// Checks that `witness.element` lies in `soc(M_j)` but not in `m M_j`,
/// recomputing `M_j` from scratch.
pub fn witness_is_valid(m: &FiniteModule, witness: &Witness) -> Result<bool> {
    let res = resolve_with_budget(m, witness.j, Budget::default())?;
    let syz = res.syzygy(witness.j);
    let emb = res.syzygy_embedding(witness.j);
    if emb.rows() != witness.element.len() {
        return Ok(false);
    }
    let f = m.ring().field();
    let Some(v) = emb.solve(&witness.element) else {
        return Ok(false);
    };
    let mut soc = RowSpace::new(f, syz.dim());
    let sr = socle_rows(&syz);
    for r in 0..sr.rows() {
        soc.insert(sr.row(r));
    }
    let in_socle = soc.contains(&v);
    let in_radical = syz.radical_space().contains(&v);
    Ok(in_socle && !in_radical && v.iter().any(|&x| x != 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulSeriesReport {
    pub truncation: usize,
    /// First degree where `P_M = H_M(-t)/H_R(-t)` fails.
    pub first_mismatch: Option<usize>,
    pub verdict: KoszulVerdict,
    /// Formula and verdict disagree; needs inspection.
    pub flagged: bool,
}

pub fn koszul_series_check(m: &FiniteModule, n: usize) -> Result<KoszulSeriesReport> {
    if !m.radical_square_zero() {
        return Err(Error::RadicalSquareNonzero);
    }
    let ctx = KoszulContext::new(m.ring());
    let i_max = ctx.i_max(m.dim())?;
    let res = resolve_with_budget(m, n.max(i_max), Budget::default())?;
    let verdict = verdict_from_resolution(&res, i_max);
    let p = poincare_from_resolution(&res, n);
    let first_mismatch = koszul_formula_mismatch(&hilbert_series(m), &p, m.ring().e());
    let flagged = first_mismatch.is_none() != verdict.is_koszul();
    Ok(KoszulSeriesReport {
        truncation: n,
        first_mismatch,
        verdict,
        flagged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{cyclic_module, radical_square_quotient};

    fn r3() -> ShortGorensteinRing {
        ShortGorensteinRing::identity(101, 3).unwrap()
    }

    #[test]
    fn verdict_examples() {
        let r = r3();
        let m1 = cyclic_module(&r, &[r.x(0)]).unwrap();
        assert!(is_koszul(&m1).unwrap().is_koszul());
        assert!(is_koszul(&FiniteModule::residue_field(&r))
            .unwrap()
            .is_koszul());
        let q = radical_square_quotient(&r);
        let v = is_koszul(&q).unwrap();
        assert_eq!(v.verdict, Verdict::NotKoszul);
        let w = v.witness.unwrap();
        assert_eq!(w.j, 1);
        assert!(witness_is_valid(&q, &w).unwrap());
    }

    #[test]
    fn i_max_bound() {
        let ctx = KoszulContext::new(&r3());
        // dim k_j: 1, 4, 11, 29
        assert_eq!(ctx.i_max(1).unwrap(), 0);
        assert_eq!(ctx.i_max(4).unwrap(), 1);
        assert_eq!(ctx.i_max(12).unwrap(), 2);
        assert_eq!(ctx.i_max(29).unwrap(), 3);
    }

    #[test]
    fn negative_syzygies_of_k() {
        let r = r3();
        let ctx = KoszulContext::new(&r);
        let k1 = ctx.k_negative(1).unwrap();
        assert_eq!(k1.dim(), 4);
        assert_eq!(k1.nu(), 1);
        assert_eq!(ctx.k_negative(2).unwrap().nu(), 3);
        assert_eq!(k_negative(&r, 3).unwrap().nu(), 8);
        let v = is_koszul(&k_negative(&r, 2).unwrap()).unwrap();
        assert_eq!(v.witness.map(|w| w.j), Some(2));
    }

    #[test]
    fn series_checks() {
        let r = r3();
        let m1 = cyclic_module(&r, &[r.x(0)]).unwrap();
        let rep = koszul_series_check(&m1, 9).unwrap();
        assert_eq!(rep.first_mismatch, None);
        assert!(!rep.flagged);
        let rep = koszul_series_check(&radical_square_quotient(&r), 6).unwrap();
        assert_eq!(rep.first_mismatch, Some(1));
        assert!(!rep.flagged);
        let rep = koszul_series_check(&FiniteModule::residue_field(&r), 8).unwrap();
        assert_eq!(rep.first_mismatch, None);
    }
}
