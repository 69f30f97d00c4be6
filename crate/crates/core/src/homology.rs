//! Tor and Ext of module pairs with their `R`-module invariants, induced
//! maps on Tor, and the length-count bookkeeping for `ι_M: mM -> M`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Budget, FMatrix, RowSpace};
use crate::module::{radical_submodule, FiniteModule, ModuleMap};
use crate::resolution::{lift_chain_map, resolve_with_budget, MinimalFreeResolution};

/// Invariants of one homology module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyDegree {
    pub i: usize,
    pub length: usize,
    pub nu: usize,
    pub m_annihilated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced_rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub degrees: Vec<HomologyDegree>,
}

pub type TorTable = HomologyTable;
pub type ExtTable = HomologyTable;

impl HomologyTable {
    pub fn lengths(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.length).collect()
    }
    pub fn nus(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.nu).collect()
    }
    pub fn degree(&self, i: usize) -> &HomologyDegree {
        &self.degrees[i]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedMapResult {
    pub i: usize,
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
}

/// Chain modules `C_i = N^{β_i}` with differentials `∂_i ⊗ N`; with
/// `transpose` the cochain modules `Hom(F_i, N)`.
struct Complex<'a> {
    res: &'a MinimalFreeResolution,
    n: &'a FiniteModule,
    transpose: bool,
}

impl Complex<'_> {
    fn rank_of(&self, i: usize) -> usize {
        self.res.betti()[i]
    }

    /// `C_i -> C_{i-1}` (Tor) or `C^{i-1} -> C^i` (Ext); `None` for `i = 0`.
    fn differential(&self, i: usize) -> Result<Option<FMatrix>> {
        if i == 0 {
            return Ok(None);
        }
        let d = self.res.differential(i);
        let dn = self.n.dim();
        let (rows, cols) = if self.transpose {
            (d.cols() * dn, d.rows() * dn)
        } else {
            (d.rows() * dn, d.cols() * dn)
        };
        self.res
            .budget()
            .check(&format!("complex differential {i}"), rows, cols)?;
        Ok(Some(if self.transpose {
            d.transpose().tensor(self.n.acts())
        } else {
            d.tensor(self.n.acts())
        }))
    }
}

/// Applies `I ⊗ A` to a vector of `N^b`.
fn act_blocks(a: &FMatrix, v: &[u32]) -> Vec<u32> {
    let n = a.rows();
    if n == 0 {
        return Vec::new();
    }
    v.chunks(n).flat_map(|blk| a.mul_vec(blk)).collect()
}

/// Cycles (rows) of `d_in`, or everything when absent.
fn cycles(d_in: Option<&FMatrix>, dim: usize, f: crate::linalg::PrimeField) -> FMatrix {
    match d_in {
        Some(d) => d.kernel_basis(),
        None => FMatrix::identity(f, dim),
    }
}

/// Echelon basis of the boundaries (column space of `d_out`).
fn boundaries(d_out: &FMatrix) -> RowSpace {
    let basis = d_out.transpose().row_space();
    let mut rs = RowSpace::new(d_out.field(), d_out.rows());
    for r in 0..basis.rows() {
        rs.insert(basis.row(r));
    }
    rs
}

fn homology_invariants(i: usize, z: &FMatrix, mut b: RowSpace, acts: &[FMatrix]) -> HomologyDegree {
    let dim_b = b.dim();
    let length = z.rows() - dim_b;
    if length == 0 {
        return HomologyDegree {
            i,
            length,
            nu: 0,
            m_annihilated: true,
            induced_rank: None,
        };
    }
    'outer: for r in 0..z.rows() {
        for a in &acts[1..] {
            if b.is_full() {
                break 'outer;
            }
            b.insert(&act_blocks(a, z.row(r)));
        }
    }
    let grown = b.dim() - dim_b;
    HomologyDegree {
        i,
        length,
        nu: length - grown,
        m_annihilated: grown == 0,
        induced_rank: None,
    }
}

fn table_from_complex(cx: &Complex<'_>, n: usize) -> Result<HomologyTable> {
    let f = cx.n.ring().field();
    let dn = cx.n.dim();
    let mut degrees = Vec::with_capacity(n + 1);
    let mut incoming = cx.differential(0)?;
    for i in 0..=n {
        let outgoing = cx.differential(i + 1)?.expect("positive degree");
        let dim = cx.rank_of(i) * dn;
        // Tor: Z_i = ker ∂_i, B_i = im ∂_{i+1}; Ext: Z^i = ker δ^{i+1}, B^i = im δ^i
        let (z, b) = if cx.transpose {
            let b = match &incoming {
                Some(d) => boundaries(d),
                None => RowSpace::new(f, dim),
            };
            (outgoing.kernel_basis(), b)
        } else {
            (cycles(incoming.as_ref(), dim, f), boundaries(&outgoing))
        };
        degrees.push(homology_invariants(i, &z, b, cx.n.acts()));
        incoming = Some(outgoing);
    }
    Ok(HomologyTable { degrees })
}

fn check_rings(m: &FiniteModule, n: &FiniteModule) -> Result<()> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `Tor_i(M, N)` for `0 <= i <= n`, from the resolution of `M`.
pub fn tor(m: &FiniteModule, n: &FiniteModule, deg: usize) -> Result<TorTable> {
    tor_with_budget(m, n, deg, Budget::default())
}

pub fn tor_with_budget(
    m: &FiniteModule,
    n: &FiniteModule,
    deg: usize,
    budget: Budget,
) -> Result<TorTable> {
    check_rings(m, n)?;
    let res = resolve_with_budget(m, deg + 1, budget)?;
    tor_from_resolution(&res, n, deg)
}

/// `res` must have length at least `deg + 1`.
pub fn tor_from_resolution(
    res: &MinimalFreeResolution,
    n: &FiniteModule,
    deg: usize,
) -> Result<TorTable> {
    check_rings(res.module(), n)?;
    table_from_complex(
        &Complex {
            res,
            n,
            transpose: false,
        },
        deg,
    )
}

/// `Ext^i(M, N)` for `0 <= i <= n`.
pub fn ext(m: &FiniteModule, n: &FiniteModule, deg: usize) -> Result<ExtTable> {
    ext_with_budget(m, n, deg, Budget::default())
}

pub fn ext_with_budget(
    m: &FiniteModule,
    n: &FiniteModule,
    deg: usize,
    budget: Budget,
) -> Result<ExtTable> {
    check_rings(m, n)?;
    let res = resolve_with_budget(m, deg + 1, budget)?;
    ext_from_resolution(&res, n, deg)
}

pub fn ext_from_resolution(
    res: &MinimalFreeResolution,
    n: &FiniteModule,
    deg: usize,
) -> Result<ExtTable> {
    check_rings(res.module(), n)?;
    table_from_complex(
        &Complex {
            res,
            n,
            transpose: true,
        },
        deg,
    )
}

/// Rank of `H(g)` for a chain map `g: C -> C'` in one degree, given cycles
/// of the source and boundaries of the target.
fn induced_rank(g: &FMatrix, z_src: &FMatrix, mut b_dst: RowSpace) -> usize {
    let before = b_dst.dim();
    for r in 0..z_src.rows() {
        if b_dst.is_full() {
            break;
        }
        b_dst.insert(&g.mul_vec(z_src.row(r)));
    }
    b_dst.dim() - before
}

/// Ranks of `Tor_i(φ, N)` for `0 <= i <= n`, computed from an explicit
/// lift of `φ` to the resolutions of its source and target.
pub fn tor_induced(phi: &ModuleMap, n: &FiniteModule, deg: usize) -> Result<Vec<InducedMapResult>> {
    tor_induced_with_budget(phi, n, deg, Budget::default())
}

pub fn tor_induced_with_budget(
    phi: &ModuleMap,
    n: &FiniteModule,
    deg: usize,
    budget: Budget,
) -> Result<Vec<InducedMapResult>> {
    check_rings(phi.source(), n)?;
    let src = resolve_with_budget(phi.source(), deg + 1, budget)?;
    let dst = resolve_with_budget(phi.target(), deg + 1, budget)?;
    tor_induced_from_resolutions(phi, &src, &dst, n, deg)
}

pub fn tor_induced_from_resolutions(
    phi: &ModuleMap,
    src: &MinimalFreeResolution,
    dst: &MinimalFreeResolution,
    n: &FiniteModule,
    deg: usize,
) -> Result<Vec<InducedMapResult>> {
    check_rings(phi.source(), n)?;
    let lift = lift_chain_map(phi, src, dst, deg)?;
    let f = n.ring().field();
    let cs = Complex {
        res: src,
        n,
        transpose: false,
    };
    let ct = Complex {
        res: dst,
        n,
        transpose: false,
    };
    let mut out = Vec::with_capacity(deg + 1);
    let mut in_s = cs.differential(0)?;
    for i in 0..=deg {
        let out_s = cs.differential(i + 1)?.expect("positive degree");
        let out_t = ct.differential(i + 1)?.expect("positive degree");
        let z = cycles(in_s.as_ref(), cs.rank_of(i) * n.dim(), f);
        let b_src = boundaries(&out_s);
        let b_dst = boundaries(&out_t);
        let source_dim = z.rows() - b_src.dim();
        let in_t = ct.differential(i)?;
        let z_t_dim = match &in_t {
            Some(d) => d.cols() - d.rank(),
            None => ct.rank_of(i) * n.dim(),
        };
        let target_dim = z_t_dim - b_dst.dim();
        let g = lift.degree(i).tensor(n.acts());
        let rank = induced_rank(&g, &z, b_dst);
        out.push(InducedMapResult {
            i,
            rank,
            source_dim,
            target_dim,
        });
        in_s = Some(out_s);
    }
    Ok(out)
}

/// Ranks of `Tor_i(φ, N)` computed as `H_i(φ ⊗ G)` for a resolution `G`
/// of `N`; no lifting involved.
pub fn tor_induced_balanced(
    phi: &ModuleMap,
    res_n: &MinimalFreeResolution,
    deg: usize,
) -> Result<Vec<InducedMapResult>> {
    let (a, b) = (phi.source(), phi.target());
    check_rings(a, res_n.module())?;
    let f = a.ring().field();
    let budget = res_n.budget();
    let mut out = Vec::with_capacity(deg + 1);
    let complex = |m: &FiniteModule, i: usize| -> Result<Option<FMatrix>> {
        if i == 0 {
            return Ok(None);
        }
        let d = res_n.differential(i);
        budget.check(
            &format!("complex differential {i}"),
            d.rows() * m.dim(),
            d.cols() * m.dim(),
        )?;
        Ok(Some(d.tensor(m.acts())))
    };
    let mut in_a = None;
    let mut in_b = None;
    for i in 0..=deg {
        let beta = res_n.betti()[i];
        let out_a = complex(a, i + 1)?.expect("positive degree");
        let out_b = complex(b, i + 1)?.expect("positive degree");
        let z_a = cycles(in_a.as_ref(), beta * a.dim(), f);
        let b_a = boundaries(&out_a);
        let b_b = boundaries(&out_b);
        let source_dim = z_a.rows() - b_a.dim();
        let z_b_dim = match &in_b {
            Some(d) => FMatrix::cols(d) - d.rank(),
            None => beta * b.dim(),
        };
        let target_dim = z_b_dim - b_b.dim();
        let g = FMatrix::identity(f, beta).kron(phi.matrix());
        let rank = induced_rank(&g, &z_a, b_b);
        out.push(InducedMapResult {
            i,
            rank,
            source_dim,
            target_dim,
        });
        in_a = Some(out_a);
        in_b = Some(out_b);
    }
    Ok(out)
}

/// One degree of the length count for `ι_M: mM -> M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthCountDegree {
    pub i: usize,
    pub length: usize,
    /// `ν(M) β_i(N) - ν(mM) β_{i-1}(N)`.
    pub base: i64,
    /// `l(L_i)`, the rank of `Tor_i(ι_M, N)`.
    pub image: usize,
    pub identity_holds: bool,
    pub equality: bool,
    pub m_annihilated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthCountReport {
    pub degrees: Vec<LengthCountDegree>,
}

impl LengthCountReport {
    pub fn identity_holds(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.identity_holds && d.length as i64 >= d.base)
    }
}

/// For `m^2 M = 0` checks, for `1 <= i <= n`,
/// `l(Tor_i(M,N)) = ν(M) β_i(N) - ν(mM) β_{i-1}(N) + l(L_i) + l(L_{i-1})`.
pub fn length_count_audit(
    m: &FiniteModule,
    n: &FiniteModule,
    deg: usize,
) -> Result<LengthCountReport> {
    length_count_audit_with_budget(m, n, deg, Budget::default())
}

pub fn length_count_audit_with_budget(
    m: &FiniteModule,
    n: &FiniteModule,
    deg: usize,
    budget: Budget,
) -> Result<LengthCountReport> {
    check_rings(m, n)?;
    if !m.radical_square_zero() {
        return Err(Error::RadicalSquareNonzero);
    }
    let res_n = resolve_with_budget(n, deg + 1, budget)?;
    length_count_from_resolution(m, &res_n, deg)
}

pub fn length_count_from_resolution(
    m: &FiniteModule,
    res_n: &MinimalFreeResolution,
    deg: usize,
) -> Result<LengthCountReport> {
    if !m.radical_square_zero() {
        return Err(Error::RadicalSquareNonzero);
    }
    let (mm, iota) = radical_submodule(m);
    let ranks = tor_induced_balanced(&iota, res_n, deg)?;
    let beta = res_n.betti();
    let (nu_m, nu_mm) = (m.nu() as i64, mm.nu() as i64);
    let tor_mn = crate::homology::tor_from_resolution(res_n, m, deg)?;
    let mut degrees = Vec::new();
    for i in 1..=deg {
        let length = tor_mn.degrees[i].length;
        let base = nu_m * beta[i] as i64 - nu_mm * beta[i - 1] as i64;
        let image = ranks[i].rank;
        let identity_holds =
            length as i64 == base + ranks[i].rank as i64 + ranks[i - 1].rank as i64;
        degrees.push(LengthCountDegree {
            i,
            length,
            base,
            image,
            identity_holds,
            equality: length as i64 == base,
            m_annihilated: tor_mn.degrees[i].m_annihilated,
        });
    }
    Ok(LengthCountReport { degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{cyclic_module, matlis_dual, random_module};
    use crate::ring::ShortGorensteinRing;

    fn r3() -> ShortGorensteinRing {
        ShortGorensteinRing::identity(101, 3).unwrap()
    }

    #[test]
    fn tor_of_free_module() {
        let r = r3();
        let n = random_module(&r, 2, 3, 4);
        let t = tor(&FiniteModule::free(&r, 1), &n, 3).unwrap();
        assert_eq!(t.lengths(), vec![n.dim(), 0, 0, 0]);
        let e = ext(&FiniteModule::free(&r, 1), &n, 3).unwrap();
        assert_eq!(e.lengths(), vec![n.dim(), 0, 0, 0]);
    }

    #[test]
    fn tor_zero_of_cyclic_modules() {
        let r = r3();
        let m1 = cyclic_module(&r, &[r.x(0)]).unwrap();
        assert_eq!(tor(&m1, &m1, 0).unwrap().degree(0).length, 3);
    }

    #[test]
    fn ext_into_ring_vanishes() {
        let r = r3();
        let k = FiniteModule::residue_field(&r);
        let t = ext(&k, &FiniteModule::free(&r, 1), 4).unwrap();
        assert_eq!(t.lengths(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn tor_against_residue_field_gives_betti_numbers() {
        let r = r3();
        let m = random_module(&r, 2, 3, 9);
        let k = FiniteModule::residue_field(&r);
        let t = tor(&m, &k, 4).unwrap();
        let b = crate::resolution::betti_numbers(&m, 4).unwrap();
        assert_eq!(t.lengths(), b);
        assert_eq!(t.nus(), b);
    }

    #[test]
    fn e2_counterexample_degrees() {
        let r2 = ShortGorensteinRing::hyperbolic(101, 2).unwrap();
        let m = cyclic_module(&r2, &[r2.x(0)]).unwrap();
        let t = tor(&m, &m, 6).unwrap();
        for d in &t.degrees[1..] {
            assert_eq!((d.length, d.nu, d.m_annihilated), (2, 1, false));
        }
        let (_, iota) = radical_submodule(&m);
        let ranks = tor_induced(&iota, &m, 6).unwrap();
        assert!(ranks[1..].iter().all(|r| r.rank == 1));
        let res = resolve_with_budget(&m, 7, Budget::default()).unwrap();
        let balanced = tor_induced_balanced(&iota, &res, 6).unwrap();
        assert_eq!(ranks, balanced);
    }

    #[test]
    fn identity_induces_full_rank() {
        let r = r3();
        let m = random_module(&r, 2, 3, 5);
        let n = random_module(&r, 1, 2, 6);
        let ranks = tor_induced(&ModuleMap::identity(&m), &n, 3).unwrap();
        let t = tor(&m, &n, 3).unwrap();
        for (rk, d) in ranks.iter().zip(&t.degrees) {
            assert_eq!(rk.rank, d.length);
            assert_eq!(rk.source_dim, d.length);
        }
    }

    #[test]
    fn balance_and_duality_on_small_pairs() {
        let r = r3();
        for seed in 0..4 {
            let m = random_module(&r, 1, 2, seed);
            let n = random_module(&r, 2, 3, 100 + seed);
            let a = tor(&m, &n, 3).unwrap();
            let b = tor(&n, &m, 3).unwrap();
            assert_eq!(a, b);
            let e = ext(&m, &n, 3).unwrap();
            let d = tor(&m, &matlis_dual(&n), 3).unwrap();
            assert_eq!(e.lengths(), d.lengths());
        }
    }

    #[test]
    fn length_count_for_vector_space() {
        let r = r3();
        let m = FiniteModule::trivial(&r, 2);
        let n = random_module(&r, 1, 2, 1);
        let rep = length_count_audit(&m, &n, 4).unwrap();
        assert!(rep.identity_holds());
        assert!(rep.degrees.iter().all(|d| d.equality && d.image == 0));
    }

    #[test]
    fn length_count_for_counterexample_is_strict() {
        let r2 = ShortGorensteinRing::hyperbolic(101, 2).unwrap();
        let m = cyclic_module(&r2, &[r2.x(0)]).unwrap();
        let rep = length_count_audit(&m, &m, 6).unwrap();
        assert!(rep.identity_holds());
        assert!(rep
            .degrees
            .iter()
            .all(|d| !d.equality && d.length as i64 > d.base));
    }
}
