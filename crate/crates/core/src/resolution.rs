//! Minimal free resolutions, syzygies, complete resolutions and chain-map
//! lifting.
//!
//! Free modules `R^b` use generator-major coordinates `k (e+2) + a`. Past
//! the first step every syzygy `K_{i+1} ⊆ m F_i` splits as
//! `ker(Y) ⊕ w F_i`, where `Y` collects the linear parts of `∂_i` twisted by
//! the form; the kernel of a single `β_{i-1} x e β_i` matrix then yields the
//! next differential.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::linalg::{Budget, FMatrix, RowSpace};
use crate::module::{matlis_dual, submodule, FiniteModule, ModuleMap, Presentation};
use crate::ring::{RMatrix, ShortGorensteinRing};

#[derive(Clone, Debug)]
pub struct MinimalFreeResolution {
    module: FiniteModule,
    budget: Budget,
    /// Standard basis vectors of `M` chosen as generators.
    generators: Vec<usize>,
    /// `k`-basis (rows, `F_0` coordinates) of `M_1 = ker(F_0 -> M)`.
    first_syzygy: FMatrix,
    betti: Vec<usize>,
    /// `diffs[i - 1] = ∂_i`, a `β_{i-1} x β_i` matrix over `R`.
    diffs: Vec<RMatrix>,
    /// For `i >= 2`: how many leading generators of `F_i` come from the
    /// kernel of `Y` (the rest are socle generators `w ⊗ e_c`).
    kernel_gens: Vec<usize>,
}

/// The cover `F_0 -> M`, columns `k (e+2) + a` equal to `basis_a * g_k`.
pub fn cover_matrix(m: &FiniteModule, generators: &[usize]) -> FMatrix {
    let e2 = m.ring().dim();
    FMatrix::from_fn(m.ring().field(), m.dim(), e2 * generators.len(), |r, c| {
        m.acts()[c % e2].get(r, generators[c / e2])
    })
}

/// `Y = [Y_1 | .. | Y_e]` with `Y_j = sum_l B_jl G_l`, column `l e + j`.
fn twisted_linear_part(d: &RMatrix, cols: usize) -> FMatrix {
    let ring = d.ring();
    let e = ring.e();
    let f = ring.field();
    let rows = d.rows();
    let mut y = FMatrix::zeros(f, rows, e * cols);
    for j in 0..e {
        let mut yj = FMatrix::zeros(f, rows, cols);
        for l in 0..e {
            let b = ring.b(j, l);
            if b != 0 {
                yj.add_scaled(
                    &d.part(1 + l).select_cols(&(0..cols).collect::<Vec<_>>()),
                    b,
                );
            }
        }
        for r in 0..rows {
            for c in 0..cols {
                y.set(r, c * e + j, yj.get(r, c));
            }
        }
    }
    y
}

impl MinimalFreeResolution {
    /// Resolution of `M` through `F_0`.
    pub fn start(m: &FiniteModule, budget: Budget) -> Self {
        let generators = m.generator_indices();
        let ring = m.ring();
        MinimalFreeResolution {
            module: m.clone(),
            budget,
            betti: vec![generators.len()],
            generators,
            first_syzygy: FMatrix::zeros(ring.field(), 0, 0),
            diffs: Vec::new(),
            kernel_gens: Vec::new(),
        }
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }
    pub fn ring(&self) -> &ShortGorensteinRing {
        self.module.ring()
    }
    /// Number of differentials computed.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    /// `∂_i` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &RMatrix {
        assert!(
            i >= 1 && i <= self.diffs.len(),
            "differential {i} not computed"
        );
        &self.diffs[i - 1]
    }
    pub fn differentials(&self) -> &[RMatrix] {
        &self.diffs
    }
    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn cover(&self) -> FMatrix {
        cover_matrix(&self.module, &self.generators)
    }

    /// Computes differentials until `length() >= n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.diffs.len() < n {
            self.step()?;
        }
        Ok(())
    }

    fn step(&mut self) -> Result<()> {
        let ring = self.ring().clone();
        let f = ring.field();
        let e = ring.e();
        let e2 = e + 2;
        let i = self.diffs.len();
        if i == 0 {
            let c = self.cover();
            self.budget
                .check("kernel of the cover", c.rows(), c.cols())?;
            let k1 = c.kernel_basis();
            let b0 = self.betti[0];
            let mut rs = RowSpace::new(f, e2 * b0);
            let mut v = vec![0u32; e2 * b0];
            'outer: for r in 0..k1.rows() {
                let row = k1.row(r);
                for l in 0..e {
                    if rs.is_full() {
                        break 'outer;
                    }
                    v.iter_mut().for_each(|x| *x = 0);
                    for k in 0..b0 {
                        let mut s = 0u32;
                        for j in 0..e {
                            s = f.add(s, f.mul(ring.b(l, j), row[k * e2 + 1 + j]));
                        }
                        v[k * e2 + e + 1] = s;
                    }
                    rs.insert(&v);
                }
            }
            let mut chosen = Vec::new();
            for r in 0..k1.rows() {
                if rs.insert(k1.row(r)) {
                    chosen.push(r);
                }
            }
            let mut d = RMatrix::zeros(&ring, b0, chosen.len());
            for (col, &r) in chosen.iter().enumerate() {
                let row = k1.row(r);
                for k in 0..b0 {
                    d.set_coeffs(k, col, &row[k * e2..(k + 1) * e2]);
                }
            }
            self.first_syzygy = k1;
            self.betti.push(chosen.len());
            self.diffs.push(d);
            self.kernel_gens.push(0);
            return Ok(());
        }
        let prev = &self.diffs[i - 1];
        let (rows, bi) = (prev.rows(), prev.cols());
        self.budget
            .check(&format!("syzygy step {}", i + 1), rows, e * bi)?;
        let y = twisted_linear_part(prev, bi);
        let kb = y.kernel_basis();
        let mut u = RowSpace::new(f, bi);
        let mut v = vec![0u32; bi];
        'scan: for r in 0..kb.rows() {
            let row = kb.row(r);
            for l in 0..e {
                if u.is_full() {
                    break 'scan;
                }
                for (k, slot) in v.iter_mut().enumerate() {
                    let mut s = 0u32;
                    for j in 0..e {
                        s = f.add(s, f.mul(ring.b(l, j), row[k * e + j]));
                    }
                    *slot = s;
                }
                u.insert(&v);
            }
        }
        let socle_gens = u.complement_indices();
        let next = kb.rows() + socle_gens.len();
        let mut parts: Vec<FMatrix> = (0..e2).map(|_| FMatrix::zeros(f, bi, next)).collect();
        for r in 0..kb.rows() {
            let row = kb.row(r);
            for l in 0..bi {
                for j in 0..e {
                    let val = row[l * e + j];
                    if val != 0 {
                        parts[1 + j].set(l, r, val);
                    }
                }
            }
        }
        for (t, &c) in socle_gens.iter().enumerate() {
            parts[e + 1].set(c, kb.rows() + t, 1);
        }
        let d = RMatrix::from_parts(&ring, parts);
        self.betti.push(next);
        self.diffs.push(d);
        self.kernel_gens.push(kb.rows());
        Ok(())
    }

    /// The syzygy `M_i` (`M_0 = M`), realized inside `F_{i-1}`. Needs
    /// `length() >= i`.
    pub fn syzygy(&self, i: usize) -> FiniteModule {
        let ring = self.ring();
        let f = ring.field();
        let e = ring.e();
        match i {
            0 => self.module.clone(),
            1 => {
                assert!(self.length() >= 1, "resolution too short");
                let free = FiniteModule::free(ring, self.betti[0]);
                submodule(&free, &self.first_syzygy)
                    .expect("the kernel of the cover is a submodule")
                    .0
            }
            _ => {
                assert!(self.length() >= i, "resolution too short");
                let d = &self.diffs[i - 1];
                let kbd = self.kernel_gens[i - 1];
                let rows = d.rows();
                let dim = kbd + rows;
                let y = twisted_linear_part(d, kbd);
                let mut acts = vec![FMatrix::identity(f, dim)];
                for l in 0..e {
                    let mut a = FMatrix::zeros(f, dim, dim);
                    for k in 0..rows {
                        for r in 0..kbd {
                            a.set(kbd + k, r, y.get(k, r * e + l));
                        }
                    }
                    acts.push(a);
                }
                acts.push(FMatrix::zeros(f, dim, dim));
                FiniteModule::from_acts(ring, acts)
            }
        }
    }

    /// `true` when `soc(M_i) ⊆ m M_i`, i.e. `M_i` has no summand `k`.
    /// Needs `length() >= i`, `i >= 1`.
    pub fn syzygy_socle_in_radical(&self, i: usize) -> bool {
        self.split_socle_vector(i).is_none()
    }

    /// A socle element of `M_i` outside `m M_i`, as a vector of `F_{i-1}`
    /// (generator-major), if one exists.
    pub fn split_socle_vector(&self, i: usize) -> Option<Vec<u32>> {
        assert!(i >= 1 && self.length() >= i, "resolution too short");
        let ring = self.ring();
        let e2 = ring.dim();
        let rows = self.betti[i - 1];
        if i >= 2 {
            // soc(M_i) = w F_{i-1} and m M_i = w U; the socle generators of
            // F_i are exactly the complement of U
            let kbd = self.kernel_gens[i - 1];
            if self.betti[i] == kbd {
                return None;
            }
            let d = &self.diffs[i - 1];
            let c = (0..rows).find(|&k| d.part(e2 - 1).get(k, kbd) != 0)?;
            let mut v = vec![0u32; rows * e2];
            v[c * e2 + e2 - 1] = 1;
            return Some(v);
        }
        let syz = self.syzygy(1);
        let embed = self.syzygy_embedding(1);
        let mut rad = syz.radical_space();
        let soc = crate::module::socle_rows(&syz);
        (0..soc.rows())
            .find(|&r| !rad.contains(soc.row(r)))
            .map(|r| embed.mul_vec(soc.row(r)))
    }

    /// Inclusion `M_i -> F_{i-1}` as a `k`-matrix.
    pub fn syzygy_embedding(&self, i: usize) -> FMatrix {
        let ring = self.ring();
        let f = ring.field();
        let e = ring.e();
        let e2 = e + 2;
        match i {
            1 => self.first_syzygy.transpose(),
            _ => {
                let d = &self.diffs[i - 1];
                let kbd = self.kernel_gens[i - 1];
                let rows = d.rows();
                let mut emb = FMatrix::zeros(f, rows * e2, kbd + rows);
                for r in 0..kbd {
                    for k in 0..rows {
                        for j in 0..e {
                            emb.set(k * e2 + 1 + j, r, d.part(1 + j).get(k, r));
                        }
                    }
                }
                for k in 0..rows {
                    emb.set(k * e2 + e + 1, kbd + k, 1);
                }
                emb
            }
        }
    }

    /// Checks minimality, `∂_i ∂_{i+1} = 0` and exactness by `k`-ranks of
    /// the full regular-representation matrices. Independent of the
    /// construction; meant for small windows.
    pub fn audit(&self) -> Result<()> {
        let ring = self.ring();
        let e2 = ring.dim();
        for (i, d) in self.diffs.iter().enumerate() {
            if !d.in_radical() {
                return Err(Error::InvalidModule(format!(
                    "∂_{} has a unit entry",
                    i + 1
                )));
            }
        }
        let cover = self.cover();
        if cover.rank() != self.module.dim() {
            return Err(Error::InvalidModule("cover is not surjective".into()));
        }
        let mut prev_rank = cover.rank();
        let mut prev_cols = cover.cols();
        let mut prev: Option<&RMatrix> = None;
        for (i, d) in self.diffs.iter().enumerate() {
            let k = d.to_k_linear();
            let rank = k.rank();
            if prev_cols - prev_rank != rank {
                return Err(Error::InvalidModule(format!("not exact at F_{i}")));
            }
            if i == 0 && !cover.mul(&k).is_zero() {
                return Err(Error::InvalidModule("∂_1 does not compose to zero".into()));
            }
            if let Some(p) = prev {
                if !p.mul(d)?.is_zero() {
                    return Err(Error::InvalidModule(format!("∂_{i} ∂_{} != 0", i + 1)));
                }
            }
            prev = Some(d);
            prev_rank = rank;
            prev_cols = d.cols() * e2;
        }
        Ok(())
    }
}

pub fn resolve(m: &FiniteModule, n: usize) -> Result<MinimalFreeResolution> {
    resolve_with_budget(m, n, Budget::default())
}

pub fn resolve_with_budget(
    m: &FiniteModule,
    n: usize,
    budget: Budget,
) -> Result<MinimalFreeResolution> {
    let mut res = MinimalFreeResolution::start(m, budget);
    res.extend_to(n)?;
    Ok(res)
}

pub fn betti_numbers(m: &FiniteModule, n: usize) -> Result<Vec<usize>> {
    Ok(resolve(m, n)?.betti()[..=n].to_vec())
}

pub fn syzygy(m: &FiniteModule, i: usize) -> Result<FiniteModule> {
    Ok(resolve(m, i)?.syzygy(i))
}

/// `M_{-i} = ((M^*)_i)^*`.
pub fn negative_syzygy(m: &FiniteModule, i: usize) -> Result<FiniteModule> {
    if !m.radical_square_zero() {
        return Err(Error::RadicalSquareNonzero);
    }
    assert!(i >= 1, "negative syzygies start at 1");
    Ok(matlis_dual(&syzygy(&matlis_dual(m), i)?))
}

/// Minimal presentation: the minimal cover and the first syzygy matrix.
pub fn canonical_presentation(m: &FiniteModule) -> Result<Presentation> {
    Ok(Presentation::new(resolve(m, 1)?.differential(1).clone()))
}

/// `F_{-n} <- .. <- F_{-1} <- F_0 <- .. <- F_n`, glued through `M`.
#[derive(Clone, Debug)]
pub struct CompleteResolutionWindow {
    pub positive: MinimalFreeResolution,
    /// Resolution of `M^*`; `∂_{-i} = (d_i)^T`.
    pub dual: MinimalFreeResolution,
    /// `∂_0: F_0 -> F_{-1}`.
    pub glue: RMatrix,
}

impl CompleteResolutionWindow {
    /// `∂_{-i}: F_{-i} -> F_{-i-1}` for `i >= 1`.
    pub fn negative_differential(&self, i: usize) -> RMatrix {
        self.dual.differential(i).transpose()
    }

    /// Ranks `β_{-i} = β_{i-1}(M^*)` for `1 <= i <= n + 1`.
    pub fn negative_betti(&self) -> Vec<usize> {
        self.dual.betti().to_vec()
    }
}

fn trace_form_block(ring: &ShortGorensteinRing) -> FMatrix {
    let n = ring.dim();
    let w = n - 1;
    FMatrix::from_fn(ring.field(), n, n, |b, a| {
        ring.mul_coeffs(ring.basis(a).coeffs(), ring.basis(b).coeffs())[w]
    })
}

pub fn complete_resolution(m: &FiniteModule, n: usize) -> Result<CompleteResolutionWindow> {
    let positive = resolve(m, n)?;
    let dual = resolve(&matlis_dual(m), n)?;
    let ring = m.ring();
    let e2 = ring.dim();
    let c = positive.cover();
    let cd = dual.cover();
    let b = dual.betti()[0];
    let theta = FMatrix::identity(ring.field(), b).kron(&trace_form_block(ring));
    let theta_inv = theta.inverse().expect("the trace form is nondegenerate");
    let k = theta_inv.mul(&cd.transpose()).mul(&c);
    let mut glue = RMatrix::zeros(ring, b, positive.betti()[0]);
    for l in 0..glue.cols() {
        for r in 0..b {
            let coeffs: Vec<u32> = (0..e2).map(|a| k.get(r * e2 + a, l * e2)).collect();
            glue.set_coeffs(r, l, &coeffs);
        }
    }
    Ok(CompleteResolutionWindow {
        positive,
        dual,
        glue,
    })
}

/// Per-degree `R`-matrices `f_i: F^A_i -> F^B_i` with
/// `∂^B_i f_i = f_{i-1} ∂^A_i`.
#[derive(Clone, Debug)]
pub struct ChainMapLift {
    pub maps: Vec<RMatrix>,
}

impl ChainMapLift {
    pub fn degree(&self, i: usize) -> &RMatrix {
        &self.maps[i]
    }

    /// Re-checks every square exactly.
    pub fn verify(&self, src: &MinimalFreeResolution, dst: &MinimalFreeResolution) -> Result<bool> {
        for i in 1..self.maps.len() {
            let lhs = dst.differential(i).mul(&self.maps[i])?;
            let rhs = self.maps[i - 1].mul(src.differential(i))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Lifts `φ: A -> B` to degrees `0..=n` of the given resolutions.
pub fn lift_chain_map(
    phi: &ModuleMap,
    src: &MinimalFreeResolution,
    dst: &MinimalFreeResolution,
    n: usize,
) -> Result<ChainMapLift> {
    if phi.source().ring() != phi.target().ring() || src.ring() != dst.ring() {
        return Err(Error::RingMismatch);
    }
    assert!(
        src.length() >= n && dst.length() >= n,
        "resolutions too short"
    );
    let ring = src.ring().clone();
    let f = ring.field();
    let e = ring.e();
    let e2 = e + 2;

    let images = phi.matrix().select_cols(src.generators());
    let x = dst
        .cover()
        .solve_columns(&images)
        .expect("a cover is surjective");
    let mut f0 = RMatrix::zeros(&ring, dst.betti()[0], src.betti()[0]);
    for l in 0..f0.cols() {
        for k in 0..f0.rows() {
            let coeffs: Vec<u32> = (0..e2).map(|a| x.get(k * e2 + a, l)).collect();
            f0.set_coeffs(k, l, &coeffs);
        }
    }
    let mut maps = vec![f0];
    for i in 1..=n {
        let rhs = maps[i - 1].mul(src.differential(i))?;
        let d = dst.differential(i);
        let (rows, bi) = (d.rows(), d.cols());
        dst.budget.check(
            &format!("chain lift degree {i}"),
            (e + 1) * rows,
            (e + 1) * bi,
        )?;
        // unknowns: constant parts c (bi), then linear parts y (l e + j)
        let mut sys = FMatrix::zeros(f, (e + 1) * rows, (e + 1) * bi);
        for k in 0..rows {
            for l in 0..bi {
                for j in 0..e {
                    sys.set(k * e + j, l, d.part(1 + j).get(k, l));
                }
                sys.set(e * rows + k, l, d.part(e + 1).get(k, l));
            }
        }
        let y = twisted_linear_part(d, bi);
        for k in 0..rows {
            for c in 0..e * bi {
                sys.set(e * rows + k, bi + c, y.get(k, c));
            }
        }
        let mut b = FMatrix::zeros(f, (e + 1) * rows, rhs.cols());
        for l in 0..rhs.cols() {
            for k in 0..rows {
                debug_assert_eq!(rhs.part(0).get(k, l), 0);
                for j in 0..e {
                    b.set(k * e + j, l, rhs.part(1 + j).get(k, l));
                }
                b.set(e * rows + k, l, rhs.part(e + 1).get(k, l));
            }
        }
        let sol = sys
            .solve_columns(&b)
            .expect("lifts exist along a resolution");
        let mut fi = RMatrix::zeros(&ring, bi, rhs.cols());
        for l in 0..rhs.cols() {
            for g in 0..bi {
                let mut coeffs = vec![0u32; e2];
                coeffs[0] = sol.get(g, l);
                for j in 0..e {
                    coeffs[1 + j] = sol.get(bi + g * e + j, l);
                }
                fi.set_coeffs(g, l, &coeffs);
            }
        }
        maps.push(fi);
    }
    Ok(ChainMapLift { maps })
}

/// Session cache of resolutions keyed by module fingerprint; concurrent
/// readers, exclusive writers.
#[derive(Debug, Default)]
pub struct ResolutionCache {
    budget: Budget,
    map: RwLock<HashMap<String, Arc<MinimalFreeResolution>>>,
}

impl ResolutionCache {
    pub fn new(budget: Budget) -> Self {
        ResolutionCache {
            budget,
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// A resolution of length at least `n`.
    pub fn get(&self, m: &FiniteModule, n: usize) -> Result<Arc<MinimalFreeResolution>> {
        let key = m.fingerprint();
        let existing = {
            let map = self.map.read().expect("cache lock poisoned");
            map.get(&key).cloned()
        };
        if let Some(res) = &existing {
            if res.length() >= n {
                return Ok(res.clone());
            }
        }
        let mut res = match existing {
            Some(r) => (*r).clone(),
            None => MinimalFreeResolution::start(m, self.budget),
        };
        res.extend_to(n)?;
        let res = Arc::new(res);
        let mut map = self.map.write().expect("cache lock poisoned");
        let keep = match map.get(&key) {
            Some(old) if old.length() >= res.length() => old.clone(),
            _ => {
                map.insert(key, res.clone());
                res
            }
        };
        Ok(keep)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{cyclic_module, radical_square_quotient, radical_submodule};

    fn r3() -> ShortGorensteinRing {
        ShortGorensteinRing::identity(101, 3).unwrap()
    }

    #[test]
    fn betti_examples() {
        let r = r3();
        let k = FiniteModule::residue_field(&r);
        assert_eq!(betti_numbers(&k, 4).unwrap(), vec![1, 3, 8, 21, 55]);
        let m1 = cyclic_module(&r, &[r.x(0)]).unwrap();
        assert_eq!(betti_numbers(&m1, 5).unwrap(), vec![1, 1, 2, 5, 13, 34]);
        let free = FiniteModule::free(&r, 1);
        assert_eq!(betti_numbers(&free, 3).unwrap(), vec![1, 0, 0, 0]);
        let free2 = FiniteModule::free(&r, 2);
        assert_eq!(betti_numbers(&free2, 2).unwrap(), vec![2, 0, 0]);
        let r2 = ShortGorensteinRing::hyperbolic(101, 2).unwrap();
        let k2 = FiniteModule::residue_field(&r2);
        assert_eq!(betti_numbers(&k2, 4).unwrap(), vec![1, 2, 3, 4, 5]);
        let q = radical_square_quotient(&r);
        assert_eq!(betti_numbers(&q, 4).unwrap(), vec![1, 1, 3, 8, 21]);
    }

    #[test]
    fn resolutions_pass_the_audit() {
        let r = r3();
        for m in [
            FiniteModule::residue_field(&r),
            cyclic_module(&r, &[r.x(0)]).unwrap(),
            radical_square_quotient(&r),
            crate::module::random_module(&r, 2, 3, 7),
        ] {
            resolve(&m, 4).unwrap().audit().unwrap();
        }
    }

    #[test]
    fn syzygy_examples() {
        let r = r3();
        let k = FiniteModule::residue_field(&r);
        let s = syzygy(&k, 1).unwrap();
        assert_eq!((s.dim(), s.nu()), (4, 3));
        assert_eq!(radical_submodule(&s).0.nu(), 1);
        let m1 = cyclic_module(&r, &[r.x(0)]).unwrap();
        let s = syzygy(&m1, 1).unwrap();
        assert_eq!((s.dim(), s.nu()), (2, 1));
        let free = FiniteModule::free(&r, 1);
        assert_eq!(syzygy(&free, 1).unwrap().dim(), 0);
    }

    #[test]
    fn syzygies_resolve_to_shifted_betti_numbers() {
        let r = r3();
        let m = crate::module::random_module(&r, 2, 2, 3);
        let res = resolve(&m, 5).unwrap();
        for i in 1..=3 {
            let mi = res.syzygy(i);
            let sub = betti_numbers(&mi, 5 - i).unwrap();
            assert_eq!(sub, res.betti()[i..=5].to_vec(), "syzygy {i}");
            let actions = (0..3).map(|j| mi.x(j).clone()).collect();
            FiniteModule::new(&r, actions).unwrap();
        }
    }

    #[test]
    fn negative_syzygy_examples() {
        let r = r3();
        let k = FiniteModule::residue_field(&r);
        let km1 = negative_syzygy(&k, 1).unwrap();
        assert_eq!((km1.dim(), km1.nu()), (4, 1));
        let back = syzygy(&km1, 1).unwrap();
        assert_eq!((back.dim(), back.nu()), (1, 1));
        let km2 = negative_syzygy(&k, 2).unwrap();
        assert_eq!(km2.nu(), 3);
        let free = FiniteModule::free(&r, 1);
        assert_eq!(
            negative_syzygy(&free, 1).unwrap_err(),
            Error::RadicalSquareNonzero
        );
    }

    #[test]
    fn identity_and_zero_lift_exactly() {
        let r = r3();
        let m = crate::module::random_module(&r, 2, 3, 7);
        let res = resolve(&m, 4).unwrap();
        let id = lift_chain_map(&ModuleMap::identity(&m), &res, &res, 4).unwrap();
        for (i, f) in id.maps.iter().enumerate() {
            assert_eq!(f, &RMatrix::identity(&r, res.betti()[i]), "degree {i}");
        }
        let zero = lift_chain_map(&ModuleMap::zero(&m, &m), &res, &res, 4).unwrap();
        assert!(zero.maps.iter().all(|f| f.is_zero()));
    }

    #[test]
    fn inclusion_of_radical_lifts() {
        let r = r3();
        let m1 = cyclic_module(&r, &[r.x(0)]).unwrap();
        let (mm, iota) = radical_submodule(&m1);
        let src = resolve(&mm, 5).unwrap();
        let dst = resolve(&m1, 5).unwrap();
        let lift = lift_chain_map(&iota, &src, &dst, 5).unwrap();
        assert!(lift.verify(&src, &dst).unwrap());
    }

    #[test]
    fn complete_resolution_is_acyclic_at_the_glue() {
        let r = r3();
        for m in [
            FiniteModule::residue_field(&r),
            cyclic_module(&r, &[r.x(0)]).unwrap(),
            crate::module::random_module(&r, 2, 4, 1),
        ] {
            if !m.radical_square_zero() {
                continue;
            }
            let w = complete_resolution(&m, 3).unwrap();
            let d1 = w.positive.differential(1);
            let dm1 = w.negative_differential(1);
            assert!(w.glue.mul(d1).unwrap().is_zero());
            assert!(dm1.mul(&w.glue).unwrap().is_zero());
            assert!(w.glue.in_radical());
            let g = w.glue.to_k_linear();
            let rank_glue = g.rank();
            let rank_d1 = d1.to_k_linear().rank();
            let rank_dm1 = dm1.to_k_linear().rank();
            assert_eq!(g.cols() - rank_glue, rank_d1);
            assert_eq!(g.rows() - rank_dm1, rank_glue);
            for i in 1..=3 {
                assert_eq!(
                    w.negative_betti()[i - 1],
                    negative_syzygy(&m, i).unwrap().nu()
                );
            }
        }
    }

    #[test]
    fn cache_returns_identical_resolutions() {
        let r = r3();
        let cache = ResolutionCache::new(Budget::default());
        let k = FiniteModule::residue_field(&r);
        let a = cache.get(&k, 3).unwrap();
        let b = cache.get(&k, 5).unwrap();
        assert_eq!(&b.betti()[..4], a.betti());
        let fresh = resolve(&k, 5).unwrap();
        assert_eq!(b.differentials(), fresh.differentials());
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn budget_stops_deep_resolutions() {
        let r = r3();
        let k = FiniteModule::residue_field(&r);
        let tight = Budget {
            max_entries: 1e4,
            max_work: 1e6,
        };
        let err = resolve_with_budget(&k, 12, tight).unwrap_err();
        assert!(err.is_resource_limit());
    }
}
