//! Finite `R`-modules as `k`-spaces with action matrices, and the basic
//! constructions on them: radical, generators, socle, duals, Hom, quotients.
//!
//! Actions use the column-vector convention: `acts[a] * v` is `basis_a * v`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::{Budget, FMatrix, RowSpace};
use crate::ring::{RMatrix, RingElement, ShortGorensteinRing};

/// A finite module. `acts` holds the action of every ring basis element,
/// `(1, x_1, .., x_e, w)`, so `acts[0]` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    ring: ShortGorensteinRing,
    dim: usize,
    acts: Vec<FMatrix>,
}

impl FiniteModule {
    /// Builds a module from the actions of `x_1..x_e` and checks the ring
    /// relations `A_i A_j = B_ij A_w`, `A_i A_w = A_w A_i = 0`.
    pub fn new(ring: &ShortGorensteinRing, actions: Vec<FMatrix>) -> Result<Self> {
        let e = ring.e();
        if actions.len() != e {
            return Err(Error::InvalidModule(format!(
                "expected {e} action matrices, got {}",
                actions.len()
            )));
        }
        let dim = actions.first().map(|a| a.rows()).unwrap_or(0);
        for (i, a) in actions.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::InvalidModule(format!(
                    "action {i} is not {dim}x{dim}"
                )));
            }
            if a.field() != ring.field() {
                return Err(Error::RingMismatch);
            }
        }
        let (i0, j0, inv) = ring.w_pair();
        let aw = actions[i0].mul(&actions[j0]).scale(inv);
        for i in 0..e {
            for j in 0..e {
                if actions[i].mul(&actions[j]) != aw.scale(ring.b(i, j)) {
                    return Err(Error::InvalidModule(format!(
                        "x{}*x{} does not act as B[{i}][{j}]*w",
                        i + 1,
                        j + 1
                    )));
                }
            }
            if !actions[i].mul(&aw).is_zero() || !aw.mul(&actions[i]).is_zero() {
                return Err(Error::InvalidModule(format!(
                    "x{}*w does not act as 0",
                    i + 1
                )));
            }
        }
        let mut acts = Vec::with_capacity(e + 2);
        acts.push(FMatrix::identity(ring.field(), dim));
        acts.extend(actions);
        acts.push(aw);
        Ok(FiniteModule {
            ring: ring.clone(),
            dim,
            acts,
        })
    }

    /// Trusts the caller: `acts` must satisfy the relations.
    pub(crate) fn from_acts(ring: &ShortGorensteinRing, acts: Vec<FMatrix>) -> Self {
        debug_assert_eq!(acts.len(), ring.dim());
        let dim = acts[0].rows();
        FiniteModule {
            ring: ring.clone(),
            dim,
            acts,
        }
    }

    /// The module with all of `m` acting as zero on `k^dim`.
    pub fn trivial(ring: &ShortGorensteinRing, dim: usize) -> Self {
        let f = ring.field();
        let mut acts = vec![FMatrix::identity(f, dim)];
        acts.extend((0..=ring.e()).map(|_| FMatrix::zeros(f, dim, dim)));
        FiniteModule::from_acts(ring, acts)
    }

    pub fn residue_field(ring: &ShortGorensteinRing) -> Self {
        Self::trivial(ring, 1)
    }

    pub fn zero(ring: &ShortGorensteinRing) -> Self {
        Self::trivial(ring, 0)
    }

    /// `R^g` with generator-major coordinates `k (e+2) + a`.
    pub fn free(ring: &ShortGorensteinRing, g: usize) -> Self {
        let acts = (0..ring.dim())
            .map(|a| {
                let reg = ring.basis(a).regular_representation();
                FMatrix::identity(ring.field(), g).kron(&reg)
            })
            .collect();
        FiniteModule::from_acts(ring, acts)
    }

    pub fn ring(&self) -> &ShortGorensteinRing {
        &self.ring
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    /// Actions of `(1, x_1, .., x_e, w)`.
    pub fn acts(&self) -> &[FMatrix] {
        &self.acts
    }
    /// Action of `x_{i+1}`.
    pub fn x(&self, i: usize) -> &FMatrix {
        &self.acts[1 + i]
    }
    pub fn w(&self) -> &FMatrix {
        &self.acts[self.ring.e() + 1]
    }
    /// Actions of the radical basis `x_1, .., x_e, w`.
    pub fn radical_acts(&self) -> &[FMatrix] {
        &self.acts[1..]
    }

    pub fn act(&self, r: &RingElement, v: &[u32]) -> Result<Vec<u32>> {
        if r.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let f = self.ring.field();
        let mut out = vec![0u32; self.dim];
        for (a, &c) in r.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, y) in out.iter_mut().zip(self.acts[a].mul_vec(v)) {
                *o = f.add(*o, f.mul(c, y));
            }
        }
        Ok(out)
    }

    /// Matrix of the action of `r`.
    pub fn action_of(&self, r: &RingElement) -> FMatrix {
        let mut m = FMatrix::zeros(self.ring.field(), self.dim, self.dim);
        for (a, &c) in r.coeffs().iter().enumerate() {
            m.add_scaled(&self.acts[a], c);
        }
        m
    }

    /// `m^2 M = 0`, i.e. `w` acts as zero.
    pub fn radical_square_zero(&self) -> bool {
        self.w().is_zero()
    }

    /// Echelon basis (rows) of `mM`.
    pub fn radical_space(&self) -> RowSpace {
        let mut rs = RowSpace::new(self.ring.field(), self.dim);
        for a in self.radical_acts() {
            for c in 0..self.dim {
                if rs.is_full() {
                    return rs;
                }
                rs.insert(&a.col(c));
            }
        }
        rs
    }

    pub fn radical_dim(&self) -> usize {
        self.radical_space().dim()
    }

    /// `nu(M) = dim M - dim mM`.
    pub fn nu(&self) -> usize {
        self.dim - self.radical_dim()
    }

    /// Standard basis vectors giving a minimal generating set: the
    /// complement of the echelon pivots of `mM`.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.radical_space().complement_indices()
    }

    /// `dim m^2 M` (the rank of the action of `w`).
    pub fn radical_square_dim(&self) -> usize {
        self.w().rank()
    }

    pub fn direct_sum(&self, other: &FiniteModule) -> Result<FiniteModule> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let f = self.ring.field();
        let (n, m) = (self.dim, other.dim);
        let acts = self
            .acts
            .iter()
            .zip(&other.acts)
            .map(|(a, b)| {
                FMatrix::from_fn(f, n + m, n + m, |r, c| match (r < n, c < n) {
                    (true, true) => a.get(r, c),
                    (false, false) => b.get(r - n, c - n),
                    _ => 0,
                })
            })
            .collect();
        Ok(FiniteModule::from_acts(&self.ring, acts))
    }

    /// SHA-256 over the ring and the action matrices, hex encoded.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.ring.p() as u64).to_le_bytes());
        h.update((self.ring.e() as u64).to_le_bytes());
        for &b in self.ring.form().data() {
            h.update(b.to_le_bytes());
        }
        h.update((self.dim as u64).to_le_bytes());
        for a in &self.acts[1..=self.ring.e()] {
            for &x in a.data() {
                h.update(x.to_le_bytes());
            }
        }
        hex::encode(h.finalize())
    }
}

/// An `R`-linear map; `matrix` is `target.dim x source.dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: FiniteModule,
    target: FiniteModule,
    matrix: FMatrix,
}

impl ModuleMap {
    pub fn new(source: &FiniteModule, target: &FiniteModule, matrix: FMatrix) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch);
        }
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::NotModuleMap(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim,
                source.dim
            )));
        }
        for i in 0..source.ring.e() {
            if matrix.mul(source.x(i)) != target.x(i).mul(&matrix) {
                return Err(Error::NotModuleMap(format!(
                    "does not commute with x{}",
                    i + 1
                )));
            }
        }
        Ok(Self::unchecked(source, target, matrix))
    }

    pub(crate) fn unchecked(source: &FiniteModule, target: &FiniteModule, matrix: FMatrix) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn identity(m: &FiniteModule) -> Self {
        Self::unchecked(m, m, FMatrix::identity(m.ring.field(), m.dim))
    }

    pub fn zero(source: &FiniteModule, target: &FiniteModule) -> Self {
        Self::unchecked(
            source,
            target,
            FMatrix::zeros(source.ring.field(), target.dim, source.dim),
        )
    }

    pub fn source(&self) -> &FiniteModule {
        &self.source
    }
    pub fn target(&self) -> &FiniteModule {
        &self.target
    }
    pub fn matrix(&self) -> &FMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(v)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.source {
            return Err(Error::NotModuleMap(
                "composition of incompatible maps".into(),
            ));
        }
        Ok(Self::unchecked(
            &self.source,
            &other.target,
            other.matrix.mul(&self.matrix),
        ))
    }

    /// `phi^*: N^* -> M^*` for `phi: M -> N`.
    pub fn dual(&self) -> ModuleMap {
        Self::unchecked(
            &matlis_dual(&self.target),
            &matlis_dual(&self.source),
            self.matrix.transpose(),
        )
    }

    /// The image lies in `m * target`.
    pub fn image_in_radical(&self) -> bool {
        let mut rad = self.target.radical_space();
        (0..self.matrix.cols()).all(|c| rad.contains(&self.matrix.col(c)))
    }
}

/// `g x r` matrix over `R`; the columns are relations among `g` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub matrix: RMatrix,
}

impl Presentation {
    pub fn new(matrix: RMatrix) -> Self {
        Presentation { matrix }
    }

    pub fn from_rows(ring: &ShortGorensteinRing, rows: &[Vec<RingElement>]) -> Result<Self> {
        let g = rows.len();
        let r = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != r) {
            return Err(Error::Config("ragged presentation".into()));
        }
        let entries: Vec<RingElement> = rows.iter().flatten().cloned().collect();
        Ok(Presentation {
            matrix: RMatrix::from_elements(ring, g, r, &entries)?,
        })
    }

    pub fn ring(&self) -> &ShortGorensteinRing {
        self.matrix.ring()
    }
    pub fn generators(&self) -> usize {
        self.matrix.rows()
    }
    pub fn relations(&self) -> usize {
        self.matrix.cols()
    }
}

/// Submodule spanned (over `k`) by the given independent rows; the span
/// must be stable under the action.
pub fn submodule(m: &FiniteModule, basis: &FMatrix) -> Result<(FiniteModule, ModuleMap)> {
    let bt = basis.transpose();
    let mut acts = Vec::with_capacity(m.acts.len());
    for a in &m.acts {
        let img = a.mul(&bt);
        let coords = bt
            .solve_columns(&img)
            .ok_or_else(|| Error::InvalidModule("subspace is not a submodule".into()))?;
        acts.push(coords);
    }
    let sub = FiniteModule::from_acts(&m.ring, acts);
    let incl = ModuleMap::unchecked(&sub, m, bt);
    Ok((sub, incl))
}

/// Echelon basis of the `R`-submodule generated by `vectors`.
pub fn span_rows(m: &FiniteModule, vectors: &[Vec<u32>]) -> FMatrix {
    let mut rs = RowSpace::new(m.ring.field(), m.dim);
    for v in vectors {
        for a in &m.acts {
            rs.insert(&a.mul_vec(v));
        }
    }
    rs.basis()
}

/// Quotient by a submodule given by spanning rows. The quotient basis is
/// the set of standard vectors at non-pivot columns of the echelon form.
pub fn quotient(m: &FiniteModule, sub_rows: &FMatrix) -> (FiniteModule, ModuleMap) {
    let f = m.ring.field();
    let n = m.dim;
    let rref = sub_rows.rref();
    let mut is_pivot = vec![false; n];
    for &c in &rref.pivots {
        is_pivot[c] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut pos = vec![usize::MAX; n];
    for (q, &c) in keep.iter().enumerate() {
        pos[c] = q;
    }
    let mut pi = FMatrix::zeros(f, keep.len(), n);
    for (q, &c) in keep.iter().enumerate() {
        pi.set(q, c, 1);
    }
    for (r, &pc) in rref.pivots.iter().enumerate() {
        for &c in &keep {
            pi.set(pos[c], pc, f.neg(rref.matrix.get(r, c)));
        }
    }
    let acts = m
        .acts
        .iter()
        .map(|a| pi.mul(&a.select_cols(&keep)))
        .collect();
    let q = FiniteModule::from_acts(&m.ring, acts);
    let proj = ModuleMap::unchecked(m, &q, pi);
    (q, proj)
}

/// Cokernel of a presentation, together with the cover `R^g -> M`.
pub fn from_presentation(p: &Presentation) -> (FiniteModule, ModuleMap) {
    let ring = p.ring();
    let free = FiniteModule::free(ring, p.generators());
    let rel = p.matrix.to_k_linear().transpose();
    quotient(&free, &rel)
}

/// `mM` with its inclusion.
pub fn radical_submodule(m: &FiniteModule) -> (FiniteModule, ModuleMap) {
    submodule(m, &m.radical_space().basis()).expect("mM is a submodule")
}

/// `nu(M)` and the projection `M -> M/mM`.
pub fn minimal_generators(m: &FiniteModule) -> (usize, ModuleMap) {
    let (q, pi) = quotient(m, &m.radical_space().basis());
    (q.dim(), pi)
}

/// Echelon basis (rows) of `soc(M)`.
pub fn socle_rows(m: &FiniteModule) -> FMatrix {
    let mut stacked = m.acts[1].clone();
    for a in &m.acts[2..] {
        stacked = stacked.vstack(a);
    }
    stacked.kernel_basis().row_space()
}

pub fn socle(m: &FiniteModule) -> (FiniteModule, ModuleMap) {
    submodule(m, &socle_rows(m)).expect("the socle is a submodule")
}

/// `k`-linear dual with transposed actions.
pub fn matlis_dual(m: &FiniteModule) -> FiniteModule {
    FiniteModule::from_acts(&m.ring, m.acts.iter().map(|a| a.transpose()).collect())
}

/// `k`-basis of `Hom_R(M, N)`, obtained by solving `f A^M_i = A^N_i f`.
pub fn hom_space(m: &FiniteModule, n: &FiniteModule) -> Result<Vec<ModuleMap>> {
    hom_space_with_budget(m, n, &Budget::default())
}

pub fn hom_space_with_budget(
    m: &FiniteModule,
    n: &FiniteModule,
    budget: &Budget,
) -> Result<Vec<ModuleMap>> {
    if m.ring != n.ring {
        return Err(Error::RingMismatch);
    }
    let f = m.ring.field();
    let (dm, dn) = (m.dim, n.dim);
    let e = m.ring.e();
    let unknowns = dm * dn;
    budget.check("Hom system", e * unknowns, unknowns)?;
    let mut sys = FMatrix::zeros(f, e * unknowns, unknowns);
    for i in 0..e {
        let (am, an) = (m.x(i), n.x(i));
        for r in 0..dn {
            for c in 0..dm {
                let row = i * unknowns + r * dm + c;
                for k in 0..dm {
                    let v = am.get(k, c);
                    if v != 0 {
                        let idx = r * dm + k;
                        sys.set(row, idx, f.add(sys.get(row, idx), v));
                    }
                }
                for k in 0..dn {
                    let v = an.get(r, k);
                    if v != 0 {
                        let idx = k * dm + c;
                        sys.set(row, idx, f.sub(sys.get(row, idx), v));
                    }
                }
            }
        }
    }
    let ker = sys.kernel_basis();
    Ok((0..ker.rows())
        .map(|r| ModuleMap::unchecked(m, n, FMatrix::from_vec(f, dn, dm, ker.row(r).to_vec())))
        .collect())
}

/// `R/I` for `I` generated by `gens`.
pub fn cyclic_module(ring: &ShortGorensteinRing, gens: &[RingElement]) -> Result<FiniteModule> {
    for (i, g) in gens.iter().enumerate() {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if g.is_unit() {
            return Err(Error::UnitIdeal(i));
        }
    }
    let p = Presentation::from_rows(ring, &[gens.to_vec()])?;
    Ok(from_presentation(&p).0)
}

/// `R/m^2`.
pub fn radical_square_quotient(ring: &ShortGorensteinRing) -> FiniteModule {
    cyclic_module(ring, &[ring.w()]).expect("w lies in m")
}

/// Data of `0 -> A = Rx -> M -> B = M/Rx -> 0`.
#[derive(Clone, Debug)]
pub struct SplitExtension {
    pub a: FiniteModule,
    pub b: FiniteModule,
    pub phi: ModuleMap,
    pub psi: ModuleMap,
    /// `k`-basis of `ann(x)`.
    pub annihilator: Vec<RingElement>,
}

pub fn split_extension(m: &FiniteModule, x: &[u32]) -> Result<SplitExtension> {
    if x.len() != m.dim {
        return Err(Error::InvalidModule(format!(
            "element has {} coordinates, module has dimension {}",
            x.len(),
            m.dim
        )));
    }
    if m.radical_space().contains(x) {
        return Err(Error::GeneratorInRadical);
    }
    let rows = span_rows(m, &[x.to_vec()]);
    let (a, phi) = submodule(m, &rows)?;
    let (b, psi) = quotient(m, &rows);
    let f = m.ring.field();
    let orbit = FMatrix::from_fn(f, m.dim, m.ring.dim(), |r, c| m.acts[c].mul_vec(x)[r]);
    let ker = orbit.kernel_basis();
    let annihilator = (0..ker.rows())
        .map(|r| m.ring.element_from_residues(ker.row(r).to_vec()))
        .collect();
    Ok(SplitExtension {
        a,
        b,
        phi,
        psi,
        annihilator,
    })
}

/// Presentation matrix with entries drawn uniformly from `m`.
pub fn random_presentation(
    ring: &ShortGorensteinRing,
    g: usize,
    r: usize,
    seed: u64,
) -> Presentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_presentation_with(ring, g, r, &mut rng)
}

pub fn random_presentation_with<G: Rng>(
    ring: &ShortGorensteinRing,
    g: usize,
    r: usize,
    rng: &mut G,
) -> Presentation {
    let mut mat = RMatrix::zeros(ring, g, r);
    let p = ring.p();
    for row in 0..g {
        for col in 0..r {
            let mut c = vec![0u32; ring.dim()];
            for v in c.iter_mut().skip(1) {
                *v = rng.gen_range(0..p);
            }
            mat.set_coeffs(row, col, &c);
        }
    }
    Presentation::new(mat)
}

/// Cokernel of a random `g x r` presentation with entries in `m`.
pub fn random_module(ring: &ShortGorensteinRing, g: usize, r: usize, seed: u64) -> FiniteModule {
    from_presentation(&random_presentation(ring, g, r, seed)).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> ShortGorensteinRing {
        ShortGorensteinRing::identity(101, 3).unwrap()
    }

    fn m1(r: &ShortGorensteinRing) -> FiniteModule {
        cyclic_module(r, &[r.x(0)]).unwrap()
    }

    #[test]
    fn presentation_examples() {
        let r = r3();
        let empty = Presentation::new(RMatrix::zeros(&r, 1, 0));
        let (m, cover) = from_presentation(&empty);
        assert_eq!(m.dim(), 5);
        assert_eq!(cover.rank(), 5);
        let (m, cover) = from_presentation(&Presentation::from_rows(&r, &[vec![r.x(0)]]).unwrap());
        assert_eq!(m.dim(), 3);
        assert_eq!(cover.rank(), 3);
        let (k, _) = from_presentation(
            &Presentation::from_rows(&r, &[vec![r.x(0), r.x(1), r.x(2)]]).unwrap(),
        );
        assert_eq!(k.dim(), 1);
        assert!(k.radical_acts().iter().all(|a| a.is_zero()));
    }

    #[test]
    fn radical_and_generators() {
        let r = r3();
        let k = FiniteModule::residue_field(&r);
        assert_eq!(radical_submodule(&k).0.dim(), 0);
        let m = m1(&r);
        let (mm, incl) = radical_submodule(&m);
        assert_eq!(mm.dim(), 2);
        assert_eq!(incl.rank(), 2);
        let free = FiniteModule::free(&r, 1);
        let (rad, _) = radical_submodule(&free);
        assert_eq!(rad.dim(), 4);
        assert_eq!(free.nu(), 1);
        assert_eq!(m.nu(), 1);
        assert_eq!(mm.nu(), 2);
        assert_eq!(rad.nu(), 3);
        let (nu, pi) = minimal_generators(&m);
        assert_eq!(nu, 1);
        assert_eq!(pi.rank(), 1);
    }

    #[test]
    fn socle_examples() {
        let r = r3();
        assert_eq!(socle(&FiniteModule::residue_field(&r)).0.dim(), 1);
        let free = FiniteModule::free(&r, 1);
        let s = socle_rows(&free);
        assert_eq!(s.rows(), 1);
        assert_eq!(s.row(0), &[0, 0, 0, 0, 1]);
        let m = m1(&r);
        assert_eq!(socle(&m).0.dim(), 2);
    }

    #[test]
    fn matlis_dual_examples() {
        let r = r3();
        let k = FiniteModule::residue_field(&r);
        assert_eq!(matlis_dual(&k), k);
        let m = m1(&r);
        let d = matlis_dual(&m);
        assert_eq!(d.dim(), 3);
        assert_eq!(d.nu(), 2);
        let free = FiniteModule::free(&r, 1);
        let fd = matlis_dual(&free);
        assert_eq!((fd.dim(), fd.nu()), (5, 1));
        assert_eq!(matlis_dual(&d), m);
    }

    #[test]
    fn hom_examples() {
        let r = r3();
        let free = FiniteModule::free(&r, 1);
        let m = m1(&r);
        assert_eq!(hom_space(&free, &m).unwrap().len(), 3);
        let k = FiniteModule::residue_field(&r);
        assert_eq!(hom_space(&k, &free).unwrap().len(), 1);
        assert_eq!(hom_space(&m, &free).unwrap().len(), 3);
        for phi in hom_space(&m, &free).unwrap() {
            ModuleMap::new(&m, &free, phi.matrix().clone()).unwrap();
        }
    }

    #[test]
    fn cyclic_examples() {
        let r = r3();
        let m = m1(&r);
        assert_eq!((m.nu(), m.radical_dim()), (1, 2));
        let q = radical_square_quotient(&r);
        assert_eq!(q.dim(), 4);
        let unit = r.element(&[1, 1, 0, 0, 0]).unwrap();
        assert_eq!(cyclic_module(&r, &[unit]), Err(Error::UnitIdeal(0)));
    }

    #[test]
    fn split_extension_examples() {
        let r = r3();
        let free = FiniteModule::free(&r, 1);
        let s = split_extension(&free, &[1, 0, 0, 0, 0]).unwrap();
        assert_eq!((s.a.dim(), s.b.dim()), (5, 0));
        assert!(s.annihilator.is_empty());

        let m = m1(&r);
        let k = FiniteModule::residue_field(&r);
        let sum = m.direct_sum(&k).unwrap();
        let s = split_extension(&sum, &[0, 0, 0, 1]).unwrap();
        assert_eq!(s.a, k);
        assert_eq!((s.b.dim(), s.b.nu()), (3, 1));

        let gen = m.generator_indices()[0];
        let mut x = vec![0; 3];
        x[gen] = 1;
        let s = split_extension(&m, &x).unwrap();
        assert_eq!((s.a.dim(), s.b.dim()), (3, 0));
        assert_eq!(s.annihilator.len(), 2);
        let mut ann = RowSpace::new(r.field(), 5);
        for a in &s.annihilator {
            ann.insert(a.coeffs());
        }
        assert!(ann.contains(r.x(0).coeffs()) && ann.contains(r.w().coeffs()));

        let rad = m.radical_space().basis();
        assert_eq!(
            split_extension(&m, rad.row(0)).unwrap_err(),
            Error::GeneratorInRadical
        );
    }

    #[test]
    fn random_module_examples() {
        let r = r3();
        assert_eq!(random_module(&r, 1, 0, 3), FiniteModule::free(&r, 1));
        let m = random_module(&r, 2, 3, 7);
        assert_eq!(m.nu(), 2);
        assert_eq!(m, random_module(&r, 2, 3, 7));
        let actions = (0..3).map(|i| m.x(i).clone()).collect();
        FiniteModule::new(&r, actions).unwrap();
    }

    #[test]
    fn rejects_actions_violating_relations() {
        let r = r3();
        let f = r.field();
        let mut a = FMatrix::zeros(f, 2, 2);
        a.set(1, 0, 1);
        let z = FMatrix::zeros(f, 2, 2);
        assert!(FiniteModule::new(&r, vec![a.clone(), z.clone(), z.clone()]).is_ok());
        let mut b = FMatrix::zeros(f, 2, 2);
        b.set(0, 1, 1);
        assert!(matches!(
            FiniteModule::new(&r, vec![a, b, z]),
            Err(Error::InvalidModule(_))
        ));
    }
}
