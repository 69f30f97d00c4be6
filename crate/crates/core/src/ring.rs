//! Short Gorenstein rings `R` with `m^3 = 0`, presented by a nondegenerate
//! symmetric bilinear form `B`: on the basis `(1, x_1, .., x_e, w)` the only
//! nonzero products of radical elements are `x_i x_j = B[i][j] w`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{FMatrix, PrimeField};

#[derive(Debug)]
struct RingData {
    field: PrimeField,
    e: usize,
    form: FMatrix,
    /// A pair `(i, j)` with `B[i][j] != 0` and the inverse of that entry,
    /// used to recover the action of `w` from those of the `x_i`.
    w_pair: (usize, usize, u32),
}

/// A validated short Gorenstein ring. Cheap to clone.
#[derive(Clone, Debug)]
pub struct ShortGorensteinRing {
    inner: Arc<RingData>,
}

impl PartialEq for ShortGorensteinRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field && self.inner.form == other.inner.form)
    }
}

impl Eq for ShortGorensteinRing {}

/// Choice of bilinear form for generated test rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormChoice {
    Identity,
    Hyperbolic,
    RandomNondegenerate,
}

impl ShortGorensteinRing {
    /// `make_ring(p, e, B)`; entries of `B` are reduced mod `p`.
    pub fn new<R: AsRef<[i64]>>(p: u64, e: usize, form: &[R]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if e < 2 {
            return Err(Error::EmbeddingDimTooSmall(e));
        }
        if form.len() != e || form.iter().any(|r| r.as_ref().len() != e) {
            return Err(Error::Config(format!("form must be {e}x{e}")));
        }
        Self::from_form(FMatrix::from_rows(field, form))
    }

    pub fn from_form(form: FMatrix) -> Result<Self> {
        let e = form.rows();
        if e < 2 {
            return Err(Error::EmbeddingDimTooSmall(e));
        }
        if !form.is_square() {
            return Err(Error::Config("form must be square".into()));
        }
        for i in 0..e {
            for j in i + 1..e {
                if form.get(i, j) != form.get(j, i) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        if form.det() == 0 {
            return Err(Error::Degenerate);
        }
        let field = form.field();
        let (i, j) = (0..e)
            .flat_map(|i| (0..e).map(move |j| (i, j)))
            .find(|&(i, j)| form.get(i, j) != 0)
            .expect("nondegenerate form has a nonzero entry");
        let inv = field.inv(form.get(i, j));
        Ok(ShortGorensteinRing {
            inner: Arc::new(RingData {
                field,
                e,
                form,
                w_pair: (i, j, inv),
            }),
        })
    }

    /// Ring with the identity form.
    pub fn identity(p: u64, e: usize) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if e < 2 {
            return Err(Error::EmbeddingDimTooSmall(e));
        }
        Self::from_form(FMatrix::identity(field, e))
    }

    /// Hyperbolic planes `[[0,1],[1,0]]` on the diagonal, padded with a
    /// `1` when `e` is odd. For `e = 2` this is `k[x,y]/(x^2, y^2)`.
    pub fn hyperbolic(p: u64, e: usize) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if e < 2 {
            return Err(Error::EmbeddingDimTooSmall(e));
        }
        let mut b = FMatrix::zeros(field, e, e);
        for k in 0..e / 2 {
            b.set(2 * k, 2 * k + 1, 1);
            b.set(2 * k + 1, 2 * k, 1);
        }
        if e % 2 == 1 {
            b.set(e - 1, e - 1, 1);
        }
        Self::from_form(b)
    }

    /// Uniformly random symmetric form, redrawn until nondegenerate.
    pub fn random<G: Rng>(p: u64, e: usize, rng: &mut G) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if e < 2 {
            return Err(Error::EmbeddingDimTooSmall(e));
        }
        loop {
            let mut b = FMatrix::zeros(field, e, e);
            for i in 0..e {
                for j in i..e {
                    let v = rng.gen_range(0..field.p());
                    b.set(i, j, v);
                    b.set(j, i, v);
                }
            }
            if b.det() != 0 {
                return Self::from_form(b);
            }
        }
    }

    pub fn with_choice<G: Rng>(p: u64, e: usize, choice: FormChoice, rng: &mut G) -> Result<Self> {
        match choice {
            FormChoice::Identity => Self::identity(p, e),
            FormChoice::Hyperbolic => Self::hyperbolic(p, e),
            FormChoice::RandomNondegenerate => Self::random(p, e, rng),
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.inner.field
    }
    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.field.p()
    }
    #[inline]
    pub fn e(&self) -> usize {
        self.inner.e
    }
    /// `e + 2`.
    #[inline]
    pub fn dim(&self) -> usize {
        self.inner.e + 2
    }
    #[inline]
    pub fn form(&self) -> &FMatrix {
        &self.inner.form
    }
    #[inline]
    pub fn b(&self, i: usize, j: usize) -> u32 {
        self.inner.form.get(i, j)
    }
    pub(crate) fn w_pair(&self) -> (usize, usize, u32) {
        self.inner.w_pair
    }

    /// Hilbert series `(1, e, 1)`.
    pub fn hilbert(&self) -> [usize; 3] {
        [1, self.e(), 1]
    }

    pub fn one(&self) -> RingElement {
        self.basis(0)
    }
    pub fn zero(&self) -> RingElement {
        RingElement {
            ring: self.clone(),
            coeffs: vec![0; self.dim()],
        }
    }
    /// `x_{i+1}` for `i` in `0..e` (zero-based).
    pub fn x(&self, i: usize) -> RingElement {
        assert!(i < self.e());
        self.basis(1 + i)
    }
    pub fn w(&self) -> RingElement {
        self.basis(self.e() + 1)
    }
    /// Basis element `a` in the order `(1, x_1, .., x_e, w)`.
    pub fn basis(&self, a: usize) -> RingElement {
        let mut z = self.zero();
        z.coeffs[a] = 1;
        z
    }

    pub fn element(&self, coeffs: &[i64]) -> Result<RingElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::Config(format!(
                "ring element needs {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        let f = self.field();
        Ok(RingElement {
            ring: self.clone(),
            coeffs: coeffs.iter().map(|&c| f.reduce(c)).collect(),
        })
    }

    pub fn element_from_residues(&self, coeffs: Vec<u32>) -> RingElement {
        assert_eq!(coeffs.len(), self.dim());
        let p = self.p();
        RingElement {
            ring: self.clone(),
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        }
    }

    /// Multiplication of coefficient vectors, no ring bookkeeping.
    pub(crate) fn mul_coeffs(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field();
        let e = self.e();
        let mut out = vec![0u32; e + 2];
        out[0] = f.mul(a[0], b[0]);
        for i in 1..=e {
            out[i] = f.add(f.mul(a[0], b[i]), f.mul(a[i], b[0]));
        }
        let mut w = f.add(f.mul(a[0], b[e + 1]), f.mul(a[e + 1], b[0]));
        for i in 0..e {
            if a[1 + i] == 0 {
                continue;
            }
            for j in 0..e {
                let bij = self.b(i, j);
                if bij != 0 && b[1 + j] != 0 {
                    w = f.add(w, f.mul(f.mul(a[1 + i], b[1 + j]), bij));
                }
            }
        }
        out[e + 1] = w;
        out
    }

    /// Structure constants `t[a][b][c]`: coefficient of basis `c` in
    /// `basis_a * basis_b`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<u32>>> {
        let n = self.dim();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.mul_coeffs(&self.basis(a).coeffs, &self.basis(b).coeffs))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for ShortGorensteinRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R(p={}, e={}, B={:?})",
            self.p(),
            self.e(),
            self.form().to_rows()
        )
    }
}

/// Element of a [`ShortGorensteinRing`], coordinates in `(1, x_1, .., x_e, w)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: ShortGorensteinRing,
    coeffs: Vec<u32>,
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.ring.e();
        let mut terms = Vec::new();
        for (a, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = match a {
                0 => String::new(),
                a if a <= e => format!("x{a}"),
                _ => "w".to_string(),
            };
            terms.push(match (c, name.is_empty()) {
                (c, true) => c.to_string(),
                (1, false) => name,
                (c, false) => format!("{c}{name}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl RingElement {
    pub fn ring(&self) -> &ShortGorensteinRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0] != 0
    }

    pub fn in_radical(&self) -> bool {
        self.coeffs[0] == 0
    }

    fn check_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_ring(other)?;
        Ok(RingElement {
            ring: self.ring.clone(),
            coeffs: self.ring.mul_coeffs(&self.coeffs, &other.coeffs),
        })
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_ring(other)?;
        let f = self.ring.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(RingElement {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingElement {
        let f = self.ring.field();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, s: u32) -> RingElement {
        let f = self.ring.field();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// Matrix of left multiplication by `self` in the basis `(1, x, w)`.
    pub fn regular_representation(&self) -> FMatrix {
        let r = &self.ring;
        let n = r.dim();
        let mut m = FMatrix::zeros(r.field(), n, n);
        for c in 0..n {
            let col = r.mul_coeffs(&self.coeffs, &r.basis(c).coeffs);
            for (row, v) in col.into_iter().enumerate() {
                m.set(row, c, v);
            }
        }
        m
    }
}

/// Matrix over `R`, stored as one `k`-matrix per basis coordinate:
/// `parts[a][r][c]` is coefficient `a` of entry `(r, c)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RMatrix {
    ring: ShortGorensteinRing,
    rows: usize,
    cols: usize,
    parts: Vec<FMatrix>,
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(8) {
            let row: Vec<String> = (0..self.cols.min(8))
                .map(|c| self.get(r, c).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl RMatrix {
    pub fn zeros(ring: &ShortGorensteinRing, rows: usize, cols: usize) -> Self {
        RMatrix {
            ring: ring.clone(),
            rows,
            cols,
            parts: (0..ring.dim())
                .map(|_| FMatrix::zeros(ring.field(), rows, cols))
                .collect(),
        }
    }

    pub fn identity(ring: &ShortGorensteinRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        m.parts[0] = FMatrix::identity(ring.field(), n);
        m
    }

    pub fn from_parts(ring: &ShortGorensteinRing, parts: Vec<FMatrix>) -> Self {
        assert_eq!(parts.len(), ring.dim());
        let (rows, cols) = (parts[0].rows(), parts[0].cols());
        assert!(parts.iter().all(|p| p.rows() == rows && p.cols() == cols));
        RMatrix {
            ring: ring.clone(),
            rows,
            cols,
            parts,
        }
    }

    /// Row-major entries.
    pub fn from_elements(
        ring: &ShortGorensteinRing,
        rows: usize,
        cols: usize,
        entries: &[RingElement],
    ) -> Result<Self> {
        assert_eq!(entries.len(), rows * cols);
        let mut m = Self::zeros(ring, rows, cols);
        for (idx, x) in entries.iter().enumerate() {
            if x.ring() != ring {
                return Err(Error::RingMismatch);
            }
            m.set(idx / cols.max(1), idx % cols.max(1), x);
        }
        Ok(m)
    }

    pub fn ring(&self) -> &ShortGorensteinRing {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn part(&self, a: usize) -> &FMatrix {
        &self.parts[a]
    }
    pub fn parts(&self) -> &[FMatrix] {
        &self.parts
    }

    pub fn get(&self, r: usize, c: usize) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.parts.iter().map(|p| p.get(r, c)).collect(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, x: &RingElement) {
        for (p, &v) in self.parts.iter_mut().zip(x.coeffs()) {
            p.set(r, c, v);
        }
    }

    pub fn set_coeffs(&mut self, r: usize, c: usize, coeffs: &[u32]) {
        for (p, &v) in self.parts.iter_mut().zip(coeffs) {
            p.set(r, c, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    /// Every entry lies in `m`.
    pub fn in_radical(&self) -> bool {
        self.parts[0].is_zero()
    }

    pub fn transpose(&self) -> RMatrix {
        RMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            parts: self.parts.iter().map(|p| p.transpose()).collect(),
        }
    }

    pub fn mul(&self, other: &RMatrix) -> Result<RMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let e = self.ring.e();
        let (p, q) = (&self.parts, &other.parts);
        let mut out = Vec::with_capacity(e + 2);
        out.push(p[0].mul(&q[0]));
        for l in 1..=e {
            out.push(p[0].mul(&q[l]).add(&p[l].mul(&q[0])));
        }
        let mut w = p[0].mul(&q[e + 1]).add(&p[e + 1].mul(&q[0]));
        for i in 0..e {
            if p[1 + i].is_zero() {
                continue;
            }
            let mut bq = FMatrix::zeros(self.ring.field(), other.rows, other.cols);
            for j in 0..e {
                bq.add_scaled(&q[1 + j], self.ring.b(i, j));
            }
            w = w.add(&p[1 + i].mul(&bq));
        }
        out.push(w);
        Ok(RMatrix::from_parts(&self.ring, out))
    }

    /// `sum_a parts[a] (x) acts[a]`: the map `N^cols -> N^rows` induced on
    /// `F (x) N` when `acts[a]` is the action of basis element `a` on `N`.
    pub fn tensor(&self, acts: &[FMatrix]) -> FMatrix {
        assert_eq!(acts.len(), self.parts.len());
        let n = acts[0].rows();
        let f = self.ring.field();
        let width = self.cols * n;
        let mut out = FMatrix::zeros(f, self.rows * n, width);
        let mut buf = vec![0u32; n * n];
        for r in 0..self.rows {
            for c in 0..self.cols {
                buf.iter_mut().for_each(|x| *x = 0);
                let mut any = false;
                for (part, act) in self.parts.iter().zip(acts) {
                    let coef = part.get(r, c);
                    if coef == 0 {
                        continue;
                    }
                    any = true;
                    for (b, &a) in buf.iter_mut().zip(act.data()) {
                        if a != 0 {
                            *b = f.add(*b, f.mul(coef, a));
                        }
                    }
                }
                if !any {
                    continue;
                }
                for i in 0..n {
                    for j in 0..n {
                        out.set(r * n + i, c * n + j, buf[i * n + j]);
                    }
                }
            }
        }
        out
    }

    /// The `k`-linear matrix of `R^cols -> R^rows`, coordinates
    /// generator-major (index `k (e+2) + a`).
    pub fn to_k_linear(&self) -> FMatrix {
        let acts: Vec<FMatrix> = (0..self.ring.dim())
            .map(|a| self.ring.basis(a).regular_representation())
            .collect();
        self.tensor(&acts)
    }

    /// Entries as nested coefficient arrays.
    pub fn to_nested(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.parts.iter().map(|p| p.get(r, c)).collect())
                    .collect()
            })
            .collect()
    }
}

/// Validates structure constants `t[a][b][c]` (coefficient of basis `c` in
/// `basis_a * basis_b`) on a basis `(1, x_1, .., x_e, w)` and converts an
/// accepted table to the bilinear-form model.
pub fn validate_general_algebra(p: u64, table: &[Vec<Vec<u32>>]) -> Result<ShortGorensteinRing> {
    let field = PrimeField::new(p)?;
    let n = table.len();
    if n == 0
        || table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|c| c.len() != n))
    {
        return Err(Error::Config(
            "structure constants must be an n x n x n array".into(),
        ));
    }
    let t =
        |a: usize, b: usize| -> Vec<u32> { table[a][b].iter().map(|&x| x % field.p()).collect() };
    let mul = |u: &[u32], v: &[u32]| -> Vec<u32> {
        let mut out = vec![0u32; n];
        for a in 0..n {
            if u[a] == 0 {
                continue;
            }
            for b in 0..n {
                if v[b] == 0 {
                    continue;
                }
                let s = field.mul(u[a], v[b]);
                for (o, &c) in out.iter_mut().zip(&table[a][b]) {
                    *o = field.add(*o, field.mul(s, c % field.p()));
                }
            }
        }
        out
    };
    let unit = |a: usize| {
        let mut v = vec![0u32; n];
        v[a] = 1;
        v
    };
    for a in 0..n {
        if t(0, a) != unit(a) || t(a, 0) != unit(a) {
            return Err(Error::NotUnital);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if t(a, b) != t(b, a) {
                return Err(Error::NotCommutative(a, b));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = t(a, b);
            for c in 0..n {
                if mul(&ab, &unit(c)) != mul(&unit(a), &t(b, c)) {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
    }
    for a in 1..n {
        for b in 1..n {
            let ab = t(a, b);
            for c in 1..n {
                if mul(&ab, &unit(c)).iter().any(|&x| x != 0) {
                    return Err(Error::CubeNotZero(a, b, c));
                }
            }
        }
    }
    // socle = kernel of multiplication by every radical basis vector
    let mut stacked = Vec::new();
    for a in 1..n {
        for r in 0..n {
            stacked.push((0..n).map(|c| t(a, c)[r]).collect::<Vec<u32>>());
        }
    }
    let socle_dim = if stacked.is_empty() {
        n
    } else {
        let rows = stacked.len();
        FMatrix::from_vec(field, rows, n, stacked.concat())
            .kernel_basis()
            .rows()
    };
    if socle_dim != 1 {
        return Err(Error::SocleRankNot1(socle_dim));
    }
    let socle = {
        let rows = stacked.len();
        FMatrix::from_vec(field, rows, n, stacked.concat()).kernel_basis()
    };
    let mut squares = Vec::new();
    for a in 1..n {
        for b in 1..n {
            squares.extend(t(a, b));
        }
    }
    let sq = FMatrix::from_vec(field, (n - 1) * (n - 1), n, squares);
    if sq.rank() != 1 || sq.vstack(&socle).rank() != 1 {
        return Err(Error::SocleNotRadicalSquare);
    }
    let e = n - 2;
    if e < 2 {
        return Err(Error::EmbeddingDimTooSmall(e));
    }
    let w = n - 1;
    if socle.get(0, w) == 0 || (0..w).any(|c| socle.get(0, c) != 0) {
        return Err(Error::NotGraded);
    }
    let mut form = FMatrix::zeros(field, e, e);
    for i in 0..e {
        for j in 0..e {
            let prod = t(1 + i, 1 + j);
            if prod[..w].iter().any(|&x| x != 0) {
                return Err(Error::NotGraded);
            }
            form.set(i, j, prod[w]);
        }
        if t(1 + i, w).iter().any(|&x| x != 0) {
            return Err(Error::NotGraded);
        }
    }
    ShortGorensteinRing::from_form(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r3() -> ShortGorensteinRing {
        ShortGorensteinRing::identity(101, 3).unwrap()
    }

    #[test]
    fn make_ring_examples() {
        assert_eq!(r3().dim(), 5);
        let r2 = ShortGorensteinRing::new(101, 2, &[[0, 1], [1, 0]]).unwrap();
        assert_eq!(r2.dim(), 4);
        assert_eq!(r2, ShortGorensteinRing::hyperbolic(101, 2).unwrap());
        let zero = [[0i64; 3]; 3];
        assert_eq!(
            ShortGorensteinRing::new(101, 3, &zero),
            Err(Error::Degenerate)
        );
        assert_eq!(
            ShortGorensteinRing::new(101, 2, &[[1, 2], [3, 1]]),
            Err(Error::NotSymmetric(0, 1))
        );
        assert_eq!(
            ShortGorensteinRing::new(100, 2, &[[1, 0], [0, 1]]),
            Err(Error::NotPrime(100))
        );
        assert_eq!(
            ShortGorensteinRing::new(101, 1, &[[1]]),
            Err(Error::EmbeddingDimTooSmall(1))
        );
    }

    #[test]
    fn characteristic_two_is_admitted() {
        let r = ShortGorensteinRing::new(2, 2, &[[0, 1], [1, 0]]).unwrap();
        assert_eq!(r.x(0).mul(&r.x(1)).unwrap(), r.w());
    }

    #[test]
    fn mul_examples() {
        let r = r3();
        assert_eq!(r.x(0).mul(&r.x(0)).unwrap(), r.w());
        assert!(r.x(0).mul(&r.x(1)).unwrap().is_zero());
        let a = r.element(&[2, 1, 0, 0, 0]).unwrap();
        let b = r.element(&[3, 0, 1, 0, 0]).unwrap();
        assert_eq!(a.mul(&b).unwrap().coeffs(), &[6, 3, 2, 0, 0]);
        let other = ShortGorensteinRing::identity(103, 3).unwrap();
        assert_eq!(r.x(0).mul(&other.x(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn regular_representation_examples() {
        let r = r3();
        let f = r.field();
        assert_eq!(r.one().regular_representation(), FMatrix::identity(f, 5));
        let w = r.w().regular_representation();
        let mut expect = FMatrix::zeros(f, 5, 5);
        expect.set(4, 0, 1);
        assert_eq!(w, expect);
        let x1 = r.x(0).regular_representation();
        let mut expect = FMatrix::zeros(f, 5, 5);
        expect.set(1, 0, 1);
        expect.set(4, 1, 1);
        assert_eq!(x1, expect);
    }

    #[test]
    fn general_algebra_round_trip() {
        let r = r3();
        let back = validate_general_algebra(101, &r.structure_constants()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.form(), &FMatrix::identity(r.field(), 3));
    }

    #[test]
    fn general_algebra_rejects_noncommutative() {
        let mut t = r3().structure_constants();
        t[1][2][4] = 1;
        assert_eq!(
            validate_general_algebra(101, &t),
            Err(Error::NotCommutative(1, 2))
        );
    }

    #[test]
    fn general_algebra_rejects_truncated_polynomial_ring() {
        // k[x]/(x^3) on (1, x, x^2)
        let mut t = vec![vec![vec![0u32; 3]; 3]; 3];
        for a in 0..3 {
            for b in 0..3 {
                if a + b < 3 {
                    t[a][b][a + b] = 1;
                }
            }
        }
        assert_eq!(
            validate_general_algebra(101, &t),
            Err(Error::EmbeddingDimTooSmall(1))
        );
    }

    #[test]
    fn gorenstein_socle_check_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for choice in [
            FormChoice::Identity,
            FormChoice::Hyperbolic,
            FormChoice::RandomNondegenerate,
        ] {
            let r = ShortGorensteinRing::with_choice(101, 4, choice, &mut rng).unwrap();
            for _ in 0..100 {
                let mut c = vec![0i64; r.dim()];
                for v in c.iter_mut().take(r.e() + 1).skip(1) {
                    *v = rng.gen_range(0..101);
                }
                if c.iter().all(|&x| x == 0) {
                    continue;
                }
                let y = r.element(&c).unwrap();
                assert!((0..r.e()).any(|j| !y.mul(&r.x(j)).unwrap().is_zero()));
            }
        }
    }

    #[test]
    fn basis_products_are_commutative_associative_unital() {
        let r = ShortGorensteinRing::random(101, 3, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
        let n = r.dim();
        for a in 0..n {
            let ea = r.basis(a);
            assert_eq!(ea.mul(&r.one()).unwrap(), ea);
            for b in 0..n {
                let eb = r.basis(b);
                assert_eq!(ea.mul(&eb).unwrap(), eb.mul(&ea).unwrap());
                for c in 0..n {
                    let ec = r.basis(c);
                    let lhs = ea.mul(&eb).unwrap().mul(&ec).unwrap();
                    let rhs = ea.mul(&eb.mul(&ec).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
