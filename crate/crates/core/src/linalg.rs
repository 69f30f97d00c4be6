//! Dense linear algebra over prime fields `GF(p)`, `p < 2^16`.
//!
//! Entries are stored reduced in `[0, p)` as `u32`. Elimination runs on a
//! `u64` scratch buffer with lazy reduction: every row update adds a product
//! below `2^32`, and a row receives at most one update per pivot, so nothing
//! overflows before the final reduction.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Validates `p` by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut k: u64) -> u32 {
        let mut acc = 1u32 % self.p;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// Limits on the size of dense systems the heavy operations may build.
///
/// `work` is estimated as `min(rows, cols) * rows * cols`, the cost of a
/// Gauss-Jordan pass.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    pub max_entries: f64,
    pub max_work: f64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_entries: 3e7,
            max_work: 2e10,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_entries: f64::INFINITY,
            max_work: f64::INFINITY,
        }
    }

    pub fn check(&self, what: &str, rows: usize, cols: usize) -> Result<()> {
        let entries = rows as f64 * cols as f64;
        let work = entries * rows.min(cols) as f64;
        if entries > self.max_entries || work > self.max_work {
            return Err(Error::ResourceLimit {
                what: what.to_string(),
                rows,
                cols,
                work,
                limit: self.max_work,
            });
        }
        Ok(())
    }
}

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows.min(12) {
            writeln!(f, "  {:?}", &self.row(r)[..self.cols.min(16)])?;
        }
        Ok(())
    }
}

/// Result of [`FMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl FMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        let p = field.p();
        let data = data.into_iter().map(|x| x % p).collect();
        FMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from signed rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Self {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        FMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.p());
            }
        }
        FMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Column vector.
    pub fn column(field: PrimeField, v: &[u32]) -> Self {
        Self::from_vec(field, v.len(), 1, v.to_vec())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Matrix product; panics on a shape or field mismatch.
    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.field.p() as u64;
        let n = other.cols;
        let mut out = FMatrix::zeros(self.field, self.rows, n);
        let mut acc = vec![0u64; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u64;
                for (s, &b) in acc.iter_mut().zip(other.row(k)) {
                    *s += a * b as u64;
                }
            }
            for (o, s) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = (s % p) as u32;
            }
        }
        out
    }

    /// `self * v` for a column vector given as a slice.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(
            self.cols,
            v.len(),
            "shape mismatch in matrix-vector product"
        );
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        FMatrix { data, ..*self }
    }

    pub fn sub(&self, other: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        FMatrix { data, ..*self }
    }

    pub fn scale(&self, s: u32) -> FMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        FMatrix { data, ..*self }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &FMatrix, s: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, s));
        }
    }

    pub fn hstack(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        FMatrix {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn vstack(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, cols: &[usize]) -> FMatrix {
        FMatrix::from_fn(self.field, self.rows, cols.len(), |r, c| {
            self.get(r, cols[c])
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> FMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        FMatrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &FMatrix) -> FMatrix {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = FMatrix::zeros(self.field, r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out.data[(i * r2 + k) * (c1 * c2) + j * c2 + l] =
                            self.field.mul(a, other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form with pivots chosen as the first nonzero
    /// entry in column order.
    pub fn rref(&self) -> Rref {
        let (matrix, pivots) = eliminate(self, self.cols);
        Rref { matrix, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Rows form a basis of `{v : A v = 0}`; free variables are taken in
    /// increasing column order, each set to 1 in turn.
    pub fn kernel_basis(&self) -> FMatrix {
        let rref = self.rref();
        kernel_from_rref(&rref.matrix, &rref.pivots, self.cols)
    }

    /// Some `x` with `A x = b`, free variables set to zero; `None` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let rhs = FMatrix::column(self.field, b);
        self.solve_columns(&rhs).map(|x| x.col(0))
    }

    /// Solves `A X = B` column by column with the same deterministic
    /// particular solution as [`solve`](Self::solve). `None` if any column
    /// is inconsistent.
    pub fn solve_columns(&self, rhs: &FMatrix) -> Option<FMatrix> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let aug = self.hstack(rhs);
        let (red, pivots) = eliminate(&aug, self.cols);
        let rank = pivots.len();
        for r in rank..red.rows {
            if red.row(r)[self.cols..].iter().any(|&x| x != 0) {
                return None;
            }
        }
        let mut x = FMatrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            x.row_mut(pc)
                .copy_from_slice(&red.row(i)[self.cols..self.cols + rhs.cols]);
        }
        Some(x)
    }

    /// Basis (rows) of the row space in reduced echelon form.
    pub fn row_space(&self) -> FMatrix {
        let rref = self.rref();
        let r = rref.rank();
        let rows: Vec<usize> = (0..r).collect();
        rref.matrix.select_rows(&rows)
    }

    pub fn det(&self) -> u32 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| a.get(r, c) != 0) else {
                return 0;
            };
            if piv != c {
                for k in 0..n {
                    a.data.swap(piv * n + k, c * n + k);
                }
                det = f.neg(det);
            }
            let pv = a.get(c, c);
            det = f.mul(det, pv);
            let inv = f.inv(pv);
            for r in c + 1..n {
                let factor = f.mul(a.get(r, c), inv);
                if factor == 0 {
                    continue;
                }
                for k in c..n {
                    let v = f.sub(a.get(r, k), f.mul(factor, a.get(c, k)));
                    a.data[r * n + k] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<FMatrix> {
        assert!(self.is_square());
        self.solve_columns(&FMatrix::identity(self.field, self.rows))
            .filter(|_| self.rank() == self.rows)
    }
}

/// Gauss-Jordan elimination; pivots are only searched among the first
/// `pivot_limit` columns, the remaining columns are carried along.
fn eliminate(a: &FMatrix, pivot_limit: usize) -> (FMatrix, Vec<usize>) {
    let (rows, cols) = (a.rows, a.cols);
    let f = a.field;
    let p = f.p() as u64;
    let mut buf: Vec<u64> = a.data.iter().map(|&x| x as u64).collect();
    let mut pivots = Vec::new();
    let mut piv = vec![0u32; cols];
    let mut r0 = 0;
    for col in 0..pivot_limit.min(cols) {
        if r0 == rows {
            break;
        }
        let mut found = None;
        for r in r0..rows {
            let idx = r * cols + col;
            let v = buf[idx] % p;
            buf[idx] = v;
            if v != 0 {
                found = Some(r);
                break;
            }
        }
        let Some(r) = found else { continue };
        if r != r0 {
            let (lo, hi) = buf.split_at_mut(r * cols);
            lo[r0 * cols..(r0 + 1) * cols].swap_with_slice(&mut hi[..cols]);
        }
        let inv = f.inv(buf[r0 * cols + col] as u32) as u64;
        for k in col..cols {
            let v = ((buf[r0 * cols + k] % p) * inv % p) as u32;
            piv[k] = v;
            buf[r0 * cols + k] = v as u64;
        }
        for i in 0..rows {
            if i == r0 {
                continue;
            }
            let idx = i * cols + col;
            let fac = buf[idx] % p;
            if fac == 0 {
                buf[idx] = 0;
                continue;
            }
            let c = p - fac;
            let row = &mut buf[idx..(i + 1) * cols];
            for (x, &y) in row.iter_mut().zip(&piv[col..]) {
                *x += c * y as u64;
            }
            buf[idx] = 0;
        }
        pivots.push(col);
        r0 += 1;
    }
    let data = buf.into_iter().map(|x| (x % p) as u32).collect();
    (
        FMatrix {
            field: f,
            rows,
            cols,
            data,
        },
        pivots,
    )
}

fn kernel_from_rref(rref: &FMatrix, pivots: &[usize], cols: usize) -> FMatrix {
    let f = rref.field;
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = FMatrix::zeros(f, free.len(), cols);
    for (i, &fc) in free.iter().enumerate() {
        k.data[i * cols + fc] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            k.data[i * cols + pc] = f.neg(rref.get(r, fc));
        }
    }
    k
}

/// Incrementally built row space in echelon form.
///
/// Each stored row is normalised (pivot entry 1) and vanishes left of its
/// pivot; rows are kept sorted by pivot column.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: PrimeField,
    len: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    scratch: Vec<u64>,
}

impl RowSpace {
    pub fn new(field: PrimeField, len: usize) -> Self {
        RowSpace {
            field,
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
            scratch: vec![0; len],
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows; returns the pivot of the
    /// residue, if it is nonzero. The residue is left in `self.scratch`.
    fn reduce_into_scratch(&mut self, v: &[u32]) -> Option<usize> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let p = self.field.p() as u64;
        for (s, &x) in self.scratch.iter_mut().zip(v) {
            *s = x as u64;
        }
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let fac = self.scratch[c] % p;
            if fac == 0 {
                self.scratch[c] = 0;
                continue;
            }
            let m = p - fac;
            for (x, &y) in self.scratch[c..].iter_mut().zip(&row[c..]) {
                *x += m * y as u64;
            }
            self.scratch[c] = 0;
        }
        self.scratch.iter_mut().for_each(|x| *x %= p);
        self.scratch.iter().position(|&x| x != 0)
    }

    pub fn contains(&mut self, v: &[u32]) -> bool {
        self.reduce_into_scratch(v).is_none()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let Some(c) = self.reduce_into_scratch(v) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(self.scratch[c] as u32) as u64;
        let p = f.p() as u64;
        let row: Vec<u32> = self.scratch.iter().map(|&x| (x * inv % p) as u32).collect();
        let pos = self.pivots.partition_point(|&q| q < c);
        self.pivots.insert(pos, c);
        self.rows.insert(pos, row);
        true
    }

    /// Standard basis indices completing the stored rows to a basis of the
    /// ambient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.len];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.len).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn basis(&self) -> FMatrix {
        let data = self.rows.iter().flatten().copied().collect();
        FMatrix::from_vec(self.field, self.rows.len(), self.len, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_composites_and_large_moduli() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(65537).is_err());
        assert!(PrimeField::new(65521).is_ok());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn rref_identity() {
        let f = gf(5);
        let id = FMatrix::identity(f, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn rref_rank_one() {
        let f = gf(5);
        let a = FMatrix::from_rows(f, &[[1, 2], [2, 4]]);
        let r = a.rref();
        assert_eq!(r.matrix, FMatrix::from_rows(f, &[[1, 2], [0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn rref_zero() {
        let f = gf(5);
        let z = FMatrix::zeros(f, 3, 3);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let f = gf(5);
        let a = FMatrix::from_rows(f, &[[1, 2], [2, 4]]);
        assert_eq!(a.kernel_basis(), FMatrix::from_rows(f, &[[3, 1]]));
        let inv = FMatrix::from_rows(f, &[[1, 1], [0, 1]]);
        assert_eq!(inv.kernel_basis().rows(), 0);
        let empty = FMatrix::zeros(f, 0, 3);
        assert_eq!(empty.kernel_basis(), FMatrix::identity(f, 3));
    }

    #[test]
    fn solve_examples() {
        let f = gf(5);
        assert_eq!(FMatrix::identity(f, 2).solve(&[4, 2]), Some(vec![4, 2]));
        let a = FMatrix::from_rows(f, &[[1, 2], [2, 4]]);
        assert_eq!(a.solve(&[1, 3]), None);
        assert_eq!(a.solve(&[1, 2]), Some(vec![1, 0]));
    }

    #[test]
    fn det_and_inverse() {
        let f = gf(101);
        let a = FMatrix::from_rows(f, &[[0, 1], [1, 0]]);
        assert_eq!(a.det(), 100);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), FMatrix::identity(f, 2));
        let s = FMatrix::from_rows(f, &[[1, 2], [2, 4]]);
        assert_eq!(s.det(), 0);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn row_space_tracks_rank() {
        let f = gf(7);
        let mut rs = RowSpace::new(f, 3);
        assert!(rs.insert(&[0, 1, 2]));
        assert!(rs.insert(&[1, 1, 1]));
        assert!(!rs.insert(&[2, 3, 4]));
        assert_eq!(rs.dim(), 2);
        assert_eq!(rs.complement_indices(), vec![2]);
        assert!(rs.contains(&[1, 2, 3]));
        assert!(!rs.contains(&[0, 0, 1]));
    }

    #[test]
    fn budget_rejects_large_systems() {
        let b = Budget {
            max_entries: 100.0,
            max_work: 1e9,
        };
        assert!(b.check("x", 10, 10).is_ok());
        assert!(b.check("x", 10, 11).unwrap_err().is_resource_limit());
    }
}
