//! Truncated generating series with exact integer coefficients, and
//! rationality certificates against the denominator `1 - e t + t^2`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{ext, tor, tor_from_resolution, tor_induced_balanced, HomologyTable};
use crate::module::{radical_submodule, FiniteModule};
use crate::resolution::{resolve, MinimalFreeResolution};

pub const DEFAULT_MARGIN: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Hilbert,
    Poincare,
    TorNu,
    TorLength,
    ExtNu,
    ExtLength,
}

impl SeriesKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SeriesKind::Hilbert => "hilbert",
            SeriesKind::Poincare => "poincare",
            SeriesKind::TorNu => "tor_nu",
            SeriesKind::TorLength => "tor_length",
            SeriesKind::ExtNu => "ext_nu",
            SeriesKind::ExtLength => "ext_length",
        }
    }
}

/// Which invariant of a homology module a series records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesMode {
    Nu,
    Length,
}

/// `c_0 + c_1 t + .. + c_n t^n`; the truncation degree is `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedIntegerSeries {
    pub kind: SeriesKind,
    pub coefficients: Vec<BigInt>,
}

impl TruncatedIntegerSeries {
    pub fn new(kind: SeriesKind, coefficients: Vec<BigInt>) -> Self {
        assert!(!coefficients.is_empty(), "a series needs at least c_0");
        TruncatedIntegerSeries { kind, coefficients }
    }

    pub fn from_counts<I: IntoIterator<Item = usize>>(kind: SeriesKind, counts: I) -> Self {
        Self::new(kind, counts.into_iter().map(BigInt::from).collect())
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, i: usize) -> &BigInt {
        &self.coefficients[i]
    }

    /// Value at `t = 1`.
    pub fn sum(&self) -> BigInt {
        self.coefficients.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalityCertificate {
    pub e: usize,
    /// Tail start: the recurrence holds for `s <= i <= n - 1`.
    pub s: usize,
    pub numerator: Vec<BigInt>,
    pub truncation: usize,
}

impl RationalityCertificate {
    pub fn margin(&self) -> usize {
        self.truncation - self.s
    }

    /// `numerator / (1 - e t + t^2)` through the truncation degree.
    pub fn expand(&self) -> Vec<BigInt> {
        expand_rational(&self.numerator, self.e, self.truncation)
    }
}

/// `(dim m^i M / m^(i+1) M)_i`, trailing zeros dropped (one entry kept).
pub fn hilbert_series(m: &FiniteModule) -> TruncatedIntegerSeries {
    let d = m.dim();
    let rad = m.radical_dim();
    let rad2 = m.radical_square_dim();
    let mut c = vec![d - rad, rad - rad2, rad2];
    while c.len() > 1 && c[c.len() - 1] == 0 {
        c.pop();
    }
    TruncatedIntegerSeries::from_counts(SeriesKind::Hilbert, c)
}

pub fn poincare_series(m: &FiniteModule, n: usize) -> Result<TruncatedIntegerSeries> {
    Ok(poincare_from_resolution(&resolve(m, n)?, n))
}

/// Needs `res.length() >= n`.
pub fn poincare_from_resolution(res: &MinimalFreeResolution, n: usize) -> TruncatedIntegerSeries {
    TruncatedIntegerSeries::from_counts(SeriesKind::Poincare, res.betti()[..=n].iter().copied())
}

pub fn series_from_table(table: &HomologyTable, kind: SeriesKind) -> TruncatedIntegerSeries {
    let pick = |d: &crate::homology::HomologyDegree| match kind {
        SeriesKind::TorNu | SeriesKind::ExtNu => d.nu,
        _ => d.length,
    };
    TruncatedIntegerSeries::from_counts(kind, table.degrees.iter().map(pick))
}

pub fn tor_series(
    m: &FiniteModule,
    n: &FiniteModule,
    deg: usize,
    mode: SeriesMode,
) -> Result<TruncatedIntegerSeries> {
    let kind = match mode {
        SeriesMode::Nu => SeriesKind::TorNu,
        SeriesMode::Length => SeriesKind::TorLength,
    };
    Ok(series_from_table(&tor(m, n, deg)?, kind))
}

pub fn ext_series(
    m: &FiniteModule,
    n: &FiniteModule,
    deg: usize,
    mode: SeriesMode,
) -> Result<TruncatedIntegerSeries> {
    let kind = match mode {
        SeriesMode::Nu => SeriesKind::ExtNu,
        SeriesMode::Length => SeriesKind::ExtLength,
    };
    Ok(series_from_table(&ext(m, n, deg)?, kind))
}

/// `q(t) / (1 - e t + t^2)` expanded through degree `n`.
pub fn expand_rational(q: &[BigInt], e: usize, n: usize) -> Vec<BigInt> {
    let e = BigInt::from(e);
    let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut v = q.get(i).cloned().unwrap_or_default();
        if i >= 1 {
            v += &e * &c[i - 1];
        }
        if i >= 2 {
            v -= &c[i - 2];
        }
        c.push(v);
    }
    c
}

/// `(1 - e t + t^2) * c` through the degree of `c`.
pub fn times_denominator(c: &[BigInt], e: usize) -> Vec<BigInt> {
    let e = BigInt::from(e);
    (0..c.len())
        .map(|i| {
            let mut v = c[i].clone();
            if i >= 1 {
                v -= &e * &c[i - 1];
            }
            if i >= 2 {
                v += &c[i - 2];
            }
            v
        })
        .collect()
}

/// Indices `0 <= i <= n - 1` with `c_{i+1} != e c_i - c_{i-1}`, where
/// `c_{-1} = 0`.
pub fn recurrence_violations(c: &[BigInt], e: usize) -> Vec<usize> {
    let q = times_denominator(c, e);
    (1..q.len())
        .filter(|&d| !q[d].is_zero())
        .map(|d| d - 1)
        .collect()
}

/// Finds the least tail start `s` and accepts when `n - s >= min_margin`.
pub fn certify_rational(
    series: &TruncatedIntegerSeries,
    e: usize,
    min_margin: usize,
) -> Result<RationalityCertificate> {
    let c = &series.coefficients;
    let n = series.truncation();
    let last_violation = recurrence_violations(c, e).last().copied();
    let s = last_violation.map_or(0, |v| v + 1);
    let margin = n - s.min(n);
    if s > n || margin < min_margin {
        return Err(Error::InsufficientDegree {
            truncation: n,
            tail_start: s,
            margin,
            required: min_margin,
            last_violation,
        });
    }
    let mut numerator = times_denominator(c, e);
    while numerator.len() > 1 && numerator.last().is_some_and(Zero::is_zero) {
        numerator.pop();
    }
    debug_assert!(numerator.len() <= s + 2);
    Ok(RationalityCertificate {
        e,
        s,
        numerator,
        truncation: n,
    })
}

/// `H_M(-t) * P_N(t)` truncated at the length of `p`.
pub fn alternating_product(h: &TruncatedIntegerSeries, p: &[BigInt]) -> Vec<BigInt> {
    (0..p.len())
        .map(|i| {
            let mut v = BigInt::zero();
            for (j, hj) in h.coefficients.iter().enumerate().take(i + 1) {
                let term = hj * &p[i - j];
                if j % 2 == 0 {
                    v += term;
                } else {
                    v -= term;
                }
            }
            v
        })
        .collect()
}

/// Comparison of the length and `ν` Tor series against `H_M(-t) P_N(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesIdentityReport {
    pub truncation: usize,
    pub lengths: Vec<usize>,
    pub nus: Vec<usize>,
    pub product: Vec<BigInt>,
    /// Ranks of `Tor_i(ι_M, N)`.
    pub induced_ranks: Vec<usize>,
    /// Largest `j` with equality on `[0, j]`, if any.
    pub length_equal_through: Option<usize>,
    pub nu_equal_through: Option<usize>,
    /// Conditions (1) and (2) agree on the window.
    pub vanishing_iff_length_identity: bool,
    /// Condition (1) implies condition (3) on the window.
    pub vanishing_implies_nu_identity: bool,
    /// Per degree: equality in the length count iff `L_i = L_{i-1} = 0`.
    pub degreewise_consistent: bool,
}

impl SeriesIdentityReport {
    pub fn consistent(&self) -> bool {
        self.vanishing_iff_length_identity
            && self.vanishing_implies_nu_identity
            && self.degreewise_consistent
    }
}

fn equal_through(a: &[usize], b: &[BigInt]) -> Option<usize> {
    let k = a
        .iter()
        .zip(b)
        .take_while(|(x, y)| BigInt::from(**x) == **y)
        .count();
    k.checked_sub(1)
}

pub fn series_identity_check(
    m: &FiniteModule,
    n: &FiniteModule,
    deg: usize,
) -> Result<SeriesIdentityReport> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    if !m.radical_square_zero() {
        return Err(Error::RadicalSquareNonzero);
    }
    let res_n = resolve(n, deg + 1)?;
    series_identity_from_resolution(m, &res_n, deg)
}

/// Needs `res_n.length() >= deg + 1`.
pub fn series_identity_from_resolution(
    m: &FiniteModule,
    res_n: &MinimalFreeResolution,
    deg: usize,
) -> Result<SeriesIdentityReport> {
    if !m.radical_square_zero() {
        return Err(Error::RadicalSquareNonzero);
    }
    let table = tor_from_resolution(res_n, m, deg)?;
    let (_, iota) = radical_submodule(m);
    let ranks: Vec<usize> = tor_induced_balanced(&iota, res_n, deg)?
        .iter()
        .map(|r| r.rank)
        .collect();
    let p = poincare_from_resolution(res_n, deg);
    let product = alternating_product(&hilbert_series(m), &p.coefficients);
    let lengths = table.lengths();
    let nus = table.nus();
    let length_equal_through = equal_through(&lengths, &product);
    let nu_equal_through = equal_through(&nus, &product);
    let all_length = length_equal_through == Some(deg);
    let all_nu = nu_equal_through == Some(deg);
    let vanishing = ranks.iter().all(|&r| r == 0);
    let degreewise_consistent = (0..=deg).all(|i| {
        let eq = BigInt::from(lengths[i]) == product[i];
        let zero = ranks[i] == 0 && (i == 0 || ranks[i - 1] == 0);
        eq == zero
    });
    Ok(SeriesIdentityReport {
        truncation: deg,
        lengths,
        nus,
        product,
        induced_ranks: ranks,
        length_equal_through,
        nu_equal_through,
        vanishing_iff_length_identity: vanishing == all_length,
        vanishing_implies_nu_identity: !vanishing || all_nu,
        degreewise_consistent,
    })
}

/// First degree where `P_M (1 - e t + t^2)` differs from `H_M(-t)`, i.e.
/// where `P_M = H_M(-t) / H_R(-t)` breaks.
pub fn koszul_formula_mismatch(
    h: &TruncatedIntegerSeries,
    p: &TruncatedIntegerSeries,
    e: usize,
) -> Option<usize> {
    let lhs = times_denominator(&p.coefficients, e);
    (0..lhs.len()).find(|&i| {
        let hi = h.coefficients.get(i).cloned().unwrap_or_default();
        let rhs = if i % 2 == 0 { hi } else { -hi };
        lhs[i] != rhs
    })
}

/// `true` when every coefficient is nonnegative.
pub fn is_nonnegative(c: &[BigInt]) -> bool {
    c.iter().all(|v| !v.is_negative())
}
