//! The refined fixed-point triangle `f(n, d)`: the number of partitions of `n`
//! whose fixed point sits at index `d`.
//!
//! Three independent constructions are provided (exhaustive enumeration, the
//! column generating functions, and the four-term recurrence), along with the
//! row, diagonal and antidiagonal sums and the companion sequence `a(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::partition::{enumerate_partitions, partition_counts};
use crate::qseries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangleError {
    #[error("row {n} is outside the triangle (rows 1..={n_max})")]
    RowOutOfRange { n: usize, n_max: usize },
    #[error("column index must be at least 1")]
    ZeroColumn,
    #[error("unknown method {0:?}")]
    UnknownMethod(String),
}

/// How the entries of a [`FixedPointTriangle`] were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    GeneratingFunction,
    Recurrence,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::BruteForce, Method::GeneratingFunction, Method::Recurrence];

    pub fn name(self) -> &'static str {
        match self {
            Method::BruteForce => "brute",
            Method::GeneratingFunction => "gf",
            Method::Recurrence => "recur",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = TriangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Method::BruteForce),
            "gf" => Ok(Method::GeneratingFunction),
            "recur" => Ok(Method::Recurrence),
            other => Err(TriangleError::UnknownMethod(other.to_string())),
        }
    }
}

/// `floor(sqrt(n))`.
pub fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Table of `f(n, d)` for `1 <= n <= n_max` and `1 <= d <= floor(sqrt(n_max))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointTriangle {
    n_max: usize,
    method: Method,
    /// `rows[n - 1][d - 1]`
    rows: Vec<Vec<BigUint>>,
}

impl FixedPointTriangle {
    pub fn build(n_max: usize, method: Method) -> Self {
        assert!(n_max >= 1, "the triangle starts at row 1");
        let rows = match method {
            Method::BruteForce => brute_force_rows(n_max),
            Method::GeneratingFunction => gf_rows(n_max),
            Method::Recurrence => recurrence_rows(n_max),
        };
        FixedPointTriangle { n_max, method, rows }
    }

    /// Assembles a triangle from explicit rows, e.g. when reading one back from disk.
    /// Every row must have `floor(sqrt(n_max))` entries.
    pub fn from_rows(rows: Vec<Vec<BigUint>>, method: Method) -> Self {
        let n_max = rows.len();
        assert!(n_max >= 1);
        let width = isqrt(n_max);
        assert!(rows.iter().all(|r| r.len() == width), "ragged triangle");
        FixedPointTriangle { n_max, method, rows }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Number of stored columns, `floor(sqrt(n_max))`.
    pub fn d_max(&self) -> usize {
        isqrt(self.n_max)
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Row `n` as stored (`d_max` entries, zeros included).
    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        if n == 0 {
            return None;
        }
        self.rows.get(n - 1).map(Vec::as_slice)
    }

    /// `f(n, d)`; columns beyond `d_max` are identically zero in range.
    pub fn get(&self, n: usize, d: usize) -> Result<BigUint, TriangleError> {
        if d == 0 {
            return Err(TriangleError::ZeroColumn);
        }
        let row = self
            .row(n)
            .ok_or(TriangleError::RowOutOfRange { n, n_max: self.n_max })?;
        Ok(row.get(d - 1).cloned().unwrap_or_default())
    }

    /// Iterates `(n, d, f(n, d))` row by row, zeros included.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i + 1, j + 1, v)))
    }

    pub fn nonzero_in_row(&self, n: usize) -> Option<usize> {
        self.row(n).map(|r| r.iter().filter(|v| !v.is_zero()).count())
    }

    /// `f(n,1) + f(n,2) + ...`
    pub fn row_sum(&self, n: usize) -> Result<BigUint, TriangleError> {
        let row = self
            .row(n)
            .ok_or(TriangleError::RowOutOfRange { n, n_max: self.n_max })?;
        Ok(row.iter().sum())
    }

    /// `f(n,1) + f(n-1,2) + f(n-2,3) + ...`
    pub fn diag_sum(&self, n: usize) -> Result<BigUint, TriangleError> {
        self.get(n, 1)?;
        let mut total = BigUint::zero();
        let mut d = 1;
        while d * d + d <= n + 1 {
            total += self.get(n + 1 - d, d)?;
            d += 1;
        }
        Ok(total)
    }

    /// `f(n,1) + f(n+1,2) + f(n+2,3) + ...`; needs rows up to
    /// [`antidiag_rows_needed`]`(n)`.
    pub fn antidiag_sum(&self, n: usize) -> Result<BigUint, TriangleError> {
        if n == 0 {
            return Err(TriangleError::RowOutOfRange { n, n_max: self.n_max });
        }
        let mut total = BigUint::zero();
        let mut d = 1;
        // f(n+d-1, d) vanishes once d^2 > n+d-1
        while d * d < n + d {
            total += self.get(n + d - 1, d)?;
            d += 1;
        }
        Ok(total)
    }

    /// Cell-level differences against another triangle over the shared rows and columns.
    pub fn diff(&self, other: &FixedPointTriangle) -> Vec<CellDiff> {
        let n_max = self.n_max.min(other.n_max);
        let d_max = isqrt(n_max);
        let mut out = Vec::new();
        for n in 1..=n_max {
            for d in 1..=d_max {
                let a = &self.rows[n - 1][d - 1];
                let b = &other.rows[n - 1][d - 1];
                if a != b {
                    out.push(CellDiff { n, d, left: a.clone(), right: b.clone() });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDiff {
    pub n: usize,
    pub d: usize,
    pub left: BigUint,
    pub right: BigUint,
}

/// Largest row touched by the antidiagonal sum starting at row `n`.
pub fn antidiag_rows_needed(n: usize) -> usize {
    n + isqrt(n) + 1
}

fn fixed_point_histogram(n: usize, width: usize) -> Vec<BigUint> {
    let mut counts = vec![0u64; width];
    for p in enumerate_partitions(n) {
        if let Some(d) = p.fixed_point() {
            counts[d - 1] += 1;
        }
    }
    counts.into_iter().map(BigUint::from).collect()
}

fn brute_force_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    let width = isqrt(n_max);
    (1..=n_max)
        .into_par_iter()
        .map(|n| fixed_point_histogram(n, width))
        .collect()
}

fn gf_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    let width = isqrt(n_max);
    let columns: Vec<Vec<BigUint>> = (1..=width)
        .into_par_iter()
        .map(|d| {
            qseries::column_gf(d, n_max)
                .coeffs()
                .iter()
                .skip(1)
                .map(|c| c.to_biguint().expect("column coefficients are counts"))
                .collect()
        })
        .collect();
    (0..n_max)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect()
}

fn recurrence_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    let width = isqrt(n_max);
    // cols[d - 1][n] holds f(n, d); index 0 is an unused zero
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(width);
    for d in 1..=width {
        let mut col = vec![BigInt::zero(); n_max + 1];
        if d == 1 {
            col.iter_mut().skip(1).for_each(|v| *v = BigInt::one());
        } else {
            let prev = &cols[d - 2];
            for n in d * d..=n_max {
                // n >= d^2 keeps every index below at least (d-1)^2 >= 1
                let v = &col[n - d + 1] + &col[n - d] - &col[n - 2 * d + 1] + &prev[n - 2 * d + 1];
                col[n] = v;
            }
        }
        cols.push(col);
    }
    (1..=n_max)
        .map(|n| {
            cols.iter()
                .map(|col| col[n].to_biguint().expect("recurrence stays nonnegative"))
                .collect()
        })
        .collect()
}

/// `f(n, d)` by enumerating all partitions of `n`.
pub fn f_bruteforce(n: usize, d: usize) -> BigUint {
    let count = enumerate_partitions(n)
        .filter(|p| p.fixed_point() == Some(d))
        .count();
    BigUint::from(count)
}

/// `f(n, d)` by the four-term recurrence.
pub fn f_recurrence(n: usize, d: usize) -> BigUint {
    assert!(n >= 1 && d >= 1);
    if d * d > n {
        return BigUint::zero();
    }
    let t = FixedPointTriangle::build(n, Method::Recurrence);
    t.get(n, d).expect("n is in range")
}

/// `f(n, d)` as the coefficient of `q^n` in the column generating function.
pub fn f_gf(n: usize, d: usize) -> BigUint {
    assert!(n >= 1 && d >= 1);
    qseries::column_gf(d, n).coeffs()[n]
        .to_biguint()
        .expect("column coefficients are counts")
}

/// The three independent ways of counting `a(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ACountMethod {
    /// Partitions whose Durfee size is not among the parts.
    DurfeeNotPart,
    /// Partitions `mu` with `mu_d = mu_{d+1} = d`, `d` the Durfee size.
    BFamily,
    GeneratingFunction,
}

pub fn a_count(n: usize, method: ACountMethod) -> BigUint {
    match method {
        ACountMethod::DurfeeNotPart => BigUint::from(
            enumerate_partitions(n)
                .filter(|p| !p.contains_part(p.durfee()))
                .count(),
        ),
        ACountMethod::BFamily => BigUint::from(
            enumerate_partitions(n)
                .filter(|p| {
                    let d = p.durfee();
                    d >= 1 && p.part(d) == d && p.part(d + 1) == d
                })
                .count(),
        ),
        ACountMethod::GeneratingFunction => qseries::a_gf(n).coeffs()[n]
            .to_biguint()
            .expect("a(n) is a count"),
    }
}

/// `sum_{i=0}^{k} p(i) p(k-i)`.
pub fn convolution(k: usize) -> BigUint {
    let p = partition_counts(k);
    (0..=k).map(|i| &p[i] * &p[k - i]).sum()
}

/// Checks that column `d` vanishes below `d^2` and that
/// `f(d^2 + k, d) = sum_{i<=k} p(i) p(k-i)` for `0 <= k <= d - 1`.
pub fn stabilization_check(d: usize) -> bool {
    assert!(d >= 1);
    let col = qseries::column_gf(d, d * d + d - 1);
    let coeff = |n: usize| col.coeffs()[n].to_biguint().expect("counts");
    let zeros = (1..d * d).all(|n| coeff(n).is_zero());
    zeros && (0..d).all(|k| coeff(d * d + k) == convolution(k))
}

/// At `k = d` exactly one convolution pair fails to keep the fixed point at `d`
/// (nothing below the Durfee square and a single part `d` beside it), so
/// `f(d^2 + d, d) = convolution(d) - 1`.
pub fn stabilization_boundary_check(d: usize) -> bool {
    assert!(d >= 1);
    let n = d * d + d;
    let col = qseries::column_gf(d, n);
    let value = col.coeffs()[n].to_biguint().expect("counts");
    value + 1u32 == convolution(d)
}

/// A named integer sequence over a contiguous index range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub name: String,
    pub start: usize,
    pub values: Vec<BigUint>,
    pub method: String,
}

impl SequenceReport {
    pub fn new(name: impl Into<String>, start: usize, values: Vec<BigUint>, method: impl Into<String>) -> Self {
        SequenceReport { name: name.into(), start, values, method: method.into() }
    }

    /// `(index, value)` pairs.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.values.iter().enumerate().map(move |(i, v)| (self.start + i, v))
    }

    pub fn get(&self, index: usize) -> Option<&BigUint> {
        index.checked_sub(self.start).and_then(|i| self.values.get(i))
    }
}
