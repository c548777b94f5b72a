//! Canonical integer partitions and the per-partition statistics used by the
//! fixed-point triangle: fixed point, Durfee size, crank and mex.
//!
//! Indices in method names follow the usual 1-based convention for parts:
//! `part(1)` is the largest part, and any index past the last part reads as 0.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive, found 0 at position {0}")]
    ZeroPart(usize),
    #[error("parts must be nonincreasing, found {prev} followed by {next}")]
    NotNonincreasing { prev: usize, next: usize },
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A partition stored as a nonincreasing sequence of positive parts.
///
/// The weight is cached; the empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart(i + 1));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(PartitionError::NotNonincreasing { prev: w[0], next: w[1] });
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), weight: 0 }
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (1-based), or 0 when `i` is past the last part.
    ///
    /// # Panics
    ///
    /// Panics if `i == 0`.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "part indices are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.part(1)
    }

    pub fn contains_part(&self, value: usize) -> bool {
        // nonincreasing, so binary search on the reversed order
        self.parts.binary_search_by(|p| value.cmp(p)).is_ok()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        let mut parts = Vec::with_capacity(width);
        for i in 1..=width {
            parts.push(self.parts.iter().take_while(|&&p| p >= i).count());
        }
        Partition { parts, weight: self.weight }
    }

    /// The index `i` with `part(i) == i`, if any. There is at most one.
    pub fn fixed_point(&self) -> Option<usize> {
        // parts[i-1] - i is strictly decreasing in i, so stop once it goes negative.
        for (idx, &p) in self.parts.iter().enumerate() {
            let i = idx + 1;
            if p == i {
                return Some(i);
            }
            if p < i {
                return None;
            }
        }
        None
    }

    /// Side of the Durfee square: the largest `i` with `part(i) >= i`.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(idx, &p)| p > idx)
            .count()
    }

    /// Number of parts equal to 1.
    pub fn omega(&self) -> usize {
        self.parts.iter().rev().take_while(|&&p| p == 1).count()
    }

    /// Number of parts strictly greater than `omega()`.
    pub fn mu(&self) -> usize {
        let omega = self.omega();
        self.parts.iter().take_while(|&&p| p > omega).count()
    }

    /// Andrews-Garvan crank: the largest part when there are no 1s,
    /// otherwise `mu - omega`. The empty partition has crank 0.
    pub fn crank(&self) -> i64 {
        if self.is_empty() {
            return 0;
        }
        let omega = self.omega();
        if omega == 0 {
            self.largest() as i64
        } else {
            self.mu() as i64 - omega as i64
        }
    }

    /// Smallest positive integer that is not a part.
    pub fn mex(&self) -> usize {
        let mut m = 1;
        for &p in self.parts.iter().rev() {
            if p == m {
                m += 1;
            } else if p > m {
                break;
            }
        }
        m
    }

    pub fn stats(&self) -> PartitionStats {
        let omega = self.omega();
        PartitionStats {
            fixed_point: self.fixed_point(),
            durfee: self.durfee(),
            crank: self.crank(),
            mex: self.mex(),
            omega,
            mu: self.mu(),
        }
    }

    /// Comma-separated parts with runs of five or more written as `v^k`,
    /// e.g. `2,2,1^6`; `()` for the empty partition. A lone multi-digit token
    /// is parenthesized (`(12)`) so it cannot be read as digits.
    pub fn canonical(&self) -> String {
        let s = self.render(",");
        if self.largest() > 9 && !s.contains(',') {
            format!("({s})")
        } else {
            s
        }
    }

    /// Digit-string rendering (`22111`, `1^8`) used in printed tables.
    /// Falls back to [`Partition::canonical`] when some part exceeds 9.
    pub fn compact(&self) -> String {
        if self.largest() > 9 {
            return self.canonical();
        }
        self.render("")
    }

    fn render(&self, sep: &str) -> String {
        if self.is_empty() {
            return "()".to_string();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == v).count();
            if run >= 5 {
                out.push(format!("{v}^{run}"));
            } else {
                out.extend(std::iter::repeat_n(v.to_string(), run));
            }
            i += run;
        }
        out.join(sep)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `3,2,1^4`, `(3,2,1,1,1,1)`, `(12)`, `()` or the compact digit form
/// `321^4`. Unparenthesized input without commas is read as compact.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PartitionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let wrapped = trimmed.starts_with('(');
        let body = trimmed.trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let push_token = |tok: &str, parts: &mut Vec<usize>| -> Result<(), PartitionError> {
            let (value, reps) = match tok.split_once('^') {
                Some((v, k)) => (v, k.parse::<usize>().map_err(|_| err("bad exponent"))?),
                None => (tok, 1),
            };
            let value = value.trim().parse::<usize>().map_err(|_| err("bad part"))?;
            parts.extend(std::iter::repeat_n(value, reps));
            Ok(())
        };
        if wrapped || body.contains(',') {
            for tok in body.split(',') {
                push_token(tok.trim(), &mut parts)?;
            }
        } else {
            // compact digits, each optionally followed by ^k
            let chars: Vec<char> = body.chars().collect();
            let mut i = 0;
            while i < chars.len() {
                if !chars[i].is_ascii_digit() {
                    return Err(err("expected a digit"));
                }
                let mut j = i + 1;
                if j < chars.len() && chars[j] == '^' {
                    j += 1;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                }
                let tok: String = chars[i..j].iter().collect();
                push_token(&tok, &mut parts)?;
                i = j;
            }
        }
        Partition::new(parts)
    }
}

/// All statistics of a single partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionStats {
    pub fixed_point: Option<usize>,
    pub durfee: usize,
    pub crank: i64,
    pub mex: usize,
    pub omega: usize,
    pub mu: usize,
}

/// Iterator over the partitions of `n` in reverse-lexicographic order,
/// starting from `(n)` and ending at `(1^n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    n: usize,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition { parts: current.clone(), weight: self.n };
        self.current = successor(current);
        Some(out)
    }
}

fn successor(mut parts: Vec<usize>) -> Option<Vec<usize>> {
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
    parts.truncate(parts.len() - ones);
    let last = parts.pop()?;
    let v = last - 1;
    let mut remaining = ones + last;
    while remaining > 0 {
        let take = v.min(remaining);
        parts.push(take);
        remaining -= take;
    }
    Some(parts)
}

/// Every partition of `n` exactly once, in reverse-lexicographic order.
/// For `n = 0` this yields the empty partition only.
pub fn enumerate_partitions(n: usize) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { current: Some(first), n }
}

/// Number of partitions `p(k)` for every `0 <= k <= n`, by Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<num_bigint::BigUint> {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::one());
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let positive = k % 2 == 1;
            let mut term = p[m - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                term += &p[m - g2];
            }
            if positive {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter()
        .map(|v| v.to_biguint().expect("p(n) is nonnegative"))
        .collect()
}

/// `p(n)`.
pub fn partition_count(n: usize) -> num_bigint::BigUint {
    partition_counts(n).pop().expect("table has n + 1 entries")
}

/// `M(m, n)`: number of partitions of `n` with crank `m`, by enumeration.
pub fn crank_count(n: usize, m: i64) -> u64 {
    enumerate_partitions(n).filter(|p| p.crank() == m).count() as u64
}

/// Full crank distribution of the partitions of `n`.
pub fn crank_histogram(n: usize) -> BTreeMap<i64, u64> {
    let mut hist = BTreeMap::new();
    for p in enumerate_partitions(n) {
        *hist.entry(p.crank()).or_insert(0) += 1;
    }
    hist
}
