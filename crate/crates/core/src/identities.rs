//! Sweeps comparing the triangle's row, diagonal and antidiagonal sums with
//! counts taken directly from the partitions themselves.
//!
//! Mismatches are collected, never raised, so callers can show counterexamples.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::partition::{enumerate_partitions, partition_counts};
use crate::triangle::{
    a_count, antidiag_rows_needed, isqrt, ACountMethod, FixedPointTriangle, Method, SequenceReport,
};

/// Each equality the sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// row sum = #{crank > 0}
    RowPositiveCrank,
    /// row sum = sum over m >= 1 of M(m, n)
    RowCrankSum,
    /// row sum = #{mex even}
    RowEvenMex,
    /// diagonal sum = a(n + 1)
    Diagonal,
    /// the three counts of a(n + 1) agree
    ACountMethods,
    /// antidiagonal sum = p(n - 1)
    Antidiagonal,
    /// row n has floor(sqrt(n)) nonzero entries
    NonzeroEntries,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::RowPositiveCrank,
        Identity::RowCrankSum,
        Identity::RowEvenMex,
        Identity::Diagonal,
        Identity::ACountMethods,
        Identity::Antidiagonal,
        Identity::NonzeroEntries,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Identity::RowPositiveCrank => "row-sum = positive-crank",
            Identity::RowCrankSum => "row-sum = sum_{m>=1} M(m,n)",
            Identity::RowEvenMex => "row-sum = even-mex",
            Identity::Diagonal => "diag-sum = a(n+1)",
            Identity::ACountMethods => "a(n) durfee = b-family = gf",
            Identity::Antidiagonal => "antidiag-sum = p(n-1)",
            Identity::NonzeroEntries => "nonzero entries = floor(sqrt(n))",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// All row-sum candidates for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub n: usize,
    pub row_sum: BigUint,
    pub positive_crank: u64,
    pub crank_sum: u64,
    pub even_mex: u64,
    /// Reported for comparison only; no identity binds to it.
    pub even_crank: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagCheck {
    pub n: usize,
    pub diag_sum: BigUint,
    /// `a(n + 1)` by the Durfee-not-a-part count
    pub a_next: BigUint,
    pub a_next_b_family: BigUint,
    pub a_next_gf: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntidiagCheck {
    pub n: usize,
    pub antidiag_sum: BigUint,
    pub p_prev: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub identity: Identity,
    pub n: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at n={}: {} != {}", self.identity, self.n, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub n_max: usize,
    pub rows: Vec<RowCheck>,
    pub diagonals: Vec<DiagCheck>,
    pub antidiagonals: Vec<AntidiagCheck>,
    pub nonzero: Vec<(usize, usize)>,
    pub discrepancies: Vec<Discrepancy>,
}

impl IdentityReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    /// Smallest-`n` failure of `identity`, if any.
    pub fn first_counterexample(&self, identity: Identity) -> Option<&Discrepancy> {
        self.discrepancies.iter().find(|d| d.identity == identity)
    }

    pub fn failures(&self, identity: Identity) -> impl Iterator<Item = &Discrepancy> + '_ {
        self.discrepancies.iter().filter(move |d| d.identity == identity)
    }

    /// Whether the even-crank count happened to equal the row sum at every `n`.
    pub fn even_crank_matches(&self) -> bool {
        self.rows.iter().all(|r| r.row_sum == BigUint::from(r.even_crank))
    }

    /// The swept sequences, ready for export.
    pub fn sequences(&self) -> Vec<SequenceReport> {
        let rows = |f: &dyn Fn(&RowCheck) -> BigUint| self.rows.iter().map(f).collect::<Vec<_>>();
        vec![
            SequenceReport::new("rowsum", 1, rows(&|r| r.row_sum.clone()), "recur"),
            SequenceReport::new("positive_crank", 1, rows(&|r| r.positive_crank.into()), "brute"),
            SequenceReport::new("even_mex", 1, rows(&|r| r.even_mex.into()), "brute"),
            SequenceReport::new("even_crank", 1, rows(&|r| r.even_crank.into()), "brute"),
            SequenceReport::new(
                "diagsum",
                1,
                self.diagonals.iter().map(|d| d.diag_sum.clone()).collect(),
                "recur",
            ),
            SequenceReport::new(
                "a",
                2,
                self.diagonals.iter().map(|d| d.a_next.clone()).collect(),
                "brute",
            ),
            SequenceReport::new(
                "antidiagsum",
                1,
                self.antidiagonals.iter().map(|d| d.antidiag_sum.clone()).collect(),
                "recur",
            ),
            SequenceReport::new(
                "p",
                0,
                self.antidiagonals.iter().map(|d| d.p_prev.clone()).collect(),
                "pentagonal",
            ),
        ]
    }
}

struct RowCensus {
    positive_crank: u64,
    crank_sum: u64,
    even_mex: u64,
    even_crank: u64,
}

fn row_census(n: usize) -> RowCensus {
    let mut positive_crank = 0;
    let mut even_mex = 0;
    let mut even_crank = 0;
    let mut by_crank = std::collections::BTreeMap::<i64, u64>::new();
    for p in enumerate_partitions(n) {
        let s = p.stats();
        if s.crank > 0 {
            positive_crank += 1;
        }
        if s.crank % 2 == 0 {
            even_crank += 1;
        }
        if s.mex % 2 == 0 {
            even_mex += 1;
        }
        *by_crank.entry(s.crank).or_default() += 1;
    }
    let crank_sum = by_crank.range(1..).map(|(_, c)| c).sum();
    RowCensus { positive_crank, crank_sum, even_mex, even_crank }
}

/// Runs every sum identity for `1 <= n <= n_max` against the recurrence-built triangle.
pub fn identity_report(n_max: usize) -> IdentityReport {
    assert!(n_max >= 1);
    let triangle = FixedPointTriangle::build(antidiag_rows_needed(n_max), Method::Recurrence);
    let p = partition_counts(n_max);
    let mut discrepancies = Vec::new();
    let mut check = |identity, n, lhs: &BigUint, rhs: &BigUint| {
        if lhs != rhs {
            discrepancies.push(Discrepancy { identity, n, lhs: lhs.clone(), rhs: rhs.clone() });
        }
    };

    let censuses: Vec<RowCensus> = (1..=n_max).into_par_iter().map(row_census).collect();
    let mut rows = Vec::with_capacity(n_max);
    for (n, c) in (1..=n_max).zip(censuses) {
        let row_sum = triangle.row_sum(n).expect("row in range");
        check(Identity::RowPositiveCrank, n, &row_sum, &c.positive_crank.into());
        check(Identity::RowCrankSum, n, &row_sum, &c.crank_sum.into());
        check(Identity::RowEvenMex, n, &row_sum, &c.even_mex.into());
        rows.push(RowCheck {
            n,
            row_sum,
            positive_crank: c.positive_crank,
            crank_sum: c.crank_sum,
            even_mex: c.even_mex,
            even_crank: c.even_crank,
        });
    }

    let a_values: Vec<[BigUint; 3]> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            [
                a_count(n + 1, ACountMethod::DurfeeNotPart),
                a_count(n + 1, ACountMethod::BFamily),
                a_count(n + 1, ACountMethod::GeneratingFunction),
            ]
        })
        .collect();
    let mut diagonals = Vec::with_capacity(n_max);
    for (n, [a, b, g]) in (1..=n_max).zip(a_values) {
        let diag_sum = triangle.diag_sum(n).expect("row in range");
        check(Identity::Diagonal, n, &diag_sum, &a);
        check(Identity::ACountMethods, n + 1, &a, &b);
        check(Identity::ACountMethods, n + 1, &a, &g);
        diagonals.push(DiagCheck { n, diag_sum, a_next: a, a_next_b_family: b, a_next_gf: g });
    }

    let mut antidiagonals = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let antidiag_sum = triangle.antidiag_sum(n).expect("triangle sized for antidiagonals");
        check(Identity::Antidiagonal, n, &antidiag_sum, &p[n - 1]);
        antidiagonals.push(AntidiagCheck { n, antidiag_sum, p_prev: p[n - 1].clone() });
    }

    let mut nonzero = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let count = triangle.nonzero_in_row(n).expect("row in range");
        check(Identity::NonzeroEntries, n, &count.into(), &isqrt(n).into());
        nonzero.push((n, count));
    }

    discrepancies.sort_by_key(|d| (d.identity, d.n));
    IdentityReport { n_max, rows, diagonals, antidiagonals, nonzero, discrepancies }
}

/// Partitions of `n` with no fixed point; together with the row sum this
/// accounts for every partition of `n`.
pub fn count_without_fixed_point(n: usize) -> BigUint {
    BigUint::from(enumerate_partitions(n).filter(|p| p.fixed_point().is_none()).count())
}
