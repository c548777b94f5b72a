//! Cross-checks against small independent implementations that share no code
//! with the library's fast paths.

use fixpoint_core::partition::{crank_histogram, enumerate_partitions, partition_counts};
use fixpoint_core::qseries::{self, PowerSeries};
use fixpoint_core::triangle::{a_count, ACountMethod};
use num_bigint::{BigInt, BigUint};

/// Partitions of `n` with parts at most `max`, largest first, by plain recursion.
fn oracle_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in oracle_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn oracle_fixed_point(parts: &[usize]) -> Option<usize> {
    (1..=parts.len()).find(|&i| parts[i - 1] == i)
}

fn oracle_durfee(parts: &[usize]) -> usize {
    (1..=parts.len()).filter(|&i| parts[i - 1] >= i).max().unwrap_or(0)
}

fn naive_poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn enumeration_matches_recursive_oracle() {
    for n in 0..=20 {
        let fast: Vec<Vec<usize>> = enumerate_partitions(n).map(|p| p.into_parts()).collect();
        assert_eq!(fast, oracle_partitions(n, n), "n={n}");
    }
}

#[test]
fn pentagonal_counts_match_enumeration() {
    let p = partition_counts(45);
    for (n, pn) in p.iter().enumerate() {
        assert_eq!(*pn, BigUint::from(enumerate_partitions(n).count()), "n={n}");
    }
    assert_eq!(p[5], 7u32.into());
    assert_eq!(p[6], 11u32.into());
    assert_eq!(p[45], 89_134u32.into());
}

#[test]
fn statistics_match_oracle() {
    for n in 0..=18 {
        for parts in oracle_partitions(n, n) {
            let p = fixpoint_core::Partition::new(parts.clone()).unwrap();
            assert_eq!(p.fixed_point(), oracle_fixed_point(&parts), "{p}");
            assert_eq!(p.durfee(), oracle_durfee(&parts), "{p}");
            let mex = (1..).find(|m| !parts.contains(m)).unwrap();
            assert_eq!(p.mex(), mex, "{p}");
        }
    }
}

#[test]
fn crank_distribution_sums_to_p() {
    for n in 1..=30 {
        let total: u64 = crank_histogram(n).values().sum();
        assert_eq!(BigUint::from(total), partition_counts(n)[n]);
    }
}

#[test]
fn poch_three_matches_naive_product() {
    let mut acc = vec![1i64];
    for j in 1..=3 {
        let mut factor = vec![0i64; j + 1];
        factor[0] = 1;
        factor[j] = -1;
        acc = naive_poly_mul(&acc, &factor);
    }
    let series = qseries::poch(3, 10);
    let got: Vec<i64> = series.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
    acc.resize(11, 0);
    assert_eq!(got, acc);
    assert_eq!(series.degree(), Some(6));
}

#[test]
fn recip_poch_counts_bounded_partitions() {
    for k in 0..=6 {
        let inv = qseries::poch(k, 30).recip().unwrap();
        for n in 0..=30 {
            let expect = oracle_partitions(n, k).len();
            assert_eq!(inv.coeffs()[n], BigInt::from(expect), "k={k} n={n}");
        }
    }
}

#[test]
fn recip_is_two_sided_inverse() {
    for k in 0..=8 {
        let a = qseries::poch(k, 60);
        let b = a.recip().unwrap();
        assert_eq!(&a * &b, PowerSeries::one(60));
        assert_eq!(&b * &a, PowerSeries::one(60));
    }
    let a = qseries::poch(3, 20);
    assert_eq!(&a * &a.recip().unwrap(), PowerSeries::one(20));
}

#[test]
fn poch_degree_is_triangular() {
    for k in 0..=12 {
        assert_eq!(qseries::poch(k, 100).degree(), Some(k * (k + 1) / 2));
    }
}

#[test]
fn column_gf_matches_enumeration() {
    for d in 1..=5 {
        let col = qseries::column_gf(d, 30);
        for n in 1..=30 {
            let count = oracle_partitions(n, n)
                .iter()
                .filter(|p| oracle_fixed_point(p) == Some(d))
                .count();
            assert_eq!(col.coeffs()[n], BigInt::from(count), "n={n} d={d}");
        }
    }
}

#[test]
fn column_gf_leading_shape() {
    for d in 1..=7 {
        let col = qseries::column_gf(d, d * d + 3);
        for n in 0..d * d {
            assert_eq!(col.coeffs()[n], BigInt::from(0), "d={d} n={n}");
        }
        assert_eq!(col.coeffs()[d * d], BigInt::from(1));
    }
}

#[test]
fn a_gf_matches_durfee_oracle() {
    let gf = qseries::a_gf(30);
    for n in 1..=30 {
        let count = oracle_partitions(n, n)
            .iter()
            .filter(|p| {
                let d = oracle_durfee(p);
                !p.contains(&d)
            })
            .count();
        assert_eq!(gf.coeffs()[n], BigInt::from(count), "n={n}");
        for m in [ACountMethod::DurfeeNotPart, ACountMethod::BFamily, ACountMethod::GeneratingFunction] {
            assert_eq!(a_count(n, m), BigUint::from(count), "n={n} {m:?}");
        }
    }
}

#[test]
fn denominator_recurrences_annihilate_columns() {
    for d in 1..=5 {
        let c = qseries::recurrence_from_denominator(d);
        assert_eq!(c.len(), d * d + 1);
        let col = qseries::column_gf(d, 80);
        let f = col.coeffs();
        for n in d * d..=80 {
            let s: BigInt = (0..=d * d).map(|k| &c[k] * &f[n - k]).sum();
            let expect = if n == d * d { 1 } else { 0 };
            assert_eq!(s, BigInt::from(expect), "d={d} n={n}");
        }
    }
}
