use fixpoint_core::identities::{count_without_fixed_point, identity_report, Identity};
use fixpoint_core::partition::partition_counts;
use fixpoint_core::triangle::{
    convolution, f_bruteforce, isqrt, stabilization_boundary_check, stabilization_check,
    FixedPointTriangle, Method,
};
use num_bigint::BigUint;
use num_traits::Zero;

fn figure1() -> Vec<(usize, usize, BigUint)> {
    let text = include_str!("data/figure1.csv");
    text.lines()
        .skip(1)
        .map(|line| {
            let v: Vec<&str> = line.split(',').collect();
            (v[0].parse().unwrap(), v[1].parse().unwrap(), v[2].parse().unwrap())
        })
        .collect()
}

#[test]
fn every_method_reproduces_figure_one() {
    let golden = figure1();
    assert_eq!(golden.len(), 80);
    for m in Method::ALL {
        let t = FixedPointTriangle::build(20, m);
        let cells: Vec<_> = t.cells().map(|(n, d, v)| (n, d, v.clone())).collect();
        assert_eq!(cells, golden, "method {m}");
    }
}

#[test]
fn methods_agree_to_sixty() {
    let brute = FixedPointTriangle::build(45, Method::BruteForce);
    let gf = FixedPointTriangle::build(60, Method::GeneratingFunction);
    let rec = FixedPointTriangle::build(60, Method::Recurrence);
    assert!(gf.diff(&rec).is_empty());
    assert!(brute.diff(&gf).is_empty());
    assert!(brute.diff(&rec).is_empty());
}

#[test]
fn single_cell_bruteforce_matches_table() {
    let rec = FixedPointTriangle::build(30, Method::Recurrence);
    for n in 1..=30 {
        for d in 1..=6 {
            assert_eq!(f_bruteforce(n, d), rec.get(n, d).unwrap(), "n={n} d={d}");
        }
    }
}

#[test]
fn support_is_n_at_least_d_squared() {
    let t = FixedPointTriangle::build(60, Method::Recurrence);
    for n in 1..=60 {
        for d in 1..=7 {
            let v = t.get(n, d).unwrap();
            assert_eq!(!v.is_zero(), n >= d * d, "n={n} d={d}");
        }
        assert_eq!(t.nonzero_in_row(n), Some(isqrt(n)));
        assert_eq!(t.get(n, 1).unwrap(), BigUint::from(1u32));
    }
}

#[test]
fn fixed_point_rows_plus_rest_cover_p() {
    let t = FixedPointTriangle::build(40, Method::Recurrence);
    let p = partition_counts(40);
    for (n, pn) in p.iter().enumerate().skip(1) {
        assert_eq!(&(t.row_sum(n).unwrap() + count_without_fixed_point(n)), pn, "n={n}");
    }
}

#[test]
fn stabilization_through_six() {
    for d in 1..=6 {
        assert!(stabilization_check(d), "d={d}");
    }
    for d in 2..=6 {
        assert!(stabilization_boundary_check(d), "d={d}");
        let t = FixedPointTriangle::build(d * d + d, Method::Recurrence);
        assert_eq!(t.get(d * d + d, d).unwrap() + 1u32, convolution(d));
    }
    let t = FixedPointTriangle::build(19, Method::Recurrence);
    let col4: Vec<_> = (16..=19).map(|n| t.get(n, 4).unwrap()).collect();
    assert_eq!(col4, [1u32, 2, 5, 10].map(BigUint::from));
}

#[test]
fn identity_sweep_to_forty() {
    let r = identity_report(40);
    for id in [Identity::RowEvenMex, Identity::Diagonal, Identity::ACountMethods, Identity::Antidiagonal, Identity::NonzeroEntries] {
        assert!(r.first_counterexample(id).is_none(), "{id}");
    }
    // the crank legs only miss at n = 1, where (1) has crank -1
    for id in [Identity::RowPositiveCrank, Identity::RowCrankSum] {
        let ns: Vec<usize> = r.failures(id).map(|d| d.n).collect();
        assert_eq!(ns, vec![1], "{id}");
    }
}
