//! Truncated power series in `q` with exact big-integer coefficients.
//!
//! Every series carries its truncation order explicitly: coefficients are known
//! for exponents `0..=order`. Binary operations truncate to the smaller order.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `q^exp` truncated to `order` (the zero series when `exp > order`).
    pub fn monomial(exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = BigInt::one();
        }
        s
    }

    /// Takes `coeffs[k]` as the coefficient of `q^k`, padding with zeros or
    /// truncating to reach `order`.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        c.resize(order + 1, BigInt::zero());
        PowerSeries { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, or `None` when `k` is beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&BigInt> {
        self.coeffs.get(k)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        PowerSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Multiplies by `q^k`, keeping the truncation order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > order {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Multiplicative inverse up to the truncation order.
    ///
    /// Solved coefficient by coefficient; only nonzero coefficients of `self`
    /// contribute, so inverting a sparse polynomial of degree `D` costs `O(order * D)`.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.abs() != BigInt::one() {
            return Err(SeriesError::NotInvertible(a0.clone()));
        }
        let nonzero: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let order = self.order();
        let mut b: Vec<BigInt> = Vec::with_capacity(order + 1);
        b.push(a0.clone()); // 1/a0 == a0 for a unit
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for &(k, a) in &nonzero {
                if k > n {
                    break;
                }
                acc += a * &b[n - k];
            }
            // a0 * b_n = -acc
            b.push(-(acc * a0));
        }
        Ok(PowerSeries { coeffs: b })
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        PowerSeries { coeffs }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The q-Pochhammer product `(q;q)_k = (1-q)(1-q^2)...(1-q^k)` truncated to `order`.
///
/// For `order >= k(k+1)/2` this is the exact polynomial, of that degree.
pub fn poch(k: usize, order: usize) -> PowerSeries {
    let mut acc = PowerSeries::one(order);
    for j in 1..=k {
        // multiply by (1 - q^j) in place, high exponents first
        for e in (j..=order).rev() {
            let lower = acc.coeffs[e - j].clone();
            acc.coeffs[e] -= lower;
        }
    }
    acc
}

fn column_denominator(d: usize, order: usize) -> PowerSeries {
    &poch(d - 1, order) * &poch(d, order)
}

/// Generating function `q^{d^2} / ((q;q)_{d-1} (q;q)_d)` of column `d` of the
/// fixed-point triangle: the coefficient of `q^n` is `f(n, d)`.
pub fn column_gf(d: usize, order: usize) -> PowerSeries {
    assert!(d >= 1, "columns start at d = 1");
    let denom = column_denominator(d, order);
    let inv = denom.recip().expect("Pochhammer products have constant term 1");
    inv.shift(d * d)
}

/// Generating function of `a(n)`, the partitions of `n` whose Durfee size is
/// not a part: `sum over d >= 1 of q^{d^2+d} / ((q;q)_{d-1} (q;q)_d)`.
pub fn a_gf(order: usize) -> PowerSeries {
    let mut total = PowerSeries::zero(order);
    let mut d = 1;
    while d * d + d <= order {
        let denom = column_denominator(d, order);
        let term = denom
            .recip()
            .expect("Pochhammer products have constant term 1")
            .shift(d * d + d);
        total = &total + &term;
        d += 1;
    }
    total
}

/// Coefficients `c_0..=c_{d^2}` of `(q;q)_{d-1} (q;q)_d`.
///
/// Column `d` satisfies `sum_k c_k f(n-k, d) = 0` for every `n > d^2`
/// (and `= 1` at `n = d^2`).
pub fn recurrence_from_denominator(d: usize) -> Vec<BigInt> {
    assert!(d >= 1, "columns start at d = 1");
    let deg = d * d;
    let denom = column_denominator(d, deg);
    debug_assert_eq!(denom.degree(), Some(deg));
    denom.coeffs
}

/// Rewrites denominator coefficients as the recurrence `f(n) = sum_{k>=1} r_k f(n-k)`,
/// returning `r_1..=r_D`.
pub fn recurrence_weights(denominator: &[BigInt]) -> Vec<BigInt> {
    assert!(denominator.first().is_some_and(|c| c.is_one()));
    denominator[1..].iter().map(|c| -c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn poch_small() {
        assert_eq!(ints(&poch(0, 5)), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&poch(2, 5)), vec![1, -1, -1, 1, 0, 0]);
        let p3 = poch(3, 10);
        assert_eq!(p3.degree(), Some(6));
        assert_eq!(ints(&p3)[0], 1);
    }

    #[test]
    fn arithmetic_identities() {
        let a = PowerSeries::from_coeffs([1, 1], 5);
        let b = PowerSeries::from_coeffs([1, -1], 5);
        assert_eq!(ints(&(&a * &b)), vec![1, 0, -1, 0, 0, 0]);
        assert_eq!(&a * &PowerSeries::one(5), a);
        assert_eq!(ints(&(&a - &b)), vec![0, 2, 0, 0, 0, 0]);
        assert_eq!(ints(&(-&a)), vec![-1, -1, 0, 0, 0, 0]);
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = PowerSeries::from_coeffs([1, 2, 3, 4], 3);
        let b = PowerSeries::one(1);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn recip_geometric() {
        let s = PowerSeries::from_coeffs([1, -1], 6).recip().unwrap();
        assert_eq!(ints(&s), vec![1; 7]);
        let neg = PowerSeries::from_coeffs([-1, 1], 4).recip().unwrap();
        assert_eq!(ints(&neg), vec![-1; 5]);
    }

    #[test]
    fn recip_rejects_non_units() {
        let s = PowerSeries::from_coeffs([2, 1], 4);
        assert_eq!(s.recip(), Err(SeriesError::NotInvertible(BigInt::from(2))));
        assert!(PowerSeries::zero(3).recip().is_err());
    }

    #[test]
    fn column_gf_values() {
        let c1 = ints(&column_gf(1, 8));
        assert_eq!(c1, vec![0, 1, 1, 1, 1, 1, 1, 1, 1]);
        let c2 = ints(&column_gf(2, 8));
        assert_eq!(&c2[4..=8], &[1, 2, 4, 6, 9]);
        assert_eq!(column_gf(3, 20).coeff(20), Some(&BigInt::from(192)));
    }

    #[test]
    fn a_gf_values() {
        let a = a_gf(12);
        assert_eq!(a.coeff(1), Some(&BigInt::zero()));
        assert_eq!(a.coeff(2), Some(&BigInt::one()));
        assert_eq!(a.coeff(9), Some(&BigInt::from(7)));
    }

    #[test]
    fn denominators() {
        let as_i64 = |v: Vec<BigInt>| v.iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(recurrence_from_denominator(1)), vec![1, -1]);
        assert_eq!(as_i64(recurrence_from_denominator(2)), vec![1, -2, 0, 2, -1]);
        let w3 = as_i64(recurrence_weights(&recurrence_from_denominator(3)));
        assert_eq!(w3, vec![2, 1, -3, -1, 1, 3, -1, -2, 1]);
    }
}
