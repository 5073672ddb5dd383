//! Truncated power series in `x` and the closed-form generating functions
//! for Genocchi-type counts and characteristic polynomials.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::scalar::Ring;

/// Power series `sum_{k <= N} c_k x^k`; arithmetic is modulo `x^(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

pub type IntSeries = TruncatedSeries<BigInt>;
/// Series whose coefficients are integer polynomials in `t`.
pub type PolySeries = TruncatedSeries<IntPolynomial>;

impl<C: Ring> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `c x^k`, truncated away if `k > order`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads or truncates `coeffs` to length `order + 1`.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "truncation orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_order(other);
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1` so the
    /// inverse stays over the same coefficient ring.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        let c0_inv = if c0 == C::one() || c0 == -C::one() {
            c0
        } else {
            return Err(Error::Domain(
                "series inverse needs a unit constant term".into(),
            ));
        };
        let n = self.order();
        let mut inv: Vec<C> = Vec::with_capacity(n + 1);
        inv.push(c0_inv.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * inv[k - j].clone();
            }
            inv.push(-(c0_inv.clone() * acc));
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    pub fn div(&self, denom: &Self) -> Result<Self> {
        Ok(self.mul(&denom.inverse()?))
    }

    /// `1 / (1 - a x)` as the geometric series `sum_j a^j x^j`.
    pub fn geometric(a: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = C::one();
        for _ in 0..=order {
            coeffs.push(p.clone());
            p = p * a.clone();
        }
        TruncatedSeries { coeffs }
    }
}

impl<T: Ring> TruncatedSeries<crate::poly::Polynomial<T>> {
    /// Specializes every polynomial coefficient at `t`.
    pub fn eval_at(&self, t: &T) -> TruncatedSeries<T> {
        self.map(|p| p.eval(t))
    }
}

impl IntSeries {
    /// The same series with each coefficient as a constant polynomial.
    pub fn to_poly_series(&self) -> PolySeries {
        self.map(|c| IntPolynomial::constant(c.clone()))
    }
}

/// One JSON array per coefficient, each the coefficient's own serialization.
impl<C: Ring + Display> Serialize for TruncatedSeries<crate::poly::Polynomial<C>> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// `a (a - 1) ... (a - n + 1)`, with the empty product `1` at `n = 0`.
pub fn falling<T: Ring>(a: &T, n: usize) -> T {
    falling_m(a, n, 1)
}

/// `a (a - m) (a - 2m) ... (a - (n-1)m)`.
pub fn falling_m<T: Ring>(a: &T, n: usize, m: i64) -> T {
    (0..n).fold(T::one(), |acc, j| {
        acc * (a.clone() - T::from_i64(j as i64 * m))
    })
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `sum_{n>=1} numer(n) x^n / prod_{k<=n} (1 - step(k) x)`, truncated at `order`.
fn rational_sum<C: Ring>(
    order: usize,
    numer: impl Fn(usize) -> C,
    step: impl Fn(usize) -> C,
) -> TruncatedSeries<C> {
    let mut total = TruncatedSeries::zero(order);
    let mut denom_inv = TruncatedSeries::one(order);
    for n in 1..=order {
        denom_inv = denom_inv.mul(&TruncatedSeries::geometric(&step(n), order));
        let term = TruncatedSeries::monomial(numer(n), n, order).mul(&denom_inv);
        total = total.add(&term);
    }
    total
}

/// `sum_n n!(n+1)! x^n / prod_{k<=n}(1 + k(k+1)x)`, the median Genocchi series.
pub fn rhs_bd(order: usize) -> IntSeries {
    rational_sum(
        order,
        |n| factorial(n as u64) * factorial(n as u64 + 1),
        |k| -BigInt::from(k * (k + 1)),
    )
}

/// `sum_n (2n)! x^n / prod_{k<=n}(1 + 2k(2k+1)x)`, the type B region series.
pub fn rhs_bbd(order: usize) -> IntSeries {
    rational_sum(
        order,
        |n| factorial(2 * n as u64),
        |k| -BigInt::from(2 * k * (2 * k + 1)),
    )
}

/// `sum_n (t-1)_{n,m} (t-m)_{n-1,m} x^n / prod_{k<=n}(1 - mk(t - mk)x)`.
///
/// The coefficient of `x^n` is the characteristic polynomial of the
/// homogenized Linial-Dowling lattice of rank `2n - 1` (`m = 1`: type A).
pub fn rhs_char_series(m: u32, order: usize) -> Result<PolySeries> {
    if m == 0 {
        return Err(Error::Parameter("modulus m must be at least 1".into()));
    }
    let m = m as i64;
    let t = IntPolynomial::t();
    let one = IntPolynomial::one();
    Ok(rational_sum(
        order,
        |n| {
            falling_m(&(&t - &one), n, m)
                * falling_m(&(&t - &IntPolynomial::from_i64s(&[m])), n - 1, m)
        },
        |k| {
            let mk = m * k as i64;
            (&t - &IntPolynomial::from_i64s(&[mk])).scale(&BigInt::from(mk))
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn falling_factorials() {
        let t = IntPolynomial::t();
        let tm1 = &t - &IntPolynomial::one();
        assert_eq!(
            falling(&tm1, 2),
            &tm1 * &(&t - &IntPolynomial::from_i64s(&[2]))
        );
        for m in 1..4 {
            assert_eq!(falling_m(&tm1, 1, m), tm1);
            assert_eq!(falling_m(&tm1, 0, m), IntPolynomial::one());
        }
        assert_eq!(falling_m(&BigInt::from(7), 3, 1), falling(&BigInt::from(7), 3));
        assert_eq!(falling_m(&BigInt::from(7), 3, 2), BigInt::from(7 * 5 * 3));
    }

    #[test]
    fn median_genocchi_series_head() {
        let s = rhs_bd(6);
        assert_eq!(s.coeffs(), ints(&[0, 2, 8, 56, 608, 9440, 198272]).as_slice());
    }

    #[test]
    fn type_b_series_head() {
        let s = rhs_bbd(2);
        // 2x/(1+6x) + 24x^2/((1+6x)(1+20x)) = 2x + (-12 + 24)x^2 + ...
        assert_eq!(s.coeffs(), ints(&[0, 2, 12]).as_slice());
    }

    #[test]
    fn char_series_low_coefficients() {
        let s = rhs_char_series(1, 3).unwrap();
        assert_eq!(*s.coeff(1), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(*s.coeff(2), IntPolynomial::from_i64s(&[-1, 3, -3, 1]));
        for m in 1..4 {
            let s = rhs_char_series(m, 1).unwrap();
            assert_eq!(*s.coeff(1), IntPolynomial::from_i64s(&[-1, 1]));
        }
        assert!(rhs_char_series(0, 3).is_err());
    }

    #[test]
    fn inverse_needs_unit_constant() {
        let s = IntSeries::from_coeffs(ints(&[2, 1]), 3);
        assert!(s.inverse().is_err());
        let s = IntSeries::from_coeffs(ints(&[-1, 1]), 3);
        let inv = s.inverse().unwrap();
        assert_eq!(s.mul(&inv), IntSeries::one(3));
    }

    fn small_series() -> impl Strategy<Value = IntSeries> {
        prop::collection::vec(-9i64..9, 6).prop_map(|c| IntSeries::from_coeffs(ints(&c), 5))
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(a in small_series(), b in small_series(), c in small_series()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn division_inverts_multiplication(a in small_series(), tail in prop::collection::vec(-9i64..9, 5), neg in any::<bool>()) {
            let mut d = vec![if neg { -1 } else { 1 }];
            d.extend(tail);
            let d = IntSeries::from_coeffs(ints(&d), 5);
            prop_assert_eq!(a.mul(&d).div(&d).unwrap(), a.clone());
            prop_assert_eq!(a.div(&d).unwrap().mul(&d), a);
        }
    }
}
