//! Scalar abstractions shared by the polynomial, series and linear-algebra code.
//!
//! Everything in this crate is exact. [`Ring`] is what polynomials and truncated
//! series need; [`Field`] is what row reduction needs. Rationals come from
//! `num-rational`, prime fields from [`Fp`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, ToPrimitive, Zero};

/// Commutative ring with identity, as used for polynomial and series coefficients.
///
/// Blanket-implemented, so `Polynomial<BigInt>` is itself a `Ring` and can be
/// used as the coefficient type of a power series.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if v < 0 { -Self::one() } else { Self::one() };
        // double-and-add so large constants stay cheap
        let mut base = unit;
        let mut k = v.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            k >>= 1;
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Exact field with hashable, canonical values (equal values hash equally).
pub trait Field: Ring + Eq + Hash + Num + Display {
    fn from_bigint(v: &BigInt) -> Self;

    /// `num / den`, or `None` when `den` vanishes in this field.
    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        let d = Self::from_bigint(den);
        if d.is_zero() {
            None
        } else {
            Some(Self::from_bigint(num) / d)
        }
    }
}

impl Field for Ratio<BigInt> {
    fn from_bigint(v: &BigInt) -> Self {
        Ratio::from_integer(v.clone())
    }
}

/// Machine-word rationals: faster on small arrangements, panics on overflow.
impl Field for Ratio<i64> {
    fn from_bigint(v: &BigInt) -> Self {
        Ratio::from_integer(v.to_i64().expect("integer does not fit Rational64"))
    }
}

/// Arbitrary-precision rationals.
pub type Rational = Ratio<BigInt>;

/// Element of the prime field `Z/PZ`, stored reduced in `0..P`.
///
/// `P` must be prime for division to be meaningful; this is checked by
/// [`Fp::modulus_is_prime`] in tests, not on every operation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    pub fn modulus_is_prime() -> bool {
        is_prime(P)
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in Fp")
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        // every nonzero element divides every element
        assert!(!rhs.is_zero(), "remainder by zero in Fp");
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn from_bigint(v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(P));
        Fp(r.to_u64().expect("reduced residue fits u64"))
    }
}

/// Deterministic trial-division primality test; moduli here are small.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
