//! Exact computations on the intersection lattices of the homogenized Linial
//! arrangement and its type B and Linial-Dowling relatives.
//!
//! The central objects are [`FinitePoset`] (Möbius function and characteristic
//! polynomial), the partition-style lattices built in [`bond`] and [`dowling`],
//! the geometric intersection posets of [`arrangement`], the permutation
//! classes of [`perm`], and the generating functions of [`series`]. Each
//! characteristic polynomial can be obtained by several independent routes,
//! and [`verify`] runs the cross-checks between them.
//!
//! Scalar code is generic: polynomials and series take any [`scalar::Ring`],
//! row reduction any [`scalar::Field`]. The aliases below fix the common
//! instantiations.

pub mod arrangement;
pub mod bond;
pub mod chi;
pub mod dowling;
pub mod error;
pub mod iso;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use partition::SetPartition;
pub use poly::{IntPolynomial, Polynomial, RatPolynomial};
pub use poset::FinitePoset;
pub use scalar::{Field, Fp, Rational, Ring};
pub use series::{IntSeries, PolySeries, TruncatedSeries};

/// Arbitrary-precision integer used for every count.
pub type Count = num_bigint::BigInt;
