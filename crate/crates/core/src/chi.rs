//! Characteristic polynomials of the arrangement families by independent routes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arrangement::{chi_by_interpolation, make_arrangement, rational_intersection_poset, ArrangementFamily};
use crate::bond::{f_counts, gamma_subposet};
use crate::dowling::homogenized_subposet;
use crate::error::{Error, Result};
use crate::partition::{partitions_with_blocks, refinement_poset};
use crate::perm::{count_table, Family};
use crate::poly::IntPolynomial;
use crate::poset::FinitePoset;
use crate::SetPartition;

/// `braid`: the partition lattice `Π_n`. `type_a`: the homogenized Linial
/// lattice of rank `2n - 1`. `type_b`: its signed analogue. `dowling`: the
/// Linial-Dowling lattice `L^m_{2n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiFamily {
    Braid,
    TypeA,
    TypeB,
    Dowling,
}

impl FromStr for ChiFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "braid" => Ok(ChiFamily::Braid),
            "typea" | "type_a" | "homogenized_linial" => Ok(ChiFamily::TypeA),
            "typeb" | "type_b" => Ok(ChiFamily::TypeB),
            "dowling" => Ok(ChiFamily::Dowling),
            _ => Err(Error::Parameter(format!("unknown family {s:?} (braid, typeA, typeB, dowling)"))),
        }
    }
}

impl fmt::Display for ChiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChiFamily::Braid => "braid",
            ChiFamily::TypeA => "typeA",
            ChiFamily::TypeB => "typeB",
            ChiFamily::Dowling => "dowling",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    PosetMobius,
    DpermCounts,
    IdForests,
    RationalArrangement,
    FiniteFieldInterpolation,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::PosetMobius,
        Route::DpermCounts,
        Route::IdForests,
        Route::RationalArrangement,
        Route::FiniteFieldInterpolation,
    ];
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "poset_mobius" => Ok(Route::PosetMobius),
            "dperm_counts" => Ok(Route::DpermCounts),
            "id_forests" => Ok(Route::IdForests),
            "rational_arrangement" => Ok(Route::RationalArrangement),
            "finite_field_interpolation" => Ok(Route::FiniteFieldInterpolation),
            _ => Err(Error::Parameter(format!("unknown route {s:?}"))),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::PosetMobius => "poset_mobius",
            Route::DpermCounts => "dperm_counts",
            Route::IdForests => "id_forests",
            Route::RationalArrangement => "rational_arrangement",
            Route::FiniteFieldInterpolation => "finite_field_interpolation",
        })
    }
}

/// The modulus actually used by a family (`type_a`: 1, `type_b`: 2).
pub fn effective_modulus(family: ChiFamily, m: u32) -> u32 {
    match family {
        ChiFamily::Braid | ChiFamily::TypeA => 1,
        ChiFamily::TypeB => 2,
        ChiFamily::Dowling => m,
    }
}

pub fn partition_lattice(n: u32) -> FinitePoset<SetPartition> {
    let ground: Vec<u32> = (1..=n).collect();
    refinement_poset(partitions_with_blocks(&ground, |_| true)).expect("partition lattices are graded")
}

fn arrangement_for(family: ChiFamily, n: u32, m: u32) -> Result<crate::arrangement::Arrangement> {
    match family {
        ChiFamily::Braid => make_arrangement(ArrangementFamily::Braid, n, 1),
        ChiFamily::TypeA => make_arrangement(ArrangementFamily::HomogenizedLinial, n, 1),
        ChiFamily::TypeB => make_arrangement(ArrangementFamily::TypeB, n, 2),
        ChiFamily::Dowling => make_arrangement(ArrangementFamily::Dowling, n, m),
    }
}

/// `sum_k (-1)^k c_k t^(k-1)` from counts `c_k` of objects with `k` components.
pub fn signed_count_polynomial(counts: impl IntoIterator<Item = (usize, BigInt)>) -> IntPolynomial {
    let mut coeffs = Vec::new();
    for (k, c) in counts {
        if k == 0 {
            continue;
        }
        if coeffs.len() < k {
            coeffs.resize(k, BigInt::from(0));
        }
        coeffs[k - 1] = if k % 2 == 0 { c } else { -c };
    }
    IntPolynomial::new(coeffs)
}

/// The characteristic polynomial of `family` at `(n, m)` by `route`.
pub fn characteristic_polynomial(family: ChiFamily, n: u32, m: u32, route: Route) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    if m == 0 {
        return Err(Error::Parameter("m must be at least 1".into()));
    }
    let m = effective_modulus(family, m);
    let unavailable = || Error::Unsupported(format!("route {route} is not available for {family} with m = {m}"));
    match route {
        Route::PosetMobius => Ok(match family {
            ChiFamily::Braid => partition_lattice(n).characteristic_polynomial(),
            ChiFamily::TypeA => gamma_subposet(n).characteristic_polynomial(),
            _ => homogenized_subposet(n, m)?.characteristic_polynomial(),
        }),
        Route::DpermCounts => {
            let table = match family {
                ChiFamily::Braid => return Err(unavailable()),
                ChiFamily::TypeA => count_table(Family::Dperm, n, 1)?,
                _ => count_table(Family::LabeledDperm, n, m)?,
            };
            Ok(signed_count_polynomial(table.by_cycles.unwrap_or_default()))
        }
        Route::IdForests => {
            if family == ChiFamily::Braid || m != 1 {
                return Err(unavailable());
            }
            Ok(signed_count_polynomial(f_counts(n).into_iter().map(|(k, c)| (k, BigInt::from(c)))))
        }
        Route::RationalArrangement => {
            if m > 2 {
                return Err(unavailable());
            }
            Ok(rational_intersection_poset(&arrangement_for(family, n, m)?)?.characteristic_polynomial())
        }
        Route::FiniteFieldInterpolation => Ok(chi_by_interpolation(&arrangement_for(family, n, m)?, 0)?.chi),
    }
}

/// Routes that apply to `(family, m)`.
pub fn available_routes(family: ChiFamily, m: u32) -> Vec<Route> {
    let m = effective_modulus(family, m);
    Route::ALL
        .into_iter()
        .filter(|r| match r {
            Route::PosetMobius | Route::FiniteFieldInterpolation => true,
            Route::DpermCounts => family != ChiFamily::Braid,
            Route::IdForests => family != ChiFamily::Braid && m == 1,
            Route::RationalArrangement => m <= 2,
        })
        .collect()
}

/// Signed Stirling numbers of the first kind `s(n, k)`, `k = 0..=n`.
pub fn stirling_first(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for j in 0..n {
        let mut next = vec![BigInt::from(0); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * BigInt::from(j);
        }
        row = next;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_type_a_by_every_route() {
        let want = IntPolynomial::from_i64s(&[-1, 3, -3, 1]);
        for r in available_routes(ChiFamily::TypeA, 1) {
            assert_eq!(characteristic_polynomial(ChiFamily::TypeA, 2, 1, r).unwrap(), want, "{r}");
        }
        for r in available_routes(ChiFamily::TypeA, 1) {
            assert_eq!(
                characteristic_polynomial(ChiFamily::TypeA, 1, 1, r).unwrap(),
                IntPolynomial::from_i64s(&[-1, 1])
            );
        }
    }

    #[test]
    fn dowling_n1_is_a_single_hyperplane() {
        for m in 1..=3 {
            for r in available_routes(ChiFamily::Dowling, m) {
                assert_eq!(
                    characteristic_polynomial(ChiFamily::Dowling, 1, m, r).unwrap(),
                    IntPolynomial::from_i64s(&[-1, 1])
                );
            }
        }
    }

    #[test]
    fn unavailable_routes_are_reported() {
        assert!(matches!(
            characteristic_polynomial(ChiFamily::Dowling, 2, 3, Route::RationalArrangement),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            characteristic_polynomial(ChiFamily::Braid, 3, 1, Route::DpermCounts),
            Err(Error::Unsupported(_))
        ));
        assert!(!available_routes(ChiFamily::TypeB, 1).contains(&Route::IdForests));
    }

    #[test]
    fn stirling_rows() {
        let s4: Vec<i64> = stirling_first(4).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(s4, vec![0, -6, 11, -6, 1]);
    }

    #[test]
    fn family_names() {
        assert_eq!("typeA".parse::<ChiFamily>().unwrap(), ChiFamily::TypeA);
        assert_eq!(ChiFamily::TypeB.to_string(), "typeB");
        assert!("typeC".parse::<ChiFamily>().is_err());
        assert_eq!("id-forests".parse::<Route>().unwrap(), Route::IdForests);
    }
}
