use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use linial_core::arrangement::interpolate;
use linial_core::bond::{gamma_graph, gamma_subposet, id_trees_on, psi, whitney_rota_check};
use linial_core::dowling::homogenized_subposet;
use linial_core::perm::{enumerate, Family};
use linial_core::{FinitePoset, IntPolynomial, SetPartition};

fn gamma6() -> &'static FinitePoset<SetPartition> {
    static P: OnceLock<FinitePoset<SetPartition>> = OnceLock::new();
    P.get_or_init(|| gamma_subposet(3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // NBC counts do not depend on the edge order.
    #[test]
    fn rota_whitney_any_edge_order(perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let g = gamma_graph(3).reordered(&perm);
        prop_assert!(whitney_rota_check(&g, gamma6()));
    }

    #[test]
    fn mobius_sums_vanish(x in 0usize..64) {
        let p = gamma6();
        let x = x % p.len();
        prop_assume!(x != p.bottom());
        let s: BigInt = (0..p.len()).filter(|&y| p.leq(y, x)).map(|y| p.mobius_from_bottom(y).clone()).sum();
        prop_assert_eq!(s, BigInt::from(0));
    }

    #[test]
    fn interpolation_recovers(coeffs in prop::collection::vec(-50i64..50, 1..7)) {
        let poly = IntPolynomial::from_i64s(&coeffs);
        let pts: Vec<(BigInt, BigInt)> = (0..coeffs.len() as i64)
            .map(|x| (BigInt::from(2 * x + 3), poly.eval(&BigInt::from(2 * x + 3))))
            .collect();
        prop_assert_eq!(interpolate(&pts).unwrap(), poly);
    }

    #[test]
    fn partition_text_round_trip(labels in prop::collection::vec(0u32..4, 1..9)) {
        let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); 4];
        for (i, l) in labels.iter().enumerate() {
            blocks[*l as usize].push(i as u32 + 1);
        }
        blocks.retain(|b| !b.is_empty());
        let p = SetPartition::new(blocks).unwrap();
        prop_assert_eq!(p.to_string().parse::<SetPartition>().unwrap(), p);
    }
}

#[test]
fn psi_is_a_bijection_onto_dcycles() {
    for n in 1..=4u32 {
        let ground: Vec<u32> = (1..=2 * n).collect();
        let images: Vec<_> = id_trees_on(&ground).iter().map(|t| psi(t).unwrap()).collect();
        let distinct: HashSet<_> = images.iter().cloned().collect();
        assert_eq!(distinct.len(), images.len(), "n={n}");
        let dcycles: HashSet<_> = enumerate(Family::Dcycle, &ground).unwrap().into_iter().collect();
        assert_eq!(distinct, dcycles, "n={n}");
    }
}

#[test]
fn homogenized_lattices_are_graded_with_unique_top() {
    for (n, m) in [(1, 1), (2, 1), (2, 2), (2, 3), (3, 2)] {
        let p = homogenized_subposet(n, m).unwrap();
        assert!(p.top().is_some());
        assert_eq!(p.length(), 2 * n as usize - 1);
        assert_eq!(p.rank_sizes()[0], 1);
    }
}
