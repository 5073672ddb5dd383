//! Finite graded posets with a minimum: Möbius function, characteristic
//! polynomial, and the region/Betti-number formulas built on it.

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// An immutable finite poset stored as strict down- and up-set bitsets.
///
/// Construction validates that the relation is a partial order with a unique
/// minimum and that the poset is graded; ranks are derived from the order.
/// `mobius(bottom, _)` is precomputed; other rows are memoized on demand.
#[derive(Debug)]
pub struct FinitePoset<K> {
    elements: Vec<K>,
    index: HashMap<K, usize>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    lower_covers: Vec<Vec<usize>>,
    rank: Vec<usize>,
    linear: Vec<usize>,
    bottom: usize,
    length: usize,
    mobius_bottom: Vec<BigInt>,
    rows: RwLock<HashMap<usize, Arc<HashMap<usize, BigInt>>>>,
}

impl<K: Clone + Eq + Hash + Debug + Send + Sync> FinitePoset<K> {
    /// Builds the poset on `elements` ordered by `leq` (assumed reflexive).
    pub fn from_leq(elements: Vec<K>, leq: impl Fn(&K, &K) -> bool + Sync) -> Result<Self> {
        let el = &elements;
        let down = Self::down_sets(el.len(), |x, y| leq(&el[x], &el[y]));
        Self::checked(elements, down)
    }

    /// Like [`FinitePoset::from_leq`], with the relation given on indices.
    pub fn from_index_leq(elements: Vec<K>, leq: impl Fn(usize, usize) -> bool + Sync) -> Result<Self> {
        let down = Self::down_sets(elements.len(), leq);
        Self::checked(elements, down)
    }

    fn down_sets(n: usize, leq: impl Fn(usize, usize) -> bool + Sync) -> Vec<FixedBitSet> {
        (0..n)
            .into_par_iter()
            .map(|y| {
                let mut set = FixedBitSet::with_capacity(n);
                for x in 0..n {
                    if x != y && leq(x, y) {
                        set.insert(x);
                    }
                }
                set
            })
            .collect()
    }

    fn checked(elements: Vec<K>, down: Vec<FixedBitSet>) -> Result<Self> {
        let n = elements.len();
        for y in 0..n {
            for x in down[y].ones() {
                if down[x].contains(y) {
                    return Err(Error::Integrity(format!(
                        "relation not antisymmetric on {:?} and {:?}",
                        elements[x], elements[y]
                    )));
                }
                if !down[x].is_subset(&down[y]) {
                    return Err(Error::Integrity(format!(
                        "relation not transitive below {:?}",
                        elements[y]
                    )));
                }
            }
        }
        Self::finish(elements, down)
    }

    /// Builds the poset generated from `bottom` by the upper-cover map `covers`;
    /// the order is the reflexive-transitive closure of the covers.
    pub fn from_covers(bottom: K, covers: impl Fn(&K) -> Vec<K>) -> Result<Self> {
        let mut elements = vec![bottom.clone()];
        let mut index: HashMap<K, usize> = HashMap::from([(bottom, 0)]);
        let mut edges: Vec<Vec<usize>> = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let ups = covers(&elements[i]);
            for u in ups {
                let j = match index.get(&u) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        index.insert(u.clone(), j);
                        elements.push(u);
                        edges.push(Vec::new());
                        queue.push_back(j);
                        j
                    }
                };
                if !edges[i].contains(&j) {
                    edges[i].push(j);
                }
            }
        }
        let n = elements.len();
        // Kahn's algorithm for a topological order of the cover graph
        let mut indeg = vec![0usize; n];
        for e in &edges {
            for &j in e {
                indeg[j] += 1;
            }
        }
        let mut topo = Vec::with_capacity(n);
        let mut ready: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(i) = ready.pop_front() {
            topo.push(i);
            for &j in &edges[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.push_back(j);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::Integrity("cover relation has a cycle".into()));
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &i in &topo {
            let mut below = down[i].clone();
            below.insert(i);
            for &j in &edges[i] {
                down[j].union_with(&below);
            }
        }
        Self::finish(elements, down)
    }

    fn finish(elements: Vec<K>, down: Vec<FixedBitSet>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Integrity("empty poset".into()));
        }
        let minima: Vec<usize> = (0..n).filter(|&i| down[i].count_ones(..) == 0).collect();
        if minima.len() != 1 {
            return Err(Error::Integrity(format!(
                "poset needs a unique minimum, found {}",
                minima.len()
            )));
        }
        let bottom = minima[0];
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for y in 0..n {
            for x in down[y].ones() {
                up[x].insert(y);
            }
        }
        let mut linear: Vec<usize> = (0..n).collect();
        let sizes: Vec<usize> = down.iter().map(|d| d.count_ones(..)).collect();
        linear.sort_by_key(|&i| (sizes[i], i));

        let lower_covers: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|y| {
                let mut cand = down[y].clone();
                for z in down[y].ones() {
                    cand.difference_with(&down[z]);
                }
                cand.ones().collect()
            })
            .collect();

        let mut rank = vec![0usize; n];
        for &y in &linear {
            if y == bottom {
                continue;
            }
            let rs: Vec<usize> = lower_covers[y].iter().map(|&c| rank[c] + 1).collect();
            let r = rs[0];
            if rs.iter().any(|&s| s != r) {
                return Err(Error::Integrity(format!(
                    "poset is not graded at {:?}",
                    elements[y]
                )));
            }
            rank[y] = r;
        }
        let length = rank.iter().copied().max().unwrap_or(0);

        let mut mobius_bottom = vec![BigInt::zero(); n];
        for &y in &linear {
            if y == bottom {
                mobius_bottom[y] = BigInt::one();
            } else {
                let s: BigInt = down[y].ones().map(|z| &mobius_bottom[z]).sum();
                mobius_bottom[y] = -s;
            }
        }

        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        Ok(FinitePoset {
            elements,
            index,
            down,
            up,
            lower_covers,
            rank,
            linear,
            bottom,
            length,
            mobius_bottom,
            rows: RwLock::new(HashMap::new()),
        })
    }
}

impl<K: Clone + Eq + Hash> FinitePoset<K> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &K {
        &self.elements[i]
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// The unique maximal element, if there is one.
    pub fn top(&self) -> Option<usize> {
        let maxima: Vec<usize> = (0..self.len())
            .filter(|&i| self.up[i].count_ones(..) == 0)
            .collect();
        (maxima.len() == 1).then(|| maxima[0])
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.down[y].contains(x)
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// Maximum rank.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn strict_down(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.down[y].ones()
    }

    pub fn lower_covers(&self, y: usize) -> &[usize] {
        &self.lower_covers[y]
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.up[x]
            .ones()
            .filter(|&y| self.lower_covers[y].contains(&x))
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.rank[i] == 1).collect()
    }

    /// Elements in a linear extension of the order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn mobius_from_bottom(&self, x: usize) -> &BigInt {
        &self.mobius_bottom[x]
    }

    /// `mu(x, y)`; errors unless `x <= y`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<BigInt> {
        if !self.leq(x, y) {
            return Err(Error::Domain(format!("element {x} is not below element {y}")));
        }
        if x == self.bottom {
            return Ok(self.mobius_bottom[y].clone());
        }
        if let Some(row) = self.rows.read().expect("memo lock").get(&x) {
            return Ok(row[&y].clone());
        }
        let row = Arc::new(self.mobius_row(x));
        let value = row[&y].clone();
        self.rows.write().expect("memo lock").insert(x, row);
        Ok(value)
    }

    pub fn mobius_keys(&self, x: &K, y: &K) -> Result<BigInt> {
        let (Some(i), Some(j)) = (self.index_of(x), self.index_of(y)) else {
            return Err(Error::Domain("element not in poset".into()));
        };
        self.mobius(i, j)
    }

    fn mobius_row(&self, x: usize) -> HashMap<usize, BigInt> {
        let mut row = HashMap::from([(x, BigInt::one())]);
        for &y in &self.linear {
            if !self.up[x].contains(y) {
                continue;
            }
            let s: BigInt = self.down[y]
                .ones()
                .filter(|&z| z == x || self.up[x].contains(z))
                .map(|z| row[&z].clone())
                .sum();
            row.insert(y, -s);
        }
        row
    }

    /// `sum_x mu(0, x) t^(length - rank x)`.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.length + 1];
        for x in 0..self.len() {
            coeffs[self.length - self.rank[x]] += &self.mobius_bottom[x];
        }
        IntPolynomial::new(coeffs)
    }

    /// Number of elements of each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.length + 1];
        for &r in &self.rank {
            sizes[r] += 1;
        }
        sizes
    }

    /// Same element set and same order relation, compared by key.
    pub fn same_as(&self, other: &FinitePoset<K>) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let map: Option<Vec<usize>> = self.elements.iter().map(|k| other.index_of(k)).collect();
        let Some(map) = map else { return false };
        (0..self.len()).all(|y| {
            (0..self.len()).all(|x| self.leq(x, y) == other.leq(map[x], map[y]))
        })
    }
}

/// Region count of a real arrangement from its characteristic polynomial: `|chi(-1)|`.
pub fn zaslavsky_regions(chi: &IntPolynomial) -> BigInt {
    chi.eval(&BigInt::from(-1)).abs()
}

/// Bounded-region count of a real affine arrangement: `|chi(1)|`.
pub fn bounded_regions(chi: &IntPolynomial) -> BigInt {
    chi.eval(&BigInt::one()).abs()
}

/// Betti-number polynomial `(-t)^r chi(-1/t)` of the complexified complement.
///
/// A negative coefficient means `chi` cannot come from an arrangement of
/// length `r`, and is reported as an integrity error.
pub fn poincare_polynomial(chi: &IntPolynomial, length: usize) -> Result<IntPolynomial> {
    if chi.degree().is_some_and(|d| d > length) {
        return Err(Error::Integrity(format!(
            "degree of chi exceeds length {length}"
        )));
    }
    let mut betti = vec![BigInt::zero(); length + 1];
    for (i, c) in chi.coeffs().iter().enumerate() {
        let k = length - i;
        betti[k] = if k % 2 == 0 { c.clone() } else { -c.clone() };
    }
    if let Some(b) = betti.iter().find(|b| b.is_negative()) {
        return Err(Error::Integrity(format!("negative Betti number {b}")));
    }
    Ok(IntPolynomial::new(betti))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_with_blocks, SetPartition};

    fn chain(n: usize) -> FinitePoset<usize> {
        FinitePoset::from_leq((0..=n).collect(), |a, b| a <= b).unwrap()
    }

    fn pi(n: u32) -> FinitePoset<SetPartition> {
        let ground: Vec<u32> = (1..=n).collect();
        FinitePoset::from_leq(partitions_with_blocks(&ground, |_| true), |a, b| a.refines(b))
            .unwrap()
    }

    #[test]
    fn chain_mobius() {
        let c = chain(1);
        assert_eq!(c.mobius(0, 1).unwrap(), BigInt::from(-1));
        let c = chain(3);
        assert_eq!(c.mobius(0, 2).unwrap(), BigInt::zero());
        assert_eq!(c.mobius(1, 2).unwrap(), BigInt::from(-1));
        assert!(matches!(c.mobius(2, 1), Err(Error::Domain(_))));
        assert_eq!(c.characteristic_polynomial(), IntPolynomial::from_i64s(&[0, 0, -1, 1]));
    }

    #[test]
    fn partition_lattice_of_three() {
        let p = pi(3);
        assert_eq!(p.len(), 5);
        let top = p.top().unwrap();
        assert_eq!(p.mobius(p.bottom(), top).unwrap(), BigInt::from(2));
        let chi = p.characteristic_polynomial();
        assert_eq!(chi, IntPolynomial::from_i64s(&[2, -3, 1]));
        assert_eq!(zaslavsky_regions(&chi), BigInt::from(6));
        assert_eq!(
            poincare_polynomial(&chi, 2).unwrap(),
            IntPolynomial::from_i64s(&[1, 3, 2])
        );
    }

    #[test]
    fn single_hyperplane() {
        let chi = chain(1).characteristic_polynomial();
        assert_eq!(chi, IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(zaslavsky_regions(&chi), BigInt::from(2));
        assert_eq!(poincare_polynomial(&chi, 1).unwrap(), IntPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn poincare_rejects_wrong_signs() {
        let bad = IntPolynomial::from_i64s(&[1, 1]);
        assert!(matches!(poincare_polynomial(&bad, 1), Err(Error::Integrity(_))));
    }

    #[test]
    fn general_mobius_matches_interval_recursion() {
        let p = pi(4);
        for x in 0..p.len() {
            for y in 0..p.len() {
                if !p.leq(x, y) {
                    continue;
                }
                // the interval [x, y] in a partition lattice is a product of
                // partition lattices; mu = prod (-1)^(k-1) (k-1)!
                let (bx, by) = (p.element(x), p.element(y));
                let mut expect = BigInt::one();
                for b in by.blocks() {
                    let k = bx.blocks().iter().filter(|c| b.contains(&c[0])).count() as i64;
                    let f: i64 = (1..k).product();
                    expect *= BigInt::from(if k % 2 == 1 { f } else { -f });
                }
                assert_eq!(p.mobius(x, y).unwrap(), expect);
            }
        }
    }

    #[test]
    fn mobius_sums_to_zero_and_ignores_element_order() {
        let p = pi(5);
        let total: BigInt = (0..p.len()).map(|x| p.mobius_from_bottom(x).clone()).sum();
        assert!(total.is_zero());
        let mut rev = p.elements().to_vec();
        rev.reverse();
        let q = FinitePoset::from_leq(rev, |a, b| a.refines(b)).unwrap();
        assert_eq!(q.characteristic_polynomial(), p.characteristic_polynomial());
        assert!(q.same_as(&p));
    }

    #[test]
    fn rejects_non_posets_and_ungraded() {
        assert!(FinitePoset::from_leq(vec![0, 1], |_, _| true).is_err());
        assert!(FinitePoset::from_leq(vec![1, 2], |a, b| a == b).is_err());
        // 0 < a < b < top and 0 < c < top: not graded
        let rel = |a: &u8, b: &u8| {
            a == b || *a == 0 || *b == 4 || (*a == 1 && *b == 2)
        };
        let err = FinitePoset::from_leq(vec![0u8, 1, 2, 3, 4], rel).unwrap_err();
        assert!(matches!(err, Error::Integrity(m) if m.contains("graded")));
    }

    #[test]
    fn covers_and_leq_constructions_agree() {
        let p = pi(4);
        let ground: Vec<u32> = (1..=4).collect();
        let q = FinitePoset::from_covers(SetPartition::discrete(&ground), |x| {
            let b = x.blocks();
            let mut ups = Vec::new();
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    let mut merged: Vec<Vec<u32>> = b.to_vec();
                    let bj = merged.remove(j);
                    merged[i].extend(bj);
                    ups.push(SetPartition::new(merged).unwrap());
                }
            }
            ups
        })
        .unwrap();
        assert!(p.same_as(&q));
        assert_eq!(q.rank_sizes(), vec![1, 6, 7, 1]);
    }
}
