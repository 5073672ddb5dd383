//! Dowling lattices `Q_N(Z_m)`, their homogenized Linial subposets, and
//! Gandhi polynomials.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::partitions_with_blocks;
use crate::poly::IntPolynomial;
use crate::poset::FinitePoset;
use crate::scalar::Rational;

/// A `Z_m`-labeled partition of `{0} ∪ [N]`.
///
/// Canonical form: zero block sorted, labeled blocks sorted by element and
/// ordered by their minima, and every labeled block's minimum carries label 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPartition {
    zero: Vec<u32>,
    blocks: Vec<Vec<(u32, u32)>>,
    modulus: u32,
}

impl LabeledPartition {
    pub fn new(mut zero: Vec<u32>, mut blocks: Vec<Vec<(u32, u32)>>, modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Parameter("modulus must be at least 1".into()));
        }
        zero.sort_unstable();
        if zero.first() != Some(&0) {
            return Err(Error::Parameter("zero block must contain 0".into()));
        }
        let mut seen: HashSet<u32> = HashSet::new();
        for &x in &zero {
            if !seen.insert(x) {
                return Err(Error::Parameter(format!("{x} repeated")));
            }
        }
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Parameter("empty labeled block".into()));
            }
            b.sort_unstable();
            for &(x, l) in b.iter() {
                if x == 0 || !seen.insert(x) {
                    return Err(Error::Parameter(format!("{x} misplaced or repeated")));
                }
                if l >= modulus {
                    return Err(Error::Parameter(format!("label {l} outside Z_{modulus}")));
                }
            }
            if b[0].1 != 0 {
                return Err(Error::Parameter(format!(
                    "block minimum {} must be labeled 0",
                    b[0].0
                )));
            }
        }
        blocks.sort_unstable_by_key(|b| b[0].0);
        Ok(LabeledPartition { zero, blocks, modulus })
    }

    /// `0 | 1^0 | 2^0 | ... | N^0`.
    pub fn finest(n: u32, modulus: u32) -> Self {
        LabeledPartition {
            zero: vec![0],
            blocks: (1..=n).map(|i| vec![(i, 0)]).collect(),
            modulus,
        }
    }

    pub fn zero_block(&self) -> &[u32] {
        &self.zero
    }

    pub fn labeled_blocks(&self) -> &[Vec<(u32, u32)>] {
        &self.blocks
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Blocks including the zero block.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len() + 1
    }

    /// Largest element of the ground set `{0} ∪ [N]`.
    pub fn size(&self) -> u32 {
        self.zero
            .iter()
            .copied()
            .chain(self.blocks.iter().flatten().map(|&(x, _)| x))
            .max()
            .unwrap_or(0)
    }

    /// Dowling order: zero blocks nest, and each labeled block lies in the
    /// zero block or in a labeled block whose labels differ from its own by
    /// one constant mod `m`.
    pub fn leq(&self, other: &LabeledPartition) -> bool {
        if self.modulus != other.modulus || !self.zero.iter().all(|x| other.zero.binary_search(x).is_ok()) {
            return false;
        }
        let m = self.modulus;
        self.blocks.iter().all(|b| {
            let first = b[0].0;
            if other.zero.binary_search(&first).is_ok() {
                return b.iter().all(|(x, _)| other.zero.binary_search(x).is_ok());
            }
            let Some(c) = other.blocks.iter().find(|c| c.iter().any(|&(y, _)| y == first)) else {
                return false;
            };
            let label_in_c = |x: u32| c.iter().find(|&&(y, _)| y == x).map(|&(_, l)| l);
            let mut shift = None;
            b.iter().all(|&(x, l)| match label_in_c(x) {
                None => false,
                Some(lc) => {
                    let d = (lc + m - l) % m;
                    *shift.get_or_insert(d) == d
                }
            })
        })
    }

    /// Upper covers: merge the zero block with a labeled block (labels
    /// erased), or merge `B_i` and `B_j` (`min B_i < min B_j`) adding each
    /// `l in Z_m` to the labels of `B_j`.
    pub fn covers(&self) -> Vec<LabeledPartition> {
        let m = self.modulus;
        let mut out = Vec::new();
        for i in 0..self.blocks.len() {
            let mut zero = self.zero.clone();
            zero.extend(self.blocks[i].iter().map(|&(x, _)| x));
            zero.sort_unstable();
            let mut blocks = self.blocks.clone();
            blocks.remove(i);
            out.push(LabeledPartition { zero, blocks, modulus: m });
        }
        for i in 0..self.blocks.len() {
            for j in i + 1..self.blocks.len() {
                for shift in 0..m {
                    let mut merged = self.blocks[i].clone();
                    merged.extend(self.blocks[j].iter().map(|&(x, l)| (x, (l + shift) % m)));
                    merged.sort_unstable();
                    let mut blocks: Vec<_> = self
                        .blocks
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i && k != j)
                        .map(|(_, b)| b.clone())
                        .collect();
                    blocks.push(merged);
                    blocks.sort_unstable_by_key(|b| b[0].0);
                    out.push(LabeledPartition { zero: self.zero.clone(), blocks, modulus: m });
                }
            }
        }
        out
    }

    /// Parses `"0 5|1^0 3^1|2^0 4^2"`; the block containing 0 is the zero block.
    pub fn parse(s: &str, modulus: u32) -> Result<Self> {
        let mut zero = None;
        let mut blocks = Vec::new();
        for raw in s.split('|') {
            let mut elems = Vec::new();
            for tok in raw.split_whitespace() {
                let (e, l) = tok.split_once('^').unwrap_or((tok, "0"));
                let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad element {e:?}")))?;
                let l: u32 = l.parse().map_err(|_| Error::Parse(format!("bad label {l:?}")))?;
                elems.push((e, l));
            }
            if elems.iter().any(|&(e, _)| e == 0) {
                if zero.is_some() {
                    return Err(Error::Parse("0 appears twice".into()));
                }
                zero = Some(elems.into_iter().map(|(e, _)| e).collect());
            } else {
                blocks.push(elems);
            }
        }
        let zero = zero.ok_or_else(|| Error::Parse("no zero block".into()))?;
        LabeledPartition::new(zero, blocks, modulus)
    }

    /// Relabels an `m = 1` partition as an ordinary set partition of `[N+1]`
    /// with `0 ↦ N+1`.
    pub fn to_set_partition(&self) -> crate::SetPartition {
        let top = self.size() + 1;
        let mut blocks: Vec<Vec<u32>> = vec![self
            .zero
            .iter()
            .map(|&x| if x == 0 { top } else { x })
            .collect()];
        blocks.extend(self.blocks.iter().map(|b| b.iter().map(|&(x, _)| x).collect()));
        crate::SetPartition::new(blocks).expect("disjoint blocks")
    }
}

impl fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero: Vec<String> = self.zero.iter().map(u32::to_string).collect();
        f.write_str(&zero.join(" "))?;
        for b in &self.blocks {
            let words: Vec<String> = b.iter().map(|(x, l)| format!("{x}^{l}")).collect();
            write!(f, "|{}", words.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for LabeledPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Every labeled partition of `{0} ∪ [N]` whose underlying set partition
/// passes `block_ok(block, is_zero_block)`.
fn labeled_partitions(
    n: u32,
    modulus: u32,
    block_ok: impl Fn(&[u32], bool) -> bool,
) -> Vec<LabeledPartition> {
    let ground: Vec<u32> = (0..=n).collect();
    let mut out = Vec::new();
    for p in partitions_with_blocks(&ground, |b| block_ok(b, b[0] == 0)) {
        let zero = p.blocks()[0].clone();
        let rest: Vec<Vec<u32>> = p.blocks()[1..].to_vec();
        let free: usize = rest.iter().map(|b| b.len() - 1).sum();
        let total = (modulus as u64).pow(free as u32);
        for code in 0..total {
            let mut c = code;
            let blocks = rest
                .iter()
                .map(|b| {
                    b.iter()
                        .enumerate()
                        .map(|(k, &x)| {
                            if k == 0 {
                                (x, 0)
                            } else {
                                let l = (c % modulus as u64) as u32;
                                c /= modulus as u64;
                                (x, l)
                            }
                        })
                        .collect()
                })
                .collect();
            out.push(LabeledPartition { zero: zero.clone(), blocks, modulus });
        }
    }
    out
}

/// `Q_N(Z_m)` as the transitive closure of its cover relation.
pub fn dowling_lattice(n: u32, modulus: u32) -> Result<FinitePoset<LabeledPartition>> {
    if n == 0 || modulus == 0 {
        return Err(Error::Parameter("need N >= 1 and m >= 1".into()));
    }
    FinitePoset::from_covers(LabeledPartition::finest(n, modulus), LabeledPartition::covers)
}

/// `Q_N(Z_m)` from the direct element list and the refinement test.
pub fn dowling_lattice_by_refinement(n: u32, modulus: u32) -> Result<FinitePoset<LabeledPartition>> {
    if n == 0 || modulus == 0 {
        return Err(Error::Parameter("need N >= 1 and m >= 1".into()));
    }
    FinitePoset::from_leq(labeled_partitions(n, modulus, |_, _| true), LabeledPartition::leq)
}

/// Block rule of the homogenized subposet: a nonsingleton zero block has odd
/// `min(B_0 \ {0})`; a nonsingleton labeled block has odd minimum and even maximum.
pub fn homogenized_block_ok(block: &[u32], is_zero: bool) -> bool {
    if block.len() == 1 {
        return true;
    }
    if is_zero {
        block[1] % 2 == 1
    } else {
        block[0] % 2 == 1 && block[block.len() - 1] % 2 == 0
    }
}

pub fn is_homogenized_element(p: &LabeledPartition) -> bool {
    homogenized_block_ok(&p.zero, true)
        && p.blocks.iter().all(|b| {
            let xs: Vec<u32> = b.iter().map(|&(x, _)| x).collect();
            homogenized_block_ok(&xs, false)
        })
}

/// The induced subposet of `Q_{2n-1}(Z_m)` cut out by [`homogenized_block_ok`],
/// assembled block by block.
pub fn homogenized_subposet(n: u32, modulus: u32) -> Result<FinitePoset<LabeledPartition>> {
    if n == 0 || modulus == 0 {
        return Err(Error::Parameter("need n >= 1 and m >= 1".into()));
    }
    let elements = labeled_partitions(2 * n - 1, modulus, homogenized_block_ok);
    FinitePoset::from_leq(elements, LabeledPartition::leq)
}

/// Gandhi polynomial `G_n(x)`: `G_1 = x^2`, `G_n = x^2 (G_{n-1}(x+1) - G_{n-1}(x))`.
///
/// `G_0 = x` is accepted as the zero-constant-term polynomial that the
/// recurrence maps to `G_1`.
pub fn gandhi(n: u32) -> IntPolynomial {
    let x2 = IntPolynomial::from_i64s(&[0, 0, 1]);
    let shift = IntPolynomial::from_i64s(&[1, 1]);
    let mut g = IntPolynomial::from_i64s(&[0, 1]);
    for _ in 0..n {
        g = &x2 * &(g.compose(&shift) - g.clone());
    }
    g
}

/// `m^(2n-1) G_k(1/m)` in exact arithmetic; integral when `deg G_k <= 2n-1`.
pub fn scaled_gandhi(k: u32, n: u32, m: u32) -> Rational {
    let g = gandhi(k);
    let bound = (2 * n - 1) as usize;
    let m_big = BigInt::from(m);
    match g.homogenized_eval(&BigInt::from(1), &m_big, bound) {
        Some(v) => Rational::from_integer(v),
        None => {
            let x = Rational::new(BigInt::from(1), m_big.clone());
            g.to_rational().eval(&x) * Rational::from_integer(m_big.pow(bound as u32))
        }
    }
}

/// Outcome of matching `|mu(0, 1)|` of `L^m_{2n-1}` against scaled Gandhi values.
#[derive(Clone, Debug, Serialize)]
pub struct GandhiFit {
    /// `k = n + offset` for every tested `(n, m)`, if a single offset works.
    pub offset: Option<i32>,
    pub rows: Vec<GandhiRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GandhiRow {
    pub n: u32,
    pub m: u32,
    pub mobius_top: String,
    /// Scaled Gandhi value for each candidate offset `-1, 0` (absent if `k < 0`).
    pub candidates: Vec<(i32, Option<String>)>,
}

/// Finds the index offset `k - n` in `{-1, 0}` for which
/// `|mu(0, 1)| = m^(2n-1) G_k(1/m)` holds at every listed `(n, m)`, using
/// brute-force Möbius values of [`homogenized_subposet`].
pub fn fit_gandhi_offset(params: &[(u32, u32)]) -> Result<GandhiFit> {
    let mut rows = Vec::new();
    let mut ok = [true, true];
    for &(n, m) in params {
        let p = homogenized_subposet(n, m)?;
        let top = p.top().ok_or_else(|| Error::Integrity("subposet has no top".into()))?;
        let mu = p.mobius_from_bottom(top).abs();
        let mut candidates = Vec::new();
        for (slot, offset) in [-1i32, 0].into_iter().enumerate() {
            let k = n as i32 + offset;
            if k < 0 {
                ok[slot] = false;
                candidates.push((offset, None));
                continue;
            }
            let v = scaled_gandhi(k as u32, n, m);
            if v != Rational::from_integer(mu.clone()) {
                ok[slot] = false;
            }
            candidates.push((offset, Some(v.to_string())));
        }
        rows.push(GandhiRow { n, m, mobius_top: mu.to_string(), candidates });
    }
    let offset = [-1i32, 0].into_iter().zip(ok).find(|&(_, good)| good).map(|(o, _)| o);
    Ok(GandhiFit { offset, rows })
}

/// Number of atoms of `Q_N(Z_m)`: `N + m N (N-1) / 2`.
pub fn dowling_atom_count(n: u32, m: u32) -> u64 {
    n as u64 + m as u64 * (n as u64 * (n as u64).saturating_sub(1)) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bond;
    use crate::poly::IntPolynomial;
    use num_traits::Zero;

    #[test]
    fn covers_of_the_worked_example() {
        let lam = LabeledPartition::parse("0 5|1^0 3^1|2^0 4^2", 3).unwrap();
        let got: Vec<String> = lam.covers().iter().map(|c| c.to_string()).collect();
        let want = [
            "0 1 3 5|2^0 4^2",
            "0 2 4 5|1^0 3^1",
            "0 5|1^0 2^0 3^1 4^2",
            "0 5|1^0 2^1 3^1 4^0",
            "0 5|1^0 2^2 3^1 4^1",
        ];
        assert_eq!(got.len(), 5);
        for w in want {
            assert!(got.contains(&w.to_string()), "missing {w}");
        }
    }

    #[test]
    fn finest_element_cover_count() {
        // N zero-merges plus m choices for each of the N(N-1)/2 pairs
        let f = LabeledPartition::finest(3, 2);
        assert_eq!(f.covers().len(), 3 + 2 * 3);
        assert_eq!(f.covers().len() as u64, dowling_atom_count(3, 2));
    }

    #[test]
    fn parse_rejects_bad_labels() {
        assert!(LabeledPartition::parse("0|1^1 2^0", 2).is_err());
        assert!(LabeledPartition::parse("0|1^0 2^2", 2).is_err());
        assert!(LabeledPartition::parse("1^0|2^0", 2).is_err());
    }

    #[test]
    fn refinement_order_matches_cover_closure() {
        for (n, m) in [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)] {
            let a = dowling_lattice(n, m).unwrap();
            let b = dowling_lattice_by_refinement(n, m).unwrap();
            assert!(a.same_as(&b), "Q_{n}(Z_{m})");
            assert_eq!(a.atoms().len() as u64, dowling_atom_count(n, m));
            for x in 0..a.len() {
                assert_eq!(a.rank(x), n as usize - a.element(x).labeled_blocks().len());
            }
        }
    }

    #[test]
    fn m_equals_one_is_a_partition_lattice() {
        for n in 1..=4u32 {
            let q = dowling_lattice(n, 1).unwrap();
            let complete = bond::Graph::complete(n + 1);
            let pi = bond::bond_lattice(&complete);
            assert_eq!(q.len(), pi.len());
            assert_eq!(q.characteristic_polynomial(), pi.characteristic_polynomial());
            // explicit isomorphism 0 -> N+1
            for x in 0..q.len() {
                for y in 0..q.len() {
                    let (px, py) = (
                        pi.index_of(&q.element(x).to_set_partition()).unwrap(),
                        pi.index_of(&q.element(y).to_set_partition()).unwrap(),
                    );
                    assert_eq!(q.leq(x, y), pi.leq(px, py));
                }
            }
        }
    }

    #[test]
    fn homogenized_subposet_at_m_one_is_gamma_subposet() {
        for n in 1..=3u32 {
            let l = homogenized_subposet(n, 1).unwrap();
            let g = bond::gamma_subposet(n);
            assert_eq!(l.len(), g.len());
            for x in 0..l.len() {
                for y in 0..l.len() {
                    let gx = g.index_of(&l.element(x).to_set_partition()).unwrap();
                    let gy = g.index_of(&l.element(y).to_set_partition()).unwrap();
                    assert_eq!(l.leq(x, y), g.leq(gx, gy));
                }
            }
        }
    }

    #[test]
    fn rank_one_subposet_is_a_single_hyperplane() {
        for m in 1..=4 {
            let l = homogenized_subposet(1, m).unwrap();
            assert_eq!(l.characteristic_polynomial(), IntPolynomial::from_i64s(&[-1, 1]));
        }
    }

    #[test]
    fn gandhi_polynomials() {
        assert_eq!(gandhi(1), IntPolynomial::from_i64s(&[0, 0, 1]));
        assert_eq!(gandhi(2), IntPolynomial::from_i64s(&[0, 0, 1, 2]));
        assert_eq!(gandhi(2).eval(&BigInt::from(1)), BigInt::from(3));
        // G_n(1) = g_{n+1}
        let g: Vec<BigInt> = (1..=5).map(|n| gandhi(n).eval(&BigInt::from(1))).collect();
        let want: Vec<BigInt> = [1, 3, 17, 155, 2073].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(g, want);
    }

    #[test]
    fn scaled_gandhi_values() {
        assert_eq!(scaled_gandhi(1, 2, 2), Rational::from_integer(BigInt::from(2)));
        assert_eq!(scaled_gandhi(2, 3, 3), Rational::from_integer(BigInt::from(45)));
        // degree 2 > 2n-1 = 1: m * (1/m)^2 = 1/m
        assert_eq!(scaled_gandhi(1, 1, 3), Rational::new(BigInt::from(1), BigInt::from(3)));
        assert!(!scaled_gandhi(0, 1, 3).is_zero());
    }
}
