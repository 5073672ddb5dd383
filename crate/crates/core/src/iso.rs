//! Isomorphism search between atomistic lattices (every element is the join
//! of the atoms below it), such as bond lattices and geometric lattices of
//! central arrangements.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

struct AtomView {
    atoms: Vec<usize>,
    /// atom set of every element, bit `k` for `atoms[k]`
    sets: Vec<u128>,
    by_set: HashMap<u128, usize>,
    /// atom set of the join of atoms `i` and `j`
    pair: Vec<Vec<u128>>,
    signature: Vec<Vec<usize>>,
}

impl AtomView {
    fn new<K: Clone + Eq + Hash>(p: &FinitePoset<K>) -> Result<Self> {
        let atoms = p.atoms();
        if atoms.len() > 128 {
            return Err(Error::Unsupported(format!("{} atoms exceed the search limit", atoms.len())));
        }
        let sets: Vec<u128> = (0..p.len())
            .map(|x| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| p.leq(a, x))
                    .fold(0u128, |s, (k, _)| s | 1 << k)
            })
            .collect();
        let mut by_set = HashMap::new();
        for (x, &s) in sets.iter().enumerate() {
            if by_set.insert(s, x).is_some() {
                return Err(Error::Unsupported("poset is not atomistic".into()));
            }
        }
        for x in 0..p.len() {
            for y in 0..p.len() {
                if p.leq(x, y) != (sets[x] & !sets[y] == 0) {
                    return Err(Error::Unsupported("order is not atom-set inclusion".into()));
                }
            }
        }
        let k = atoms.len();
        let mut pair = vec![vec![0u128; k]; k];
        for i in 0..k {
            for j in 0..k {
                let want = (1u128 << i) | (1u128 << j);
                let uppers: Vec<u128> = sets.iter().copied().filter(|s| s & want == want).collect();
                let least = uppers
                    .iter()
                    .copied()
                    .filter(|&s| uppers.iter().all(|&t| s & !t == 0))
                    .collect::<Vec<_>>();
                match least.as_slice() {
                    [s] => pair[i][j] = *s,
                    _ => return Err(Error::Unsupported("atoms without a unique join".into())),
                }
            }
        }
        let signature = (0..k)
            .map(|i| {
                let mut sig: Vec<usize> = sets
                    .iter()
                    .enumerate()
                    .filter(|(_, &s)| s >> i & 1 == 1)
                    .map(|(x, _)| p.rank(x))
                    .collect();
                sig.sort_unstable();
                let mut sizes: Vec<usize> = pair[i].iter().map(|s| s.count_ones() as usize).collect();
                sizes.sort_unstable();
                sig.push(usize::MAX);
                sig.extend(sizes);
                sig
            })
            .collect();
        Ok(AtomView { atoms, sets, by_set, pair, signature })
    }
}

fn image(set: u128, phi: &[usize]) -> u128 {
    let mut out = 0u128;
    let mut s = set;
    while s != 0 {
        let k = s.trailing_zeros() as usize;
        out |= 1 << phi[k];
        s &= s - 1;
    }
    out
}

/// An order isomorphism `p -> q` as a vector of element indices, or `None`
/// if the lattices are not isomorphic. Both must be atomistic with at most
/// 128 atoms.
pub fn find_isomorphism<K: Clone + Eq + Hash, L: Clone + Eq + Hash>(
    p: &FinitePoset<K>,
    q: &FinitePoset<L>,
) -> Result<Option<Vec<usize>>> {
    if p.len() != q.len() || p.rank_sizes() != q.rank_sizes() {
        return Ok(None);
    }
    let a = AtomView::new(p)?;
    let b = AtomView::new(q)?;
    let k = a.atoms.len();
    if k != b.atoms.len() {
        return Ok(None);
    }
    let mut phi: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];

    fn extend(a: &AtomView, b: &AtomView, phi: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = phi.len();
        if i == a.atoms.len() {
            return a.sets.iter().all(|&s| b.by_set.contains_key(&image(s, phi)));
        }
        for j in 0..b.atoms.len() {
            if used[j] || a.signature[i] != b.signature[j] {
                continue;
            }
            let ok = (0..i).all(|h| {
                let sa = a.pair[h][i];
                let sb = b.pair[phi[h]][j];
                sa.count_ones() == sb.count_ones()
                    && (0..i).all(|c| (sa >> c & 1 == 1) == (sb >> phi[c] & 1 == 1))
            });
            if !ok {
                continue;
            }
            phi.push(j);
            used[j] = true;
            if extend(a, b, phi, used) {
                return true;
            }
            phi.pop();
            used[j] = false;
        }
        false
    }

    if !extend(&a, &b, &mut phi, &mut used) {
        return Ok(None);
    }
    let map: Vec<usize> = a.sets.iter().map(|&s| b.by_set[&image(s, &phi)]).collect();
    let ok = (0..p.len()).all(|x| (0..p.len()).all(|y| p.leq(x, y) == q.leq(map[x], map[y])));
    if !ok {
        return Err(Error::Integrity("atom bijection did not induce an order isomorphism".into()));
    }
    Ok(Some(map))
}

pub fn is_isomorphic<K: Clone + Eq + Hash, L: Clone + Eq + Hash>(p: &FinitePoset<K>, q: &FinitePoset<L>) -> Result<bool> {
    Ok(find_isomorphism(p, q)?.is_some())
}

/// Whether `f` maps `p` onto `q` bijectively, preserving and reflecting order.
pub fn is_isomorphism_by<K: Clone + Eq + Hash, L: Clone + Eq + Hash>(
    p: &FinitePoset<K>,
    q: &FinitePoset<L>,
    f: impl Fn(&K) -> L,
) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let Some(map) = p.elements().iter().map(|x| q.index_of(&f(x))).collect::<Option<Vec<usize>>>() else {
        return false;
    };
    let mut seen = vec![false; q.len()];
    for &y in &map {
        if std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..p.len()).all(|x| (0..p.len()).all(|y| p.leq(x, y) == q.leq(map[x], map[y])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bond::{bond_lattice, gamma_graph, Graph};

    fn boolean(n: usize) -> FinitePoset<u32> {
        FinitePoset::from_leq((0..1u32 << n).collect(), |a, b| a & !b == 0).unwrap()
    }

    #[test]
    fn boolean_lattices() {
        assert!(is_isomorphic(&boolean(3), &bond_lattice(&gamma_graph(2))).unwrap());
        assert!(!is_isomorphic(&boolean(3), &bond_lattice(&Graph::complete(3))).unwrap());
        let map = find_isomorphism(&boolean(2), &boolean(2)).unwrap().unwrap();
        assert_eq!(map[0], 0);
    }

    #[test]
    fn same_size_non_isomorphic_bond_lattices() {
        // path and star on four vertices: both trees, so both boolean
        let path = Graph::new(&[1, 2, 3, 4], &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let star = Graph::new(&[1, 2, 3, 4], &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(is_isomorphic(&bond_lattice(&path), &bond_lattice(&star)).unwrap());
        // equal rank sizes, but one atom lies on three lines in the second
        let sets = |lines: &[u32]| {
            let mut v = vec![0u32, 1, 2, 4, 8, 15];
            v.extend_from_slice(lines);
            FinitePoset::from_leq(v, |a, b| a & !b == 0).unwrap()
        };
        let (a, b) = (sets(&[3, 12, 5, 10]), sets(&[3, 5, 9, 6]));
        assert_eq!(a.rank_sizes(), b.rank_sizes());
        assert!(!is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn rejects_non_atomistic() {
        let chain = FinitePoset::from_leq(vec![0u32, 1, 2], |a, b| a <= b).unwrap();
        assert!(matches!(find_isomorphism(&chain, &chain), Err(Error::Unsupported(_))));
    }
}
