//! Dumont permutations, D-permutations, D-cycles and their `m`-labeled
//! versions, enumerated by depth-first assignment with parity pruning.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::dowling::LabeledPartition;
use crate::error::{Error, Result};
use crate::partition::SetPartition;

/// A permutation of a finite set of positive integers, kept in canonical
/// cycle form: cycles ordered by their minima, each written from its minimum,
/// except the cycle through the largest ground element, which is written
/// ending at that element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    ground: Vec<u32>,
    cycles: Vec<Vec<u32>>,
}

impl Permutation {
    /// Elements of `ground` not mentioned in `cycles` become fixed points.
    pub fn from_cycles(ground: &[u32], cycles: Vec<Vec<u32>>) -> Result<Self> {
        let mut ground = ground.to_vec();
        ground.sort_unstable();
        ground.dedup();
        let mut seen = std::collections::HashSet::new();
        for c in &cycles {
            if c.is_empty() {
                return Err(Error::Parameter("empty cycle".into()));
            }
            for x in c {
                if ground.binary_search(x).is_err() {
                    return Err(Error::Parameter(format!("{x} is not in the ground set")));
                }
                if !seen.insert(*x) {
                    return Err(Error::Parameter(format!("{x} appears in two cycles")));
                }
            }
        }
        let mut cycles = cycles;
        for &g in &ground {
            if !seen.contains(&g) {
                cycles.push(vec![g]);
            }
        }
        Ok(Self::canonical(ground, cycles))
    }

    pub fn identity(ground: &[u32]) -> Self {
        Self::from_cycles(ground, Vec::new()).expect("identity is well formed")
    }

    /// `images[k]` is the image of the `k`-th smallest ground element.
    pub fn from_images(ground: &[u32], images: &[u32]) -> Result<Self> {
        let mut sorted = ground.to_vec();
        sorted.sort_unstable();
        if images.len() != sorted.len() {
            return Err(Error::Parameter("image list has the wrong length".into()));
        }
        let mut check = images.to_vec();
        check.sort_unstable();
        if check != sorted {
            return Err(Error::Parameter("images are not a rearrangement of the ground set".into()));
        }
        let pos = |x: u32| sorted.binary_search(&x).expect("image in ground");
        let mut done = vec![false; sorted.len()];
        let mut cycles = Vec::new();
        for start in 0..sorted.len() {
            if done[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut k = start;
            while !done[k] {
                done[k] = true;
                cyc.push(sorted[k]);
                k = pos(images[k]);
            }
            cycles.push(cyc);
        }
        Ok(Self::canonical(sorted, cycles))
    }

    fn canonical(ground: Vec<u32>, mut cycles: Vec<Vec<u32>>) -> Self {
        let top = ground.last().copied();
        for c in &mut cycles {
            let anchor = if top.is_some_and(|t| c.contains(&t)) {
                let p = c.iter().position(|&x| Some(x) == top).unwrap();
                (p + 1) % c.len()
            } else {
                c.iter().enumerate().min_by_key(|(_, &x)| x).unwrap().0
            };
            c.rotate_left(anchor);
        }
        cycles.sort_by_key(|c| *c.iter().min().unwrap());
        Permutation { ground, cycles }
    }

    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// `sigma(i)`; panics if `i` is not in the ground set.
    pub fn image(&self, i: u32) -> u32 {
        for c in &self.cycles {
            if let Some(p) = c.iter().position(|&x| x == i) {
                return c[(p + 1) % c.len()];
            }
        }
        panic!("{i} is not in the ground set")
    }

    /// Images of the ground elements in increasing order.
    pub fn one_line(&self) -> Vec<u32> {
        self.ground.iter().map(|&i| self.image(i)).collect()
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        self.cycles
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect()
    }

    /// Parses cycle notation such as `"(1,3,4,2)(5)"` over an explicit ground set.
    pub fn parse_on(s: &str, ground: &[u32]) -> Result<Self> {
        Self::from_cycles(ground, parse_cycles(s)?)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<u32>>> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    for part in s.split(')') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let body = part
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {part:?}")))?;
        let cyc = body
            .split([',', ' '])
            .filter(|w| !w.is_empty())
            .map(|w| w.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {w:?}"))))
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cyc);
    }
    Ok(cycles)
}

/// The ground set is the set of elements written; list fixed points explicitly.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let ground: Vec<u32> = cycles.iter().flatten().copied().collect();
        Self::from_cycles(&ground, cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &self.cycles {
            let words: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", words.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A D-permutation on `[2n]` with labels in `Z_m` on its entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPermutation {
    base: Permutation,
    /// `labels[e - 1]` is the label of element `e`.
    labels: Vec<u32>,
    modulus: u32,
}

impl LabeledPermutation {
    /// Checks the label range and the forced zero labels.
    pub fn new(base: Permutation, labels: Vec<u32>, modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Parameter("modulus must be at least 1".into()));
        }
        require_even_interval(base.ground())?;
        if labels.len() != base.len() {
            return Err(Error::Parameter("one label per element is required".into()));
        }
        if labels.iter().any(|&l| l >= modulus) {
            return Err(Error::Parameter(format!("labels must lie in 0..{modulus}")));
        }
        if !is_d_permutation(&base) {
            return Err(Error::Domain(format!("{base} is not a D-permutation")));
        }
        for e in forced_zero_positions(&base) {
            if labels[e as usize - 1] != 0 {
                return Err(Error::Domain(format!("element {e} must be labeled 0")));
            }
        }
        Ok(LabeledPermutation { base, labels, modulus })
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn label(&self, e: u32) -> u32 {
        self.labels[e as usize - 1]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Parses `"(1^0,3^1,4^1,2^2)(5^0)"`; a missing `^l` means label 0.
    pub fn parse(s: &str, modulus: u32) -> Result<Self> {
        let spaced = s.replace('(', " ( ").replace(')', " ) ").replace(',', " ");
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut labels = BTreeMap::new();
        let mut open = false;
        for tok in spaced.split_whitespace() {
            match tok {
                "(" if !open => {
                    open = true;
                    cycles.push(Vec::new());
                }
                ")" if open => open = false,
                _ if open => {
                    let (e, l) = tok.split_once('^').unwrap_or((tok, "0"));
                    let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad entry {e:?}")))?;
                    let l: u32 = l.parse().map_err(|_| Error::Parse(format!("bad label {l:?}")))?;
                    labels.insert(e, l);
                    cycles.last_mut().expect("open cycle").push(e);
                }
                _ => return Err(Error::Parse(format!("unexpected {tok:?} in {s:?}"))),
            }
        }
        if open {
            return Err(Error::Parse(format!("unclosed cycle in {s:?}")));
        }
        let ground: Vec<u32> = cycles.iter().flatten().copied().collect();
        let base = Permutation::from_cycles(&ground, cycles)?;
        let labels = base.ground().iter().map(|e| labels[e]).collect();
        Self::new(base, labels, modulus)
    }
}

impl fmt::Display for LabeledPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &self.base.cycles {
            let words: Vec<String> = c.iter().map(|&e| format!("{e}^{}", self.label(e))).collect();
            write!(f, "({})", words.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for LabeledPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Elements whose label is forced to 0: cycle minima, and the right-to-left
/// minima of the word of the cycle ending at the largest element.
pub fn forced_zero_positions(sigma: &Permutation) -> Vec<u32> {
    let top = sigma.ground.last().copied();
    let mut forced = Vec::new();
    for c in &sigma.cycles {
        forced.push(*c.iter().min().unwrap());
        if top.is_some_and(|t| c.last() == Some(&t)) {
            let mut running = u32::MAX;
            for &x in c.iter().rev() {
                if x < running {
                    running = x;
                    forced.push(x);
                }
            }
        }
    }
    forced.sort_unstable();
    forced.dedup();
    forced
}

pub fn is_d_permutation(sigma: &Permutation) -> bool {
    sigma.ground.iter().all(|&i| {
        let s = sigma.image(i);
        if i % 2 == 1 {
            i <= s
        } else {
            i >= s
        }
    })
}

fn require_even_interval(ground: &[u32]) -> Result<u32> {
    let k = ground.len() as u32;
    if k % 2 != 0 || ground.iter().enumerate().any(|(i, &x)| x != i as u32 + 1) {
        return Err(Error::Parameter(format!(
            "ground set must be [2n], got {ground:?}"
        )));
    }
    Ok(k / 2)
}

pub fn is_dumont(sigma: &Permutation) -> Result<bool> {
    require_even_interval(&sigma.ground)?;
    Ok(sigma.ground.iter().all(|&i| {
        let s = sigma.image(i);
        if i % 2 == 0 {
            i > s
        } else {
            i <= s
        }
    }))
}

pub fn is_dumont_derangement(sigma: &Permutation) -> Result<bool> {
    Ok(is_dumont(sigma)? && sigma.fixed_points().is_empty())
}

/// Permutation classes that can be enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Dumont,
    DumontDerangement,
    Dperm,
    Dcycle,
    LabeledDperm,
    LabeledDcycle,
    DescentClass,
}

impl Family {
    pub fn is_labeled(self) -> bool {
        matches!(self, Family::LabeledDperm | Family::LabeledDcycle)
    }

    fn single_cycle(self) -> bool {
        matches!(self, Family::Dcycle | Family::LabeledDcycle)
    }

    fn allows(self, i: u32, s: u32) -> bool {
        match self {
            Family::Dumont => if i % 2 == 0 { s < i } else { s >= i },
            Family::DumontDerangement => if i % 2 == 0 { s < i } else { s > i },
            _ => if i % 2 == 1 { s >= i } else { s <= i },
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace('-', "_").as_str() {
            "dumont" => Family::Dumont,
            "dumont_derangement" => Family::DumontDerangement,
            "dperm" => Family::Dperm,
            "dcycle" => Family::Dcycle,
            "labeled_dperm" => Family::LabeledDperm,
            "labeled_dcycle" => Family::LabeledDcycle,
            "descent_class" | "descent" => Family::DescentClass,
            other => return Err(Error::Parameter(format!("unknown family {other:?}"))),
        })
    }
}

/// Depth-first assignment of images in increasing order of preimage.
/// Calls `visit` with the one-line images (as ground indices) of every member.
struct Search<'a> {
    ground: &'a [u32],
    allowed: Vec<Vec<usize>>,
    single_cycle: bool,
}

impl<'a> Search<'a> {
    fn new(ground: &'a [u32], family: Family) -> Self {
        let allowed = ground
            .iter()
            .map(|&i| {
                (0..ground.len())
                    .filter(|&j| family.allows(i, ground[j]))
                    .collect()
            })
            .collect();
        Search { ground, allowed, single_cycle: family.single_cycle() }
    }

    fn closes_cycle(&self, img: &[usize], i: usize, j: usize) -> bool {
        let mut cur = j;
        while cur < i {
            cur = img[cur];
        }
        cur == i
    }

    fn dfs(&self, i: usize, img: &mut Vec<usize>, used: &mut Vec<bool>, visit: &mut impl FnMut(&[usize])) {
        let k = self.ground.len();
        if i == k {
            visit(img);
            return;
        }
        for &j in &self.allowed[i] {
            if used[j] {
                continue;
            }
            if self.single_cycle && i + 1 < k && self.closes_cycle(img, i, j) {
                continue;
            }
            used[j] = true;
            img.push(j);
            self.dfs(i + 1, img, used, visit);
            img.pop();
            used[j] = false;
        }
    }

    /// Runs the search with the first assignment split across rayon workers;
    /// results are reassembled in lexicographic order.
    fn collect<T: Send>(&self, map: impl Fn(&[usize]) -> T + Sync) -> Vec<T> {
        let k = self.ground.len();
        if k == 0 {
            return vec![map(&[])];
        }
        self.allowed[0]
            .par_iter()
            .map(|&j| {
                let mut out = Vec::new();
                if self.single_cycle && k > 1 && j == 0 {
                    return out;
                }
                let mut used = vec![false; k];
                used[j] = true;
                let mut img = vec![j];
                self.dfs(1, &mut img, &mut used, &mut |v| out.push(map(v)));
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }

    fn count(&self) -> u64 {
        let k = self.ground.len();
        if k == 0 {
            return 1;
        }
        self.allowed[0]
            .par_iter()
            .map(|&j| {
                if self.single_cycle && k > 1 && j == 0 {
                    return 0;
                }
                let mut n = 0u64;
                let mut used = vec![false; k];
                used[j] = true;
                let mut img = vec![j];
                self.dfs(1, &mut img, &mut used, &mut |_| n += 1);
                n
            })
            .sum()
    }
}

fn check_ground(family: Family, ground: &[u32]) -> Result<Vec<u32>> {
    let mut g = ground.to_vec();
    g.sort_unstable();
    if g.windows(2).any(|w| w[0] == w[1]) || g.first() == Some(&0) {
        return Err(Error::Parameter("ground must be distinct positive integers".into()));
    }
    match family {
        Family::Dperm | Family::Dcycle => {}
        Family::DescentClass => {
            return Err(Error::Parameter(
                "descent class is counted with count_descent_class".into(),
            ))
        }
        _ => {
            require_even_interval(&g)?;
        }
    }
    Ok(g)
}

/// Members of an unlabeled family on `ground`, in lexicographic order of
/// one-line notation.
pub fn enumerate(family: Family, ground: &[u32]) -> Result<Vec<Permutation>> {
    if family.is_labeled() {
        return Err(Error::Parameter("use enumerate_labeled for labeled families".into()));
    }
    let g = check_ground(family, ground)?;
    let search = Search::new(&g, family);
    Ok(search.collect(|img| {
        let images: Vec<u32> = img.iter().map(|&j| g[j]).collect();
        Permutation::from_images(&g, &images).expect("search yields bijections")
    }))
}

/// Size of an unlabeled family without materializing it.
pub fn count(family: Family, ground: &[u32]) -> Result<u64> {
    if family.is_labeled() {
        return Err(Error::Parameter("use count_table for labeled families".into()));
    }
    let g = check_ground(family, ground)?;
    Ok(Search::new(&g, family).count())
}

/// All labelings of every member of `LabeledDperm` or `LabeledDcycle` on
/// `[2n]`, ordered by one-line notation and then by label vector.
pub fn enumerate_labeled(family: Family, n: u32, modulus: u32) -> Result<Vec<LabeledPermutation>> {
    let base_family = match family {
        Family::LabeledDperm => Family::Dperm,
        Family::LabeledDcycle => Family::Dcycle,
        _ => return Err(Error::Parameter(format!("{family:?} is not a labeled family"))),
    };
    if modulus == 0 {
        return Err(Error::Parameter("modulus must be at least 1".into()));
    }
    let ground: Vec<u32> = (1..=2 * n).collect();
    let mut out = Vec::new();
    for base in enumerate(base_family, &ground)? {
        let forced = forced_zero_positions(&base);
        let free: Vec<u32> = ground.iter().copied().filter(|e| !forced.contains(e)).collect();
        let mut labels = vec![0u32; ground.len()];
        loop {
            out.push(LabeledPermutation { base: base.clone(), labels: labels.clone(), modulus });
            // odometer over the free positions, last position fastest
            let mut advanced = false;
            for &e in free.iter().rev() {
                let slot = &mut labels[e as usize - 1];
                if *slot + 1 < modulus {
                    *slot += 1;
                    advanced = true;
                    break;
                }
                *slot = 0;
            }
            if !advanced {
                break;
            }
        }
    }
    Ok(out)
}

/// Number of free (unforced) label positions of a D-permutation.
pub fn free_label_positions(sigma: &Permutation) -> usize {
    sigma.len() - forced_zero_positions(sigma).len()
}

/// Counts of a family, optionally refined by number of cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub family: Family,
    pub n: u32,
    pub m: u32,
    #[serde(serialize_with = "crate::perm::ser_big")]
    pub count: BigInt,
    #[serde(serialize_with = "crate::perm::ser_big_map")]
    pub by_cycles: Option<BTreeMap<usize, BigInt>>,
}

pub(crate) fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn ser_big_map<S: serde::Serializer>(
    v: &Option<BTreeMap<usize, BigInt>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(map) => s.collect_map(map.iter().map(|(k, c)| (k.to_string(), c.to_string()))),
    }
}

/// Count table for `family` on `[2n]` (Dumont: `[2n]`; descent class: `S_2n`).
/// D-permutation families are refined by cycle count; labeled families
/// weight each permutation by `m^(free positions)`.
pub fn count_table(family: Family, n: u32, m: u32) -> Result<CountTable> {
    if m == 0 {
        return Err(Error::Parameter("modulus must be at least 1".into()));
    }
    let ground: Vec<u32> = (1..=2 * n).collect();
    let (count, by_cycles) = match family {
        Family::Dumont | Family::DumontDerangement => {
            (BigInt::from(count(family, &ground)?), None)
        }
        Family::DescentClass => (BigInt::from(count_descent_class(n)), None),
        Family::Dperm | Family::Dcycle | Family::LabeledDperm | Family::LabeledDcycle => {
            let base = if family.single_cycle() { Family::Dcycle } else { Family::Dperm };
            let weight_m = if family.is_labeled() { m } else { 1 };
            let mut map: BTreeMap<usize, BigInt> = BTreeMap::new();
            for sigma in enumerate(base, &ground)? {
                let w = BigInt::from(weight_m).pow(free_label_positions(&sigma) as u32);
                *map.entry(sigma.num_cycles()).or_insert_with(BigInt::zero) += w;
            }
            (map.values().sum(), Some(map))
        }
    };
    Ok(CountTable { family, n, m, count, by_cycles })
}

/// `g_n`: Dumont permutations on `[2n-2]` (`g_1 = 1` counts the empty one).
pub fn genocchi(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Parameter("genocchi is defined for n >= 1".into()));
    }
    let ground: Vec<u32> = (1..=2 * n - 2).collect();
    Ok(BigInt::from(count(Family::Dumont, &ground)?))
}

/// `h_n`: Dumont derangements on `[2n+2]`.
pub fn median_genocchi(n: u32) -> BigInt {
    let ground: Vec<u32> = (1..=2 * n + 2).collect();
    BigInt::from(count(Family::DumontDerangement, &ground).expect("ground is [2n+2]"))
}

pub fn cycle_support(sigma: &Permutation) -> SetPartition {
    SetPartition::new(sigma.cycles.clone()).expect("cycles are disjoint")
}

/// Cycle support in the Dowling lattice: the cycle through `2n` becomes the
/// zero block with `2n` replaced by `0`; other cycles keep their labels.
pub fn labeled_cycle_support(sigma: &LabeledPermutation) -> LabeledPartition {
    let top = *sigma.base.ground.last().expect("nonempty ground");
    let mut zero = vec![0u32];
    let mut blocks = Vec::new();
    for c in &sigma.base.cycles {
        if c.contains(&top) {
            zero.extend(c.iter().copied().filter(|&x| x != top));
        } else {
            blocks.push(c.iter().map(|&e| (e, sigma.label(e))).collect());
        }
    }
    LabeledPartition::new(zero, blocks, sigma.modulus).expect("cycle support is a valid labeled partition")
}

/// Permutations of `[2n]` whose descents `w_i > w_{i+1}` all have `w_i` even
/// and `w_{i+1}` odd.
pub fn count_descent_class(n: u32) -> u64 {
    fn go(k: u32, last: u32, used: &mut Vec<bool>, placed: u32) -> u64 {
        if placed == k {
            return 1;
        }
        let mut total = 0;
        for w in 1..=k {
            if used[w as usize] {
                continue;
            }
            if w < last && !(last % 2 == 0 && w % 2 == 1) {
                continue;
            }
            used[w as usize] = true;
            total += go(k, w, used, placed + 1);
            used[w as usize] = false;
        }
        total
    }
    let k = 2 * n;
    let mut used = vec![false; k as usize + 1];
    go(k, 0, &mut used, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: u32) -> Permutation {
        Permutation::parse_on(s, &(1..=n).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn canonical_form_ends_top_cycle_at_max() {
        let p = perm("(1,3,4,2)", 4);
        assert_eq!(p.to_string(), "(2,1,3,4)");
        assert_eq!(p.one_line(), vec![3, 1, 4, 2]);
        let q = perm("(3,7,8,5,9,10)(1,4,2)(6)", 10);
        assert_eq!(q.to_string(), "(1,4,2)(3,7,8,5,9,10)(6)");
        assert_eq!(Permutation::from_images(q.ground(), &q.one_line()).unwrap(), q);
    }

    #[test]
    fn d_permutation_examples() {
        assert!(is_d_permutation(&Permutation::identity(&[1, 2, 3, 4])));
        assert!(is_d_permutation(&perm("(1,3,4,2)", 4)));
        assert!(!is_d_permutation(&perm("(1,2,4)(3)", 4)));
    }

    #[test]
    fn dumont_examples() {
        let a = perm("(1,2)(3,4)", 4);
        assert!(is_dumont(&a).unwrap());
        let b = perm("(1,4,2)(3)", 4);
        assert!(is_dumont(&b).unwrap());
        assert!(!is_dumont_derangement(&b).unwrap());
        assert!(is_dumont_derangement(&perm("(1,2)", 2)).unwrap());
        let odd: Permutation = "(1,2)(3)".parse().unwrap();
        assert!(matches!(is_dumont(&odd), Err(Error::Parameter(_))));
    }

    #[test]
    fn dumont_permutations_on_four() {
        let got: Vec<String> = enumerate(Family::Dumont, &[1, 2, 3, 4])
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let mut want: Vec<String> = ["(1,2)(3,4)", "(1,3,4,2)", "(1,4,2)(3)"]
            .iter()
            .map(|s| perm(s, 4).to_string())
            .collect();
        let mut sorted = got.clone();
        sorted.sort();
        want.sort();
        assert_eq!(sorted, want);
    }

    #[test]
    fn dumont_derangements_on_six() {
        let got = enumerate(Family::DumontDerangement, &[1, 2, 3, 4, 5, 6]).unwrap();
        let listed = [
            "(1,3,5,6,4,2)", "(1,3,4,2)(5,6)", "(1,2)(3,4)(5,6)", "(1,2)(3,5,6,4)",
            "(1,4,3,5,6,2)", "(1,5,6,3,4,2)", "(1,5,6,2)(3,4)", "(1,4,2)(3,5,6)",
        ];
        assert_eq!(got.len(), 8);
        for s in listed {
            assert!(got.contains(&perm(s, 6)), "{s} missing");
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_checked() {
        let all = enumerate(Family::Dperm, &[1, 2, 3, 4]).unwrap();
        let lines: Vec<Vec<u32>> = all.iter().map(Permutation::one_line).collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
        assert!(matches!(enumerate(Family::Dumont, &[1, 2, 3]), Err(Error::Parameter(_))));
        assert_eq!(enumerate(Family::Dcycle, &[1, 2, 3, 4]).unwrap(), vec![perm("(1,3,4,2)", 4)]);
    }

    #[test]
    fn d_cycles_on_arbitrary_ground() {
        // on {2}: the fixed point; on {1, 3}: no D-cycle (3 would need 3 <= sigma(3))
        assert_eq!(count(Family::Dcycle, &[2]).unwrap(), 1);
        assert_eq!(count(Family::Dcycle, &[1, 3]).unwrap(), 0);
        assert_eq!(count(Family::Dcycle, &[3, 4]).unwrap(), 1);
    }

    #[test]
    fn genocchi_small_values() {
        assert_eq!(genocchi(1).unwrap(), BigInt::from(1));
        assert_eq!(genocchi(3).unwrap(), BigInt::from(3));
        assert_eq!(median_genocchi(0), BigInt::from(1));
        assert_eq!(median_genocchi(2), BigInt::from(8));
        assert!(genocchi(0).is_err());
    }

    #[test]
    fn cycle_supports() {
        let p = perm("(1,7,2,4)(5)(6,8,9,3)", 9);
        assert_eq!(cycle_support(&p), "1247|5|3689".parse().unwrap());
        assert_eq!(cycle_support(&Permutation::identity(&[1, 2, 3, 4])), "1|2|3|4".parse().unwrap());
        assert_eq!(cycle_support(&perm("(1,3,4,2)", 4)), "1234".parse().unwrap());
    }

    #[test]
    fn labeled_cycle_supports() {
        let s = LabeledPermutation::parse("(1^0,3^1,4^1,2^2)(5^0)(6^0)(7^0,8^0)", 3).unwrap();
        assert_eq!(labeled_cycle_support(&s).to_string(), "0 7|1^0 2^2 3^1 4^1|5^0|6^0");
        let id = LabeledPermutation::parse("(1)(2)(3)(4)", 2).unwrap();
        assert_eq!(labeled_cycle_support(&id).to_string(), "0|1^0|2^0|3^0");
        let c = LabeledPermutation::parse("(2^0,1^0,3^0,4^0)", 2).unwrap();
        assert_eq!(labeled_cycle_support(&c).to_string(), "0 1 2 3");
    }

    #[test]
    fn forced_labels() {
        // right-to-left minima 10, 9, 5, 3 and cycle minima 1, 3, 6
        let p = perm("(3,7,8,5,9,10)(1,4,2)(6)", 10);
        assert_eq!(forced_zero_positions(&p), vec![1, 3, 5, 6, 9, 10]);
        assert!(LabeledPermutation::parse("(2^1,1^0,3^0,4^0)", 2).is_ok());
        assert!(matches!(
            LabeledPermutation::parse("(2^0,1^0,3^1,4^0)", 2),
            Err(Error::Domain(_))
        ));
        assert!(LabeledPermutation::parse("(2^2,1,3,4)", 2).is_err());
    }

    #[test]
    fn labeled_counts_on_four() {
        assert_eq!(enumerate_labeled(Family::LabeledDperm, 2, 2).unwrap().len(), 12);
        let t = count_table(Family::LabeledDperm, 2, 2).unwrap();
        assert_eq!(t.count, BigInt::from(12));
        assert_eq!(t.by_cycles.as_ref().unwrap().values().sum::<BigInt>(), t.count);
        let one = enumerate_labeled(Family::LabeledDperm, 3, 1).unwrap();
        assert_eq!(one.len(), enumerate(Family::Dperm, &[1, 2, 3, 4, 5, 6]).unwrap().len());
        assert!(one.iter().all(|s| s.labels().iter().all(|&l| l == 0)));
    }

    #[test]
    fn descent_class_small() {
        assert_eq!(count_descent_class(1), 2);
        assert_eq!(count_descent_class(2), 8);
        assert_eq!(count_descent_class(3), 56);
    }

    #[test]
    fn descent_class_matches_brute_force_filter() {
        // independent check: filter every permutation of [6]
        fn perms(k: u32) -> Vec<Vec<u32>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    out.push(q);
                }
            }
            out
        }
        let ok = |w: &Vec<u32>| {
            w.windows(2).all(|p| p[0] < p[1] || (p[0] % 2 == 0 && p[1] % 2 == 1))
        };
        assert_eq!(perms(6).iter().filter(|w| ok(w)).count() as u64, count_descent_class(3));
    }
}
