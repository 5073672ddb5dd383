//! Set partitions of finite sets of positive integers.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// A partition with blocks sorted internally and ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Canonicalizes `blocks`; rejects empty blocks and overlaps.
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Parameter("empty block in partition".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if !seen.insert(x) {
                    return Err(Error::Parameter(format!("element {x} in two blocks")));
                }
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// The partition into singletons.
    pub fn discrete(ground: &[u32]) -> Self {
        SetPartition::new(ground.iter().map(|&x| vec![x]).collect()).expect("distinct ground")
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn block_index(&self) -> HashMap<u32, usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.iter().map(move |&x| (x, i)))
            .collect()
    }

    /// Refinement order on partitions of the same ground set.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        if self.blocks.len() < coarser.blocks.len() {
            return false;
        }
        let idx = coarser.block_index();
        self.blocks.iter().all(|b| {
            let Some(&first) = idx.get(&b[0]) else {
                return false;
            };
            b.iter().all(|x| idx.get(x) == Some(&first))
        })
    }

    /// Block number of each element, indexed by element value (`u32::MAX`
    /// for values outside the ground set).
    fn label_table(&self) -> Vec<u32> {
        let top = self.blocks.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut t = vec![u32::MAX; top + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                t[x as usize] = i as u32;
            }
        }
        t
    }

    /// Applies an element relabeling; `f` must be injective on the ground set.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> SetPartition {
        SetPartition::new(
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&x| f(x)).collect())
                .collect(),
        )
        .expect("relabeling must be injective")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            let words: Vec<String> = b.iter().map(u32::to_string).collect();
            f.write_str(&words.join(" "))?;
        }
        Ok(())
    }
}

/// Parses `"1 2 4 7|5|3 6 8 9"`; a block without spaces such as `"1247"` is
/// read digit by digit.
impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for raw in s.trim().split('|') {
            let raw = raw.trim();
            let block: Vec<u32> = if raw.contains(char::is_whitespace) {
                raw.split_whitespace()
                    .map(|w| w.parse().map_err(|_| Error::Parse(format!("bad element {w:?}"))))
                    .collect::<Result<_>>()?
            } else {
                raw.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad element {c:?}"))))
                    .collect::<Result<_>>()?
            };
            blocks.push(block);
        }
        SetPartition::new(blocks)
    }
}

/// Every partition of `ground` whose blocks all satisfy `block_ok`, built by
/// choosing the block of the least unplaced element first.
///
/// `ground` may hold at most 63 elements; in practice this is used for a dozen.
pub fn partitions_with_blocks(
    ground: &[u32],
    block_ok: impl Fn(&[u32]) -> bool,
) -> Vec<SetPartition> {
    assert!(ground.len() < 64, "ground set too large for block assembly");
    let mut sorted = ground.to_vec();
    sorted.sort_unstable();
    let full: u64 = if sorted.is_empty() { 0 } else { (1u64 << sorted.len()) - 1 };
    let mut out = Vec::new();
    let mut current: Vec<Vec<u32>> = Vec::new();
    assemble(&sorted, full, &block_ok, &mut current, &mut out);
    out
}

fn assemble(
    ground: &[u32],
    remaining: u64,
    block_ok: &impl Fn(&[u32]) -> bool,
    current: &mut Vec<Vec<u32>>,
    out: &mut Vec<SetPartition>,
) {
    if remaining == 0 {
        out.push(SetPartition {
            blocks: current.clone(),
        });
        return;
    }
    let low = remaining.trailing_zeros();
    let rest = remaining & !(1u64 << low);
    // iterate over all submasks of `rest` (including empty)
    let mut sub = rest;
    loop {
        let mask = sub | (1u64 << low);
        let block: Vec<u32> = (0..ground.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| ground[i])
            .collect();
        if block_ok(&block) {
            current.push(block);
            assemble(ground, remaining & !mask, block_ok, current, out);
            current.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
}

/// The partitions in `elements` ordered by refinement.
pub fn refinement_poset(elements: Vec<SetPartition>) -> Result<FinitePoset<SetPartition>> {
    let tables: Vec<Vec<u32>> = elements.iter().map(SetPartition::label_table).collect();
    let el = &elements;
    FinitePoset::from_index_leq(elements.clone(), |x, y| {
        let t = &tables[y];
        el[x].blocks.len() >= el[y].blocks.len()
            && el[x].blocks.iter().all(|b| {
                let first = t.get(b[0] as usize).copied().unwrap_or(u32::MAX);
                first != u32::MAX && b.iter().all(|&v| t.get(v as usize) == Some(&first))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_display_and_parse() {
        let p: SetPartition = "1247|5|3689".parse().unwrap();
        assert_eq!(p.to_string(), "1 2 4 7|3 6 8 9|5");
        assert_eq!(p, "5|3 6 8 9|1 2 4 7".parse().unwrap());
        assert!("12|23".parse::<SetPartition>().is_err());
    }

    #[test]
    fn bell_numbers_from_unrestricted_assembly() {
        let counts: Vec<usize> = (0..=7u32)
            .map(|n| partitions_with_blocks(&(1..=n).collect::<Vec<_>>(), |_| true).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn refinement() {
        let fine: SetPartition = "12|3|4".parse().unwrap();
        let coarse: SetPartition = "124|3".parse().unwrap();
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(fine.refines(&fine));
        assert!(!fine.refines(&"13|24".parse().unwrap()));
    }

    #[test]
    fn refinement_poset_matches_refines() {
        let ground: Vec<u32> = (1..=6).collect();
        let parts = partitions_with_blocks(&ground, |b| b.len() == 1 || (b[0] % 2 == 1 && b[b.len() - 1] % 2 == 0));
        let fast = refinement_poset(parts.clone()).unwrap();
        let slow = FinitePoset::from_leq(parts, SetPartition::refines).unwrap();
        assert!(fast.same_as(&slow));
    }
}
