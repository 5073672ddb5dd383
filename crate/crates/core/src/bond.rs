//! Graphs and their bond lattices, with the bipartite graphs `Γ_2n`,
//! NBC sets, increasing-decreasing (ID) forests and the postorder map `psi`
//! from ID trees to D-cycles.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_with_blocks, refinement_poset, SetPartition};
use crate::perm::Permutation;
use crate::poset::FinitePoset;

/// A simple graph whose edge list order is the edge order used for NBC sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Edges are stored as `(smaller, larger)`; loops and repeats are rejected.
    pub fn new(vertices: &[u32], edges: &[(u32, u32)]) -> Result<Self> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut seen = HashSet::new();
        let mut es = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::Parameter(format!("loop at {a}")));
            }
            if vs.binary_search(&a).is_err() || vs.binary_search(&b).is_err() {
                return Err(Error::Parameter(format!("edge {a}-{b} leaves the vertex set")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::Parameter(format!("duplicate edge {a}-{b}")));
            }
            es.push(e);
        }
        Ok(Graph { vertices: vs, edges: es })
    }

    pub fn complete(n: u32) -> Self {
        let edges: Vec<(u32, u32)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Graph::new(&(1..=n).collect::<Vec<_>>(), &edges).expect("complete graph")
    }

    pub fn edgeless(n: u32) -> Self {
        Graph::new(&(1..=n).collect::<Vec<_>>(), &[]).expect("edgeless graph")
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// The same graph with edges listed in the order `perm` (indices into the current list).
    pub fn reordered(&self, perm: &[usize]) -> Self {
        Graph {
            vertices: self.vertices.clone(),
            edges: perm.iter().map(|&i| self.edges[i]).collect(),
        }
    }

    /// The same graph with edges sorted by `key`.
    pub fn sorted_by_key<K: Ord>(&self, key: impl Fn(&(u32, u32)) -> K) -> Self {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| key(e));
        Graph { vertices: self.vertices.clone(), edges }
    }

    /// Whether the subgraph induced on `block` is connected.
    pub fn induces_connected(&self, block: &[u32]) -> bool {
        if block.len() <= 1 {
            return true;
        }
        let inside: HashSet<u32> = block.iter().copied().collect();
        components(block, self.edges.iter().copied().filter(|(a, b)| inside.contains(a) && inside.contains(b)))
            .len()
            == 1
    }

    /// `"u v"` per edge in edge order; isolated vertices on lines of their own.
    pub fn to_edge_list(&self) -> String {
        let mut used: HashSet<u32> = HashSet::new();
        let mut out = String::new();
        for &(a, b) in &self.edges {
            used.insert(a);
            used.insert(b);
            out.push_str(&format!("{a} {b}\n"));
        }
        for v in &self.vertices {
            if !used.contains(v) {
                out.push_str(&format!("{v}\n"));
            }
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let (vertices, pairs) = parse_pairs(text)?;
        Graph::new(&vertices, &pairs)
    }
}

fn parse_pairs(text: &str) -> Result<(Vec<u32>, Vec<(u32, u32)>)> {
    let mut vertices = Vec::new();
    let mut pairs = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|w| w.parse::<u32>().map_err(|_| Error::Parse(format!("bad vertex {w:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match nums.as_slice() {
            [v] => vertices.push(*v),
            [a, b] => {
                vertices.extend([*a, *b]);
                pairs.push((*a, *b));
            }
            _ => return Err(Error::Parse(format!("expected one or two vertices: {line:?}"))),
        }
    }
    Ok((vertices, pairs))
}

/// Connected components (as sorted vertex lists) of `(vertices, edges)`.
fn components(vertices: &[u32], edges: impl Iterator<Item = (u32, u32)>) -> Vec<Vec<u32>> {
    let pos: HashMap<u32, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, pos[&a]), find(&mut parent, pos[&b]));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (i, &v) in vertices.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<u32>> = groups.into_values().collect();
    for g in &mut out {
        g.sort_unstable();
    }
    out.sort();
    out
}

/// Lexicographic edge orders on a bipartite odd/even graph: which endpoint
/// is compared first, and in which direction each endpoint is sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeOrderKey {
    pub even_first: bool,
    pub odd_descending: bool,
    pub even_descending: bool,
}

impl EdgeOrderKey {
    /// Odd endpoint ascending, then even endpoint descending. Under this
    /// order the NBC sets of `Γ_2n` are exactly the ID-forest edge sets.
    pub const ID_FOREST: EdgeOrderKey = EdgeOrderKey {
        even_first: false,
        odd_descending: false,
        even_descending: true,
    };

    pub fn all() -> Vec<EdgeOrderKey> {
        let mut v = Vec::new();
        for even_first in [false, true] {
            for odd_descending in [false, true] {
                for even_descending in [false, true] {
                    v.push(EdgeOrderKey { even_first, odd_descending, even_descending });
                }
            }
        }
        v
    }

    fn key(&self, e: &(u32, u32)) -> (i64, i64) {
        let (odd, even) = if e.0 % 2 == 1 { (e.0, e.1) } else { (e.1, e.0) };
        let o = if self.odd_descending { -(odd as i64) } else { odd as i64 };
        let v = if self.even_descending { -(even as i64) } else { even as i64 };
        if self.even_first {
            (v, o)
        } else {
            (o, v)
        }
    }
}

impl fmt::Display for EdgeOrderKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = |d: bool| if d { "desc" } else { "asc" };
        if self.even_first {
            write!(f, "even {}, odd {}", dir(self.even_descending), dir(self.odd_descending))
        } else {
            write!(f, "odd {}, even {}", dir(self.odd_descending), dir(self.even_descending))
        }
    }
}

/// `Γ_2n`: odd `2i-1` adjacent to even `2j` iff `i <= j`, edges listed in
/// [`EdgeOrderKey::ID_FOREST`] order.
pub fn gamma_graph(n: u32) -> Graph {
    gamma_graph_ordered(n, EdgeOrderKey::ID_FOREST)
}

pub fn gamma_graph_ordered(n: u32, order: EdgeOrderKey) -> Graph {
    let edges: Vec<(u32, u32)> = (1..=n)
        .flat_map(|i| (i..=n).map(move |j| (2 * i - 1, 2 * j)))
        .collect();
    Graph::new(&(1..=2 * n).collect::<Vec<_>>(), &edges)
        .expect("gamma graph")
        .sorted_by_key(|e| order.key(e))
}

/// Partitions of the vertex set whose blocks induce connected subgraphs,
/// ordered by refinement.
pub fn bond_lattice(g: &Graph) -> FinitePoset<SetPartition> {
    let elements = partitions_with_blocks(g.vertices(), |b| g.induces_connected(b));
    refinement_poset(elements).expect("bond lattices are graded")
}

/// Block rule for `Π_{Γ_2n}`: nonsingleton blocks have odd minimum and even maximum.
pub fn gamma_block_ok(block: &[u32]) -> bool {
    block.len() == 1 || (block[0] % 2 == 1 && block[block.len() - 1] % 2 == 0)
}

/// Induced subposet of `Π_2n` on partitions satisfying [`gamma_block_ok`],
/// assembled block by block rather than filtered from `Π_2n`.
pub fn gamma_subposet(n: u32) -> FinitePoset<SetPartition> {
    let ground: Vec<u32> = (1..=2 * n).collect();
    let elements = partitions_with_blocks(&ground, gamma_block_ok);
    refinement_poset(elements).expect("gamma subposet is graded")
}

/// An NBC set: indices into the graph's edge list and the partition it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NbcSet {
    pub edges: Vec<usize>,
    pub partition: SetPartition,
}

/// Every edge subset containing no broken circuit under the graph's edge order.
///
/// A set is NBC iff it is a forest and no edge outside it, joining two
/// vertices of one tree, precedes every edge on the tree path between them.
pub fn nbc_sets(g: &Graph) -> Vec<NbcSet> {
    let m = g.edges.len();
    assert!(m < 31, "NBC enumeration is exhaustive over edge subsets");
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let chosen: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        if let Some(p) = nbc_partition(g, &chosen) {
            out.push(NbcSet { edges: chosen, partition: p });
        }
    }
    out
}

fn nbc_partition(g: &Graph, chosen: &[usize]) -> Option<SetPartition> {
    let pos: HashMap<u32, usize> = g.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nv = g.vertices.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &e in chosen {
        let (a, b) = (pos[&g.edges[e].0], pos[&g.edges[e].1]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return None;
        }
        parent[ra] = rb;
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    let in_set: HashSet<usize> = chosen.iter().copied().collect();
    for e in 0..g.edges.len() {
        if in_set.contains(&e) {
            continue;
        }
        let (a, b) = (pos[&g.edges[e].0], pos[&g.edges[e].1]);
        if find(&mut parent, a) != find(&mut parent, b) {
            continue;
        }
        // smallest edge index on the tree path a -> b
        let mut stack = vec![(a, usize::MAX, usize::MAX)];
        let mut seen = vec![false; nv];
        seen[a] = true;
        let mut path_min = None;
        while let Some((v, _, lo)) = stack.pop() {
            if v == b {
                path_min = Some(lo);
                break;
            }
            for &(w, f) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, f, lo.min(f)));
                }
            }
        }
        if path_min.is_some_and(|lo| e < lo) {
            return None;
        }
    }
    let blocks = components(&g.vertices, chosen.iter().map(|&e| g.edges[e]));
    Some(SetPartition::new(blocks).expect("components are disjoint"))
}

/// Checks `(-1)^rk(π) mu(0, π) = #{NBC sets S with π_S = π}` for every π of
/// the bond lattice `p` of `g`, under `g`'s edge order.
pub fn whitney_rota_check(g: &Graph, p: &FinitePoset<SetPartition>) -> bool {
    let mut counts: HashMap<SetPartition, u64> = HashMap::new();
    for s in nbc_sets(g) {
        *counts.entry(s.partition).or_insert(0) += 1;
    }
    if counts.keys().any(|k| p.index_of(k).is_none()) {
        return false;
    }
    (0..p.len()).all(|x| {
        let mu = p.mobius_from_bottom(x);
        let signed = if p.rank(x) % 2 == 0 { mu.clone() } else { -mu.clone() };
        let c = counts.get(p.element(x)).copied().unwrap_or(0);
        signed == BigInt::from(c)
    })
}

/// A rooted forest; `parent` maps each non-root node to its parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdForest {
    nodes: Vec<u32>,
    parent: BTreeMap<u32, u32>,
}

impl IdForest {
    /// Builds a forest from `(parent, child)` pairs; ID conditions are not
    /// checked here (see [`IdForest::is_id`]).
    pub fn new(nodes: &[u32], edges: &[(u32, u32)]) -> Result<Self> {
        let mut nodes = nodes.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        let mut parent = BTreeMap::new();
        for &(p, c) in edges {
            if nodes.binary_search(&p).is_err() || nodes.binary_search(&c).is_err() {
                return Err(Error::Parameter(format!("edge {p}->{c} leaves the node set")));
            }
            if parent.insert(c, p).is_some() {
                return Err(Error::Parameter(format!("node {c} has two parents")));
            }
        }
        let f = IdForest { nodes, parent };
        if f.has_cycle() {
            return Err(Error::Parameter("parent map has a cycle".into()));
        }
        Ok(f)
    }

    fn has_cycle(&self) -> bool {
        self.nodes.iter().any(|&v| {
            let mut cur = v;
            for _ in 0..=self.nodes.len() {
                match self.parent.get(&cur) {
                    Some(&p) => cur = p,
                    None => return false,
                }
            }
            true
        })
    }

    pub fn nodes(&self) -> &[u32] {
        &self.nodes
    }

    pub fn parent(&self, v: u32) -> Option<u32> {
        self.parent.get(&v).copied()
    }

    pub fn roots(&self) -> Vec<u32> {
        self.nodes.iter().copied().filter(|v| !self.parent.contains_key(v)).collect()
    }

    pub fn num_trees(&self) -> usize {
        self.roots().len()
    }

    pub fn children(&self, v: u32) -> Vec<u32> {
        self.parent.iter().filter(|&(_, &p)| p == v).map(|(&c, _)| c).collect()
    }

    pub fn descendants(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut stack = self.children(v);
        while let Some(c) = stack.pop() {
            out.push(c);
            stack.extend(self.children(c));
        }
        out
    }

    /// Node sets of the trees, as a partition of the node set.
    pub fn tree_partition(&self) -> SetPartition {
        let blocks = self
            .roots()
            .into_iter()
            .map(|r| {
                let mut b = self.descendants(r);
                b.push(r);
                b
            })
            .collect();
        SetPartition::new(blocks).expect("trees are disjoint")
    }

    /// Undirected edges `(smaller, larger)`, sorted.
    pub fn edge_set(&self) -> Vec<(u32, u32)> {
        let mut es: Vec<(u32, u32)> = self.parent.iter().map(|(&c, &p)| (c.min(p), c.max(p))).collect();
        es.sort_unstable();
        es
    }

    /// Trees rooted at their largest node; odd internal nodes lie below all
    /// their descendants and have even children; even internal nodes lie
    /// above all their descendants and have odd children.
    pub fn is_id(&self) -> bool {
        for r in self.roots() {
            if self.descendants(r).iter().any(|&d| d > r) {
                return false;
            }
        }
        self.nodes.iter().all(|&v| {
            let kids = self.children(v);
            if kids.is_empty() {
                return true;
            }
            let desc = self.descendants(v);
            if v % 2 == 1 {
                kids.iter().all(|c| c % 2 == 0) && desc.iter().all(|&d| d > v)
            } else {
                kids.iter().all(|c| c % 2 == 1) && desc.iter().all(|&d| d < v)
            }
        })
    }

    /// `"parent child"` per line, isolated roots on lines of their own.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (&c, &p) in &self.parent {
            out.push_str(&format!("{p} {c}\n"));
        }
        for v in &self.nodes {
            if !self.parent.contains_key(v) && !self.parent.values().any(|p| p == v) {
                out.push_str(&format!("{v}\n"));
            }
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let (nodes, pairs) = parse_pairs(text)?;
        IdForest::new(&nodes, &pairs)
    }
}

/// All ID forests on the node set `a`.
///
/// Each node picks a parent of opposite parity on the correct side (an odd
/// node an even parent above it, an even node an odd parent below it) or
/// none; complete assignments are then checked against [`IdForest::is_id`].
pub fn id_forests_on(a: &[u32]) -> Vec<IdForest> {
    let mut nodes = a.to_vec();
    nodes.sort_unstable();
    nodes.dedup();
    let choices: Vec<Vec<Option<u32>>> = nodes
        .iter()
        .map(|&c| {
            let mut opts = vec![None];
            opts.extend(nodes.iter().copied().filter(|&p| {
                if c % 2 == 1 {
                    p % 2 == 0 && p > c
                } else {
                    p % 2 == 1 && p < c
                }
            }).map(Some));
            opts
        })
        .collect();
    let mut out = Vec::new();
    let mut pick: Vec<Option<u32>> = Vec::with_capacity(nodes.len());
    fn go(
        nodes: &[u32],
        choices: &[Vec<Option<u32>>],
        pick: &mut Vec<Option<u32>>,
        out: &mut Vec<IdForest>,
    ) {
        let i = pick.len();
        if i == nodes.len() {
            let edges: Vec<(u32, u32)> = nodes
                .iter()
                .zip(pick.iter())
                .filter_map(|(&c, p)| p.map(|p| (p, c)))
                .collect();
            if let Ok(f) = IdForest::new(nodes, &edges) {
                if f.is_id() {
                    out.push(f);
                }
            }
            return;
        }
        for &p in &choices[i] {
            pick.push(p);
            go(nodes, choices, pick, out);
            pick.pop();
        }
    }
    go(&nodes, &choices, &mut pick, &mut out);
    out
}

pub fn id_forests(n: u32) -> Vec<IdForest> {
    id_forests_on(&(1..=2 * n).collect::<Vec<_>>())
}

/// ID trees (single-tree ID forests) on `a`.
pub fn id_trees_on(a: &[u32]) -> Vec<IdForest> {
    id_forests_on(a).into_iter().filter(|f| f.num_trees() == 1).collect()
}

/// `f_{2n,k}`: number of ID forests on `[2n]` with `k` trees.
pub fn f_counts(n: u32) -> BTreeMap<usize, u64> {
    let mut counts = BTreeMap::new();
    for f in id_forests(n) {
        *counts.entry(f.num_trees()).or_insert(0) += 1;
    }
    counts
}

/// The D-cycle `(α)` where `α` is the postorder word of the ID tree `t`,
/// children of even nodes visited in increasing order and of odd nodes in
/// decreasing order.
pub fn psi(t: &IdForest) -> Result<Permutation> {
    if t.num_trees() != 1 || !t.is_id() {
        return Err(Error::Domain("psi needs a single ID tree".into()));
    }
    fn post(t: &IdForest, v: u32, word: &mut Vec<u32>) {
        let mut kids = t.children(v);
        kids.sort_unstable();
        if v % 2 == 1 {
            kids.reverse();
        }
        for c in kids {
            post(t, c, word);
        }
        word.push(v);
    }
    let mut word = Vec::with_capacity(t.nodes.len());
    post(t, t.roots()[0], &mut word);
    Permutation::from_cycles(&t.nodes, vec![word])
}

/// For each candidate lexicographic edge order, whether the NBC sets of
/// `Γ_2n` coincide with the ID-forest edge sets for every listed `n`.
pub fn search_id_forest_orders(ns: &[u32]) -> Vec<(EdgeOrderKey, bool)> {
    let forests: Vec<HashSet<Vec<(u32, u32)>>> = ns
        .iter()
        .map(|&n| id_forests(n).iter().map(IdForest::edge_set).collect())
        .collect();
    EdgeOrderKey::all()
        .into_iter()
        .map(|key| {
            let ok = ns.iter().zip(&forests).all(|(&n, idf)| {
                let g = gamma_graph_ordered(n, key);
                let nbc: HashSet<Vec<(u32, u32)>> = nbc_sets(&g)
                    .into_iter()
                    .map(|s| {
                        let mut es: Vec<(u32, u32)> = s.edges.iter().map(|&e| g.edges()[e]).collect();
                        es.sort_unstable();
                        es
                    })
                    .collect();
                nbc == *idf
            });
            (key, ok)
        })
        .collect()
}

/// Per-element comparison of `|mu(0, π)|` with the number of ID forests
/// whose trees have node sets equal to the blocks of `π`.
pub fn id_forest_mobius_check(n: u32, p: &FinitePoset<SetPartition>) -> bool {
    let mut counts: HashMap<SetPartition, u64> = HashMap::new();
    for f in id_forests(n) {
        *counts.entry(f.tree_partition()).or_insert(0) += 1;
    }
    (0..p.len()).all(|x| {
        let signed = if p.element(x).num_blocks() % 2 == 0 {
            p.mobius_from_bottom(x).clone()
        } else {
            -p.mobius_from_bottom(x).clone()
        };
        signed == BigInt::from(counts.get(p.element(x)).copied().unwrap_or(0))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{count, enumerate, Family};
    use crate::IntPolynomial;

    #[test]
    fn gamma_graph_edges() {
        let sorted = |g: Graph| {
            let mut e = g.edges().to_vec();
            e.sort_unstable();
            e
        };
        assert_eq!(sorted(gamma_graph(1)), vec![(1, 2)]);
        assert_eq!(sorted(gamma_graph(2)), vec![(1, 2), (1, 4), (3, 4)]);
        assert_eq!(
            sorted(gamma_graph(3)),
            vec![(1, 2), (1, 4), (1, 6), (3, 4), (3, 6), (5, 6)]
        );
        assert_eq!(gamma_graph(3).edges()[..3], [(1, 6), (1, 4), (1, 2)]);
    }

    #[test]
    fn bond_lattices_of_small_graphs() {
        assert_eq!(bond_lattice(&Graph::complete(3)).len(), 5);
        assert_eq!(bond_lattice(&Graph::edgeless(3)).len(), 1);
        let g4 = bond_lattice(&gamma_graph(2));
        let mut names: Vec<String> = g4.elements().iter().map(|p| p.to_string()).collect();
        names.sort();
        let mut want: Vec<String> = ["1|2|3|4", "12|3|4", "14|2|3", "34|1|2", "124|3", "134|2", "12|34", "1234"]
            .iter()
            .map(|s| s.parse::<SetPartition>().unwrap().to_string())
            .collect();
        want.sort();
        assert_eq!(names, want);
        let top = g4.top().unwrap();
        assert_eq!(g4.mobius(g4.bottom(), top).unwrap(), BigInt::from(-1));
        assert_eq!(g4.characteristic_polynomial(), IntPolynomial::from_i64s(&[-1, 3, -3, 1]));
    }

    #[test]
    fn gamma_subposet_matches_bond_lattice() {
        for n in 1..=4 {
            assert!(gamma_subposet(n).same_as(&bond_lattice(&gamma_graph(n))), "n = {n}");
        }
        let g2 = gamma_subposet(2);
        assert!(g2.index_of(&"14|23".parse().unwrap()).is_none());
        assert_eq!(gamma_subposet(1).len(), 2);
    }

    /// Independent NBC oracle: list every simple cycle explicitly.
    fn nbc_by_circuits(g: &Graph) -> HashSet<Vec<usize>> {
        let m = g.edges().len();
        let mut circuits: Vec<Vec<usize>> = Vec::new();
        for mask in 1u32..(1 << m) {
            let es: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            if es.len() < 3 {
                continue;
            }
            let mut deg: HashMap<u32, usize> = HashMap::new();
            for &e in &es {
                *deg.entry(g.edges()[e].0).or_insert(0) += 1;
                *deg.entry(g.edges()[e].1).or_insert(0) += 1;
            }
            if deg.values().any(|&d| d != 2) {
                continue;
            }
            let vs: Vec<u32> = deg.keys().copied().collect();
            if components(&vs, es.iter().map(|&e| g.edges()[e])).len() == 1 {
                circuits.push(es);
            }
        }
        let broken: Vec<HashSet<usize>> = circuits
            .iter()
            .map(|c| c.iter().copied().filter(|&e| e != *c.iter().min().unwrap()).collect())
            .collect();
        (0u32..(1 << m))
            .map(|mask| (0..m).filter(|&i| mask >> i & 1 == 1).collect::<Vec<usize>>())
            .filter(|s| {
                let set: HashSet<usize> = s.iter().copied().collect();
                !broken.iter().any(|b| b.is_subset(&set))
            })
            .collect()
    }

    #[test]
    fn nbc_sets_match_circuit_oracle() {
        for g in [Graph::complete(3), Graph::complete(4), gamma_graph(2), gamma_graph(3), Graph::complete(5)] {
            let fast: HashSet<Vec<usize>> = nbc_sets(&g).into_iter().map(|s| s.edges).collect();
            assert_eq!(fast, nbc_by_circuits(&g));
        }
        let k3 = nbc_sets(&Graph::complete(3));
        assert_eq!(k3.len(), 6);
        // {13, 23} is the broken circuit under lexicographic order
        assert!(!k3.iter().any(|s| s.edges == vec![1, 2]));
        assert_eq!(nbc_sets(&gamma_graph(2)).len(), 8);
    }

    #[test]
    fn nbc_sets_of_k4_are_increasing_forests() {
        let g = Graph::complete(4);
        for s in nbc_sets(&g) {
            // increasing forest: each vertex has at most one smaller neighbour in S
            let mut smaller = HashMap::new();
            for &e in &s.edges {
                *smaller.entry(g.edges()[e].1).or_insert(0) += 1;
            }
            assert!(smaller.values().all(|&c| c == 1), "{:?}", s.edges);
        }
        assert_eq!(nbc_sets(&g).len(), 24);
    }

    #[test]
    fn whitney_rota_for_small_graphs() {
        assert!(whitney_rota_check(&Graph::complete(3), &bond_lattice(&Graph::complete(3))));
        assert!(whitney_rota_check(&Graph::complete(4), &bond_lattice(&Graph::complete(4))));
        let g = gamma_graph(2);
        let p = bond_lattice(&g);
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert!(whitney_rota_check(&g.reordered(&perm), &p));
        }
    }

    #[test]
    fn id_forest_counts() {
        let f2 = f_counts(2);
        assert_eq!(f2, BTreeMap::from([(1, 1), (2, 3), (3, 3), (4, 1)]));
        assert_eq!(f_counts(1), BTreeMap::from([(1, 1), (2, 1)]));
        for n in 1..=4 {
            assert_eq!(f_counts(n).get(&(2 * n as usize)), Some(&1));
        }
    }

    #[test]
    fn id_conditions() {
        let t = IdForest::new(&[1, 2, 3, 4], &[(4, 1), (4, 3), (1, 2)]).unwrap();
        assert!(t.is_id());
        // root 3 is not the tree maximum
        let bad = IdForest::new(&[3, 4], &[(3, 4)]).unwrap();
        assert!(!bad.is_id());
        assert!(IdForest::new(&[1, 2], &[(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn psi_examples() {
        let t = IdForest::new(&[1, 2, 3, 4], &[(4, 1), (4, 3), (1, 2)]).unwrap();
        let c = psi(&t).unwrap();
        assert_eq!(c, Permutation::parse_on("(1,3,4,2)", &[1, 2, 3, 4]).unwrap());
        let single = IdForest::new(&[2], &[]).unwrap();
        assert_eq!(psi(&single).unwrap().to_string(), "(2)");
        let two = IdForest::new(&[1, 2], &[]).unwrap();
        assert!(matches!(psi(&two), Err(Error::Domain(_))));
    }

    #[test]
    fn psi_is_a_bijection_on_six() {
        let ground: Vec<u32> = (1..=6).collect();
        let trees = id_trees_on(&ground);
        let mut images: Vec<Permutation> = trees.iter().map(|t| psi(t).unwrap()).collect();
        images.sort();
        let mut dc = enumerate(Family::Dcycle, &ground).unwrap();
        dc.sort();
        assert_eq!(images, dc);
        assert_eq!(count(Family::Dcycle, &ground).unwrap(), 3);
    }

    #[test]
    fn edge_order_search_finds_the_frozen_order() {
        let found = search_id_forest_orders(&[2, 3]);
        let good: Vec<EdgeOrderKey> = found.iter().filter(|(_, ok)| *ok).map(|(k, _)| *k).collect();
        assert!(good.contains(&EdgeOrderKey::ID_FOREST));
        let even_asc_odd_desc = EdgeOrderKey { even_first: true, odd_descending: true, even_descending: false };
        assert!(!good.contains(&even_asc_odd_desc));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = gamma_graph(3);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        let t = IdForest::new(&[1, 2, 3, 4, 5], &[(4, 1), (4, 3), (1, 2)]).unwrap();
        assert_eq!(IdForest::parse_edge_list(&t.to_edge_list()).unwrap(), t);
        assert!(Graph::parse_edge_list("1 1\n").is_err());
    }
}
