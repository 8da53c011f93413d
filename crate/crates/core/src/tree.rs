//! Planar rooted trees, increasing trees, and the bijection between
//! increasing trees with `n` branchings and set compositions of `[n]`.
//!
//! Every vertex has at least two children. A *branching* is a pair of
//! adjacent incoming edges at a vertex, so a vertex with `m + 1` children
//! carries `m` branchings. Branchings are ordered left to right: for
//! `T = ⋁(T_0, …, T_m)` the branchings of `T_0` come first, then the root
//! branching between `T_0` and `T_1`, then those of `T_1`, and so on. The
//! position in this order is the *natural label*.
//!
//! Levels grow towards the root: on every leaf-to-root path the levels of
//! the vertices strictly increase.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::comp::{sorted_set, SetComposition};
use crate::error::{Error, ParseError, Result};

/// A planar rooted tree: the trivial tree `ε` or a wedge of at least two
/// subtrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

/// A branching located by the child-index path of its vertex and the
/// slot `i ∈ 1..=m` between children `i - 1` and `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Branching {
    pub vertex: Vec<usize>,
    pub slot: usize,
    pub label: usize,
}

impl PlanarTree {
    /// The corolla `C_m` with `m` leaves (`m ≥ 2`).
    pub fn corolla(m: usize) -> Self {
        assert!(m >= 2, "a corolla has at least two leaves");
        PlanarTree::Node(vec![PlanarTree::Leaf; m])
    }

    /// Number of branchings `b(T)`.
    pub fn branchings(&self) -> usize {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(ch) => ch.len() - 1 + ch.iter().map(Self::branchings).sum::<usize>(),
        }
    }

    pub fn vertices(&self) -> usize {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(ch) => 1 + ch.iter().map(Self::vertices).sum::<usize>(),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(ch) => ch.iter().map(Self::leaves).sum(),
        }
    }

    /// Children of the root; empty for `ε`.
    pub fn children(&self) -> &[PlanarTree] {
        match self {
            PlanarTree::Leaf => &[],
            PlanarTree::Node(ch) => ch,
        }
    }

    /// True iff every vertex has exactly two children.
    pub fn is_binary(&self) -> bool {
        match self {
            PlanarTree::Leaf => true,
            PlanarTree::Node(ch) => ch.len() == 2 && ch.iter().all(Self::is_binary),
        }
    }

    /// Replaces the leftmost leaf of `self` by `left`.
    pub fn graft_left(left: &PlanarTree, onto: &PlanarTree) -> PlanarTree {
        match onto {
            PlanarTree::Leaf => left.clone(),
            PlanarTree::Node(ch) => {
                let mut ch = ch.clone();
                ch[0] = PlanarTree::graft_left(left, &ch[0]);
                PlanarTree::Node(ch)
            }
        }
    }

    /// Vertex paths in pre-order.
    pub fn vertex_paths(&self) -> Vec<Vec<usize>> {
        fn walk(t: &PlanarTree, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if let PlanarTree::Node(ch) = t {
                out.push(path.clone());
                for (i, c) in ch.iter().enumerate() {
                    path.push(i);
                    walk(c, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

/// `⋁(T_0, …, T_m)`.
pub fn wedge(children: Vec<PlanarTree>) -> Result<PlanarTree> {
    if children.len() < 2 {
        return Err(Error::TooFewChildren(children.len()));
    }
    Ok(PlanarTree::Node(children))
}

/// Inverse of [`wedge`]; `None` for `ε`.
pub fn unwedge(t: &PlanarTree) -> Option<&[PlanarTree]> {
    match t {
        PlanarTree::Leaf => None,
        PlanarTree::Node(ch) => Some(ch),
    }
}

/// The branchings of `t` listed in left-to-right order, so that the
/// `i`-th entry has natural label `i + 1`.
pub fn natural_labels(t: &PlanarTree) -> Vec<Branching> {
    fn walk(t: &PlanarTree, path: &mut Vec<usize>, out: &mut Vec<Branching>) {
        if let PlanarTree::Node(ch) = t {
            for (i, c) in ch.iter().enumerate() {
                if i > 0 {
                    let label = out.len() + 1;
                    out.push(Branching {
                        vertex: path.clone(),
                        slot: i,
                        label,
                    });
                }
                path.push(i);
                walk(c, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

/// The left grafting product on planar trees.
pub fn graft_left(t1: &PlanarTree, t2: &PlanarTree) -> PlanarTree {
    PlanarTree::graft_left(t1, t2)
}

pub fn is_binary(t: &PlanarTree) -> bool {
    t.is_binary()
}

/// All planar rooted trees with `n` branchings, in the [`Ord`] order.
pub fn enumerate_trees(n: usize) -> Vec<PlanarTree> {
    let mut table: Vec<Vec<PlanarTree>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut trees = if k == 0 { vec![PlanarTree::Leaf] } else { Vec::new() };
        // a root with `arity` children uses `arity - 1` branchings itself
        for arity in 2..=k + 1 {
            let rest = k + 1 - arity;
            for parts in weak_compositions(rest, arity) {
                let mut acc: Vec<Vec<PlanarTree>> = vec![Vec::new()];
                for &p in &parts {
                    let mut next = Vec::new();
                    for prefix in &acc {
                        for t in &table[p] {
                            let mut v = prefix.clone();
                            v.push(t.clone());
                            next.push(v);
                        }
                    }
                    acc = next;
                }
                trees.extend(acc.into_iter().map(PlanarTree::Node));
            }
        }
        trees.sort();
        table.push(trees);
    }
    table.pop().expect("n + 1 entries")
}

/// Sequences of `parts` non-negative integers summing to `total`.
fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.branchings()
            .cmp(&other.branchings())
            .then_with(|| match (self, other) {
                (PlanarTree::Leaf, PlanarTree::Leaf) => Ordering::Equal,
                (PlanarTree::Leaf, PlanarTree::Node(_)) => Ordering::Less,
                (PlanarTree::Node(_), PlanarTree::Leaf) => Ordering::Greater,
                (PlanarTree::Node(a), PlanarTree::Node(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            })
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => f.write_str("*"),
            PlanarTree::Node(ch) => {
                f.write_str("(")?;
                for c in ch {
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarTree({self})")
    }
}

impl FromStr for PlanarTree {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos).map_err(|r| ParseError::new("tree", s, r))?;
        if pos != chars.len() {
            return Err(ParseError::new("tree", s, format!("trailing input at {pos}")));
        }
        Ok(t)
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> std::result::Result<PlanarTree, String> {
    match chars.get(*pos) {
        Some('*') => {
            *pos += 1;
            Ok(PlanarTree::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let mut ch = Vec::new();
            while chars.get(*pos) != Some(&')') {
                if *pos >= chars.len() {
                    return Err("unclosed `(`".into());
                }
                ch.push(parse_tree(chars, pos)?);
            }
            *pos += 1;
            if ch.len() < 2 {
                return Err(format!("vertex with {} children (need at least 2)", ch.len()));
            }
            Ok(PlanarTree::Node(ch))
        }
        Some(c) => Err(format!("unexpected `{c}` at {pos}")),
        None => Err("unexpected end of input".into()),
    }
}

/// Internal recursive form of an increasing tree: a planar tree with a
/// level on every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum LevelNode {
    Leaf,
    Vertex { level: u32, children: Vec<LevelNode> },
}

impl LevelNode {
    fn shape(&self) -> PlanarTree {
        match self {
            LevelNode::Leaf => PlanarTree::Leaf,
            LevelNode::Vertex { children, .. } => PlanarTree::Node(children.iter().map(Self::shape).collect()),
        }
    }

    fn level(&self) -> Option<u32> {
        match self {
            LevelNode::Leaf => None,
            LevelNode::Vertex { level, .. } => Some(*level),
        }
    }

    fn preorder_levels(&self, out: &mut Vec<u32>) {
        if let LevelNode::Vertex { level, children } = self {
            out.push(*level);
            for c in children {
                c.preorder_levels(out);
            }
        }
    }

    fn branching_levels(&self, out: &mut Vec<u32>) {
        if let LevelNode::Vertex { level, children } = self {
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    out.push(*level);
                }
                c.branching_levels(out);
            }
        }
    }

    fn from_shape(shape: &PlanarTree, levels: &mut impl Iterator<Item = u32>) -> LevelNode {
        match shape {
            PlanarTree::Leaf => LevelNode::Leaf,
            PlanarTree::Node(ch) => {
                let level = levels.next().expect("enough levels");
                LevelNode::Vertex {
                    level,
                    children: ch.iter().map(|c| Self::from_shape(c, levels)).collect(),
                }
            }
        }
    }

    fn map_levels(&self, f: &impl Fn(u32) -> u32) -> LevelNode {
        match self {
            LevelNode::Leaf => LevelNode::Leaf,
            LevelNode::Vertex { level, children } => LevelNode::Vertex {
                level: f(*level),
                children: children.iter().map(|c| c.map_levels(f)).collect(),
            },
        }
    }

    fn is_increasing(&self) -> bool {
        match self {
            LevelNode::Leaf => true,
            LevelNode::Vertex { level, children } => children
                .iter()
                .all(|c| c.level().is_none_or(|l| l < *level) && c.is_increasing()),
        }
    }

    /// Adds a branching at `level` to the right of all existing ones.
    ///
    /// Along the rightmost path the levels decrease away from the root;
    /// the new branching either joins a vertex of the same level, or a new
    /// binary vertex is inserted on the edge (or leaf) where the level fits.
    fn add_rightmost(self, new: u32) -> LevelNode {
        match self {
            LevelNode::Leaf => LevelNode::Vertex {
                level: new,
                children: vec![LevelNode::Leaf, LevelNode::Leaf],
            },
            LevelNode::Vertex { level, .. } if new > level => LevelNode::Vertex {
                level: new,
                children: vec![self, LevelNode::Leaf],
            },
            LevelNode::Vertex { level, mut children } => {
                if new == level {
                    children.push(LevelNode::Leaf);
                } else {
                    let last = children.pop().expect("vertex has children");
                    children.push(last.add_rightmost(new));
                }
                LevelNode::Vertex { level, children }
            }
        }
    }

    fn graft_left(self, onto: LevelNode) -> LevelNode {
        match onto {
            LevelNode::Leaf => self,
            LevelNode::Vertex { level, mut children } => {
                let first = std::mem::replace(&mut children[0], LevelNode::Leaf);
                children[0] = self.graft_left(first);
                LevelNode::Vertex { level, children }
            }
        }
    }
}

/// A planar tree together with a level function on its vertices.
///
/// Levels need not be standard; equality, ordering and hashing compare the
/// shape and the standardized level function, so two trees that differ only
/// by an order-preserving relabelling of levels are equal.
#[derive(Clone)]
pub struct IncreasingTree {
    root: LevelNode,
}

impl IncreasingTree {
    /// The trivial increasing tree `ε`.
    pub fn trivial() -> Self {
        IncreasingTree { root: LevelNode::Leaf }
    }

    /// Builds a tree from its shape and the levels of its vertices in
    /// pre-order.
    pub fn new(shape: &PlanarTree, levels: &[u32]) -> Result<Self> {
        let vertices = shape.vertices();
        if vertices != levels.len() {
            return Err(Error::LevelCountMismatch {
                vertices,
                levels: levels.len(),
            });
        }
        if levels.contains(&0) {
            return Err(Error::NotIncreasing);
        }
        let root = LevelNode::from_shape(shape, &mut levels.iter().copied());
        if !root.is_increasing() {
            return Err(Error::NotIncreasing);
        }
        Ok(IncreasingTree { root })
    }

    pub fn shape(&self) -> PlanarTree {
        self.root.shape()
    }

    /// Vertex levels in pre-order.
    pub fn levels(&self) -> Vec<u32> {
        let mut v = Vec::new();
        self.root.preorder_levels(&mut v);
        v
    }

    /// Level of each branching, indexed by natural label minus one.
    pub fn branching_levels(&self) -> Vec<u32> {
        let mut v = Vec::new();
        self.root.branching_levels(&mut v);
        v
    }

    pub fn branchings(&self) -> usize {
        self.shape().branchings()
    }

    /// Level of the root vertex; 0 for `ε`.
    pub fn root_level(&self) -> u32 {
        self.root.level().unwrap_or(0)
    }

    /// True iff the image of the level function is `[k]`.
    pub fn is_standard(&self) -> bool {
        let s = sorted_set(&self.levels());
        s.iter().enumerate().all(|(i, &l)| l == i as u32 + 1)
    }

    /// Relabels the levels through the order isomorphism onto `[k]`.
    pub fn standardize(&self) -> IncreasingTree {
        let s = sorted_set(&self.levels());
        IncreasingTree {
            root: self
                .root
                .map_levels(&|l| s.binary_search(&l).expect("level present") as u32 + 1),
        }
    }

    fn standard_levels(&self) -> Vec<u32> {
        let levels = self.levels();
        let s = sorted_set(&levels);
        levels
            .iter()
            .map(|l| s.binary_search(l).expect("level present") as u32 + 1)
            .collect()
    }

    /// `σ`: the composition whose `i`-th block holds the natural labels of
    /// the branchings at level `i`.
    pub fn sigma(&self) -> Result<SetComposition> {
        if !self.is_standard() {
            return Err(Error::NonStandardLevels);
        }
        let levels = self.branching_levels();
        let k = levels.iter().copied().max().unwrap_or(0) as usize;
        let mut blocks = vec![Vec::new(); k];
        for (i, &l) in levels.iter().enumerate() {
            blocks[l as usize - 1].push(i as u32 + 1);
        }
        Ok(SetComposition::from_sorted_blocks(blocks))
    }

    /// `τ`: the increasing tree of a composition of any finite set. The
    /// branchings are labelled by the support in increasing order.
    pub fn tau(p: &SetComposition) -> IncreasingTree {
        let mut t = IncreasingTree::trivial();
        for (_, block) in p.block_of() {
            t = t.add_rightmost_branching(block as u32 + 1);
        }
        t
    }

    /// Adds a new rightmost branching whose vertex sits at `level`.
    pub fn add_rightmost_branching(&self, level: u32) -> IncreasingTree {
        assert!(level > 0, "levels are positive");
        let root = self.root.clone().add_rightmost(level);
        debug_assert!(root.is_increasing());
        IncreasingTree { root }
    }

    /// The contraction relative to a set of natural labels: the tree of
    /// the standardized restriction of `σ(T)`.
    pub fn contract(&self, labels: &[u32]) -> Result<IncreasingTree> {
        let n = self.branchings();
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l as usize > n) {
            return Err(Error::LabelOutOfRange { label: bad, max: n });
        }
        let p = self.standardize().sigma()?;
        Ok(IncreasingTree::tau(&p.restrict(labels)?.standardize()))
    }

    /// The left increasing tree over `shape`: subtrees are levelled left
    /// to right in disjoint ascending ranges and the root sits on top.
    pub fn inc(shape: &PlanarTree) -> IncreasingTree {
        fn go(t: &PlanarTree, offset: u32) -> (LevelNode, u32) {
            match t {
                PlanarTree::Leaf => (LevelNode::Leaf, offset),
                PlanarTree::Node(ch) => {
                    let mut top = offset;
                    let children = ch
                        .iter()
                        .map(|c| {
                            let (node, next) = go(c, top);
                            top = next;
                            node
                        })
                        .collect();
                    (
                        LevelNode::Vertex {
                            level: top + 1,
                            children,
                        },
                        top + 1,
                    )
                }
            }
        }
        IncreasingTree { root: go(shape, 0).0 }
    }

    /// True iff, whenever a branching lies to the left of another and
    /// their vertices are not on a common leaf-to-root path, its level is
    /// smaller.
    pub fn is_left_increasing(&self) -> bool {
        let branchings = natural_labels(&self.shape());
        let levels = self.branching_levels();
        for (i, b) in branchings.iter().enumerate() {
            for (j, c) in branchings.iter().enumerate().skip(i + 1) {
                if !on_common_path(&b.vertex, &c.vertex) && levels[i] >= levels[j] {
                    return false;
                }
            }
        }
        true
    }

    /// The restricted product on trees: `self` is grafted on the leftmost
    /// leaf of `other`, whose levels are raised above those of `self`.
    pub fn restricted_product(&self, other: &IncreasingTree) -> IncreasingTree {
        let left = self.standardize();
        let shift = left.root_level();
        let right = other.standardize().root.map_levels(&|l| l + shift);
        IncreasingTree {
            root: left.root.graft_left(right),
        }
    }

    pub(crate) fn root_node(&self) -> &LevelNode {
        &self.root
    }
}

/// True iff one vertex path is a prefix of the other, i.e. both vertices
/// lie on a common leaf-to-root path.
pub fn on_common_path(a: &[usize], b: &[usize]) -> bool {
    a.starts_with(b) || b.starts_with(a)
}

/// Common-path test read off the levels of branchings only: labels
/// `i < j` (1-based) lie on a common path iff every branching strictly
/// between them has a level at most the larger of their two levels.
pub fn common_path_by_levels(levels: &[u32], i: usize, j: usize) -> bool {
    let (i, j) = (i.min(j), i.max(j));
    let top = levels[i - 1].max(levels[j - 1]);
    levels[i..j - 1].iter().all(|&l| l <= top)
}

pub fn sigma(t: &IncreasingTree) -> Result<SetComposition> {
    t.sigma()
}

pub fn tau(p: &SetComposition) -> IncreasingTree {
    IncreasingTree::tau(p)
}

pub fn fgt(t: &IncreasingTree) -> PlanarTree {
    t.shape()
}

pub fn inc(t: &PlanarTree) -> IncreasingTree {
    IncreasingTree::inc(t)
}

/// All standard increasing trees with `n` branchings, found by brute
/// force over level assignments on every shape.
pub fn enumerate_increasing_trees(n: usize) -> Vec<IncreasingTree> {
    let mut out = Vec::new();
    for shape in enumerate_trees(n) {
        let paths = shape.vertex_paths();
        let v = paths.len();
        // children of each vertex, as pre-order indices
        let mut kids = vec![Vec::new(); v];
        for (i, p) in paths.iter().enumerate() {
            if let Some((_, parent)) = p.split_last() {
                let pi = paths.iter().position(|q| q == parent).expect("parent");
                kids[pi].push(i);
            }
        }
        let mut levels = vec![0u32; v];
        assign_levels(v, &kids, &mut levels, v, &mut |lv| {
            if let Ok(t) = IncreasingTree::new(&shape, lv) {
                if t.is_standard() {
                    out.push(t);
                }
            }
        });
    }
    out.sort();
    out
}

/// Assigns levels in reverse pre-order so children precede parents.
fn assign_levels(
    pending: usize,
    kids: &[Vec<usize>],
    levels: &mut [u32],
    max_level: usize,
    emit: &mut impl FnMut(&[u32]),
) {
    if pending == 0 {
        emit(levels);
        return;
    }
    let u = pending - 1;
    let low = kids[u].iter().map(|&c| levels[c]).max().unwrap_or(0) + 1;
    for l in low..=max_level as u32 {
        levels[u] = l;
        assign_levels(u, kids, levels, max_level, emit);
    }
    levels[u] = 0;
}

impl PartialEq for IncreasingTree {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape() && self.standard_levels() == other.standard_levels()
    }
}

impl Eq for IncreasingTree {}

impl Hash for IncreasingTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.shape().hash(state);
        self.standard_levels().hash(state);
    }
}

impl Ord for IncreasingTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.standard_levels().cmp(&other.standard_levels()))
    }
}

impl PartialOrd for IncreasingTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IncreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape())?;
        let levels = self.levels();
        if !levels.is_empty() {
            f.write_str("@")?;
            for (i, l) in levels.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IncreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncreasingTree({self})")
    }
}

impl FromStr for IncreasingTree {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let err = |reason: String| ParseError::new("increasing tree", s, reason);
        let (shape, levels) = match s.split_once('@') {
            Some((a, b)) => (a, b.trim()),
            None => (s, ""),
        };
        let shape: PlanarTree = shape.parse().map_err(|e: ParseError| err(e.reason))?;
        let levels = if levels.is_empty() {
            Vec::new()
        } else {
            levels
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| err(format!("`{}` is not a positive level", t.trim())))
                })
                .collect::<std::result::Result<Vec<_>, _>>()?
        };
        IncreasingTree::new(&shape, &levels).map_err(|e| err(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> SetComposition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    fn it(s: &str) -> IncreasingTree {
        s.parse().unwrap()
    }

    #[test]
    fn wedge_builds_corollas() {
        assert_eq!(wedge(vec![PlanarTree::Leaf; 2]).unwrap(), PlanarTree::corolla(2));
        assert_eq!(wedge(vec![PlanarTree::Leaf; 4]).unwrap().to_string(), "(****)");
        assert!(matches!(wedge(vec![PlanarTree::Leaf]), Err(Error::TooFewChildren(1))));
        let w = wedge(vec![t("(**)"), t("(***)"), t("(*(**))")]).unwrap();
        assert_eq!(unwedge(&w).unwrap().len(), 3);
        assert_eq!(w.branchings(), 2 + 1 + 2 + 2);
    }

    #[test]
    fn corolla_labels_left_to_right() {
        let labels = natural_labels(&PlanarTree::corolla(5));
        assert_eq!(labels.len(), 4);
        for (i, b) in labels.iter().enumerate() {
            assert_eq!((b.slot, b.label), (i + 1, i + 1));
            assert!(b.vertex.is_empty());
        }
        assert!(natural_labels(&PlanarTree::Leaf).is_empty());
    }

    #[test]
    fn sigma_of_three_level_trees() {
        // the three increasing trees with `σ` values (1,34,25), (134,25), (34,1,25)
        let a = IncreasingTree::tau(&c("1|3,4|2,5"));
        let b = IncreasingTree::tau(&c("1,3,4|2,5"));
        let d = IncreasingTree::tau(&c("3,4|1|2,5"));
        assert_eq!(a.to_string(), "((**)(***)*)@3,1,2");
        assert_eq!(b.to_string(), "((**)(***)*)@2,1,1");
        assert_eq!(d.to_string(), "((**)(***)*)@3,2,1");
        assert_eq!(a.sigma().unwrap(), c("1|3,4|2,5"));
        assert_eq!(b.sigma().unwrap(), c("1,3,4|2,5"));
        assert_eq!(d.sigma().unwrap(), c("3,4|1|2,5"));
    }

    #[test]
    fn tau_of_a_four_block_composition() {
        // levels inserted 3, 1, 2, 2, 4, 1
        let steps = [
            "(**)@3",
            "(*(**))@3,1",
            "(*((**)*))@3,2,1",
            "(*((**)**))@3,2,1",
            "((*((**)**))*)@4,3,2,1",
            "((*((**)**))(**))@4,3,2,1,1",
        ];
        let mut tree = IncreasingTree::trivial();
        for (level, want) in [3, 1, 2, 2, 4, 1].into_iter().zip(steps) {
            tree = tree.add_rightmost_branching(level);
            assert_eq!(tree.to_string(), want);
        }
        assert_eq!(IncreasingTree::tau(&c("2,6|3,4|1|5")).to_string(), steps[5]);
    }

    #[test]
    fn rightmost_branching_cases() {
        let c2 = it("(**)@3");
        assert_eq!(c2.add_rightmost_branching(3).to_string(), "(***)@3");
        assert_eq!(
            IncreasingTree::trivial().add_rightmost_branching(7).to_string(),
            "(**)@7"
        );
        assert_eq!(c2.add_rightmost_branching(5).to_string(), "((**)*)@5,3");
    }

    #[test]
    fn tau_small_cases() {
        assert_eq!(IncreasingTree::tau(&c("1")), it("(**)@1"));
        assert_eq!(IncreasingTree::tau(&SetComposition::empty()), IncreasingTree::trivial());
        // arbitrary supports: labels follow the support order
        assert_eq!(IncreasingTree::tau(&c("5|9")), IncreasingTree::tau(&c("1|2")));
    }

    #[test]
    fn sigma_rejects_non_standard_levels() {
        assert!(matches!(it("(**)@3").sigma(), Err(Error::NonStandardLevels)));
        assert_eq!(it("(**)@3").standardize().sigma().unwrap(), c("1"));
    }

    #[test]
    fn level_validation() {
        assert!("(*(**))@1,2".parse::<IncreasingTree>().is_err());
        assert!("(*(**))@2".parse::<IncreasingTree>().is_err());
        assert!("(*(**))@2,2".parse::<IncreasingTree>().is_err());
        assert_eq!(it("(*(**))@5,2"), it("(*(**))@2,1"));
    }

    #[test]
    fn contraction_example() {
        let tree = IncreasingTree::tau(&c("2,6|3,4|1|5"));
        let con = tree.contract(&[1, 2, 4, 6]).unwrap();
        assert_eq!(con, IncreasingTree::tau(&c("2,4|3|1")));
        assert_eq!(tree.contract(&[1, 2, 3, 4, 5, 6]).unwrap(), tree);
        assert_eq!(tree.contract(&[]).unwrap(), IncreasingTree::trivial());
        assert!(matches!(
            tree.contract(&[7]),
            Err(Error::LabelOutOfRange { label: 7, max: 6 })
        ));
    }

    #[test]
    fn forgetful_examples() {
        assert_eq!(fgt(&tau(&c("1|2"))), t("((**)*)"));
        assert_eq!(fgt(&tau(&c("1,2"))), PlanarTree::corolla(3));
        assert_eq!(fgt(&IncreasingTree::trivial()), PlanarTree::Leaf);
    }

    #[test]
    fn inc_examples() {
        assert_eq!(inc(&PlanarTree::corolla(4)), it("(****)@1"));
        let comb = inc(&t("((**)*)"));
        assert_eq!(comb.to_string(), "((**)*)@2,1");
        assert_eq!(comb.sigma().unwrap(), c("1|2"));
        assert_eq!(inc(&PlanarTree::Leaf), IncreasingTree::trivial());
    }

    #[test]
    fn left_increasing_examples() {
        assert!(IncreasingTree::trivial().is_left_increasing());
        assert!(tau(&c("2|1")).is_left_increasing());
        assert!(!tau(&c("3,4|1|2,5")).is_left_increasing());
        assert!(inc(&t("((**)(**))")).is_left_increasing());
        assert!(!it("((**)(**))@3,2,1").is_left_increasing());
    }

    #[test]
    fn grafting_examples() {
        let c2 = PlanarTree::corolla(2);
        assert_eq!(graft_left(&c2, &PlanarTree::Leaf), c2);
        assert_eq!(graft_left(&PlanarTree::Leaf, &c2), c2);
        assert_eq!(graft_left(&c2, &c2), t("((**)*)"));
    }

    #[test]
    fn binary_predicate() {
        assert!(is_binary(&PlanarTree::corolla(2)));
        assert!(!is_binary(&PlanarTree::corolla(3)));
        assert!(is_binary(&PlanarTree::Leaf));
        let counts: Vec<usize> = (0..5)
            .map(|n| enumerate_trees(n).iter().filter(|t| t.is_binary()).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn tree_enumeration() {
        assert_eq!(enumerate_trees(0), vec![PlanarTree::Leaf]);
        let two = enumerate_trees(2);
        assert_eq!(two.len(), 3);
        assert!(two.contains(&PlanarTree::corolla(3)));
        assert!(two.contains(&t("((**)*)")));
        assert!(two.contains(&t("(*(**))")));
        assert_eq!(enumerate_trees(3).len(), 11);
    }

    #[test]
    fn literal_round_trip() {
        for s in ["*", "(**)", "((**)(***)*)", "(*(**)(*(**)))"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert!("(*)".parse::<PlanarTree>().is_err());
        assert!("(**".parse::<PlanarTree>().is_err());
        assert!("(**)*".parse::<PlanarTree>().is_err());
        assert_eq!(it("*"), IncreasingTree::trivial());
        assert_eq!(it("(*(**))@2,1").to_string(), "(*(**))@2,1");
    }
}
