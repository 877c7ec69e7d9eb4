//! Left, right and total leaf depths; depth-sequence reconstruction; residue counts.

use super::{Node, TermTree, Var};
use crate::error::{Error, Result};

/// Depth data of one leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LeafDepth {
    pub var: Var,
    /// Left steps on the root-to-leaf path.
    pub left: u32,
    /// Right steps on the root-to-leaf path.
    pub right: u32,
    /// All steps; always `left + right`.
    pub total: u32,
}

/// Per-variable depths of a term, sorted by variable index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepthProfile {
    entries: Vec<LeafDepth>,
}

impl DepthProfile {
    pub fn entries(&self) -> &[LeafDepth] {
        &self.entries
    }

    pub fn get(&self, var: Var) -> Option<&LeafDepth> {
        self.entries.binary_search_by_key(&var, |e| e.var).ok().map(|i| &self.entries[i])
    }

    /// Left depth sequence, in variable order.
    pub fn left(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.left).collect()
    }

    /// Right depth sequence, in variable order.
    pub fn right(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.right).collect()
    }

    /// Depth sequence, in variable order.
    pub fn total(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.total).collect()
    }
}

/// Leaf depths in left-to-right leaf order.
pub fn leaf_depths(t: &TermTree) -> Vec<LeafDepth> {
    let nodes = t.nodes();
    let mut depth = vec![(0u32, 0u32); nodes.len()];
    // parents sit after their children in the arena
    for i in (0..nodes.len()).rev() {
        if let Node::Branch(l, r) = nodes[i] {
            let (dl, dr) = depth[i];
            depth[l as usize] = (dl + 1, dr);
            depth[r as usize] = (dl, dr + 1);
        }
    }
    nodes
        .iter()
        .zip(depth)
        .filter_map(|(n, (left, right))| match n {
            Node::Leaf(v) => Some(LeafDepth { var: *v, left, right, total: left + right }),
            Node::Branch(..) => None,
        })
        .collect()
}

pub fn depth_profile(t: &TermTree) -> DepthProfile {
    let mut entries = leaf_depths(t);
    entries.sort_unstable_by_key(|e| e.var);
    DepthProfile { entries }
}

/// Rebuilds the bracketing whose leaves `1..=n`, read left to right, have the
/// given depths.
///
/// A sequence is valid iff every leaf starts at an offset aligned to its own
/// dyadic width and the widths `2^-d` sum to exactly one.
pub fn bracketing_from_depth_sequence(depths: &[u32]) -> Result<TermTree> {
    if depths.is_empty() {
        return Err(Error::validation("empty depth sequence"));
    }
    let invalid = |prefix: usize, why: &str| {
        Error::validation(format!("not a depth sequence: prefix {:?} {why}", &depths[..prefix]))
    };
    // stack depths strictly increase from bottom to top
    let mut stack: Vec<(u32, TermTree)> = Vec::new();
    for (i, &d) in depths.iter().enumerate() {
        if let Some(&(top, _)) = stack.last() {
            if top == 0 {
                return Err(invalid(i + 1, "has Kraft sum above 1"));
            }
            if d < top {
                return Err(invalid(i + 1, "places a leaf at a misaligned offset"));
            }
        }
        if d == 0 && depths.len() > 1 {
            return Err(invalid(i + 1, "has Kraft sum above 1"));
        }
        let mut cur = (d, TermTree::leaf(i as Var + 1));
        while let Some(&(top, _)) = stack.last() {
            if top != cur.0 {
                break;
            }
            let (_, left) = stack.pop().unwrap();
            cur = (cur.0 - 1, TermTree::join_unchecked(&left, &cur.1));
        }
        stack.push(cur);
    }
    match stack.as_slice() {
        [(0, _)] => Ok(stack.pop().unwrap().1),
        _ => Err(invalid(depths.len(), "has Kraft sum below 1")),
    }
}

/// How many leaves have each right depth modulo `k`.
///
/// `counts[i - 1]` is the number of leaves with right depth congruent to `i`
/// modulo `k`, for `i = 1..=k` (so residue zero is stored last).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueCounts {
    k: usize,
    counts: Vec<usize>,
}

impl ResidueCounts {
    pub fn new(k: usize, counts: Vec<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::validation(format!("modulus must be at least 2, got {k}")));
        }
        if counts.len() != k {
            return Err(Error::validation(format!("expected {k} counts, got {}", counts.len())));
        }
        Ok(ResidueCounts { k, counts })
    }

    pub fn modulus(&self) -> usize {
        self.k
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `n_i` for `i` in `1..=k`.
    pub fn count(&self, i: usize) -> usize {
        self.counts[i - 1]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Counts with one subtracted at positions 1 and k (saturating).
    pub fn shifted(&self) -> Vec<usize> {
        let mut m = self.counts.clone();
        m[0] = m[0].saturating_sub(1);
        m[self.k - 1] = m[self.k - 1].saturating_sub(1);
        m
    }

    /// First violated admissibility condition, if any.
    pub fn violation(&self) -> Option<String> {
        let k = self.k;
        let n = self.total();
        if n < 2 || self.count(1) == 0 || self.count(k) == 0 {
            return Some(format!("need n_1 >= 1, n_{k} >= 1 and total >= 2 (got {:?})", self.counts));
        }
        for i in 2..k.saturating_sub(1) {
            if self.count(i) == 0 && self.count(i + 1) != 0 {
                return Some(format!("n_{i} = 0 requires n_{} = 0", i + 1));
            }
        }
        if self.count(k - 1) == 0 && self.count(k) != 1 {
            return Some(format!("n_{} = 0 requires n_{k} = 1", k - 1));
        }
        None
    }
}

pub fn residue_counts(t: &TermTree, k: usize) -> Result<ResidueCounts> {
    if k < 2 {
        return Err(Error::validation(format!("modulus must be at least 2, got {k}")));
    }
    let mut counts = vec![0usize; k];
    for d in leaf_depths(t) {
        let r = d.right as usize % k;
        counts[if r == 0 { k - 1 } else { r - 1 }] += 1;
    }
    ResidueCounts::new(k, counts)
}

pub fn is_admissible(rc: &ResidueCounts) -> bool {
    rc.violation().is_none()
}

/// Builds a bracketing realizing an admissible residue-count vector.
///
/// Peels one leaf per step: a right leaf when `n_1 > 1`, otherwise a left
/// leaf with the remaining counts rotated down by one residue.
pub fn tree_from_admissible(rc: &ResidueCounts) -> Result<TermTree> {
    if let Some(why) = rc.violation() {
        return Err(Error::validation(format!("not admissible: {why}")));
    }
    let shape = build_admissible(rc.k, rc.counts.clone());
    Ok(shape.underlying_bracketing())
}

fn build_admissible(k: usize, counts: Vec<usize>) -> TermTree {
    let n: usize = counts.iter().sum();
    if n == 2 {
        return TermTree::join_unchecked(&TermTree::leaf(1), &TermTree::leaf(2));
    }
    if counts[0] > 1 {
        let mut sub = counts;
        sub[0] -= 1;
        let t = build_admissible(k, sub);
        let fresh = t.leaf_count() as Var + 1;
        TermTree::join_unchecked(&t, &TermTree::leaf(fresh))
    } else {
        // (n_2, ..., n_{k-1}, n_k - 1, 1)
        let mut sub: Vec<usize> = counts[1..k - 1].to_vec();
        sub.push(counts[k - 1] - 1);
        sub.push(1);
        let t = build_admissible(k, sub).relabel(&(2..=n as Var).collect::<Vec<_>>());
        TermTree::join_unchecked(&TermTree::leaf(1), &t)
    }
}
