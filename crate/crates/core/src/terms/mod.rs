//! Binary term trees: construction, enumeration, canonical codes and depth data.
//!
//! A [`TermTree`] is an ordered binary tree whose leaves carry pairwise distinct
//! variable indices. Bracketings are the trees whose leaves read `1, 2, ..., n`
//! from left to right; full linear terms are bracketings with the leaf labels
//! permuted.

mod code;
mod depth;
mod enumerate;
mod parse;
pub mod perm;

pub use code::{exact_code, leaf_order_code, p_tree, p_tree_code, unordered_code, CanonicalCode, PTree};
pub use depth::{
    bracketing_from_depth_sequence, depth_profile, is_admissible, leaf_depths, residue_counts, tree_from_admissible,
    DepthProfile, LeafDepth, ResidueCounts,
};
pub use enumerate::{enumerate_bracketings, enumerate_full_linear_terms, Bracketings, FullLinearTerms};

use std::fmt;

use crate::error::{Error, Result};

/// Variable index; `x3` has index 3.
pub type Var = u32;

/// One arena slot of a [`TermTree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf(Var),
    /// Arena indices of the left and right child.
    Branch(u32, u32),
}

/// Ordered binary tree with labeled leaves, stored as a post-order arena.
///
/// Children always precede their parent and the root is the last slot, so the
/// leaves appear in the arena in left-to-right order. Two trees are equal iff
/// they are the same term.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermTree {
    nodes: Vec<Node>,
}

impl TermTree {
    pub fn leaf(var: Var) -> Self {
        TermTree { nodes: vec![Node::Leaf(var)] }
    }

    /// `(left right)`; fails if the two sides share a variable.
    pub fn join(left: TermTree, right: TermTree) -> Result<Self> {
        let mut lv = left.variables();
        lv.extend(right.leaves());
        lv.sort_unstable();
        if lv.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::validation(format!("cannot join {left} and {right}: variable sets overlap")));
        }
        Ok(Self::join_unchecked(&left, &right))
    }

    pub(crate) fn join_unchecked(left: &TermTree, right: &TermTree) -> Self {
        let offset = left.nodes.len() as u32;
        let mut nodes = Vec::with_capacity(left.nodes.len() + right.nodes.len() + 1);
        nodes.extend_from_slice(&left.nodes);
        nodes.extend(right.nodes.iter().map(|n| match *n {
            Node::Leaf(v) => Node::Leaf(v),
            Node::Branch(l, r) => Node::Branch(l + offset, r + offset),
        }));
        nodes.push(Node::Branch(offset - 1, nodes.len() as u32 - 1));
        TermTree { nodes }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn node(&self, index: usize) -> Node {
        self.nodes[index]
    }

    pub fn is_leaf(&self) -> bool {
        self.nodes.len() == 1
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.len().div_ceil(2)
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> impl Iterator<Item = Var> + '_ {
        self.nodes.iter().filter_map(|n| match n {
            Node::Leaf(v) => Some(*v),
            Node::Branch(..) => None,
        })
    }

    /// Sorted variable set.
    pub fn variables(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.leaves().collect();
        v.sort_unstable();
        v
    }

    /// True iff the leaves read `1, 2, ..., n` from left to right.
    pub fn is_bracketing(&self) -> bool {
        self.leaves().zip(1..).all(|(v, i)| v == i)
    }

    /// The same shape with the `j`-th leaf (left to right) relabeled `labels[j]`.
    ///
    /// `labels` must hold one label per leaf; distinctness is the caller's job.
    pub fn relabel(&self, labels: &[Var]) -> TermTree {
        let mut next = labels.iter();
        let nodes = self
            .nodes
            .iter()
            .map(|n| match n {
                Node::Leaf(_) => Node::Leaf(*next.next().expect("one label per leaf")),
                b => *b,
            })
            .collect();
        TermTree { nodes }
    }

    /// The same shape relabeled `1..=n` from left to right.
    pub fn underlying_bracketing(&self) -> TermTree {
        let labels: Vec<Var> = (1..=self.leaf_count() as Var).collect();
        self.relabel(&labels)
    }

    /// Mirror image: every `(s t)` becomes `(t' s')`.
    pub fn mirror(&self) -> TermTree {
        fn build(t: &TermTree, i: usize) -> TermTree {
            match t.nodes[i] {
                Node::Leaf(v) => TermTree::leaf(v),
                Node::Branch(l, r) => TermTree::join_unchecked(&build(t, r as usize), &build(t, l as usize)),
            }
        }
        build(self, self.root())
    }

    /// Left and right subtrees of the root, or `None` for a leaf.
    pub fn split(&self) -> Option<(TermTree, TermTree)> {
        match self.nodes[self.root()] {
            Node::Leaf(_) => None,
            Node::Branch(l, _) => {
                let cut = l as usize + 1;
                let left = TermTree { nodes: self.nodes[..cut].to_vec() };
                let right = TermTree {
                    nodes: self.nodes[cut..self.root()]
                        .iter()
                        .map(|n| match *n {
                            Node::Branch(a, b) => Node::Branch(a - cut as u32, b - cut as u32),
                            leaf => leaf,
                        })
                        .collect(),
                };
                Some((left, right))
            }
        }
    }

    fn fmt_node(&self, i: usize, out: &mut String) {
        match self.nodes[i] {
            Node::Leaf(v) => {
                out.push('x');
                out.push_str(&v.to_string());
            }
            Node::Branch(l, r) => {
                out.push('(');
                self.fmt_node(l as usize, out);
                out.push(' ');
                self.fmt_node(r as usize, out);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for TermTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(self.nodes.len() * 4);
        self.fmt_node(self.root(), &mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for TermTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TermTree({self})")
    }
}

impl std::str::FromStr for TermTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_term(s)
    }
}
