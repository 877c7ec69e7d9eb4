//! Byte encodings of trees up to various equivalences.

use std::fmt;

use super::{Node, TermTree, Var};

const LEAF: u8 = 0x00;
const NODE: u8 = 0x01;
const PVERTEX: u8 = 0x02;

/// Self-delimiting byte code; two trees get equal codes iff they are
/// equivalent under the relation the code was built for.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn push_varint(out: &mut Vec<u8>, mut v: u32) {
    while v >= 0x80 {
        out.push((v as u8) | 0x80);
        v >>= 7;
    }
    out.push(v as u8);
}

/// Code of the underlying unordered tree: children of every node are sorted.
pub fn unordered_code(t: &TermTree) -> CanonicalCode {
    let mut out = Vec::with_capacity(3 * t.nodes().len());
    write_unordered(t.nodes(), t.root(), &mut out);
    CanonicalCode(out)
}

pub(crate) fn write_unordered(nodes: &[Node], i: usize, out: &mut Vec<u8>) {
    match nodes[i] {
        Node::Leaf(v) => {
            out.push(LEAF);
            push_varint(out, v);
        }
        Node::Branch(l, r) => {
            out.push(NODE);
            let start = out.len();
            write_unordered(nodes, l as usize, out);
            let mid = out.len();
            write_unordered(nodes, r as usize, out);
            if out[start..mid] > out[mid..] {
                out[start..].rotate_left(mid - start);
            }
        }
    }
}

/// Preorder encoding of the ordered tree; equal iff the terms are identical.
pub fn exact_code(t: &TermTree) -> CanonicalCode {
    let mut out = Vec::with_capacity(3 * t.nodes().len());
    write_exact(t.nodes(), t.root(), &mut out);
    CanonicalCode(out)
}

fn write_exact(nodes: &[Node], i: usize, out: &mut Vec<u8>) {
    match nodes[i] {
        Node::Leaf(v) => {
            out.push(LEAF);
            push_varint(out, v);
        }
        Node::Branch(l, r) => {
            out.push(NODE);
            write_exact(nodes, l as usize, out);
            write_exact(nodes, r as usize, out);
        }
    }
}

/// Left-to-right leaf labels.
pub fn leaf_order_code(t: &TermTree) -> CanonicalCode {
    let mut out = Vec::with_capacity(t.leaf_count());
    for v in t.leaves() {
        push_varint(&mut out, v);
    }
    CanonicalCode(out)
}

/// Rooted tree on the variables of a term, read off its leftmost decomposition
/// `t = ((..((x t1) t2)..) tk)`: the root is `x` and the children are the
/// trees of `t1, ..., tk`, in that order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PTree {
    label: Var,
    children: Vec<PTree>,
}

impl PTree {
    pub fn new(label: Var, children: Vec<PTree>) -> Self {
        PTree { label, children }
    }

    pub fn label(&self) -> Var {
        self.label
    }

    pub fn children(&self) -> &[PTree] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(PTree::vertex_count).sum::<usize>()
    }

    /// Code of the unordered version of this tree.
    pub fn code(&self) -> CanonicalCode {
        let mut out = Vec::new();
        self.write_code(&mut out);
        CanonicalCode(out)
    }

    fn write_code(&self, out: &mut Vec<u8>) {
        out.push(PVERTEX);
        push_varint(out, self.label);
        push_varint(out, self.children.len() as u32);
        let mut kids: Vec<Vec<u8>> = self
            .children
            .iter()
            .map(|c| {
                let mut b = Vec::new();
                c.write_code(&mut b);
                b
            })
            .collect();
        kids.sort_unstable();
        for k in kids {
            out.extend_from_slice(&k);
        }
    }
}

impl fmt::Display for PTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.label)?;
        if !self.children.is_empty() {
            f.write_str("[")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PTree({self})")
    }
}

pub fn p_tree(t: &TermTree) -> PTree {
    build_p_tree(t.nodes(), t.root())
}

fn build_p_tree(nodes: &[Node], mut i: usize) -> PTree {
    // walk the left spine, collecting factors from the top down
    let mut factors = Vec::new();
    let label = loop {
        match nodes[i] {
            Node::Leaf(v) => break v,
            Node::Branch(l, r) => {
                factors.push(r as usize);
                i = l as usize;
            }
        }
    };
    let children = factors.into_iter().rev().map(|f| build_p_tree(nodes, f)).collect();
    PTree { label, children }
}

/// Code of the unordered P-tree of `t`.
pub fn p_tree_code(t: &TermTree) -> CanonicalCode {
    let mut out = Vec::with_capacity(3 * t.leaf_count());
    write_p_code(t.nodes(), t.root(), &mut out, &mut Vec::new());
    CanonicalCode(out)
}

fn write_p_code(nodes: &[Node], mut i: usize, out: &mut Vec<u8>, scratch: &mut Vec<u8>) {
    let mut factors = Vec::new();
    let label = loop {
        match nodes[i] {
            Node::Leaf(v) => break v,
            Node::Branch(l, r) => {
                factors.push(r as usize);
                i = l as usize;
            }
        }
    };
    out.push(PVERTEX);
    push_varint(out, label);
    push_varint(out, factors.len() as u32);
    if factors.is_empty() {
        return;
    }
    let base = out.len();
    let mut bounds = Vec::with_capacity(factors.len());
    for f in factors {
        let s = out.len();
        write_p_code(nodes, f, out, scratch);
        bounds.push(s - base..out.len() - base);
    }
    if bounds.len() > 1 {
        scratch.clear();
        scratch.extend_from_slice(&out[base..]);
        bounds.sort_unstable_by(|a, b| scratch[a.clone()].cmp(&scratch[b.clone()]));
        out.truncate(base);
        for r in bounds {
            out.extend_from_slice(&scratch[r]);
        }
    }
}
