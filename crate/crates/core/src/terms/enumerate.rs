//! Deterministic enumeration of bracketings and full linear terms.
//!
//! Bracketings of `n` leaves are produced by split position: left subtree
//! size `1, ..., n - 1`, then every left shape, then every right shape. Full
//! linear terms are indexed bracketing-major: term `b * n! + r` is bracketing
//! `b` with its leaves relabeled by the permutation of lexicographic rank `r`.

use super::perm::{factorial, next_permutation, unrank};
use super::{TermTree, Var};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// The `C_{n-1}` bracketings over `x1..xn`, in enumeration order.
#[derive(Clone, Debug)]
pub struct Bracketings {
    n: usize,
    trees: Vec<TermTree>,
}

impl Bracketings {
    pub fn new(n: usize, limits: &Limits) -> Result<Self> {
        check_n("bracketings", n, limits)?;
        Ok(Bracketings { n, trees: build(n) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn get(&self, index: usize) -> &TermTree {
        &self.trees[index]
    }

    pub fn as_slice(&self) -> &[TermTree] {
        &self.trees
    }

    pub fn into_vec(self) -> Vec<TermTree> {
        self.trees
    }
}

fn check_n(what: &'static str, n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::validation(format!("{what}: n must be at least 1")));
    }
    limits.check(what, n, Limits::ENUMERATION_CAP)
}

fn build(n: usize) -> Vec<TermTree> {
    // by_size[k] holds the shapes with k leaves labeled 1..=k
    let mut by_size: Vec<Vec<TermTree>> = vec![Vec::new(), vec![TermTree::leaf(1)]];
    for size in 2..=n {
        let mut out = Vec::new();
        for k in 1..size {
            for l in &by_size[k] {
                for r in &by_size[size - k] {
                    let shifted: Vec<Var> = (k as Var + 1..=size as Var).collect();
                    out.push(TermTree::join_unchecked(l, &r.relabel(&shifted)));
                }
            }
        }
        by_size.push(out);
    }
    by_size.swap_remove(n)
}

/// Enumerates `B_n` with the default caps.
pub fn enumerate_bracketings(n: usize) -> Result<Vec<TermTree>> {
    Ok(Bracketings::new(n, &Limits::default())?.into_vec())
}

/// Enumerates `F_n` with the default caps.
pub fn enumerate_full_linear_terms(n: usize) -> Result<FullLinearTerms> {
    FullLinearTerms::new(n, &Limits::default())
}

/// Random-access view of the `n! * C_{n-1}` full linear terms over `x1..xn`.
///
/// Terms are materialized on demand, so even `F_8` (about 17 million terms)
/// can be streamed.
#[derive(Clone, Debug)]
pub struct FullLinearTerms {
    bracketings: Bracketings,
    perms: u64,
}

impl FullLinearTerms {
    pub fn new(n: usize, limits: &Limits) -> Result<Self> {
        check_n("full linear terms", n, limits)?;
        Ok(FullLinearTerms { bracketings: Bracketings { n, trees: build(n) }, perms: factorial(n) })
    }

    pub fn from_bracketings(bracketings: Bracketings) -> Self {
        let perms = factorial(bracketings.n);
        FullLinearTerms { bracketings, perms }
    }

    pub fn n(&self) -> usize {
        self.bracketings.n
    }

    pub fn len(&self) -> u64 {
        self.bracketings.len() as u64 * self.perms
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn permutation_count(&self) -> u64 {
        self.perms
    }

    pub fn bracketings(&self) -> &Bracketings {
        &self.bracketings
    }

    /// Index of the term built from bracketing `b` and permutation rank `r`.
    pub fn index_of(&self, b: usize, r: u64) -> u64 {
        b as u64 * self.perms + r
    }

    /// Splits a term index into (bracketing index, permutation rank).
    pub fn decompose(&self, index: u64) -> (usize, u64) {
        ((index / self.perms) as usize, index % self.perms)
    }

    pub fn get(&self, index: u64) -> TermTree {
        let (b, r) = self.decompose(index);
        self.bracketings.get(b).relabel(&unrank(r, self.n()))
    }

    pub fn iter(&self) -> FullLinearIter<'_> {
        FullLinearIter { terms: self, b: 0, perm: (1..=self.n() as Var).collect(), done: false }
    }
}

impl<'a> IntoIterator for &'a FullLinearTerms {
    type Item = TermTree;
    type IntoIter = FullLinearIter<'a>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

pub struct FullLinearIter<'a> {
    terms: &'a FullLinearTerms,
    b: usize,
    perm: Vec<Var>,
    done: bool,
}

impl Iterator for FullLinearIter<'_> {
    type Item = TermTree;

    fn next(&mut self) -> Option<TermTree> {
        if self.done {
            return None;
        }
        let t = self.terms.bracketings.get(self.b).relabel(&self.perm);
        if !next_permutation(&mut self.perm) {
            self.perm.sort_unstable();
            self.b += 1;
            self.done = self.b == self.terms.bracketings.len();
        }
        Some(t)
    }
}
