//! Depth-based and structural equivalences of terms, decided on trees alone.
//!
//! Counting uses the same orbit engine as the spectra: every relation here is
//! preserved by renaming variables, so `B_n` is keyed once and each class is
//! relabeled by every permutation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::spectrum::{classify, Keying, PointSpace, Positional, SpectrumKind, SpectrumOptions};
use crate::terms::{
    depth_profile, exact_code, leaf_order_code, p_tree_code, unordered_code, Bracketings, DepthProfile, TermTree,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationId {
    /// Right depths congruent mod `k`.
    KRightDepth(u32),
    /// Left depths congruent mod `k`.
    KLeftDepth(u32),
    /// Total depths congruent mod `k`.
    KDepth(u32),
    /// Left depths mod `k` and right depths mod `l`.
    KLDepth(u32, u32),
    CommutativeUnordered,
    PTreeUnordered,
    SyntacticEquality,
    LeafOrder,
}

/// Which terms are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    Bracketings,
    FullLinearTerms,
}

impl From<SpectrumKind> for Universe {
    fn from(k: SpectrumKind) -> Self {
        match k {
            SpectrumKind::Assoc => Universe::Bracketings,
            SpectrumKind::Ac => Universe::FullLinearTerms,
        }
    }
}

impl Universe {
    /// Largest default `n` for [`class_count`].
    pub fn cap(self) -> usize {
        match self {
            Universe::Bracketings => 12,
            Universe::FullLinearTerms => 8,
        }
    }
}

impl RelationId {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            RelationId::KRightDepth(k) | RelationId::KLeftDepth(k) | RelationId::KDepth(k) => k >= 1,
            RelationId::KLDepth(k, l) => k >= 1 && l >= 1,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::validation(format!("{self}: moduli must be at least 1")))
        }
    }

    /// Residue classes per variable, for the depth relations.
    fn residues(self) -> Option<u32> {
        match self {
            RelationId::KRightDepth(k) | RelationId::KLeftDepth(k) | RelationId::KDepth(k) => Some(k),
            RelationId::KLDepth(k, l) => Some(k * l),
            _ => None,
        }
    }

    /// Per-variable residue ids, in variable order.
    fn residue_key(self, p: &DepthProfile) -> Vec<u32> {
        p.entries()
            .iter()
            .map(|e| match self {
                RelationId::KRightDepth(k) => e.right % k,
                RelationId::KLeftDepth(k) => e.left % k,
                RelationId::KDepth(k) => e.total % k,
                RelationId::KLDepth(k, l) => (e.left % k) * l + e.right % l,
                _ => unreachable!("not a depth relation"),
            })
            .collect()
    }

    fn code(self, t: &TermTree, out: &mut Vec<u8>) {
        let c = match self {
            RelationId::CommutativeUnordered => unordered_code(t),
            RelationId::PTreeUnordered => p_tree_code(t),
            RelationId::SyntacticEquality => exact_code(t),
            RelationId::LeafOrder => leaf_order_code(t),
            _ => unreachable!("depth relations are keyed by residues"),
        };
        out.extend_from_slice(c.as_bytes());
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationId::KRightDepth(k) => write!(f, "right-depth:{k}"),
            RelationId::KLeftDepth(k) => write!(f, "left-depth:{k}"),
            RelationId::KDepth(k) => write!(f, "depth:{k}"),
            RelationId::KLDepth(k, l) => write!(f, "left-right-depth:{k},{l}"),
            RelationId::CommutativeUnordered => f.write_str("unordered"),
            RelationId::PTreeUnordered => f.write_str("p-tree"),
            RelationId::SyntacticEquality => f.write_str("syntactic"),
            RelationId::LeafOrder => f.write_str("leaf-order"),
        }
    }
}

impl FromStr for RelationId {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown relation {s:?}"));
        let modulus = |x: &str| x.trim().parse::<u32>().map_err(|_| bad());
        let r = match s.split_once(':') {
            None => match s {
                "unordered" => RelationId::CommutativeUnordered,
                "p-tree" => RelationId::PTreeUnordered,
                "syntactic" => RelationId::SyntacticEquality,
                "leaf-order" => RelationId::LeafOrder,
                _ => return Err(bad()),
            },
            Some(("right-depth", k)) => RelationId::KRightDepth(modulus(k)?),
            Some(("left-depth", k)) => RelationId::KLeftDepth(modulus(k)?),
            Some(("depth", k)) => RelationId::KDepth(modulus(k)?),
            Some(("left-right-depth", kl)) => {
                let (k, l) = kl.split_once(',').ok_or_else(bad)?;
                RelationId::KLDepth(modulus(k)?, modulus(l)?)
            }
            Some(_) => return Err(bad()),
        };
        r.validate()
    }
}

pub fn are_equivalent(r: RelationId, s: &TermTree, t: &TermTree) -> Result<bool> {
    r.validate()?;
    if s.variables() != t.variables() {
        return Err(Error::validation(format!("{s} and {t} have different variable sets")));
    }
    Ok(match r {
        RelationId::LeafOrder => s.leaves().eq(t.leaves()),
        _ if r.residues().is_some() => r.residue_key(&depth_profile(s)) == r.residue_key(&depth_profile(t)),
        _ => {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            r.code(s, &mut a);
            r.code(t, &mut b);
            a == b
        }
    })
}

pub fn class_count(r: RelationId, n: usize, universe: Universe) -> Result<u64> {
    class_count_with(r, n, universe, &SpectrumOptions::default())
}

/// [`class_count`] with explicit worker count and caps.
pub fn class_count_with(r: RelationId, n: usize, universe: Universe, opts: &SpectrumOptions) -> Result<u64> {
    r.validate()?;
    if n == 0 {
        return Err(Error::validation("n must be at least 1"));
    }
    opts.limits.check("class count", n, universe.cap())?;
    let brs = Bracketings::new(n, &opts.limits)?;
    let code = |t: &TermTree, out: &mut Vec<u8>| r.code(t, out);
    let keying = match r.residues() {
        Some(distinct) => Keying::Positional(Positional {
            space: PointSpace::Variables,
            values: brs.as_slice().iter().map(|b| r.residue_key(&depth_profile(b))).collect(),
            distinct: distinct as usize,
        }),
        None => Keying::Coded(&code),
    };
    let c = classify(&brs, universe == Universe::FullLinearTerms, &keying, opts.jobs, false);
    Ok(c.reps.len() as u64)
}

/// Class counts for `n = 1..=n_max`.
pub fn class_counts(r: RelationId, n_max: usize, universe: Universe, opts: &SpectrumOptions) -> Result<Vec<u64>> {
    (1..=n_max).map(|n| class_count_with(r, n, universe, opts)).collect()
}

/// Smallest `offset` among `offsets` such that `listed[i]` is the value at
/// `n = i + 1 + offset`, given `computed[j]` for `n = j + 1`.
pub fn align_offset(computed: &[u64], listed: &[u64], offsets: &[usize]) -> Option<usize> {
    offsets.iter().copied().find(|&o| computed.len() >= o + listed.len() && computed[o..o + listed.len()] == *listed)
}
