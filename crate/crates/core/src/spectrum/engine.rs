//! Class counting over `B_n` and `F_n` by orbits of variable permutations.
//!
//! Renaming variables preserves equality of term operations, so if two
//! bracketings agree then so do their relabelings by any permutation. The
//! engine therefore keys `B_n` first and, for `F_n`, only relabels one
//! bracketing per class. Keys of relabeled terms are derived from the
//! bracketing's key by a permutation of coordinates, without re-evaluation.

use rayon::prelude::*;

use super::keyset::KeySet;
use crate::terms::perm::{factorial, inverse_positions, next_permutation, unrank};
use crate::terms::{Bracketings, TermTree, Var};

/// What the coordinates of a positional key range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PointSpace {
    /// One coordinate per variable.
    Variables,
    /// One coordinate per assignment in `{0..q}^n`, first variable most significant.
    Tuples(usize),
}

/// A key per bracketing, as a vector of small value ids over a point space.
pub(crate) struct Positional {
    pub space: PointSpace,
    pub values: Vec<Vec<u32>>,
    /// Number of distinct value ids in use.
    pub distinct: usize,
}

pub(crate) type CodeFn<'a> = dyn Fn(&TermTree, &mut Vec<u8>) + Sync + 'a;

pub(crate) enum Keying<'a> {
    Positional(Positional),
    /// Keys computed from each relabeled term.
    Coded(&'a CodeFn<'a>),
}

pub(crate) struct Classification {
    /// Smallest member index of each class, ascending.
    pub reps: Vec<u64>,
    /// Members of each class (ascending), in the order of `reps`.
    pub members: Option<Vec<Vec<u64>>>,
}

fn entry_width(distinct: usize) -> usize {
    match distinct {
        0..=256 => 1,
        257..=65536 => 2,
        _ => 4,
    }
}

/// `src` such that the relabeled term's coordinate `i` is the bracketing's coordinate `src[i]`.
fn gather_map(space: PointSpace, n: usize, perm: &[Var], out: &mut Vec<usize>) {
    let inv = inverse_positions(perm);
    out.clear();
    match space {
        PointSpace::Variables => out.extend_from_slice(&inv),
        PointSpace::Tuples(q) => {
            // the value of variable v lands on leaf position inv[v - 1]
            let weights: Vec<usize> = inv.iter().map(|&j| q.pow((n - 1 - j) as u32)).collect();
            let points = q.pow(n as u32);
            let mut digits = vec![0usize; n];
            let mut acc = 0usize;
            for _ in 0..points {
                out.push(acc);
                for i in (0..n).rev() {
                    digits[i] += 1;
                    acc += weights[i];
                    if digits[i] < q {
                        break;
                    }
                    digits[i] = 0;
                    acc -= q * weights[i];
                }
            }
        }
    }
}

fn push_entries(vals: &[u32], src: Option<&[usize]>, width: usize, out: &mut Vec<u8>) {
    out.clear();
    let mut put = |x: u32| out.extend_from_slice(&x.to_le_bytes()[..width]);
    match src {
        Some(src) => src.iter().for_each(|&s| put(vals[s])),
        None => vals.iter().for_each(|&x| put(x)),
    }
}

struct Engine<'a> {
    brs: &'a Bracketings,
    keying: &'a Keying<'a>,
    width: usize,
}

impl Engine<'_> {
    fn bracket_key(&self, b: usize, out: &mut Vec<u8>) {
        match self.keying {
            Keying::Positional(p) => push_entries(&p.values[b], None, self.width, out),
            Keying::Coded(f) => {
                out.clear();
                f(self.brs.get(b), out)
            }
        }
    }

    fn term_key(&self, b: usize, perm: &[Var], src: &[usize], out: &mut Vec<u8>) {
        match self.keying {
            Keying::Positional(p) => push_entries(&p.values[b], Some(src), self.width, out),
            Keying::Coded(f) => {
                out.clear();
                f(&self.brs.get(b).relabel(perm), out)
            }
        }
    }

    fn prepare(&self, perm: &[Var], src: &mut Vec<usize>) {
        if let Keying::Positional(p) = self.keying {
            gather_map(p.space, self.brs.n(), perm, src);
        }
    }
}

fn rank_chunks(total: u64, jobs: usize) -> Vec<(u64, u64)> {
    let pieces = (jobs as u64 * 4).clamp(1, total);
    (0..pieces).map(|i| (total * i / pieces, total * (i + 1) / pieces)).collect()
}

pub(crate) fn classify(brs: &Bracketings, full: bool, keying: &Keying<'_>, jobs: usize, fine: bool) -> Classification {
    let width = match keying {
        Keying::Positional(p) => entry_width(p.distinct),
        Keying::Coded(_) => 0,
    };
    let eng = Engine { brs, keying, width };
    let n = brs.n();

    // B_n first; slots come out in order of their smallest bracketing
    let mut assoc = KeySet::new();
    let mut buf = Vec::new();
    let assoc_slot: Vec<usize> = (0..brs.len())
        .map(|b| {
            eng.bracket_key(b, &mut buf);
            assoc.insert(&buf, b as u64)
        })
        .collect();
    let class_reps: Vec<usize> = (0..assoc.len()).map(|s| assoc.rep(s) as usize).collect();

    if !full {
        let members = fine.then(|| {
            let mut m = vec![Vec::new(); assoc.len()];
            for (b, &s) in assoc_slot.iter().enumerate() {
                m[s].push(b as u64);
            }
            m
        });
        return Classification { reps: class_reps.iter().map(|&b| b as u64).collect(), members };
    }

    let nf = factorial(n);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("worker pool");
    let chunks = rank_chunks(nf, jobs.max(1));

    let locals: Vec<KeySet> = pool.install(|| {
        chunks
            .par_iter()
            .map(|&(lo, hi)| {
                let mut set = KeySet::new();
                let mut perm = unrank(lo, n);
                let (mut src, mut buf) = (Vec::new(), Vec::new());
                for r in lo..hi {
                    eng.prepare(&perm, &mut src);
                    for &b in &class_reps {
                        eng.term_key(b, &perm, &src, &mut buf);
                        set.insert(&buf, b as u64 * nf + r);
                    }
                    next_permutation(&mut perm);
                }
                set
            })
            .collect()
    });
    let mut global = KeySet::new();
    for set in locals {
        global.merge(set);
    }

    let mut order: Vec<usize> = (0..global.len()).collect();
    order.sort_unstable_by_key(|&s| global.rep(s));
    let reps: Vec<u64> = order.iter().map(|&s| global.rep(s)).collect();
    if !fine {
        return Classification { reps, members: None };
    }

    let mut position = vec![0u32; global.len()];
    for (i, &s) in order.iter().enumerate() {
        position[s] = i as u32;
    }
    let c = class_reps.len();
    // ids[r * c + a]: class of the relabeling of assoc class a by rank r
    let ids: Vec<u32> = pool.install(|| {
        chunks
            .par_iter()
            .flat_map_iter(|&(lo, hi)| {
                let mut out = Vec::with_capacity(((hi - lo) as usize) * c);
                let mut perm = unrank(lo, n);
                let (mut src, mut buf) = (Vec::new(), Vec::new());
                for _ in lo..hi {
                    eng.prepare(&perm, &mut src);
                    for &b in &class_reps {
                        eng.term_key(b, &perm, &src, &mut buf);
                        let slot = global.find(&buf).expect("every key was inserted");
                        out.push(position[slot]);
                    }
                    next_permutation(&mut perm);
                }
                out
            })
            .collect()
    });
    let mut members = vec![Vec::new(); reps.len()];
    for (b, &a) in assoc_slot.iter().enumerate() {
        for r in 0..nf {
            members[ids[r as usize * c + a] as usize].push(b as u64 * nf + r);
        }
    }
    Classification { reps, members: Some(members) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gather_map_variables_is_inverse() {
        let mut src = Vec::new();
        gather_map(PointSpace::Variables, 3, &[2, 3, 1], &mut src);
        assert_eq!(src, [2, 0, 1]);
    }

    #[test]
    fn gather_map_tuples_composes_assignment() {
        // leaf j carries variable perm[j]; binary digits, x1 most significant
        let perm = [2, 3, 1];
        let mut src = Vec::new();
        gather_map(PointSpace::Tuples(2), 3, &perm, &mut src);
        for (idx, &s) in src.iter().enumerate() {
            let a = |v: usize| (idx >> (3 - v)) & 1;
            let c: Vec<usize> = perm.iter().map(|&v| a(v as usize)).collect();
            assert_eq!(s, c[0] * 4 + c[1] * 2 + c[2]);
        }
    }

    #[test]
    fn chunks_cover_range() {
        for total in [1u64, 2, 6, 24, 5040] {
            for jobs in [1, 3, 8] {
                let ch = rank_chunks(total, jobs);
                assert_eq!(ch[0].0, 0);
                assert_eq!(ch.last().unwrap().1, total);
                assert!(ch.windows(2).all(|w| w[0].1 == w[1].0 && w[0].0 < w[0].1));
            }
        }
    }

    #[test]
    fn entry_widths() {
        assert_eq!(entry_width(2), 1);
        assert_eq!(entry_width(256), 1);
        assert_eq!(entry_width(257), 2);
        assert_eq!(entry_width(70_000), 4);
    }
}
