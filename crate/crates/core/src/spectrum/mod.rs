//! Associative and ac-spectra: counting the distinct operations induced by
//! the bracketings `B_n` or by all full linear terms `F_n`.

mod engine;
mod exponent;
mod fingerprint;
mod keyset;

pub use exponent::{
    exponentiation_sanity, SanityReport, AGREEMENT_TOLERANCE, MAX_N as SANITY_MAX_N, SEPARATION_THRESHOLD,
};
pub use fingerprint::Fingerprint;

pub(crate) use engine::{classify, Keying, PointSpace, Positional};

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::groupoids::{Assignment, Element, GroupoidSpec, Scalar, Transport};
use crate::limits::Limits;
use crate::terms::perm::{factorial, unrank};
use crate::terms::{Bracketings, TermTree, Var};
use fingerprint::{fingerprint_unchecked, standard_arity, structural_code, table_values};

/// Which term set a spectrum ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectrumKind {
    /// Bracketings `B_n`.
    Assoc,
    /// Full linear terms `F_n`.
    Ac,
}

impl SpectrumKind {
    pub fn name(self) -> &'static str {
        match self {
            SpectrumKind::Assoc => "assoc",
            SpectrumKind::Ac => "ac",
        }
    }

    /// Size of the term set at `n`.
    pub fn universe_size(self, n: usize) -> u64 {
        let c = crate::formulas::catalan(n as u32 - 1);
        let c: u64 = c.try_into().expect("universe size fits u64");
        match self {
            SpectrumKind::Assoc => c,
            SpectrumKind::Ac => c * factorial(n),
        }
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpectrumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "assoc" => Ok(SpectrumKind::Assoc),
            "ac" => Ok(SpectrumKind::Ac),
            _ => Err(Error::Parse(format!("unknown spectrum kind {s:?} (expected assoc or ac)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumOptions {
    /// Worker threads; results do not depend on it.
    pub jobs: usize,
    pub limits: Limits,
    /// Materialize one representative term per class.
    pub representatives: bool,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions { jobs: 1, limits: Limits::default(), representatives: false }
    }
}

impl SpectrumOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        SpectrumOptions { jobs, ..Default::default() }
    }
}

/// Default largest `n` for spectra of `g`.
pub fn spectrum_cap(g: &GroupoidSpec) -> usize {
    fn fits(q: usize, cap: usize) -> usize {
        // largest n <= cap with q^n <= 4096
        (1..=cap).take_while(|&n| (q as u128).pow(n as u32) <= 4096).last().unwrap_or(1)
    }
    match g {
        GroupoidSpec::FiniteTable(t) => match t.size() {
            0..=2 => 7,
            3 | 4 => 6,
            q => fits(q, 6),
        },
        GroupoidSpec::Linear(_) => 8,
        GroupoidSpec::Bilinear(b) => fits(b.dimension(), 6),
        GroupoidSpec::Structural(_) => 8,
    }
}

fn check_cap(g: &GroupoidSpec, n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::validation("n must be at least 1"));
    }
    limits.check("spectrum", n, spectrum_cap(g))?;
    limits.check("enumeration", n, Limits::ENUMERATION_CAP)
}

/// Fingerprint of a term over exactly `x1..xn`.
pub fn fingerprint(g: &GroupoidSpec, t: &TermTree) -> Result<Fingerprint> {
    fingerprint_with(g, t, &Limits::default())
}

pub fn fingerprint_with(g: &GroupoidSpec, t: &TermTree, limits: &Limits) -> Result<Fingerprint> {
    let n = standard_arity(t)?;
    check_cap(g, n, limits)?;
    fingerprint_unchecked(g, t, n)
}

/// Dense ids for hashable values, in order of first appearance.
struct Interner<T>(HashMap<T, u32>);

impl<T: Hash + Eq> Interner<T> {
    fn new() -> Self {
        Interner(HashMap::new())
    }

    fn id(&mut self, v: T) -> u32 {
        let next = self.0.len() as u32;
        *self.0.entry(v).or_insert(next)
    }
}

/// Keys of every bracketing in the form the engine permutes.
fn groupoid_keying<'a>(g: &'a GroupoidSpec, brs: &Bracketings, code: &'a engine::CodeFn<'a>) -> Result<Keying<'a>> {
    let n = brs.n();
    Ok(match g {
        GroupoidSpec::FiniteTable(ft) => Keying::Positional(Positional {
            space: PointSpace::Tuples(ft.size()),
            values: brs.as_slice().iter().map(|b| table_values(ft, b, n)).collect(),
            distinct: ft.size(),
        }),
        GroupoidSpec::Linear(_) | GroupoidSpec::Bilinear(_) => {
            let mut scalars = Interner::new();
            let mut vectors = Interner::new();
            let mut values = Vec::with_capacity(brs.len());
            for b in brs.as_slice() {
                values.push(match fingerprint_unchecked(g, b, n)? {
                    Fingerprint::Linear(v) => v.into_iter().map(|s| scalars.id(s)).collect(),
                    Fingerprint::Multilinear(v) => v.into_iter().map(|x| vectors.id(x)).collect(),
                    _ => unreachable!(),
                });
            }
            let (space, distinct) = match g {
                GroupoidSpec::Bilinear(bl) => (PointSpace::Tuples(bl.dimension()), vectors.0.len()),
                _ => (PointSpace::Variables, scalars.0.len()),
            };
            Keying::Positional(Positional { space, values, distinct })
        }
        GroupoidSpec::Structural(_) => Keying::Coded(code),
    })
}

/// One row of a spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub n: usize,
    pub kind: SpectrumKind,
    pub count: u64,
    /// One term per class, the first in enumeration order; classes sorted by it.
    pub representatives: Option<Vec<TermTree>>,
}

impl SpectrumEntry {
    /// `count / n!`, the coefficient of `t^n` in the exponential generating series.
    pub fn per_factorial(&self) -> BigRational {
        BigRational::new(BigInt::from(self.count), BigInt::from(factorial(self.n)))
    }
}

/// The spectrum of `g` for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub groupoid: String,
    pub kind: SpectrumKind,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumReport {
    pub fn compute(
        id: &str,
        g: &GroupoidSpec,
        kind: SpectrumKind,
        n_max: usize,
        opts: &SpectrumOptions,
    ) -> Result<Self> {
        let entries = (1..=n_max).map(|n| spectrum(g, n, kind, opts)).collect::<Result<_>>()?;
        Ok(SpectrumReport { groupoid: id.to_string(), kind, entries })
    }

    pub fn counts(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.count).collect()
    }
}

/// Materializes term `index` of the `kind` universe at `n`.
pub fn term_at(brs: &Bracketings, kind: SpectrumKind, index: u64) -> TermTree {
    match kind {
        SpectrumKind::Assoc => brs.get(index as usize).clone(),
        SpectrumKind::Ac => {
            let nf = factorial(brs.n());
            brs.get((index / nf) as usize).relabel(&unrank(index % nf, brs.n()))
        }
    }
}

fn run(
    g: &GroupoidSpec,
    n: usize,
    kind: SpectrumKind,
    opts: &SpectrumOptions,
    fine: bool,
) -> Result<(Bracketings, engine::Classification)> {
    check_cap(g, n, &opts.limits)?;
    let brs = Bracketings::new(n, &opts.limits)?;
    let code = |t: &TermTree, out: &mut Vec<u8>| {
        if let GroupoidSpec::Structural(s) = g {
            out.extend_from_slice(structural_code(s, t).as_bytes());
        }
    };
    let keying = groupoid_keying(g, &brs, &code)?;
    let c = classify(&brs, kind == SpectrumKind::Ac, &keying, opts.jobs, fine);
    Ok((brs, c))
}

pub fn spectrum(g: &GroupoidSpec, n: usize, kind: SpectrumKind, opts: &SpectrumOptions) -> Result<SpectrumEntry> {
    let (brs, c) = run(g, n, kind, opts, false)?;
    let representatives = opts.representatives.then(|| c.reps.iter().map(|&i| term_at(&brs, kind, i)).collect());
    Ok(SpectrumEntry { n, kind, count: c.reps.len() as u64, representatives })
}

/// Number of distinct operations induced by `F_n`.
pub fn ac_spectrum(g: &GroupoidSpec, n: usize) -> Result<SpectrumEntry> {
    spectrum(g, n, SpectrumKind::Ac, &SpectrumOptions::default())
}

/// Number of distinct operations induced by `B_n`.
pub fn assoc_spectrum(g: &GroupoidSpec, n: usize) -> Result<SpectrumEntry> {
    spectrum(g, n, SpectrumKind::Assoc, &SpectrumOptions::default())
}

/// A partition of the enumerated terms into operation classes.
#[derive(Clone, Debug)]
pub struct FineSpectrum {
    pub n: usize,
    pub kind: SpectrumKind,
    /// Term indices per class, each ascending; classes ordered by first member.
    pub classes: Vec<Vec<u64>>,
    brs: Bracketings,
}

impl FineSpectrum {
    pub fn term(&self, index: u64) -> TermTree {
        term_at(&self.brs, self.kind, index)
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Class number of every term, by term index.
    pub fn labels(&self) -> Vec<u32> {
        let total: usize = self.classes.iter().map(Vec::len).sum();
        let mut out = vec![0u32; total];
        for (c, members) in self.classes.iter().enumerate() {
            for &i in members {
                out[i as usize] = c as u32;
            }
        }
        out
    }
}

pub fn fine_spectrum(g: &GroupoidSpec, n: usize, kind: SpectrumKind, opts: &SpectrumOptions) -> Result<FineSpectrum> {
    check_cap(g, n, &opts.limits)?;
    let terms = kind.universe_size(n);
    let cap = Limits::FINE_TERM_CAP;
    if terms > cap {
        return Err(Error::Size { what: "fine spectrum terms", n: terms as usize, cap: cap as usize });
    }
    let (brs, c) = run(g, n, kind, opts, true)?;
    Ok(FineSpectrum { n, kind, classes: c.members.expect("fine run keeps members"), brs })
}

/// Candidate assignments for separating two terms, in search order.
fn candidates(g: &GroupoidSpec, vars: &[Var]) -> Result<Vec<Assignment>> {
    let tuples = |q: usize, make: &dyn Fn(usize) -> Element| {
        let k = vars.len();
        (0..q.pow(k as u32))
            .map(|mut idx| {
                let mut digits = vec![0usize; k];
                for d in digits.iter_mut().rev() {
                    *d = idx % q;
                    idx /= q;
                }
                vars.iter().zip(digits).map(|(&v, d)| (v, make(d))).collect()
            })
            .collect()
    };
    match g {
        GroupoidSpec::FiniteTable(t) => Ok(tuples(t.size(), &|d| Element::Finite(d as u32))),
        GroupoidSpec::Bilinear(b) => Ok(tuples(b.dimension(), &|d| Element::Vector(b.unit(d)))),
        GroupoidSpec::Linear(l) => {
            let k = l.order;
            let (on, off) = match l.transport {
                Transport::Identity => (Scalar::one(k), Scalar::zero(k)),
                Transport::Reciprocal => (Scalar::rational(1, 2), Scalar::one(k)),
            };
            let mut out = Vec::new();
            if l.transport == Transport::Reciprocal {
                out.push(vars.iter().map(|&v| (v, Element::Scalar(Scalar::one(k)))).collect());
            }
            for &j in vars {
                out.push(
                    vars.iter().map(|&v| (v, Element::Scalar(if v == j { on.clone() } else { off.clone() }))).collect(),
                );
            }
            Ok(out)
        }
        GroupoidSpec::Structural(_) => {
            Err(Error::Unsupported("structural groupoids have no pointwise witnesses".into()))
        }
    }
}

/// First assignment (in a fixed search order) on which `s` and `t` differ.
///
/// The search space is complete for each kind, so `None` means the terms
/// induce the same operation.
pub fn separation_witness(g: &GroupoidSpec, s: &TermTree, t: &TermTree) -> Result<Option<Assignment>> {
    let vars = s.variables();
    if vars != t.variables() {
        return Err(Error::validation(format!("{s} and {t} have different variables")));
    }
    for h in candidates(g, &vars)? {
        if crate::groupoids::eval(g, s, &h)? != crate::groupoids::eval(g, t, &h)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
