//! Numeric spot check of the canonical form used for `a * b = a^b`.
//!
//! Towers overflow `f64` quickly, so values are tracked as `l(v) = ln ln v`
//! (defined for `v > 1`), with `l(a^b) = exp(l(b)) + l(a)`. Tolerances are
//! relative to `max(1, |l1|, |l2|)`. Passing is evidence, not proof.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::terms::{p_tree_code, CanonicalCode, FullLinearTerms, Node, TermTree};

pub const AGREEMENT_TOLERANCE: f64 = 1e-9;
pub const SEPARATION_THRESHOLD: f64 = 1e-6;
pub const MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct SanityReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub terms: usize,
    pub classes: usize,
    /// Largest relative gap seen between terms with equal codes.
    pub max_agreement_gap: f64,
    /// Terms whose code matches their class's first term but whose values do not.
    pub disagreements: Vec<(TermTree, TermTree)>,
    /// Pairs of classes that no sample told apart.
    pub unseparated: Vec<(TermTree, TermTree)>,
}

impl SanityReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.unseparated.is_empty()
    }
}

fn log_log(t: &TermTree, x: &[f64]) -> f64 {
    let mut vals = Vec::with_capacity(t.nodes().len());
    for node in t.nodes() {
        let v = match *node {
            Node::Leaf(v) => x[v as usize - 1].ln().ln(),
            Node::Branch(a, b) => {
                let (la, lb): (f64, f64) = (vals[a as usize], vals[b as usize]);
                lb.exp() + la
            }
        };
        vals.push(v);
    }
    vals.pop().unwrap()
}

fn rel_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

/// Samples `trials` points with distinct coordinates in `(1, 3)^n` and checks
/// both directions of the canonical form over all of `F_n`.
pub fn exponentiation_sanity(n: usize, trials: usize, seed: u64) -> Result<SanityReport> {
    if n == 0 || n > MAX_N {
        return Err(Error::Size { what: "exponentiation sanity", n, cap: MAX_N });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(trials);
    while samples.len() < trials {
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(1.0..3.0)).collect();
        let distinct = (0..n).all(|i| (i + 1..n).all(|j| x[i] != x[j]));
        if distinct && x.iter().all(|&v| v > 1.0) {
            samples.push(x);
        }
    }
    let terms = FullLinearTerms::new(n, &Default::default())?;
    let mut classes: BTreeMap<CanonicalCode, (TermTree, Vec<f64>)> = BTreeMap::new();
    let mut disagreements = Vec::new();
    let mut max_gap = 0f64;
    for t in terms.iter() {
        let vals: Vec<f64> = samples.iter().map(|x| log_log(&t, x)).collect();
        let code = p_tree_code(&t);
        match classes.get(&code) {
            Some((first, fv)) => {
                let gap = fv.iter().zip(&vals).map(|(&a, &b)| rel_gap(a, b)).fold(0f64, f64::max);
                max_gap = max_gap.max(gap);
                if gap > AGREEMENT_TOLERANCE {
                    disagreements.push((first.clone(), t));
                }
            }
            None => {
                classes.insert(code, (t, vals));
            }
        }
    }
    let reps: Vec<&(TermTree, Vec<f64>)> = classes.values().collect();
    let mut unseparated = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let separated = reps[i].1.iter().zip(&reps[j].1).any(|(&a, &b)| rel_gap(a, b) > SEPARATION_THRESHOLD);
            if !separated {
                unseparated.push((reps[i].0.clone(), reps[j].0.clone()));
            }
        }
    }
    Ok(SanityReport {
        n,
        trials,
        seed,
        terms: terms.len() as usize,
        classes: reps.len(),
        max_agreement_gap: max_gap,
        disagreements,
        unseparated,
    })
}
