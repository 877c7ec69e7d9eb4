//! Brute-force oracles for the spectrum engine.
//!
//! Finite tables: evaluate every term pointwise through `eval` and count the
//! distinct value vectors. Linear and bilinear groupoids: greedily sort terms
//! into classes with the identity checker. Neither path uses fingerprints.

use std::collections::HashSet;

use acspec_core::groupoids::{catalog, eval, verify_identity, Assignment, Element, GroupoidSpec};
use acspec_core::spectrum::{spectrum, SpectrumKind, SpectrumOptions};
use acspec_core::terms::{enumerate_bracketings, enumerate_full_linear_terms};
use acspec_core::TermTree;

fn universe(n: usize, kind: SpectrumKind) -> Vec<TermTree> {
    match kind {
        SpectrumKind::Assoc => enumerate_bracketings(n).unwrap(),
        SpectrumKind::Ac => enumerate_full_linear_terms(n).unwrap().iter().collect(),
    }
}

fn all_assignments(q: usize, n: usize) -> Vec<Assignment> {
    (0..q.pow(n as u32))
        .map(|mut i| {
            let mut h = Assignment::new();
            for v in (1..=n as u32).rev() {
                h.set(v, Element::Finite((i % q) as u32));
                i /= q;
            }
            h
        })
        .collect()
}

fn pointwise_count(g: &GroupoidSpec, q: usize, n: usize, kind: SpectrumKind) -> u64 {
    let points = all_assignments(q, n);
    let mut seen = HashSet::new();
    for t in universe(n, kind) {
        let column: Vec<Element> = points.iter().map(|h| eval(g, &t, h).unwrap()).collect();
        seen.insert(column);
    }
    seen.len() as u64
}

fn greedy_count(g: &GroupoidSpec, n: usize, kind: SpectrumKind) -> u64 {
    let mut reps: Vec<TermTree> = Vec::new();
    for t in universe(n, kind) {
        if !reps.iter().any(|r| verify_identity(g, r, &t).unwrap().holds) {
            reps.push(t);
        }
    }
    reps.len() as u64
}

fn engine(g: &GroupoidSpec, n: usize, kind: SpectrumKind) -> u64 {
    spectrum(g, n, kind, &SpectrumOptions::default()).unwrap().count
}

#[test]
fn finite_tables_match_pointwise_evaluation() {
    for e in catalog() {
        if let GroupoidSpec::FiniteTable(ft) = &e.spec {
            for n in 1..=5 {
                for kind in [SpectrumKind::Assoc, SpectrumKind::Ac] {
                    assert_eq!(
                        engine(&e.spec, n, kind),
                        pointwise_count(&e.spec, ft.size(), n, kind),
                        "{} n={n} {kind}",
                        e.id
                    );
                }
            }
        }
    }
}

#[test]
fn algebraic_groupoids_match_identity_checks() {
    for e in catalog() {
        let max_n = match e.spec {
            GroupoidSpec::Linear(_) => 4,
            GroupoidSpec::Bilinear(_) => 3,
            _ => continue,
        };
        for n in 1..=max_n {
            for kind in [SpectrumKind::Assoc, SpectrumKind::Ac] {
                assert_eq!(engine(&e.spec, n, kind), greedy_count(&e.spec, n, kind), "{} n={n} {kind}", e.id);
            }
        }
    }
}

#[test]
fn bilinear_assoc_at_four_matches_identity_checks() {
    for id in ["cross", "join", "sl2"] {
        let g = acspec_core::groupoids::lookup(id).unwrap();
        assert_eq!(engine(&g, 4, SpectrumKind::Assoc), greedy_count(&g, 4, SpectrumKind::Assoc), "{id}");
    }
}
