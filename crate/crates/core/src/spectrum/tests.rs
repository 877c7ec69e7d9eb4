use std::collections::HashSet;

use super::*;
use crate::groupoids::{catalog, lookup};
use crate::terms::{depth_profile, enumerate_bracketings, enumerate_full_linear_terms};

fn g(id: &str) -> GroupoidSpec {
    lookup(id).unwrap()
}

fn t(s: &str) -> TermTree {
    s.parse().unwrap()
}

/// Distinct direct fingerprints, one term at a time.
fn direct_count(g: &GroupoidSpec, n: usize, kind: SpectrumKind) -> u64 {
    let mut seen = HashSet::new();
    match kind {
        SpectrumKind::Assoc => {
            for b in enumerate_bracketings(n).unwrap() {
                seen.insert(fingerprint(g, &b).unwrap().to_bytes());
            }
        }
        SpectrumKind::Ac => {
            for term in enumerate_full_linear_terms(n).unwrap().iter() {
                seen.insert(fingerprint(g, &term).unwrap().to_bytes());
            }
        }
    }
    seen.len() as u64
}

fn count(id: &str, n: usize, kind: SpectrumKind) -> u64 {
    spectrum(&g(id), n, kind, &SpectrumOptions::default()).unwrap().count
}

#[test]
fn linear_fingerprint_examples() {
    let q = |a, b| Scalar::rational(a, b);
    assert_eq!(
        fingerprint(&g("mean"), &t("((x1 x2) x3)")).unwrap(),
        Fingerprint::Linear(vec![q(1, 4), q(1, 4), q(1, 2)])
    );
    assert_eq!(
        fingerprint(&g("double-minus"), &t("(x1 (x2 x3))")).unwrap(),
        Fingerprint::Linear(vec![q(-1, 1), q(1, 1), q(1, 1)])
    );
    assert_eq!(
        fingerprint(&g("subtraction"), &t("((x1 x2) x3)")).unwrap(),
        Fingerprint::Linear(vec![q(1, 1), q(-1, 1), q(-1, 1)])
    );
    // probes recover the same depth coefficients for the harmonic mean
    assert_eq!(
        fingerprint(&g("harmonic-mean"), &t("((x1 x2) x3)")).unwrap(),
        Fingerprint::Linear(vec![q(1, 4), q(1, 4), q(1, 2)])
    );
}

#[test]
fn fingerprint_rejects_nonstandard_variables() {
    assert!(fingerprint(&g("xor"), &t("(x1 x3)")).is_err());
    let big: TermTree = (2..=8).fold(TermTree::leaf(1), |acc, v| TermTree::join(acc, TermTree::leaf(v)).unwrap());
    assert!(matches!(fingerprint(&g("rps"), &big), Err(Error::Size { .. })));
}

#[test]
fn spec_examples() {
    assert_eq!(count("nor", 4, SpectrumKind::Ac), 15);
    assert_eq!(count("projection", 5, SpectrumKind::Ac), 5);
    assert_eq!(count("mean", 4, SpectrumKind::Ac), 13);
    assert_eq!(count("mean", 5, SpectrumKind::Assoc), 14);
    assert_eq!(count("double-minus", 5, SpectrumKind::Assoc), 10);
    for id in ["min", "xor", "projection"] {
        assert_eq!(count(id, 6, SpectrumKind::Assoc), 1, "{id}");
    }
}

#[test]
fn engine_matches_direct_counting() {
    for e in catalog() {
        let max_n = match e.spec {
            GroupoidSpec::Bilinear(_) => 4,
            _ => 5,
        };
        for n in 1..=max_n {
            for kind in [SpectrumKind::Assoc, SpectrumKind::Ac] {
                let engine = spectrum(&e.spec, n, kind, &SpectrumOptions::default()).unwrap().count;
                assert_eq!(engine, direct_count(&e.spec, n, kind), "{} n={n} {kind}", e.id);
            }
        }
    }
}

#[test]
fn representatives_are_first_and_inequivalent() {
    let opts = SpectrumOptions { representatives: true, ..Default::default() };
    let e = spectrum(&g("succ2"), 3, SpectrumKind::Ac, &opts).unwrap();
    let reps = e.representatives.unwrap();
    assert_eq!(reps.len(), 6);
    assert_eq!(reps[0], t("(x1 (x2 x3))"));
    let fps: HashSet<_> = reps.iter().map(|r| fingerprint(&g("succ2"), r).unwrap()).collect();
    assert_eq!(fps.len(), 6);
}

#[test]
fn job_count_does_not_matter() {
    for id in ["nor", "mean", "cross", "free-commutative", "implication"] {
        let run = |jobs| {
            let opts = SpectrumOptions { jobs, representatives: true, ..Default::default() };
            spectrum(&g(id), 5, SpectrumKind::Ac, &opts).unwrap()
        };
        assert_eq!(run(1), run(8), "{id}");
    }
}

#[test]
fn fine_examples() {
    let opts = SpectrumOptions::default();
    let f = fine_spectrum(&g("succ2"), 3, SpectrumKind::Ac, &opts).unwrap();
    assert_eq!(f.class_count(), 6);
    let f = fine_spectrum(&g("xor"), 3, SpectrumKind::Ac, &opts).unwrap();
    assert_eq!(f.sizes(), [12]);
    let f = fine_spectrum(&g("free-commutative"), 3, SpectrumKind::Ac, &opts).unwrap();
    assert_eq!(f.sizes(), [4, 4, 4]);
}

#[test]
fn fine_classes_partition_and_agree_with_fingerprints() {
    let opts = SpectrumOptions::default();
    for id in ["rps", "mean", "sl2", "exponentiation", "left-zero-identity"] {
        let gr = g(id);
        let f = fine_spectrum(&gr, 4, SpectrumKind::Ac, &opts).unwrap();
        let mut all: Vec<u64> = f.classes.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..120).collect::<Vec<_>>(), "{id}");
        let mut seen = HashSet::new();
        for class in &f.classes {
            let fp = fingerprint(&gr, &f.term(class[0])).unwrap();
            assert!(seen.insert(fp.clone()), "{id}: two classes share a fingerprint");
            for &i in class {
                assert_eq!(fingerprint(&gr, &f.term(i)).unwrap(), fp, "{id}");
            }
        }
    }
}

#[test]
fn fine_cap() {
    let opts = SpectrumOptions::default();
    assert!(matches!(fine_spectrum(&g("mean"), 8, SpectrumKind::Ac, &opts), Err(Error::Size { .. })));
    assert!(fine_spectrum(&g("mean"), 8, SpectrumKind::Assoc, &opts).is_ok());
}

#[test]
fn caps_by_kind() {
    let opts = SpectrumOptions::default();
    assert!(spectrum(&g("nor"), 8, SpectrumKind::Assoc, &opts).is_err());
    assert!(spectrum(&g("rps"), 7, SpectrumKind::Assoc, &opts).is_err());
    assert!(spectrum(&g("cross"), 7, SpectrumKind::Assoc, &opts).is_err());
    assert_eq!(spectrum_cap(&g("free")), 8);
    let raised = SpectrumOptions { limits: Limits::with_override(7), ..opts };
    assert!(spectrum(&g("rps"), 7, SpectrumKind::Assoc, &raised).is_ok());
}

#[test]
fn witnesses() {
    let s = t("((x1 x2) x3)");
    let u = t("(x1 (x2 x3))");
    let h = separation_witness(&g("rps"), &s, &u).unwrap().expect("rps is not associative");
    let gr = g("rps");
    assert_ne!(crate::groupoids::eval(&gr, &s, &h).unwrap(), crate::groupoids::eval(&gr, &u, &h).unwrap());
    assert_eq!(separation_witness(&g("xor"), &s, &u).unwrap(), None);
    assert_eq!(separation_witness(&g("nor"), &t("(x1 x2)"), &t("(x2 x1)")).unwrap(), None);
    assert!(separation_witness(&g("harmonic-mean"), &s, &u).unwrap().is_some());
    assert!(separation_witness(&g("free"), &s, &u).is_err());
}

#[test]
fn plus_zeta_coefficients_follow_right_depths() {
    for k in 2..=4u32 {
        let gr = g(&format!("plus-zeta{k}"));
        for n in 1..=5 {
            for term in enumerate_full_linear_terms(n).unwrap().iter() {
                let want: Vec<Scalar> = depth_profile(&term).right().iter().map(|&r| Scalar::zeta(k).pow(r)).collect();
                assert_eq!(fingerprint(&gr, &term).unwrap(), Fingerprint::Linear(want));
            }
        }
    }
}

#[test]
fn kind_names_roundtrip() {
    for k in [SpectrumKind::Assoc, SpectrumKind::Ac] {
        assert_eq!(k.name().parse::<SpectrumKind>().unwrap(), k);
    }
    assert!("both".parse::<SpectrumKind>().is_err());
    assert_eq!(SpectrumKind::Ac.universe_size(4), 120);
}
