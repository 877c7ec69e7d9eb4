use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use acspec_core::equivalences::{are_equivalent, class_count, RelationId, Universe};
use acspec_core::groupoids::{catalog, verify_identity, GroupoidSpec};
use acspec_core::spectrum::{fine_spectrum, fingerprint, spectrum, SpectrumKind, SpectrumOptions};
use acspec_core::terms::{
    bracketing_from_depth_sequence, enumerate_bracketings, enumerate_full_linear_terms, is_admissible, leaf_depths,
    residue_counts, ResidueCounts,
};
use acspec_core::TermTree;

#[test]
fn kraft_equality_up_to_ten() {
    for n in 1..=10 {
        for b in enumerate_bracketings(n).unwrap() {
            let sum: BigRational = leaf_depths(&b)
                .iter()
                .map(|d| BigRational::new(1.into(), num_bigint::BigInt::from(2).pow(d.total)))
                .sum();
            assert!(sum.is_one(), "{b}");
        }
    }
}

#[test]
fn depth_sequence_roundtrip_up_to_ten() {
    for n in 1..=10 {
        for b in enumerate_bracketings(n).unwrap() {
            let d: Vec<u32> = leaf_depths(&b).iter().map(|d| d.total).collect();
            assert_eq!(bracketing_from_depth_sequence(&d).unwrap(), b);
        }
    }
}

fn vectors(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            vectors(n - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[test]
fn admissible_sets_match_trees() {
    for k in 2..=4 {
        for n in 2..=8 {
            let realized: BTreeSet<Vec<usize>> = enumerate_bracketings(n)
                .unwrap()
                .iter()
                .map(|b| residue_counts(b, k).unwrap().counts().to_vec())
                .collect();
            let admissible: BTreeSet<Vec<usize>> = vectors(n, k)
                .into_iter()
                .filter(|c| is_admissible(&ResidueCounts::new(k, c.clone()).unwrap()))
                .collect();
            assert_eq!(realized, admissible, "n={n} k={k}");
        }
    }
}

#[test]
fn fingerprints_agree_with_identity_checks() {
    for e in catalog() {
        if matches!(e.spec, GroupoidSpec::Structural(_)) {
            continue;
        }
        for n in 1..=4 {
            let f = fine_spectrum(&e.spec, n, SpectrumKind::Ac, &SpectrumOptions::default()).unwrap();
            let reps: Vec<TermTree> = f.classes.iter().map(|c| f.term(c[0])).collect();
            for (class, rep) in f.classes.iter().zip(&reps) {
                for &i in class {
                    let t = f.term(i);
                    assert!(verify_identity(&e.spec, rep, &t).unwrap().holds, "{} {rep} vs {t}", e.id);
                }
            }
            for i in 0..reps.len() {
                for j in i + 1..reps.len() {
                    let c = verify_identity(&e.spec, &reps[i], &reps[j]).unwrap();
                    assert!(!c.holds && c.witness.is_some(), "{} {} vs {}", e.id, reps[i], reps[j]);
                }
            }
        }
    }
}

#[test]
fn opposite_groupoid_has_the_same_spectra() {
    for e in catalog() {
        let op = e.spec.opposite();
        for n in 1..=5 {
            for kind in [SpectrumKind::Assoc, SpectrumKind::Ac] {
                let opts = SpectrumOptions::default();
                assert_eq!(
                    spectrum(&e.spec, n, kind, &opts).unwrap().count,
                    spectrum(&op, n, kind, &opts).unwrap().count,
                    "{} n={n} {kind}",
                    e.id
                );
            }
        }
    }
}

#[test]
fn worker_count_does_not_change_results() {
    for e in catalog() {
        let n = if matches!(e.spec, GroupoidSpec::Bilinear(_)) { 4 } else { 6 };
        let run = |jobs| {
            let opts = SpectrumOptions { jobs, representatives: true, ..Default::default() };
            spectrum(&e.spec, n, SpectrumKind::Ac, &opts).unwrap()
        };
        assert_eq!(run(1), run(8), "{}", e.id);
    }
    let opts8 = SpectrumOptions::with_jobs(8);
    for r in [RelationId::KLDepth(3, 2), RelationId::CommutativeUnordered] {
        assert_eq!(
            class_count(r, 6, Universe::FullLinearTerms).unwrap(),
            acspec_core::equivalences::class_count_with(r, 6, Universe::FullLinearTerms, &opts8).unwrap()
        );
    }
}

#[test]
fn relation_counts_match_groupoid_spectra() {
    let ac = |id: &str, n| {
        spectrum(&acspec_core::groupoids::lookup(id).unwrap(), n, SpectrumKind::Ac, &SpectrumOptions::default())
            .unwrap()
            .count
    };
    for n in 1..=6 {
        for k in 2..=4u32 {
            assert_eq!(
                class_count(RelationId::KRightDepth(k), n, Universe::FullLinearTerms).unwrap(),
                ac(&format!("plus-zeta{k}"), n)
            );
        }
        assert_eq!(class_count(RelationId::KDepth(2), n, Universe::FullLinearTerms).unwrap(), ac("double-minus", n));
        assert_eq!(
            class_count(RelationId::PTreeUnordered, n, Universe::FullLinearTerms).unwrap(),
            ac("exponentiation", n)
        );
        assert_eq!(
            class_count(RelationId::CommutativeUnordered, n, Universe::FullLinearTerms).unwrap(),
            ac("free-commutative", n)
        );
    }
}

fn relations() -> impl Strategy<Value = RelationId> {
    prop_oneof![
        (1u32..5).prop_map(RelationId::KRightDepth),
        (1u32..5).prop_map(RelationId::KLeftDepth),
        (1u32..5).prop_map(RelationId::KDepth),
        (1u32..5, 1u32..5).prop_map(|(k, l)| RelationId::KLDepth(k, l)),
        Just(RelationId::CommutativeUnordered),
        Just(RelationId::PTreeUnordered),
        Just(RelationId::SyntacticEquality),
        Just(RelationId::LeafOrder),
    ]
}

/// Three random full linear terms over the same `n`.
fn triples() -> impl Strategy<Value = (TermTree, TermTree, TermTree)> {
    (1usize..=6)
        .prop_flat_map(|n| {
            let size = enumerate_full_linear_terms(n).unwrap().len();
            (Just(n), 0..size, 0..size, 0..size)
        })
        .prop_map(|(n, a, b, c)| {
            let f = enumerate_full_linear_terms(n).unwrap();
            (f.get(a), f.get(b), f.get(c))
        })
}

proptest! {
    #[test]
    fn relations_are_equivalences(r in relations(), (s, t, u) in triples()) {
        let eq = |a: &TermTree, b: &TermTree| are_equivalent(r, a, b).unwrap();
        prop_assert!(eq(&s, &s));
        prop_assert_eq!(eq(&s, &t), eq(&t, &s));
        if eq(&s, &t) && eq(&t, &u) {
            prop_assert!(eq(&s, &u));
        }
    }

    #[test]
    fn rendering_roundtrips((s, _, _) in triples()) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<TermTree>().unwrap(), s);
    }

    #[test]
    fn equal_fingerprints_mean_equal_values_on_random_points(
        (s, t, _) in triples(),
        seed in 0u64..1000,
    ) {
        // a linear map check through a sampled assignment of rationals
        let g = acspec_core::groupoids::lookup("mean").unwrap();
        let n = s.leaf_count() as u32;
        let h: acspec_core::groupoids::Assignment = (1..=n)
            .map(|v| {
                let x = BigRational::new(((seed * 31 + v as u64 * 17) % 97).into(), 1.into());
                (v, acspec_core::groupoids::Element::Scalar(acspec_core::groupoids::Scalar::from_rational(1, x)))
            })
            .collect();
        let same = fingerprint(&g, &s).unwrap() == fingerprint(&g, &t).unwrap();
        let vs = acspec_core::groupoids::eval(&g, &s, &h).unwrap();
        let vt = acspec_core::groupoids::eval(&g, &t, &h).unwrap();
        if same {
            prop_assert_eq!(vs, vt);
        }
    }
}
