//! One PASS/FAIL line per acceptance criterion. Exits non-zero on any failure.

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use acspec_core::equivalences::{align_offset, class_count_with, class_counts, RelationId, Universe};
use acspec_core::formulas::{
    ac_right_k, catalan, compositions_of_one, double_factorial_d, factorial, floor_two_thirds, jacobsthal_ac,
    two_pow_minus_two, BigCount,
};
use acspec_core::groupoids::{catalog, lookup, verify_identity, GroupoidSpec};
use acspec_core::spectrum::{
    exponentiation_sanity, fine_spectrum, spectrum, SpectrumKind, SpectrumOptions, AGREEMENT_TOLERANCE,
    SEPARATION_THRESHOLD,
};
use acspec_core::terms::{
    bracketing_from_depth_sequence, enumerate_bracketings, enumerate_full_linear_terms, is_admissible, leaf_depths,
    residue_counts, unordered_code, ResidueCounts,
};
use acspec_core::TermTree;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

fn opts() -> SpectrumOptions {
    SpectrumOptions::with_jobs(jobs())
}

fn counts(id: &str, kind: SpectrumKind, ns: impl IntoIterator<Item = usize>) -> Result<Vec<u64>, String> {
    let g = lookup(id).ok_or_else(|| format!("no catalog entry {id}"))?;
    ns.into_iter()
        .map(|n| spectrum(&g, n, kind, &opts()).map(|e| e.count).map_err(|e| format!("{id} n={n}: {e}")))
        .collect()
}

fn big(v: BigCount) -> u64 {
    v.to_u64().expect("fits")
}

/// Compares `id`'s spectrum at each `n` in `ns` with `want(n)`.
fn expect(
    id: &str,
    kind: SpectrumKind,
    ns: std::ops::RangeInclusive<usize>,
    want: impl Fn(u32) -> u64,
) -> Result<String, String> {
    let got = counts(id, kind, ns.clone())?;
    let wanted: Vec<u64> = ns.clone().map(|n| want(n as u32)).collect();
    if got == wanted {
        Ok(format!("{id} {kind} n={}..{}: {got:?}", ns.start(), ns.end()))
    } else {
        Err(format!("{id} {kind}: got {got:?}, expected {wanted:?}"))
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut ok = Vec::new();
    for p in parts {
        ok.push(p?);
    }
    Ok(ok.join("; "))
}

fn two_element() -> Outcome {
    let start = Instant::now();
    let fixed: &[(&str, [u64; 6])] = &[
        ("const-one", [1, 1, 1, 1, 1, 1]),
        ("min", [1, 1, 1, 1, 1, 1]),
        ("xor", [1, 1, 1, 1, 1, 1]),
        ("projection", [1, 2, 3, 4, 5, 6]),
        ("succ2", [1, 2, 6, 8, 10, 12]),
        ("implication", [1, 2, 9, 64, 625, 7776]),
        ("converse-implication", [1, 2, 9, 64, 625, 7776]),
        ("nor", [1, 1, 3, 15, 105, 945]),
    ];
    let mut parts = Vec::new();
    for (id, want) in fixed {
        parts.push(expect(id, SpectrumKind::Ac, 1..=6, |n| want[n as usize - 1]));
    }
    let detail = all(parts)?;
    let took = start.elapsed();
    if took > Duration::from_secs(300) {
        return Err(format!("took {took:?}, limit 5 min"));
    }
    Ok(format!("{detail}; {took:.2?}"))
}

fn commutative() -> Outcome {
    let d = |n| big(double_factorial_d(n - 1));
    let c = |n| big(catalan(n - 1));
    all(vec![
        expect("rps", SpectrumKind::Ac, 1..=6, d),
        expect("rps", SpectrumKind::Assoc, 1..=6, c),
        expect("rps-identity", SpectrumKind::Ac, 1..=6, d),
        expect("rps-identity", SpectrumKind::Assoc, 1..=6, c),
    ])
}

fn means() -> Outcome {
    let harmonic = counts("harmonic-mean", SpectrumKind::Ac, 1..=6)?;
    let mean = counts("mean", SpectrumKind::Ac, 1..=6)?;
    if harmonic != mean {
        return Err(format!("harmonic {harmonic:?} vs arithmetic {mean:?}"));
    }
    all(vec![
        expect("mean", SpectrumKind::Ac, 1..=7, |n| big(compositions_of_one(n))),
        expect("mean", SpectrumKind::Assoc, 1..=6, |n| big(catalan(n - 1))),
        expect("harmonic-mean", SpectrumKind::Assoc, 1..=6, |n| big(catalan(n - 1))),
        Ok("harmonic ac = arithmetic ac for n <= 6".into()),
    ])
}

fn linear() -> Outcome {
    let mut parts = vec![expect("subtraction", SpectrumKind::Ac, 2..=8, |n| big(two_pow_minus_two(n)))];
    for k in 2..=4u32 {
        let id = format!("plus-zeta{k}");
        parts.push(expect(&id, SpectrumKind::Ac, 1..=6, |n| big(ac_right_k(n, k))));
        let rel = class_counts(RelationId::KRightDepth(k), 6, Universe::FullLinearTerms, &opts())
            .map_err(|e| e.to_string())?;
        let spec = counts(&id, SpectrumKind::Ac, 1..=6)?;
        parts.push(if rel == spec {
            Ok(format!("{id} ac = right-depth:{k} classes"))
        } else {
            Err(format!("{id}: spectrum {spec:?} vs right-depth:{k} classes {rel:?}"))
        });
    }
    parts.push(expect("double-minus", SpectrumKind::Ac, 1..=8, |n| big(jacobsthal_ac(n))));
    parts.push(expect("double-minus", SpectrumKind::Assoc, 2..=8, |n| big(floor_two_thirds(n))));
    all(parts)
}

fn anticommutative() -> Outcome {
    let two_d = |n| 2 * big(double_factorial_d(n - 1));
    let c = |n| big(catalan(n - 1));
    all(vec![
        expect("cross", SpectrumKind::Ac, 2..=6, two_d),
        expect("join", SpectrumKind::Ac, 1..=6, |n| big(double_factorial_d(n - 1))),
        expect("sl2", SpectrumKind::Ac, 2..=5, two_d),
        expect("cross", SpectrumKind::Assoc, 1..=6, c),
        expect("join", SpectrumKind::Assoc, 1..=6, c),
        expect("sl2", SpectrumKind::Assoc, 1..=5, c),
    ])
}

fn free_structures() -> Outcome {
    let mut parts = vec![
        expect("free", SpectrumKind::Ac, 1..=6, |n| big(factorial(n) * catalan(n - 1))),
        expect("free-semigroup2", SpectrumKind::Ac, 1..=6, |n| big(factorial(n))),
        expect("free-commutative", SpectrumKind::Ac, 1..=6, |n| big(double_factorial_d(n - 1))),
    ];
    // independent count of unordered shapes, one term at a time
    let brute: Vec<u64> = (1..=6)
        .map(|n| {
            let codes: HashSet<_> =
                enumerate_full_linear_terms(n).unwrap().iter().map(|t| unordered_code(&t)).collect();
            codes.len() as u64
        })
        .collect();
    let spec = counts("free-commutative", SpectrumKind::Ac, 1..=6)?;
    parts.push(if brute == spec {
        Ok("free-commutative matches unordered_code brute force".into())
    } else {
        Err(format!("free-commutative {spec:?} vs brute force {brute:?}"))
    });
    all(parts)
}

fn depth_lists() -> Outcome {
    let b = Universe::Bracketings;
    let f = Universe::FullLinearTerms;
    let lists: Vec<(RelationId, Universe, Vec<u64>)> = vec![
        (RelationId::KLDepth(2, 2), f, vec![1, 2, 12, 54, 260, 1080]),
        (RelationId::KLDepth(3, 2), f, vec![1, 2, 12, 84, 590, 4110]),
        (RelationId::KLDepth(4, 2), f, vec![1, 2, 12, 84, 770, 7080]),
        (RelationId::KLDepth(3, 3), f, vec![1, 2, 12, 108, 960, 9240]),
        (RelationId::KDepth(3), b, vec![1, 2, 5, 14, 42, 129, 398, 1223, 3752, 11510]),
        (RelationId::KDepth(4), b, vec![1, 2, 5, 14, 42, 132, 429, 1429, 4849, 16689]),
        (RelationId::KDepth(3), f, vec![1, 3, 13, 35, 101, 315]),
        (RelationId::KDepth(4), f, vec![1, 3, 13, 75, 285, 1099]),
    ];
    let mut parts = Vec::new();
    for (r, u, listed) in lists {
        let computed = class_counts(r, listed.len() + 1, u, &opts()).map_err(|e| e.to_string())?;
        let universe = if u == b { "B_n" } else { "F_n" };
        parts.push(match align_offset(&computed, &listed, &[0, 1]) {
            Some(o) => Ok(format!("{r} over {universe}: offset {o}")),
            None => Err(format!("{r} over {universe}: computed {computed:?} matches {listed:?} at no offset")),
        });
    }
    all(parts)
}

fn monoid() -> Outcome {
    expect("left-zero-identity", SpectrumKind::Ac, 1..=6, |n| big(factorial(n)))
}

fn ensure(ok: bool, what: String) -> Outcome {
    if ok {
        Ok(what)
    } else {
        Err(what)
    }
}

fn property_suites() -> Outcome {
    let mut parts = Vec::new();

    let kraft = (1..=10).all(|n| {
        enumerate_bracketings(n).unwrap().iter().all(|b| {
            let s: BigRational =
                leaf_depths(b).iter().map(|d| BigRational::new(BigInt::one(), BigInt::from(2).pow(d.total))).sum();
            s.is_one()
        })
    });
    parts.push(ensure(kraft, "Kraft equality n <= 10".into()));

    let roundtrip = (1..=10).all(|n| {
        enumerate_bracketings(n).unwrap().iter().all(|b| {
            let d: Vec<u32> = leaf_depths(b).iter().map(|d| d.total).collect();
            bracketing_from_depth_sequence(&d).ok().as_ref() == Some(b)
        })
    });
    parts.push(ensure(roundtrip, "depth-sequence roundtrip n <= 10".into()));

    let mut admissible_ok = true;
    for k in 2..=4usize {
        for n in 2..=8usize {
            let realized: HashSet<Vec<usize>> = enumerate_bracketings(n)
                .unwrap()
                .iter()
                .map(|b| residue_counts(b, k).unwrap().counts().to_vec())
                .collect();
            let admissible: HashSet<Vec<usize>> = compositions(n, k)
                .into_iter()
                .filter(|c| is_admissible(&ResidueCounts::new(k, c.clone()).unwrap()))
                .collect();
            admissible_ok &= realized == admissible;
        }
    }
    parts.push(ensure(admissible_ok, "admissible sets n <= 8, k <= 4".into()));

    let mut agree = true;
    for e in catalog() {
        if matches!(e.spec, GroupoidSpec::Structural(_)) {
            continue;
        }
        for n in 1..=4 {
            let fine = fine_spectrum(&e.spec, n, SpectrumKind::Ac, &opts()).map_err(|x| x.to_string())?;
            let reps: Vec<TermTree> = fine.classes.iter().map(|c| fine.term(c[0])).collect();
            for (class, rep) in fine.classes.iter().zip(&reps) {
                for &i in class {
                    agree &= verify_identity(&e.spec, rep, &fine.term(i)).unwrap().holds;
                }
            }
            for i in 0..reps.len() {
                for j in i + 1..reps.len() {
                    agree &= !verify_identity(&e.spec, &reps[i], &reps[j]).unwrap().holds;
                }
            }
        }
    }
    parts.push(ensure(agree, "fingerprints agree with verify_identity n <= 4".into()));

    let mut opposite = true;
    for e in catalog() {
        let op = e.spec.opposite();
        for n in 1..=5 {
            for kind in [SpectrumKind::Assoc, SpectrumKind::Ac] {
                let a = spectrum(&e.spec, n, kind, &opts()).unwrap().count;
                let b = spectrum(&op, n, kind, &opts()).unwrap().count;
                opposite &= a == b;
            }
        }
    }
    parts.push(ensure(opposite, "opposite-groupoid invariance n <= 5".into()));

    let mut det = true;
    for e in catalog() {
        let n = if matches!(e.spec, GroupoidSpec::Bilinear(_)) { 5 } else { 6 };
        for kind in [SpectrumKind::Assoc, SpectrumKind::Ac] {
            let one = spectrum(&e.spec, n, kind, &SpectrumOptions::with_jobs(1)).unwrap();
            let eight = spectrum(&e.spec, n, kind, &SpectrumOptions::with_jobs(8)).unwrap();
            det &= one == eight;
        }
    }
    for r in [RelationId::KLDepth(3, 3), RelationId::CommutativeUnordered] {
        let one = class_count_with(r, 7, Universe::FullLinearTerms, &SpectrumOptions::with_jobs(1));
        let eight = class_count_with(r, 7, Universe::FullLinearTerms, &SpectrumOptions::with_jobs(8));
        det &= one.unwrap() == eight.unwrap();
    }
    parts.push(ensure(det, "jobs 1 vs 8 identical".into()));
    all(parts)
}

fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            compositions(n - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn exponentiation() -> Outcome {
    let seed = 20_240_601;
    let mut parts = Vec::new();
    for n in 1..=5 {
        let r = exponentiation_sanity(n, 100, seed).map_err(|e| e.to_string())?;
        parts.push(ensure(
            r.passed(),
            format!(
                "n={n}: {} codes over {} terms, max gap {:.1e} (< {AGREEMENT_TOLERANCE:e}), \
                 {} unseparated pairs at {SEPARATION_THRESHOLD:e}",
                r.classes,
                r.terms,
                r.max_agreement_gap,
                r.unseparated.len()
            ),
        ));
    }
    all(parts).map(|s| format!("{s}; sampled evidence, not a proof"))
}

fn runtime() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_acspec"))
        .args(["table1", "--n-max", "6", "--format", "csv", "--no-timing"])
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let rows = text.lines().count().saturating_sub(1);
    let mismatched = text.lines().filter(|l| l.ends_with(",mismatch")).count();
    ensure(
        out.status.success() && mismatched == 0 && took < Duration::from_secs(600),
        format!("table1 --n-max 6: {rows} cells, {mismatched} mismatched, {took:.2?} on {} worker(s)", jobs()),
    )
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("two-element groupoids", two_element),
        ("commutative entries", commutative),
        ("means", means),
        ("linear groupoids", linear),
        ("anticommutative algebras", anticommutative),
        ("free structures", free_structures),
        ("depth-equivalence lists", depth_lists),
        ("noncommutative monoid", monoid),
        ("property suites", property_suites),
        ("exponentiation sanity", exponentiation),
        ("runtime budget", runtime),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
