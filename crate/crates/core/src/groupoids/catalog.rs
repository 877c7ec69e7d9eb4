//! Built-in groupoids.

use num_rational::BigRational;
use num_traits::Zero;

use super::{BilinearSpec, FiniteTable, GroupoidSpec, LinearSpec, Scalar, StructuralRelation, Transport};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub spec: GroupoidSpec,
}

fn finite(rows: &[&[u32]]) -> GroupoidSpec {
    GroupoidSpec::FiniteTable(FiniteTable::from_rows(rows).expect("catalog table"))
}

fn named(names: &[&str], rows: &[&[u32]]) -> GroupoidSpec {
    let elements = names.iter().map(|s| s.to_string()).collect();
    let table = rows.iter().map(|r| r.to_vec()).collect();
    GroupoidSpec::FiniteTable(FiniteTable::new(elements, table).expect("catalog table"))
}

fn linear(alpha: Scalar, beta: Scalar) -> GroupoidSpec {
    GroupoidSpec::Linear(LinearSpec::new(alpha, beta, Transport::Identity).expect("catalog coefficients"))
}

/// Algebra on `names` from a rule `(i, j) -> [(l, c)]`.
fn bilinear(names: &[&str], rule: impl Fn(usize, usize) -> Vec<(usize, i64)>) -> GroupoidSpec {
    let m = names.len();
    let constants = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut v = vec![BigRational::zero(); m];
                    for (l, c) in rule(i, j) {
                        v[l] += BigRational::from_integer(c.into());
                    }
                    v
                })
                .collect()
        })
        .collect();
    let basis = names.iter().map(|s| s.to_string()).collect();
    GroupoidSpec::Bilinear(BilinearSpec::new(basis, constants).expect("catalog constants"))
}

fn rps_table() -> Vec<Vec<u32>> {
    // r = 0, p = 1, s = 2; the product of two moves is the winner
    let beats = |a: u32, b: u32| (a + 3 - b) % 3 == 1;
    (0..3).map(|a| (0..3).map(|b| if a == b || beats(a, b) { a } else { b }).collect()).collect()
}

fn with_identity(table: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let e = table.len() as u32;
    let mut out: Vec<Vec<u32>> = table
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut row = row.clone();
            row.push(r as u32);
            row
        })
        .collect();
    out.push((0..=e).collect());
    out
}

pub fn catalog() -> Vec<CatalogEntry> {
    let q = |n: i64, d: i64| Scalar::rational(n, d);
    let mut v = vec![
        CatalogEntry { id: "const-one", description: "x * y = 1 on {0,1}", spec: finite(&[&[1, 1], &[1, 1]]) },
        CatalogEntry { id: "projection", description: "x * y = x on {0,1}", spec: finite(&[&[0, 0], &[1, 1]]) },
        CatalogEntry { id: "min", description: "minimum (conjunction) on {0,1}", spec: finite(&[&[0, 0], &[0, 1]]) },
        CatalogEntry { id: "xor", description: "addition mod 2", spec: finite(&[&[0, 1], &[1, 0]]) },
        CatalogEntry { id: "succ2", description: "x * y = x + 1 mod 2", spec: finite(&[&[1, 1], &[0, 0]]) },
        CatalogEntry { id: "nor", description: "negated disjunction on {0,1}", spec: finite(&[&[1, 0], &[0, 0]]) },
        CatalogEntry { id: "implication", description: "x -> y on {0,1}", spec: finite(&[&[1, 1], &[0, 1]]) },
        CatalogEntry { id: "converse-implication", description: "y -> x on {0,1}", spec: finite(&[&[1, 0], &[1, 1]]) },
    ];
    let rps = rps_table();
    let rps_rows: Vec<&[u32]> = rps.iter().map(Vec::as_slice).collect();
    let rpse = with_identity(&rps);
    let rpse_rows: Vec<&[u32]> = rpse.iter().map(Vec::as_slice).collect();
    let lz = with_identity(&[vec![0, 0], vec![1, 1]]);
    let lz_rows: Vec<&[u32]> = lz.iter().map(Vec::as_slice).collect();
    v.extend([
        CatalogEntry {
            id: "rps",
            description: "rock-paper-scissors: the winning move",
            spec: named(&["r", "p", "s"], &rps_rows),
        },
        CatalogEntry {
            id: "rps-identity",
            description: "rock-paper-scissors with an adjoined identity e",
            spec: named(&["r", "p", "s", "e"], &rpse_rows),
        },
        CatalogEntry {
            id: "left-zero-identity",
            description: "left-zero semigroup {a,b} with an adjoined identity e",
            spec: named(&["a", "b", "e"], &lz_rows),
        },
        CatalogEntry { id: "mean", description: "(a + b) / 2 over Q", spec: linear(q(1, 2), q(1, 2)) },
        CatalogEntry {
            id: "harmonic-mean",
            description: "2ab / (a + b) over positive Q",
            spec: GroupoidSpec::Linear(
                LinearSpec::new(q(1, 2), q(1, 2), Transport::Reciprocal).expect("catalog coefficients"),
            ),
        },
        CatalogEntry { id: "subtraction", description: "a - b over Q", spec: linear(q(1, 1), q(-1, 1)) },
        CatalogEntry { id: "double-minus", description: "-a - b over Q", spec: linear(q(-1, 1), q(-1, 1)) },
    ]);
    for (k, id, description) in [
        (2, "plus-zeta2", "a + z b, z = -1"),
        (3, "plus-zeta3", "a + z b, z a primitive cube root of unity"),
        (4, "plus-zeta4", "a + z b, z = i"),
    ] {
        v.push(CatalogEntry { id, description, spec: linear(Scalar::one(k), Scalar::zeta(k)) });
    }
    for (k, id, description) in [
        (2, "zeta2-sum", "z (a + b), z = -1"),
        (3, "zeta3-sum", "z (a + b), z a primitive cube root of unity"),
        (4, "zeta4-sum", "z (a + b), z = i"),
    ] {
        v.push(CatalogEntry { id, description, spec: linear(Scalar::zeta(k), Scalar::zeta(k)) });
    }
    v.extend([
        CatalogEntry {
            id: "cross",
            description: "cross product on Q^3",
            spec: bilinear(&["i", "j", "k"], |a, b| {
                if a == b {
                    vec![]
                } else {
                    let c = 3 - a - b;
                    vec![(c, if (b + 3 - a) % 3 == 1 { 1 } else { -1 })]
                }
            }),
        },
        CatalogEntry {
            id: "join",
            description: "commutative version of the cross product: x x = 0, x y = the third basis vector",
            spec: bilinear(&["u", "v", "w"], |a, b| if a == b { vec![] } else { vec![(3 - a - b, 1)] }),
        },
        CatalogEntry {
            id: "sl2",
            description: "sl2 bracket on the basis e, f, h",
            spec: bilinear(&["e", "f", "h"], |a, b| {
                const E: usize = 0;
                const F: usize = 1;
                const H: usize = 2;
                match (a, b) {
                    (E, F) => vec![(H, 1)],
                    (F, E) => vec![(H, -1)],
                    (H, E) => vec![(E, 2)],
                    (E, H) => vec![(E, -2)],
                    (H, F) => vec![(F, -2)],
                    (F, H) => vec![(F, 2)],
                    _ => vec![],
                }
            }),
        },
        CatalogEntry {
            id: "free",
            description: "free groupoid on one generator",
            spec: GroupoidSpec::structural(StructuralRelation::FreeGroupoid),
        },
        CatalogEntry {
            id: "free-commutative",
            description: "free commutative groupoid on one generator",
            spec: GroupoidSpec::structural(StructuralRelation::FreeCommutative),
        },
        CatalogEntry {
            id: "free-semigroup2",
            description: "free semigroup on two generators",
            spec: GroupoidSpec::structural(StructuralRelation::FreeSemigroupTwoGen),
        },
        CatalogEntry {
            id: "exponentiation",
            description: "a * b = a^b on reals above 1",
            spec: GroupoidSpec::structural(StructuralRelation::Exponentiation),
        },
    ]);
    v
}

pub fn lookup(id: &str) -> Option<GroupoidSpec> {
    catalog().into_iter().find(|e| e.id == id).map(|e| e.spec)
}
