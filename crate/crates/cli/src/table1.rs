//! Known closed forms per catalog groupoid, and the rows of the summary table.

use acspec_core::equivalences::{class_count_with, RelationId, Universe};
use acspec_core::formulas::{
    ac_right_k, catalan, compositions_of_one, double_factorial_d, factorial, floor_two_thirds, jacobsthal_ac,
    tree_power, two_pow_minus_two, BigCount,
};
use acspec_core::spectrum::{SpectrumKind, SpectrumOptions};
use acspec_core::Result;
use num_traits::ToPrimitive;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug)]
pub enum Expected {
    Formula(&'static str, fn(u32) -> BigCount),
    /// Class count of a tree relation on the same universe.
    Relation(RelationId),
    None,
}

impl Expected {
    pub fn label(&self) -> Option<String> {
        match self {
            Expected::Formula(name, _) => Some((*name).to_string()),
            Expected::Relation(r) => Some(r.to_string()),
            Expected::None => None,
        }
    }

    pub fn value(&self, n: usize, kind: SpectrumKind, opts: &SpectrumOptions) -> Result<Option<u64>> {
        if n == 1 && !matches!(self, Expected::None) {
            // one term, x1
            return Ok(Some(1));
        }
        Ok(match self {
            Expected::Formula(_, f) => f(n as u32).to_u64(),
            Expected::Relation(r) => Some(class_count_with(*r, n, Universe::from(kind), opts)?),
            Expected::None => None,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Row {
    pub id: &'static str,
    pub label: &'static str,
    pub ac: Expected,
    pub assoc: Expected,
}

impl Row {
    pub fn expected(&self, kind: SpectrumKind) -> Expected {
        match kind {
            SpectrumKind::Ac => self.ac,
            SpectrumKind::Assoc => self.assoc,
        }
    }
}

fn one(_: u32) -> BigCount {
    1u32.into()
}
fn n_itself(n: u32) -> BigCount {
    n.into()
}
fn c_prev(n: u32) -> BigCount {
    catalan(n - 1)
}
fn d_prev(n: u32) -> BigCount {
    double_factorial_d(n - 1)
}
fn two_d_prev(n: u32) -> BigCount {
    double_factorial_d(n - 1) * 2u32
}
fn free_ac(n: u32) -> BigCount {
    factorial(n) * catalan(n - 1)
}
fn succ2_ac(n: u32) -> BigCount {
    if n <= 2 {
        n.into()
    } else {
        (2 * n).into()
    }
}
fn succ2_assoc(n: u32) -> BigCount {
    if n <= 2 {
        1u32.into()
    } else {
        2u32.into()
    }
}

const N_FACT_C: Expected = Expected::Formula("n!*C(n-1)", free_ac);
const N_FACT: Expected = Expected::Formula("n!", factorial);
const ONE: Expected = Expected::Formula("1", one);
const C: Expected = Expected::Formula("C(n-1)", c_prev);
const D: Expected = Expected::Formula("D(n-1)", d_prev);
const TWO_D: Expected = Expected::Formula("2*D(n-1)", two_d_prev);
const TREES: Expected = Expected::Formula("n^(n-1)", tree_power);
const MEAN: Expected = Expected::Formula("dyadic compositions", compositions_of_one);

fn right_k(k: u32) -> Expected {
    match k {
        2 => Expected::Formula("2!S(n,2)+n", |n| ac_right_k(n, 2)),
        3 => Expected::Formula("3!S(n,3)+n*sum", |n| ac_right_k(n, 3)),
        _ => Expected::Formula("4!S(n,4)+n*sum", |n| ac_right_k(n, 4)),
    }
}

/// The summary table, one row per catalog groupoid it covers.
pub fn rows() -> Vec<Row> {
    let r = |id, label, ac, assoc| Row { id, label, ac, assoc };
    let mut v = vec![
        r("free", "free on one generator", N_FACT_C, C),
        r("free-semigroup2", "free associative on two generators", N_FACT, ONE),
        r("free-commutative", "free commutative on one generator", D, C),
        r("left-zero-identity", "noncommutative associative with identity", N_FACT, ONE),
        r("const-one", "{0,1}, x*y = 1", ONE, ONE),
        r("min", "{0,1}, x*y = min(x,y)", ONE, ONE),
        r("xor", "{0,1}, x*y = x+y mod 2", ONE, ONE),
        r("projection", "{0,1}, x*y = x", Expected::Formula("n", n_itself), ONE),
        r("implication", "implication on {0,1}", TREES, C),
        r("converse-implication", "converse implication on {0,1}", TREES, C),
        r("nor", "negated disjunction on {0,1}", D, C),
        r(
            "succ2",
            "{0,1}, x*y = x+1 mod 2",
            Expected::Formula("n, then 2n from n=3", succ2_ac),
            Expected::Formula("1, then 2 from n=3", succ2_assoc),
        ),
        r("mean", "arithmetic mean", MEAN, C),
        r("harmonic-mean", "harmonic mean", MEAN, C),
        r("rps", "rock-paper-scissors", D, C),
        r("rps-identity", "commutative nonassociative with identity", D, C),
        r("cross", "cross product on Q^3", TWO_D, C),
        r("sl2", "Lie algebra with an sl2-triple", TWO_D, C),
        r("exponentiation", "exponentiation", TREES, C),
    ];
    for (k, id) in [(2, "plus-zeta2"), (3, "plus-zeta3"), (4, "plus-zeta4")] {
        v.push(r(id, "a + exp(2 pi i/k) b", right_k(k), Expected::Relation(RelationId::KRightDepth(k))));
    }
    v.push(r(
        "double-minus",
        "a*b = -a-b",
        Expected::Formula("(2^n-(-1)^n)/3", jacobsthal_ac),
        Expected::Formula("floor(2^n/3)", floor_two_thirds),
    ));
    v
}

/// Rows for catalog entries outside the table that still have a known count.
pub fn extra_rows() -> Vec<Row> {
    let r = |id, label, ac, assoc| Row { id, label, ac, assoc };
    vec![
        r("join", "commutative version of the cross product", D, C),
        r("subtraction", "a*b = a-b", Expected::Formula("2^n-2", two_pow_minus_two), Expected::None),
        r(
            "zeta2-sum",
            "a*b = -(a+b)",
            Expected::Relation(RelationId::KDepth(2)),
            Expected::Relation(RelationId::KDepth(2)),
        ),
        r(
            "zeta3-sum",
            "a*b = z(a+b), z^3 = 1",
            Expected::Relation(RelationId::KDepth(3)),
            Expected::Relation(RelationId::KDepth(3)),
        ),
        r(
            "zeta4-sum",
            "a*b = z(a+b), z^4 = 1",
            Expected::Relation(RelationId::KDepth(4)),
            Expected::Relation(RelationId::KDepth(4)),
        ),
    ]
}

pub fn row_for(id: &str) -> Option<Row> {
    rows().into_iter().chain(extra_rows()).find(|r| r.id == id)
}
