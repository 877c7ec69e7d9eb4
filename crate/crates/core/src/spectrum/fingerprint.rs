//! Direct fingerprints: the full description of one term operation.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groupoids::{
    BilinearSpec, FiniteTable, GroupoidSpec, LinearSpec, Scalar, StructuralRelation, StructuralSpec, Transport,
};
use crate::terms::{exact_code, leaf_order_code, p_tree_code, unordered_code, CanonicalCode, Node, TermTree, Var};

/// Equal iff two terms over `x1..xn` induce the same operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Fingerprint {
    /// Outputs on all `|G|^n` assignments, `x1` most significant.
    Table(Vec<u32>),
    /// Coefficient of each variable.
    Linear(Vec<Scalar>),
    /// Outputs on all basis tuples, first variable most significant.
    Multilinear(Vec<Vec<BigRational>>),
    Structural(CanonicalCode),
}

impl Fingerprint {
    /// Canonical byte serialization; equal bytes iff equal fingerprints.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let push_q = |out: &mut Vec<u8>, q: &BigRational| {
            for part in [q.numer(), q.denom()] {
                let (sign, mag) = part.to_bytes_le();
                out.push(sign as u8);
                out.extend_from_slice(&(mag.len() as u32).to_le_bytes());
                out.extend_from_slice(&mag);
            }
        };
        match self {
            Fingerprint::Table(v) => {
                out.push(0);
                for x in v {
                    out.extend_from_slice(&x.to_le_bytes());
                }
            }
            Fingerprint::Linear(v) => {
                out.push(1);
                for s in v {
                    out.extend_from_slice(&s.order().to_le_bytes());
                    for q in s.coeffs() {
                        push_q(&mut out, q);
                    }
                }
            }
            Fingerprint::Multilinear(v) => {
                out.push(2);
                for vec in v {
                    for q in vec {
                        push_q(&mut out, q);
                    }
                }
            }
            Fingerprint::Structural(c) => {
                out.push(3);
                out.extend_from_slice(c.as_bytes());
            }
        }
        out
    }
}

/// Checks that `t` uses exactly the variables `1..=n` and returns `n`.
pub(crate) fn standard_arity(t: &TermTree) -> Result<usize> {
    let vars = t.variables();
    if vars.iter().zip(1..).any(|(&v, i): (&Var, Var)| v != i) {
        return Err(Error::validation(format!("{t} is not a term over x1..x{}", vars.len())));
    }
    Ok(vars.len())
}

/// Output of `t` on every assignment in `G^n`.
pub(crate) fn table_values(ft: &FiniteTable, t: &TermTree, n: usize) -> Vec<u32> {
    let q = ft.size();
    let points = q.pow(n as u32);
    let mut vals: Vec<Vec<u32>> = Vec::with_capacity(t.nodes().len());
    for node in t.nodes() {
        let column = match *node {
            Node::Leaf(v) => {
                let stride = q.pow(n as u32 - v);
                (0..points).map(|i| ((i / stride) % q) as u32).collect()
            }
            Node::Branch(l, r) => {
                let (a, b) = (&vals[l as usize], &vals[r as usize]);
                a.iter().zip(b).map(|(&x, &y)| ft.op(x, y)).collect()
            }
        };
        vals.push(column);
    }
    vals.pop().unwrap()
}

fn eval_linear(l: &LinearSpec, t: &TermTree, value: impl Fn(Var) -> Scalar) -> Result<Scalar> {
    let mut vals: Vec<Scalar> = Vec::with_capacity(t.nodes().len());
    for node in t.nodes() {
        let x = match *node {
            Node::Leaf(v) => value(v),
            Node::Branch(a, b) => l.op(&vals[a as usize], &vals[b as usize])?,
        };
        vals.push(x);
    }
    Ok(vals.pop().unwrap())
}

/// Coefficients of the term operation, recovered by evaluation.
///
/// For the plain form these are the values at the unit vectors. For the
/// reciprocal form `f = 1 / sum(c_i / x_i)` they come from the probes
/// `p_0 = (1, ..., 1)` and `p_j` (coordinate `j` halved): `c_j = 1/f(p_j) - 1/f(p_0)`.
pub(crate) fn linear_values(l: &LinearSpec, t: &TermTree, n: usize) -> Result<Vec<Scalar>> {
    let k = l.order;
    match l.transport {
        Transport::Identity => (1..=n as Var)
            .map(|j| eval_linear(l, t, |v| if v == j { Scalar::one(k) } else { Scalar::zero(k) }))
            .collect(),
        Transport::Reciprocal => {
            let base = eval_linear(l, t, |_| Scalar::one(k))?.rational_recip()?;
            (1..=n as Var)
                .map(|j| {
                    let half = Scalar::rational(1, 2);
                    let f = eval_linear(l, t, |v| if v == j { half.clone() } else { Scalar::one(k) })?;
                    Ok(&f.rational_recip()? - &base)
                })
                .collect()
        }
    }
}

fn eval_basis(b: &BilinearSpec, t: &TermTree, digits: &[usize]) -> Vec<BigRational> {
    let m = b.dimension();
    let mut vals: Vec<Vec<BigRational>> = Vec::with_capacity(t.nodes().len());
    for node in t.nodes() {
        let x = match *node {
            Node::Leaf(v) => {
                let mut e = vec![BigRational::zero(); m];
                e[digits[v as usize - 1]] = BigRational::one();
                e
            }
            Node::Branch(l, r) => b.op(&vals[l as usize], &vals[r as usize]),
        };
        vals.push(x);
    }
    vals.pop().unwrap()
}

/// Output of `t` on every basis tuple.
pub(crate) fn multilinear_values(b: &BilinearSpec, t: &TermTree, n: usize) -> Vec<Vec<BigRational>> {
    let m = b.dimension();
    let mut digits = vec![0usize; n];
    let mut out = Vec::with_capacity(m.pow(n as u32));
    loop {
        out.push(eval_basis(b, t, &digits));
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < m {
                break;
            }
            digits[i] = 0;
        }
    }
}

pub(crate) fn structural_code(s: &StructuralSpec, t: &TermTree) -> CanonicalCode {
    let mirrored;
    let t = if s.mirrored {
        mirrored = t.mirror();
        &mirrored
    } else {
        t
    };
    match s.relation {
        StructuralRelation::FreeGroupoid => exact_code(t),
        StructuralRelation::FreeCommutative => unordered_code(t),
        StructuralRelation::FreeSemigroupTwoGen => leaf_order_code(t),
        StructuralRelation::Exponentiation => p_tree_code(t),
    }
}

/// Fingerprint of a term over `x1..xn`, computed from the term alone.
pub(crate) fn fingerprint_unchecked(g: &GroupoidSpec, t: &TermTree, n: usize) -> Result<Fingerprint> {
    Ok(match g {
        GroupoidSpec::FiniteTable(ft) => Fingerprint::Table(table_values(ft, t, n)),
        GroupoidSpec::Linear(l) => Fingerprint::Linear(linear_values(l, t, n)?),
        GroupoidSpec::Bilinear(b) => Fingerprint::Multilinear(multilinear_values(b, t, n)),
        GroupoidSpec::Structural(s) => Fingerprint::Structural(structural_code(s, t)),
    })
}
