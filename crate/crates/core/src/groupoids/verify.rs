//! Deciding identities `s = t` in a groupoid.
//!
//! Each kind gets its own complete procedure: exhaustive search for finite
//! tables, symbolic coefficients for linear operations, and full multilinear
//! tensors for algebras.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{eval, Assignment, BilinearSpec, Element, FiniteTable, GroupoidSpec, LinearSpec, Scalar, Transport};
use crate::error::{Error, Result};
use crate::terms::{depth_profile, Node, TermTree, Var};

/// Outcome of [`verify_identity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// An assignment where the two sides differ, when they do.
    pub witness: Option<Assignment>,
}

impl IdentityCheck {
    fn holds() -> Self {
        IdentityCheck { holds: true, witness: None }
    }

    fn fails(h: Assignment) -> Self {
        IdentityCheck { holds: false, witness: Some(h) }
    }
}

pub fn verify_identity(g: &GroupoidSpec, lhs: &TermTree, rhs: &TermTree) -> Result<IdentityCheck> {
    let vars = lhs.variables();
    if vars != rhs.variables() {
        return Err(Error::validation(format!("{lhs} and {rhs} have different variables")));
    }
    let check = match g {
        GroupoidSpec::FiniteTable(t) => verify_finite(t, lhs, rhs, &vars),
        GroupoidSpec::Linear(l) => verify_linear(l, lhs, rhs, &vars),
        GroupoidSpec::Bilinear(b) => verify_bilinear(b, lhs, rhs, &vars),
        GroupoidSpec::Structural(_) => {
            return Err(Error::Unsupported("identities in structural groupoids are not checked by evaluation".into()))
        }
    };
    debug_assert!(check.witness.as_ref().is_none_or(|h| { eval(g, lhs, h).ok() != eval(g, rhs, h).ok() }));
    Ok(check)
}

fn verify_finite(t: &FiniteTable, lhs: &TermTree, rhs: &TermTree, vars: &[Var]) -> IdentityCheck {
    let q = t.size() as u32;
    let mut digits = vec![0u32; vars.len()];
    let mut slot = vec![0u32; vars.last().map_or(0, |&v| v as usize + 1)];
    let run = |tree: &TermTree, slot: &[u32]| {
        let mut vals = Vec::with_capacity(tree.nodes().len());
        for node in tree.nodes() {
            let x = match *node {
                Node::Leaf(v) => slot[v as usize],
                Node::Branch(l, r) => t.op(vals[l as usize], vals[r as usize]),
            };
            vals.push(x);
        }
        *vals.last().unwrap()
    };
    loop {
        for (v, d) in vars.iter().zip(&digits) {
            slot[*v as usize] = *d;
        }
        if run(lhs, &slot) != run(rhs, &slot) {
            let h = vars.iter().zip(&digits).map(|(v, d)| (*v, Element::Finite(*d))).collect();
            return IdentityCheck::fails(h);
        }
        // next assignment, first variable most significant
        let mut i = digits.len();
        loop {
            if i == 0 {
                return IdentityCheck::holds();
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// `alpha^delta beta^rho` for every variable, read off the depth profile.
fn linear_coefficients(l: &LinearSpec, t: &TermTree) -> Vec<(Var, Scalar)> {
    depth_profile(t).entries().iter().map(|e| (e.var, &l.alpha.pow(e.left) * &l.beta.pow(e.right))).collect()
}

fn verify_linear(l: &LinearSpec, lhs: &TermTree, rhs: &TermTree, vars: &[Var]) -> IdentityCheck {
    let a = linear_coefficients(l, lhs);
    let b = linear_coefficients(l, rhs);
    let Some(pos) = a.iter().zip(&b).position(|(x, y)| x.1 != y.1) else {
        return IdentityCheck::holds();
    };
    let order = l.order;
    let scalar = |v: i64, d: i64| Element::Scalar(Scalar::from_rational(order, BigRational::new(v.into(), d.into())));
    let h = match l.transport {
        Transport::Identity => vars.iter().enumerate().map(|(i, &v)| (v, scalar(i64::from(i == pos), 1))).collect(),
        Transport::Reciprocal => {
            // value is 1 / sum(c_i / x_i)
            let sum = |c: &[(Var, Scalar)]| c.iter().fold(Scalar::zero(order), |acc, x| &acc + &x.1);
            if sum(&a) != sum(&b) {
                vars.iter().map(|&v| (v, scalar(1, 1))).collect()
            } else {
                vars.iter().enumerate().map(|(i, &v)| (v, if i == pos { scalar(1, 2) } else { scalar(1, 1) })).collect()
            }
        }
    };
    IdentityCheck::fails(h)
}

/// Dense multilinear tensor of a term: axis order follows the sorted
/// variables, the last axis is the output coordinate.
struct Tensor {
    vars: Vec<Var>,
    data: Vec<BigRational>,
}

fn tensor(b: &BilinearSpec, t: &TermTree, i: usize) -> Tensor {
    let m = b.dimension();
    match t.node(i) {
        Node::Leaf(v) => {
            let mut data = vec![BigRational::zero(); m * m];
            for a in 0..m {
                data[a * m + a] = BigRational::one();
            }
            Tensor { vars: vec![v], data }
        }
        Node::Branch(l, r) => {
            let s = tensor(b, t, l as usize);
            let u = tensor(b, t, r as usize);
            let mut vars: Vec<Var> = s.vars.iter().chain(&u.vars).copied().collect();
            vars.sort_unstable();
            let k = vars.len();
            let mut data = vec![BigRational::zero(); m.pow(k as u32) * m];
            let in_s: Vec<bool> = vars.iter().map(|v| s.vars.binary_search(v).is_ok()).collect();
            let mut idx = vec![0usize; k];
            for cell in 0..m.pow(k as u32) {
                let (mut si, mut ui) = (0usize, 0usize);
                for (d, &on_s) in idx.iter().zip(&in_s) {
                    if on_s {
                        si = si * m + d
                    } else {
                        ui = ui * m + d
                    }
                }
                let out = &mut data[cell * m..(cell + 1) * m];
                for (x, y, z, c) in b.sparse() {
                    let p = &s.data[si * m + x];
                    let q = &u.data[ui * m + y];
                    if p.is_zero() || q.is_zero() {
                        continue;
                    }
                    out[*z] += p * q * c;
                }
                for d in idx.iter_mut().rev() {
                    *d += 1;
                    if *d < m {
                        break;
                    }
                    *d = 0;
                }
            }
            Tensor { vars, data }
        }
    }
}

fn verify_bilinear(b: &BilinearSpec, lhs: &TermTree, rhs: &TermTree, vars: &[Var]) -> IdentityCheck {
    let m = b.dimension();
    let x = tensor(b, lhs, lhs.root());
    let y = tensor(b, rhs, rhs.root());
    let diff = x.data.chunks(m).zip(y.data.chunks(m)).position(|(p, q)| p != q);
    match diff {
        None => IdentityCheck::holds(),
        Some(mut cell) => {
            let mut digits = vec![0usize; vars.len()];
            for d in digits.iter_mut().rev() {
                *d = cell % m;
                cell /= m;
            }
            let h = vars.iter().zip(digits).map(|(v, d)| (*v, Element::Vector(b.unit(d)))).collect();
            IdentityCheck::fails(h)
        }
    }
}
