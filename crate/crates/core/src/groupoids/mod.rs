//! Groupoids (sets with one binary operation), term evaluation and identities.

mod catalog;
mod scalar;
mod verify;

pub use catalog::{catalog, lookup, CatalogEntry};
pub use scalar::{cyclotomic_polynomial, totient, Scalar};
pub use verify::{verify_identity, IdentityCheck};

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::terms::{Node, TermTree, Var};

/// Cayley table over `elements`; `table[r][c]` is the index of `elements[r] * elements[c]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTable {
    elements: Vec<String>,
    table: Vec<u32>,
}

impl FiniteTable {
    pub fn new(elements: Vec<String>, table: Vec<Vec<u32>>) -> Result<Self> {
        let q = elements.len();
        if q == 0 {
            return Err(Error::validation("a groupoid needs at least one element"));
        }
        if table.len() != q {
            return Err(Error::validation(format!("table has {} rows for {q} elements", table.len())));
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != q {
                return Err(Error::validation(format!("row {r} has {} entries, expected {q}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v as usize >= q) {
                return Err(Error::validation(format!("row {r} holds index {bad}, out of range")));
            }
        }
        Ok(FiniteTable { elements, table: table.concat() })
    }

    /// Elements named `"0"`, `"1"`, ...
    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let elements = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::new(elements, rows.iter().map(|r| r.to_vec()).collect())
    }

    /// Parses `{"elements": [...], "table": [[...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct File {
            elements: Vec<String>,
            table: Vec<Vec<u32>>,
        }
        let f: File = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(f.elements, f.table)
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "elements": self.elements, "table": self.rows() }).to_string()
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.table.chunks(self.size()).map(<[u32]>::to_vec).collect()
    }

    #[inline]
    pub fn op(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.size() + b as usize]
    }

    pub fn transpose(&self) -> Self {
        let q = self.size() as u32;
        let table = (0..q).flat_map(|a| (0..q).map(move |b| (a, b))).map(|(a, b)| self.op(b, a)).collect();
        FiniteTable { elements: self.elements.clone(), table }
    }
}

/// How `a * b = alpha a + beta b` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Transport {
    Identity,
    /// Conjugated by `x -> 1/x` on positive rationals: `a * b = 1 / (alpha/a + beta/b)`.
    Reciprocal,
}

/// `a * b = alpha a + beta b` over `Q(zeta_order)` (order 1 is `Q`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSpec {
    pub order: u32,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub transport: Transport,
}

impl LinearSpec {
    pub fn new(alpha: Scalar, beta: Scalar, transport: Transport) -> Result<Self> {
        let order = alpha.order();
        if beta.order() != order {
            return Err(Error::validation("alpha and beta live in different fields"));
        }
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::validation("linear coefficients must be nonzero"));
        }
        if transport == Transport::Reciprocal && order != 1 {
            return Err(Error::validation("the reciprocal form needs rational coefficients"));
        }
        Ok(LinearSpec { order, alpha, beta, transport })
    }

    pub fn op(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        match self.transport {
            Transport::Identity => Ok(&(&self.alpha * a) + &(&self.beta * b)),
            Transport::Reciprocal => {
                for v in [a, b] {
                    if !v.as_rational().is_some_and(|q| q.is_positive()) {
                        return Err(Error::Evaluation(format!("{v} is not a positive rational")));
                    }
                }
                let s = &(&self.alpha * &a.rational_recip()?) + &(&self.beta * &b.rational_recip()?);
                s.rational_recip()
            }
        }
    }
}

/// Finite-dimensional algebra given by structure constants on a basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearSpec {
    basis: Vec<String>,
    constants: Vec<Vec<Vec<BigRational>>>,
    /// Nonzero `(i, j, l, c)` with `e_i * e_j` having `c` at `e_l`.
    sparse: Vec<(usize, usize, usize, BigRational)>,
}

impl BilinearSpec {
    pub fn new(basis: Vec<String>, constants: Vec<Vec<Vec<BigRational>>>) -> Result<Self> {
        let m = basis.len();
        if m == 0 {
            return Err(Error::validation("an algebra needs a nonempty basis"));
        }
        let rect =
            constants.len() == m && constants.iter().all(|row| row.len() == m && row.iter().all(|v| v.len() == m));
        if !rect {
            return Err(Error::validation(format!("structure constants must be {m} x {m} x {m}")));
        }
        let mut sparse = Vec::new();
        for (i, row) in constants.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (l, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        sparse.push((i, j, l, c.clone()));
                    }
                }
            }
        }
        Ok(BilinearSpec { basis, constants, sparse })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn constants(&self) -> &[Vec<Vec<BigRational>>] {
        &self.constants
    }

    pub(crate) fn sparse(&self) -> &[(usize, usize, usize, BigRational)] {
        &self.sparse
    }

    /// Basis vector `e_i`.
    pub fn unit(&self, i: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dimension()];
        v[i] = BigRational::from_integer(1.into());
        v
    }

    pub fn op(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dimension()];
        for (i, j, l, c) in &self.sparse {
            if a[*i].is_zero() || b[*j].is_zero() {
                continue;
            }
            out[*l] += &a[*i] * &b[*j] * c;
        }
        out
    }

    fn transpose(&self) -> Self {
        let m = self.dimension();
        let constants = (0..m).map(|i| (0..m).map(|j| self.constants[j][i].clone()).collect()).collect();
        BilinearSpec::new(self.basis.clone(), constants).expect("transpose keeps the shape")
    }
}

/// Groupoids identified by a canonical form of their terms rather than by evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructuralRelation {
    FreeGroupoid,
    FreeCommutative,
    FreeSemigroupTwoGen,
    /// `a * b = a^b` on reals above one.
    Exponentiation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StructuralSpec {
    pub relation: StructuralRelation,
    /// Set on the opposite groupoid: terms are read through their mirror image.
    pub mirrored: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupoidSpec {
    FiniteTable(FiniteTable),
    Linear(LinearSpec),
    Bilinear(BilinearSpec),
    Structural(StructuralSpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupoidKind {
    FiniteTable,
    Linear,
    Bilinear,
    Structural,
}

impl GroupoidKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupoidKind::FiniteTable => "finite",
            GroupoidKind::Linear => "linear",
            GroupoidKind::Bilinear => "bilinear",
            GroupoidKind::Structural => "structural",
        }
    }
}

impl fmt::Display for GroupoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl GroupoidSpec {
    pub fn kind(&self) -> GroupoidKind {
        match self {
            GroupoidSpec::FiniteTable(_) => GroupoidKind::FiniteTable,
            GroupoidSpec::Linear(_) => GroupoidKind::Linear,
            GroupoidSpec::Bilinear(_) => GroupoidKind::Bilinear,
            GroupoidSpec::Structural(_) => GroupoidKind::Structural,
        }
    }

    pub fn structural(relation: StructuralRelation) -> Self {
        GroupoidSpec::Structural(StructuralSpec { relation, mirrored: false })
    }

    /// The operation `a o b = b * a`.
    pub fn opposite(&self) -> GroupoidSpec {
        match self {
            GroupoidSpec::FiniteTable(t) => GroupoidSpec::FiniteTable(t.transpose()),
            GroupoidSpec::Linear(l) => {
                GroupoidSpec::Linear(LinearSpec { alpha: l.beta.clone(), beta: l.alpha.clone(), ..l.clone() })
            }
            GroupoidSpec::Bilinear(b) => GroupoidSpec::Bilinear(b.transpose()),
            GroupoidSpec::Structural(s) => GroupoidSpec::Structural(StructuralSpec { mirrored: !s.mirrored, ..*s }),
        }
    }

    /// Renders one element for reports.
    pub fn describe(&self, e: &Element) -> String {
        match (self, e) {
            (GroupoidSpec::FiniteTable(t), Element::Finite(i)) => {
                t.elements.get(*i as usize).cloned().unwrap_or_else(|| format!("#{i}"))
            }
            (GroupoidSpec::Bilinear(b), Element::Vector(v)) => describe_vector(b, v),
            _ => e.to_string(),
        }
    }

    pub fn describe_assignment(&self, h: &Assignment) -> String {
        h.iter().map(|(v, e)| format!("x{v}={}", self.describe(e))).collect::<Vec<_>>().join(", ")
    }
}

fn describe_vector(b: &BilinearSpec, v: &[BigRational]) -> String {
    let mut parts = Vec::new();
    for (c, name) in v.iter().zip(&b.basis) {
        if c.is_zero() {
            continue;
        }
        let one = BigRational::from_integer(1.into());
        parts.push(if *c == one {
            name.clone()
        } else if *c == -one {
            format!("-{name}")
        } else {
            format!("{c}*{name}")
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Componentwise product of two finite groupoids; `(a, b)` has index `a * |G2| + b`.
pub fn product(g1: &GroupoidSpec, g2: &GroupoidSpec) -> Result<GroupoidSpec> {
    let (GroupoidSpec::FiniteTable(a), GroupoidSpec::FiniteTable(b)) = (g1, g2) else {
        return Err(Error::Unsupported("product needs two finite groupoids".into()));
    };
    let (p, q) = (a.size() as u32, b.size() as u32);
    let mut elements = Vec::with_capacity((p * q) as usize);
    for x in &a.elements {
        for y in &b.elements {
            elements.push(format!("({x},{y})"));
        }
    }
    let table = (0..p * q).map(|r| (0..p * q).map(|c| a.op(r / q, c / q) * q + b.op(r % q, c % q)).collect()).collect();
    Ok(GroupoidSpec::FiniteTable(FiniteTable::new(elements, table)?))
}

/// One groupoid element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Finite(u32),
    Scalar(Scalar),
    Vector(Vec<BigRational>),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Finite(i) => write!(f, "#{i}"),
            Element::Scalar(s) => write!(f, "{s}"),
            Element::Vector(v) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

/// Values for the variables of a term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment(BTreeMap<Var, Element>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, var: Var, value: Element) {
        self.0.insert(var, value);
    }

    pub fn with(mut self, var: Var, value: Element) -> Self {
        self.set(var, value);
        self
    }

    pub fn get(&self, var: Var) -> Option<&Element> {
        self.0.get(&var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &Element)> {
        self.0.iter().map(|(v, e)| (*v, e))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Var, Element)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (Var, Element)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

/// Value of the term operation `t` at `h`.
pub fn eval(g: &GroupoidSpec, t: &TermTree, h: &Assignment) -> Result<Element> {
    let lookup = |v: Var| h.get(v).ok_or_else(|| Error::Evaluation(format!("no value for x{v}")));
    let mut vals: Vec<Element> = Vec::with_capacity(t.nodes().len());
    for node in t.nodes() {
        let value = match *node {
            Node::Leaf(v) => {
                let e = lookup(v)?;
                check_element(g, e)?;
                e.clone()
            }
            Node::Branch(l, r) => apply(g, &vals[l as usize], &vals[r as usize])?,
        };
        vals.push(value);
    }
    Ok(vals.pop().expect("a term has a root"))
}

fn check_element(g: &GroupoidSpec, e: &Element) -> Result<()> {
    let ok = match (g, e) {
        (GroupoidSpec::FiniteTable(t), Element::Finite(i)) => (*i as usize) < t.size(),
        (GroupoidSpec::Linear(l), Element::Scalar(s)) => s.order() == l.order,
        (GroupoidSpec::Bilinear(b), Element::Vector(v)) => v.len() == b.dimension(),
        (GroupoidSpec::Structural(_), _) => {
            return Err(Error::Unsupported("structural groupoids are not evaluated pointwise".into()))
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Evaluation(format!("{e} is not an element of this {} groupoid", g.kind())))
    }
}

fn apply(g: &GroupoidSpec, a: &Element, b: &Element) -> Result<Element> {
    Ok(match (g, a, b) {
        (GroupoidSpec::FiniteTable(t), Element::Finite(x), Element::Finite(y)) => Element::Finite(t.op(*x, *y)),
        (GroupoidSpec::Linear(l), Element::Scalar(x), Element::Scalar(y)) => Element::Scalar(l.op(x, y)?),
        (GroupoidSpec::Bilinear(bl), Element::Vector(x), Element::Vector(y)) => Element::Vector(bl.op(x, y)),
        _ => unreachable!("leaves are checked before use"),
    })
}
