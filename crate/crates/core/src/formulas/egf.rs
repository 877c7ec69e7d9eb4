//! Truncated power series with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factorial;
use crate::error::{Error, Result};

/// Largest truncation order accepted by [`egf_expand`].
pub const MAX_ORDER: usize = 20;

/// Which basis the stored coefficients refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `a_n` is the coefficient of `t^n`.
    Ordinary,
    /// `a_n` is the coefficient of `t^n / n!`.
    Exponential,
}

/// Series `a_0, ..., a_N` truncated after `t^N`.
#[derive(Clone, PartialEq, Eq)]
pub struct EgfSeries {
    basis: Basis,
    coeffs: Vec<BigRational>,
}

fn fact_q(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(factorial(n as u32)))
}

impl EgfSeries {
    pub fn zero(order: usize, basis: Basis) -> Self {
        EgfSeries { basis, coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn from_coeffs(basis: Basis, coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least a_0");
        EgfSeries { basis, coeffs }
    }

    /// The constant `c`.
    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order, Basis::Ordinary);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order, Basis::Ordinary);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// `e^t - 1`.
    pub fn exp_minus_one(order: usize) -> Self {
        let mut s = Self::zero(order, Basis::Exponential);
        for c in s.coeffs.iter_mut().skip(1) {
            *c = BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^n`.
    pub fn ordinary_coeff(&self, n: usize) -> BigRational {
        match self.basis {
            Basis::Ordinary => self.coeffs[n].clone(),
            Basis::Exponential => &self.coeffs[n] / fact_q(n),
        }
    }

    /// Coefficient of `t^n / n!`.
    pub fn exponential_coeff(&self, n: usize) -> BigRational {
        match self.basis {
            Basis::Ordinary => &self.coeffs[n] * fact_q(n),
            Basis::Exponential => self.coeffs[n].clone(),
        }
    }

    /// The coefficient of `t^n / n!` as an integer, if it is one.
    pub fn integer_coeff(&self, n: usize) -> Option<BigUint> {
        let c = self.exponential_coeff(n);
        if c.is_integer() {
            c.to_integer().to_biguint()
        } else {
            None
        }
    }

    pub fn to_basis(&self, basis: Basis) -> Self {
        let coeffs = (0..=self.order())
            .map(|n| match basis {
                Basis::Ordinary => self.ordinary_coeff(n),
                Basis::Exponential => self.exponential_coeff(n),
            })
            .collect();
        EgfSeries { basis, coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        EgfSeries { basis: self.basis, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = EgfSeries::constant(self.order(), BigRational::one()).to_basis(self.basis);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn truncated_to(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        EgfSeries { basis: self.basis, coeffs }
    }
}

impl<'a> Add<&'a EgfSeries> for &'a EgfSeries {
    type Output = EgfSeries;

    fn add(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        let rhs = rhs.to_basis(self.basis);
        let coeffs = (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect();
        EgfSeries { basis: self.basis, coeffs }
    }
}

impl<'a> Mul<&'a EgfSeries> for &'a EgfSeries {
    type Output = EgfSeries;

    /// Cauchy product, truncated to the smaller order; the result keeps the
    /// basis of the left operand.
    fn mul(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        let a = self.to_basis(Basis::Ordinary).truncated_to(order);
        let b = rhs.to_basis(Basis::Ordinary).truncated_to(order);
        let mut c = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            if a.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                c[i + j] += &a.coeffs[i] * &b.coeffs[j];
            }
        }
        EgfSeries { basis: Basis::Ordinary, coeffs: c }.to_basis(self.basis)
    }
}

impl fmt::Debug for EgfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "EgfSeries({:?}, [{}])", self.basis, cs.join(", "))
    }
}

/// Expressions built from `t` and powers of `e^t - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EgfExpr {
    Const(BigRational),
    T,
    ExpMinusOne,
    Sum(Vec<EgfExpr>),
    Product(Vec<EgfExpr>),
    Pow(Box<EgfExpr>, u32),
}

impl EgfExpr {
    fn eval(&self, order: usize) -> EgfSeries {
        match self {
            EgfExpr::Const(c) => EgfSeries::constant(order, c.clone()),
            EgfExpr::T => EgfSeries::t(order),
            EgfExpr::ExpMinusOne => EgfSeries::exp_minus_one(order),
            EgfExpr::Sum(xs) => xs.iter().fold(EgfSeries::zero(order, Basis::Ordinary), |acc, x| &acc + &x.eval(order)),
            EgfExpr::Product(xs) => {
                xs.iter().fold(EgfSeries::constant(order, BigRational::one()), |acc, x| &acc * &x.eval(order))
            }
            EgfExpr::Pow(x, e) => x.eval(order).pow(*e),
        }
    }
}

/// Expands `expr` up to `t^order`, reported in the exponential basis.
pub fn egf_expand(expr: &EgfExpr, order: usize) -> Result<EgfSeries> {
    if order > MAX_ORDER {
        return Err(Error::Size { what: "egf_expand", n: order, cap: MAX_ORDER });
    }
    Ok(expr.eval(order).to_basis(Basis::Exponential))
}

/// `(e^t - 1)^k + sum_{i=0}^{k-2} t (e^t - 1)^i`.
pub fn ac_right_k_egf(k: u32) -> EgfExpr {
    let mut terms = vec![EgfExpr::Pow(Box::new(EgfExpr::ExpMinusOne), k)];
    for i in 0..k.saturating_sub(1) {
        terms.push(EgfExpr::Product(vec![EgfExpr::T, EgfExpr::Pow(Box::new(EgfExpr::ExpMinusOne), i)]));
    }
    EgfExpr::Sum(terms)
}
