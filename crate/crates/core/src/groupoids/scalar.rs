//! Exact arithmetic in the cyclotomic fields `Q[x] / Phi_k(x)`.
//!
//! Order 1 is the rationals themselves (`Phi_1 = x - 1`), so one type covers
//! both scalar rings of the linear groupoids.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients of `Phi_k`, constant term first.
pub fn cyclotomic_polynomial(k: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&k) {
        return p.clone();
    }
    assert!(k >= 1, "cyclotomic order must be positive");
    // x^k - 1 divided by every Phi_d, d a proper divisor of k
    let mut num = vec![BigInt::zero(); k as usize + 1];
    num[0] = -BigInt::one();
    num[k as usize] = BigInt::one();
    for d in (1..k).filter(|&d| k.is_multiple_of(d)) {
        num = div_exact(&num, &cyclotomic_polynomial(d));
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(k, p.clone());
    p
}

/// Quotient of `a` by the monic polynomial `b`; the remainder must vanish.
fn div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// Euler's totient, the degree of `Phi_k`.
pub fn totient(k: u32) -> u32 {
    (1..=k).filter(|&i| num_integer::gcd(i, k) == 1).count() as u32
}

/// Element of `Q(zeta_k)`, stored as its reduced coefficient vector in the
/// power basis `1, z, ..., z^(phi(k) - 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero(order: u32) -> Self {
        Scalar { order, coeffs: vec![BigRational::zero(); totient(order) as usize] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, q: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = q;
        s
    }

    pub fn from_integer(order: u32, v: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(v.into()))
    }

    /// A rational number; `Scalar::rational(1, 2)` is one half.
    pub fn rational(num: i64, den: i64) -> Self {
        Self::from_rational(1, BigRational::new(num.into(), den.into()))
    }

    /// The root of unity `zeta_k = e^(2 pi i / k)`.
    pub fn zeta(order: u32) -> Self {
        let mut c = vec![BigRational::zero(); 2];
        c[1] = BigRational::one();
        Self::reduce(order, c)
    }

    /// Reduces an arbitrary coefficient vector modulo `Phi_k`.
    pub fn reduce(order: u32, mut c: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let d = phi.len() - 1;
        for i in (d..c.len()).rev() {
            let top = std::mem::take(&mut c[i]);
            if top.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().enumerate().take(d) {
                c[i - d + j] -= &top * BigRational::from_integer(pj.clone());
            }
        }
        c.resize(d, BigRational::zero());
        Scalar { order, coeffs: c }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero rational scalar.
    pub fn rational_recip(&self) -> Result<Self> {
        match self.as_rational() {
            Some(q) if !q.is_zero() => Ok(Scalar::from_rational(self.order, q.recip())),
            Some(_) => Err(Error::Evaluation("division by zero".into())),
            None => Err(Error::Evaluation(format!("{self} is not rational"))),
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(self.order, other.order, "scalars from different fields");
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Scalar { order: self.order, coeffs }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Scalar { order: self.order, coeffs }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar { order: self.order, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        if self.coeffs.len() == 1 {
            return Scalar { order: self.order, coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Scalar::reduce(self.order, c)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar[Q(z{})]({self})", self.order)
    }
}
