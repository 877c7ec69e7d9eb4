//! Closed-form counts used as oracles against enumeration.

mod egf;

pub use egf::{ac_right_k_egf, egf_expand, Basis, EgfExpr, EgfSeries};

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact nonnegative count.
pub type BigCount = BigUint;

pub fn factorial(n: u32) -> BigCount {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // exact at every step: the running value is C(n - k + i, i)
    (1..=k).fold(BigUint::one(), |acc, i| acc * (n - k + i) / i)
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigCount {
    binomial(2 * n, n) / (n + 1)
}

/// `D_n = (2n)! / (2^n n!) = 1 * 3 * ... * (2n - 1)`.
pub fn double_factorial_d(n: u32) -> BigCount {
    (1..=n).fold(BigUint::one(), |acc, i| acc * (2 * i - 1))
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: u32, k: u32) -> BigCount {
    stirling2_row(n).into_iter().nth(k as usize).unwrap_or_default()
}

/// `S(n, 0), ..., S(n, n)`.
pub fn stirling2_row(n: u32) -> Vec<BigCount> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n as usize {
        let mut next = vec![BigUint::zero(); m + 1];
        for (k, slot) in next.iter_mut().enumerate().skip(1) {
            let stay = if k < m { &row[k] * k } else { BigUint::zero() };
            *slot = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// `n^(n-1)`, the number of rooted trees on `n` labeled vertices.
pub fn tree_power(n: u32) -> BigCount {
    if n == 0 {
        BigUint::zero()
    } else {
        BigUint::from(n).pow(n - 1)
    }
}

/// `k! S(n, k) + n * sum_{i=0}^{k-2} i! S(n-1, i)`.
pub fn ac_right_k(n: u32, k: u32) -> BigCount {
    assert!(n >= 1 && k >= 2, "ac_right_k needs n >= 1 and k >= 2");
    let head = factorial(k) * stirling2(n, k);
    let prev = stirling2_row(n - 1);
    let tail: BigUint = (0..=k - 2).filter_map(|i| prev.get(i as usize).map(|s| factorial(i) * s)).sum();
    head + tail * n
}

/// `(2^n - (-1)^n) / 3`.
pub fn jacobsthal_ac(n: u32) -> BigCount {
    let p = BigUint::one() << n;
    if n.is_multiple_of(2) {
        (p - 1u32) / 3u32
    } else {
        (p + 1u32) / 3u32
    }
}

/// `floor(2^n / 3)`.
pub fn floor_two_thirds(n: u32) -> BigCount {
    (BigUint::one() << n) / 3u32
}

/// `2^n - 2` (zero for `n = 0`).
pub fn two_pow_minus_two(n: u32) -> BigCount {
    if n == 0 {
        return BigUint::zero();
    }
    (BigUint::one() << n) - 2u32
}

/// Ordered `n`-tuples of depths `(d_1, ..., d_n)` with `sum 2^-d_i = 1`.
///
/// Sweeps depth levels from the root. The state is the number of tuple
/// positions still unassigned and the number of open slots at the current
/// level (the remaining mass is `open * 2^-level`). At each level some open
/// slots become leaves, taking a chosen subset of the positions, and the rest
/// split in two.
pub fn compositions_of_one(n: u32) -> BigCount {
    fn go(rem: u32, open: u32, memo: &mut HashMap<(u32, u32), BigUint>) -> BigUint {
        if let Some(v) = memo.get(&(rem, open)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for c in 0..=open.min(rem) {
            let (r, o) = (rem - c, open - c);
            let rest = if o == 0 {
                if r == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            } else if 2 * o <= r {
                go(r, 2 * o, memo)
            } else {
                BigUint::zero()
            };
            if !rest.is_zero() {
                total += binomial(rem, c) * rest;
            }
        }
        memo.insert((rem, open), total.clone());
        total
    }
    if n == 0 {
        return BigUint::zero();
    }
    go(n, 1, &mut HashMap::new())
}
