//! Permutations of `1..=n` in lexicographic order, addressed by rank.

use super::Var;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation of rank `rank` (0-based, lexicographic) of `1..=n`.
pub fn unrank(mut rank: u64, n: usize) -> Vec<Var> {
    let mut pool: Vec<Var> = (1..=n as Var).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Lexicographic rank of a permutation of `1..=n`.
pub fn rank(perm: &[Var]) -> u64 {
    let n = perm.len();
    let mut r = 0u64;
    for i in 0..n {
        let smaller_after = perm[i + 1..].iter().filter(|&&v| v < perm[i]).count() as u64;
        r += smaller_after * factorial(n - 1 - i);
    }
    r
}

/// Advances to the lexicographic successor; returns `false` after the last one.
pub fn next_permutation(p: &mut [Var]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Inverse permutation, 0-based: `inv[v - 1] = j` where `p[j] = v`.
pub fn inverse_positions(p: &[Var]) -> Vec<usize> {
    let mut inv = vec![0usize; p.len()];
    for (j, &v) in p.iter().enumerate() {
        inv[v as usize - 1] = j;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrank_walks_lexicographic_order() {
        let mut p = unrank(0, 4);
        for r in 0..24 {
            assert_eq!(p, unrank(r, 4));
            assert_eq!(rank(&p), r);
            let more = next_permutation(&mut p);
            assert_eq!(more, r < 23);
        }
    }

    #[test]
    fn inverse() {
        assert_eq!(inverse_positions(&[3, 1, 2]), vec![1, 2, 0]);
    }
}
