//! Permutations of `{0..n}` in one-line notation.

use serde::Serialize;

use crate::error::{Error, Result};

/// `Perm(v)` sends `i` to `v[i]`. Composition `g.compose(h)` is `i -> g(h(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Parses one-based one-line notation such as `[2, 1, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Perm> {
        if images.contains(&0) {
            return Err(Error::Parse("one-based permutation contains 0".into()));
        }
        Perm::new(images.iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// Swaps `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    pub fn sign(&self) -> i32 {
        inversion_sign(&self.0)
    }

    /// All permutations of `{0..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Perm(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Perm(cur.clone()));
        }
        out
    }
}

/// Parity of the number of inversions `i < j, v[i] > v[j]`, as `±1`.
pub fn inversion_sign<T: Ord>(v: &[T]) -> i32 {
    let mut inv = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Advances `v` to the next lexicographic arrangement; false once the last one is reached.
/// Repeated values are handled, so this enumerates distinct multiset permutations.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Signed permutations of `{0..n}` as `(images, sign)`.
pub fn signed_perms(n: usize) -> Vec<(Vec<usize>, i32)> {
    Perm::all(n)
        .into_iter()
        .map(|p| {
            let s = p.sign();
            (p.0, s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
        assert_eq!(Perm::transposition(3, 0, 2).sign(), -1);
    }

    #[test]
    fn compose_and_inverse() {
        for g in Perm::all(4) {
            assert_eq!(g.compose(&g.inverse()), Perm::identity(4));
            for h in Perm::all(4).iter().step_by(5) {
                assert_eq!(g.compose(h).sign(), g.sign() * h.sign());
                assert_eq!(g.compose(h).apply(1), g.apply(h.apply(1)));
            }
        }
    }

    #[test]
    fn multiset_permutations_are_distinct() {
        let mut v = vec![1, 1, 2, 2];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!(n, 6);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::from_one_based(&[2, 1, 3]).is_ok());
        assert!(Perm::from_one_based(&[0, 1]).is_err());
    }
}
